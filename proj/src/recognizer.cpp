#include "codeg/recognizer.hpp"

#include <algorithm>

#include "codeg/error.hpp"

namespace codeg {

namespace {

using u128 = unsigned __int128;

unsigned long long isqrt_u128(u128 n) {
  if (n == 0) return 0;
  // lo starts at 1 so hi - lo + 1 cannot wrap at the full 64-bit range
  unsigned long long lo = 1, hi = ~0ull;
  while (lo < hi) {
    unsigned long long mid = lo + (hi - lo + 1) / 2;
    if ((u128)mid * mid <= n) lo = mid;
    else hi = mid - 1;
  }
  return lo;
}

/* the closed-form codegree sets, widened so comparisons cannot overflow */
std::vector<u128> even_form(u128 q) {
  std::vector<u128> v{1, q * (q - 1), q * (q + 1), q * q - 1};
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<u128> odd_form(u128 q, int eps) {
  std::vector<u128> v{1, q * (q - 1) / 2, q * (q + 1) / 2, (q * q - 1) / 2,
                      eps > 0 ? q * (q - 1) : q * (q + 1)};
  std::sort(v.begin(), v.end());
  return v;
}

int epsilon_of(i64 q) { return ((q - 1) / 2) % 2 == 0 ? 1 : -1; }

bool equals_set(const std::vector<i64>& s, const std::vector<u128>& form) {
  if (s.size() != form.size()) return false;
  for (size_t i = 0; i < s.size(); ++i)
    if ((u128)s[i] != form[i]) return false;
  return true;
}

}  // namespace

std::optional<i64> integer_root_qq1(i64 m, int sign) {
  if (sign != 1 && sign != -1) throw Error("integer_root_qq1: sign must be +1 or -1");
  if (m < 1) return std::nullopt;
  u128 disc = (u128)4 * (u128)m + 1;
  unsigned long long s = isqrt_u128(disc);
  if ((u128)s * s != disc) return std::nullopt;
  // q = (s - sign) / 2, where s = sqrt(1 + 4m) is odd whenever it is exact
  if ((s - (long long)sign) % 2 != 0) return std::nullopt;
  i64 q = (i64)((s - (long long)sign) / 2);
  if (q < 1) return std::nullopt;
  if ((u128)q * (u128)(q + sign) != (u128)m) return std::nullopt;
  return q;
}

std::optional<std::pair<i64, int>> is_prime_power(i64 n) { return prime_power(n); }

RecognitionResult recognize(const std::vector<i64>& values) {
  RecognitionResult out;
  std::vector<i64> s = values;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty() || s.front() < 1) return out;
  if (s.front() != 1) return out;  // every codegree set contains 1

  if (s.size() == 4) {
    // even family: the maximum is q(q+1)
    if (auto q = integer_root_qq1(s.back(), +1)) {
      if (*q >= 4 && *q % 2 == 0 && prime_power(*q) && equals_set(s, even_form((u128)*q))) {
        out.matches.push_back(*q);
        if (*q == 4) {
          out.matches.push_back(5);
          out.note = "PSL(2,5) is isomorphic to PSL(2,4); the set matches both q=4 and q=5";
        }
      }
    }
    return out;
  }

  if (s.size() == 5) {
    // odd family: the maximum is q(q - eps), eps = (-1)^((q-1)/2)
    if (auto q = integer_root_qq1(s.back(), +1)) {  // eps = -1, q = 3 mod 4
      if (*q > 5 && *q % 4 == 3 && prime_power(*q) && equals_set(s, odd_form((u128)*q, -1)))
        out.matches.push_back(*q);
    }
    if (auto q = integer_root_qq1(s.back(), -1)) {  // eps = +1, q = 1 mod 4
      if (*q > 5 && *q % 4 == 1 && prime_power(*q) && equals_set(s, odd_form((u128)*q, +1)))
        out.matches.push_back(*q);
    }
    std::sort(out.matches.begin(), out.matches.end());
    return out;
  }

  return out;
}

LemmaCertificate verify_lemma_G_over_N(int alpha_max, i64 q_max) {
  if (alpha_max < 2) throw Error("verify_lemma_G_over_N: alpha_max must be at least 2");
  if (alpha_max > 30) throw Error("verify_lemma_G_over_N: alpha_max too large");
  LemmaCertificate cert;
  cert.alpha_max = alpha_max;
  cert.q_max = q_max;

  std::vector<std::pair<i64, std::vector<u128>>> evens;
  for (int a = 2; a <= alpha_max; ++a) {
    i64 q = (i64)1 << a;
    evens.emplace_back(q, even_form((u128)q));
  }
  std::vector<std::pair<i64, std::vector<u128>>> odds;
  for (i64 q = 7; q <= q_max; q += 2)
    if (prime_power(q)) odds.emplace_back(q, odd_form((u128)q, epsilon_of(q)));

  // no even-q set embeds in an odd-q set
  for (const auto& [qa, e] : evens)
    for (const auto& [qb, o] : odds) {
      ++cert.cells_checked;
      if (std::includes(o.begin(), o.end(), e.begin(), e.end())) {
        cert.counterexample = "even set for q = " + std::to_string(qa) +
                              " embeds in odd set for q = " + std::to_string(qb);
        return cert;
      }
    }

  // pairwise distinct within each family
  auto distinct = [&cert](const std::vector<std::pair<i64, std::vector<u128>>>& fam,
                          const char* name, std::string& ce) {
    for (size_t i = 0; i < fam.size(); ++i)
      for (size_t j = i + 1; j < fam.size(); ++j) {
        ++cert.cells_checked;
        if (fam[i].second == fam[j].second) {
          ce = std::string(name) + " sets coincide for q = " + std::to_string(fam[i].first) +
               " and q = " + std::to_string(fam[j].first);
          return false;
        }
      }
    return true;
  };
  if (!distinct(evens, "even", cert.counterexample)) return cert;
  if (!distinct(odds, "odd", cert.counterexample)) return cert;

  cert.pass = true;
  return cert;
}

}  // namespace codeg
