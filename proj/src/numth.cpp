#include "codeg/numth.hpp"

#include "codeg/error.hpp"

namespace codeg {

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (i64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

i64 isqrt(i64 n) {
  if (n < 0) throw Error("isqrt: negative argument");
  if (n < 2) return n;
  // Newton iteration on integers, then clamp.
  i64 x = n, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

i64 r_part(i64 n, i64 r) {
  if (n <= 0 || r < 2) throw Error("r_part: bad arguments");
  i64 q = 1;
  while (n % r == 0) {
    n /= r;
    q *= r;
  }
  return q;
}

std::optional<std::pair<i64, int>> prime_power(i64 n) {
  if (n < 2) return std::nullopt;
  i64 r = n;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      r = d;
      break;
    }
  int f = 0;
  i64 m = n;
  while (m % r == 0) {
    m /= r;
    ++f;
  }
  if (m != 1) return std::nullopt;
  return std::make_pair(r, f);
}

i64 mod_pow(i64 base, i64 exp, i64 m) {
  if (m <= 0) throw Error("mod_pow: bad modulus");
  i64 b = base % m;
  if (b < 0) b += m;
  i64 acc = 1 % m;
  while (exp > 0) {
    if (exp & 1) acc = acc * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return acc;
}

i64 mod_inv(i64 a, i64 p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw Error("mod_inv: zero is not invertible");
  return mod_pow(a, p - 2, p);
}

std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> out;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

i64 primitive_root(i64 p) {
  if (!is_prime(p)) throw Error("primitive_root: modulus not prime");
  if (p == 2) return 1;
  auto fac = prime_factors(p - 1);
  for (i64 g = 2; g < p; ++g) {
    bool ok = true;
    for (i64 f : fac)
      if (mod_pow(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw Error("primitive_root: none found");  // unreachable for prime p
}

}  // namespace codeg
