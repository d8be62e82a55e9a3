#include "codeg/gf.hpp"

#include <algorithm>

#include "codeg/error.hpp"

namespace codeg {

namespace {

/* dense polynomials over F_p, low-to-high, no trailing-zero guarantee */

int poly_deg(const std::vector<i64>& a) {
  for (int i = (int)a.size() - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

/* remainder of a modulo monic m, in place on a copy */
std::vector<i64> poly_rem(std::vector<i64> a, const std::vector<i64>& m, i64 p) {
  int dm = poly_deg(m);
  for (int da = poly_deg(a); da >= dm; da = poly_deg(a)) {
    i64 c = a[da];  // m monic, so the quotient coefficient is just c
    int shift = da - dm;
    for (int i = 0; i <= dm; ++i) {
      a[i + shift] = (a[i + shift] - c * m[i]) % p;
      if (a[i + shift] < 0) a[i + shift] += p;
    }
  }
  return a;
}

std::vector<i64> poly_mul(const std::vector<i64>& a, const std::vector<i64>& b, i64 p) {
  std::vector<i64> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return out;
}

/* decode index into digits (c0, ..., c_{f-1}) with c0 most significant,
 * matching lexicographic order on the tuple */
std::vector<i64> lex_digits(i64 index, i64 p, int f) {
  std::vector<i64> c(f, 0);
  for (int i = f - 1; i >= 0; --i) {
    c[i] = index % p;
    index /= p;
  }
  return c;
}

i64 lex_index(const std::vector<i64>& c, i64 p) {
  i64 v = 0;
  for (i64 d : c) v = v * p + d;
  return v;
}

bool is_irreducible(const std::vector<i64>& m, i64 p) {
  int f = poly_deg(m);
  if (f < 1) return false;
  if (m[0] == 0) return f == 1;  // divisible by x
  for (int d = 1; 2 * d <= f; ++d) {
    i64 count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (i64 idx = 0; idx < count; ++idx) {
      std::vector<i64> div = lex_digits(idx, p, d);
      div.push_back(1);  // monic of degree d
      if (poly_deg(poly_rem(m, div, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace

FieldSpec field_make(i64 p, int f, i64 size_cap) {
  if (!is_prime(p)) throw Error("field_make: p = " + std::to_string(p) + " is not prime");
  if (f < 1) throw Error("field_make: extension degree must be >= 1");
  i64 size = 1;
  for (int i = 0; i < f; ++i) {
    size *= p;
    if (size > size_cap) throw Error("field_make: p^f exceeds size cap " + std::to_string(size_cap));
  }
  FieldSpec k;
  k.p = p;
  k.f = f;
  k.size = size;
  if (f == 1) {
    k.modulus = {0, 1};  // x
    return k;
  }
  for (i64 idx = 0; idx < size; ++idx) {
    std::vector<i64> cand = lex_digits(idx, p, f);
    cand.push_back(1);
    if (is_irreducible(cand, p)) {
      k.modulus = cand;
      return k;
    }
  }
  throw Error("field_make: no irreducible polynomial found");  // unreachable
}

FieldSpec field_make_for_order(i64 q, i64 size_cap) {
  auto pp = prime_power(q);
  if (!pp) throw Error("field_make_for_order: " + std::to_string(q) + " is not a prime power");
  return field_make(pp->first, pp->second, size_cap);
}

FieldElem fe_zero(const FieldSpec& k) { return FieldElem{std::vector<i64>(k.f, 0)}; }

FieldElem fe_one(const FieldSpec& k) {
  FieldElem a = fe_zero(k);
  a.c[0] = 1;
  return a;
}

FieldElem fe_basis(const FieldSpec& k, int i) {
  if (i < 0 || i >= k.f) throw Error("fe_basis: index out of range");
  FieldElem a = fe_zero(k);
  a.c[i] = 1;
  return a;
}

bool fe_is_zero(const FieldElem& a) {
  return std::all_of(a.c.begin(), a.c.end(), [](i64 v) { return v == 0; });
}

FieldElem fadd(const FieldSpec& k, const FieldElem& a, const FieldElem& b) {
  FieldElem out = a;
  for (int i = 0; i < k.f; ++i) out.c[i] = (out.c[i] + b.c[i]) % k.p;
  return out;
}

FieldElem fsub(const FieldSpec& k, const FieldElem& a, const FieldElem& b) {
  FieldElem out = a;
  for (int i = 0; i < k.f; ++i) out.c[i] = ((out.c[i] - b.c[i]) % k.p + k.p) % k.p;
  return out;
}

FieldElem fneg(const FieldSpec& k, const FieldElem& a) { return fsub(k, fe_zero(k), a); }

FieldElem fmul(const FieldSpec& k, const FieldElem& a, const FieldElem& b) {
  std::vector<i64> prod = poly_mul(a.c, b.c, k.p);
  prod = poly_rem(std::move(prod), k.modulus, k.p);
  prod.resize(k.f, 0);
  return FieldElem{std::move(prod)};
}

FieldElem finv(const FieldSpec& k, const FieldElem& a) {
  if (fe_is_zero(a)) throw Error("finv: zero has no inverse");
  // extended Euclid in F_p[x]: u*a + v*modulus = gcd
  std::vector<i64> r0 = k.modulus, r1 = a.c;
  std::vector<i64> u0 = {0}, u1 = {1};
  while (poly_deg(r1) > 0) {
    // divide r0 by r1
    std::vector<i64> q(std::max<size_t>(r0.size(), 1), 0);
    std::vector<i64> rem = r0;
    int d1 = poly_deg(r1);
    i64 lead_inv = mod_inv(r1[d1], k.p);
    for (int d0 = poly_deg(rem); d0 >= d1; d0 = poly_deg(rem)) {
      i64 c = rem[d0] * lead_inv % k.p;
      int shift = d0 - d1;
      q[shift] = c;
      for (int i = 0; i <= d1; ++i) {
        rem[i + shift] = ((rem[i + shift] - c * r1[i]) % k.p + k.p) % k.p;
      }
    }
    std::vector<i64> qu1 = poly_mul(q, u1, k.p);
    qu1.resize(std::max(qu1.size(), u0.size()), 0);
    std::vector<i64> u2 = u0;
    u2.resize(qu1.size(), 0);
    for (size_t i = 0; i < qu1.size(); ++i) u2[i] = ((u2[i] - qu1[i]) % k.p + k.p) % k.p;
    r0 = r1;
    r1 = rem;
    u0 = u1;
    u1 = u2;
  }
  int dg = poly_deg(r1);
  if (dg != 0) throw Error("finv: element not coprime to modulus");  // modulus reducible
  i64 scale = mod_inv(r1[0], k.p);
  std::vector<i64> out = u1;
  for (i64& v : out) v = v * scale % k.p;
  out = poly_rem(std::move(out), k.modulus, k.p);
  out.resize(k.f, 0);
  return FieldElem{std::move(out)};
}

FieldElem fpow(const FieldSpec& k, const FieldElem& a, i64 n) {
  if (n < 0) throw Error("fpow: negative exponent");
  FieldElem acc = fe_one(k), base = a;
  while (n > 0) {
    if (n & 1) acc = fmul(k, acc, base);
    base = fmul(k, base, base);
    n >>= 1;
  }
  return acc;
}

std::vector<FieldElem> enumerate_field(const FieldSpec& k) {
  std::vector<FieldElem> out;
  out.reserve(k.size);
  for (i64 idx = 0; idx < k.size; ++idx) out.push_back(FieldElem{lex_digits(idx, k.p, k.f)});
  return out;
}

i64 fe_index(const FieldSpec& k, const FieldElem& a) { return lex_index(a.c, k.p); }

FieldElem fe_at(const FieldSpec& k, i64 index) {
  if (index < 0 || index >= k.size) throw Error("fe_at: index out of range");
  return FieldElem{lex_digits(index, k.p, k.f)};
}

i64 fe_mult_order(const FieldSpec& k, const FieldElem& a) {
  if (fe_is_zero(a)) throw Error("fe_mult_order: zero");
  FieldElem acc = a;
  i64 n = 1;
  FieldElem one = fe_one(k);
  while (!(acc == one)) {
    acc = fmul(k, acc, a);
    ++n;
    if (n > k.size) throw Error("fe_mult_order: runaway");  // impossible in a field
  }
  return n;
}

std::string fe_str(const FieldElem& a) {
  std::string s = "[";
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a.c[i]);
  }
  return s + "]";
}

}  // namespace codeg
