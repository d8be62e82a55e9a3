#pragma once

#include <string>
#include <vector>

#include "codeg/numth.hpp"

namespace codeg {

inline constexpr i64 kDefaultFieldCap = 1 << 16;

/*
 * GF(p^f) with exact coefficient-vector arithmetic. The modulus is the
 * lexicographically smallest monic irreducible polynomial of degree f over
 * F_p, comparing coefficient tuples (c0, c1, ..., c_{f-1}) low degree first;
 * for f = 1 the modulus is x.
 */
struct FieldSpec {
  i64 p = 0;
  int f = 0;
  i64 size = 0;                // p^f
  std::vector<i64> modulus;    // length f+1, low-to-high, monic
};

struct FieldElem {
  std::vector<i64> c;  // length f, entries in [0, p)
  bool operator==(const FieldElem&) const = default;
};

FieldSpec field_make(i64 p, int f, i64 size_cap = kDefaultFieldCap);

/* q = p^f determined by factoring */
FieldSpec field_make_for_order(i64 q, i64 size_cap = kDefaultFieldCap);

FieldElem fe_zero(const FieldSpec& k);
FieldElem fe_one(const FieldSpec& k);
FieldElem fe_basis(const FieldSpec& k, int i);  // the element x^i, 0 <= i < f
bool fe_is_zero(const FieldElem& a);

FieldElem fadd(const FieldSpec& k, const FieldElem& a, const FieldElem& b);
FieldElem fsub(const FieldSpec& k, const FieldElem& a, const FieldElem& b);
FieldElem fneg(const FieldSpec& k, const FieldElem& a);
FieldElem fmul(const FieldSpec& k, const FieldElem& a, const FieldElem& b);
FieldElem finv(const FieldSpec& k, const FieldElem& a);  // a != 0
FieldElem fpow(const FieldSpec& k, const FieldElem& a, i64 n);  // n >= 0

/* all p^f elements in coefficient-lexicographic order; zero first */
std::vector<FieldElem> enumerate_field(const FieldSpec& k);

/* position of a in enumerate_field order */
i64 fe_index(const FieldSpec& k, const FieldElem& a);
FieldElem fe_at(const FieldSpec& k, i64 index);

i64 fe_mult_order(const FieldSpec& k, const FieldElem& a);  // a != 0
std::string fe_str(const FieldElem& a);

}  // namespace codeg
