#pragma once

#include <optional>

#include "codeg/codegree.hpp"
#include "codeg/gf.hpp"
#include "codeg/group.hpp"

namespace codeg {

/*
 * PSL(2,q) acting on the projective line: points are the field elements in
 * enumeration order followed by infinity at index q.
 * |PSL(2,q)| = q(q^2-1)/gcd(2, q-1).
 */
struct Psl2Spec {
  i64 q = 0;
  FieldSpec field;
  GroupSpec group;
  std::optional<int> epsilon;  // (-1)^((q-1)/2) for odd q
};

Psl2Spec build_psl2(i64 q, i64 order_cap = kDefaultGroupOrderCap);

i64 psl2_order(i64 q);
int epsilon_q(i64 q);  // odd q only

/*
 * Closed-form codegree set:
 *   even q >= 4:  {1, q(q-1), q(q+1), q^2-1}
 *   odd  q >  5:  {1, q(q-1)/2, q(q+1)/2, (q^2-1)/2, q(q - eps(q))}
 *   q = 5 is served by the q = 4 set {1,12,15,20} (PSL(2,5) = PSL(2,4)),
 *   flagged in the label.
 */
CodegreeSet closed_form_cod(i64 q);

/* closed-form irreducible character degree set:
 *   even q: {1, q-1, q, q+1};  odd q > 5: {1, (q+eps)/2, q-1, q, q+1};
 *   q = 5 served by the q = 4 set {1,3,4,5} */
std::vector<i64> closed_form_cd(i64 q);

}  // namespace codeg
