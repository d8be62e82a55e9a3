#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>

#include "codeg/error.hpp"
#include "codeg/group.hpp"
#include "doctest.h"

using namespace codeg;

namespace {

/* oracle: subgroup generated by commutators of ALL element pairs */
Subgroup derived_oracle(const GroupData& g) {
  std::vector<int> comms;
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      comms.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  return subgroup_closure(g, comms);
}

GroupData enumerate(const GroupSpec& s) { return enumerate_group(s); }

}  // namespace

TEST_CASE("permutation composition is left-to-right") {
  Perm a = perm_from_cycles(3, {{1, 2}});
  Perm b = perm_from_cycles(3, {{2, 3}});
  CHECK(pmul(a, b).img == std::vector<int>{2, 0, 1});  // 1 -> 2 -> 3
  CHECK(pmul(b, a).img == std::vector<int>{1, 2, 0});
  CHECK(pmul(a, pinv(a)).is_identity());
  CHECK(perm_order(perm_from_cycles(5, {{1, 2, 3}, {4, 5}})) == 6);
  CHECK(cycle_string(perm_from_cycles(5, {{1, 2, 3}, {4, 5}})) == "(1 2 3)(4 5)");
  CHECK(cycle_string(Perm::identity(4)) == "()");
  CHECK_THROWS_AS(perm_from_cycles(4, {{1, 2}, {2, 3}}), Error);  // not disjoint
}

TEST_CASE("constructor orders") {
  CHECK(enumerate(cyclic_group(12)).order == 12);
  CHECK(enumerate(dihedral_group(6)).order == 12);
  CHECK(enumerate(symmetric_group(5)).order == 120);
  CHECK(enumerate(alternating_group(5)).order == 60);
  CHECK(enumerate(alternating_group(6)).order == 360);
  CHECK(enumerate(frobenius_agl1(7)).order == 42);
  CHECK(enumerate(frobenius_agl1(8)).order == 56);
  CHECK(enumerate(frobenius_agl1(9)).order == 72);
  CHECK(enumerate(quaternion8()).order == 8);
  CHECK(enumerate(sl2_group(3)).order == 24);
  CHECK(enumerate(sl2_group(5)).order == 120);
  CHECK(enumerate(direct_product(symmetric_group(3), cyclic_group(2))).order == 12);
}

TEST_CASE("identity is element 0 and class 0") {
  GroupData g = enumerate(symmetric_group(4));
  CHECK(g.elements[0].is_identity());
  CHECK(g.class_of[0] == 0);
  CHECK(g.classes[0].size() == 1);
}

TEST_CASE("class structure of S3") {
  GroupData g = enumerate(symmetric_group(3));
  REQUIRE(g.num_classes() == 3);
  std::vector<i64> sizes;
  for (const auto& c : g.classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<i64>{1, 2, 3});
}

TEST_CASE("class invariants on A5") {
  GroupData g = enumerate(alternating_group(5));
  CHECK(g.num_classes() == 5);
  CHECK(g.exponent == 30);
  i64 total = 0;
  for (int j = 0; j < g.num_classes(); ++j) {
    const auto& c = g.classes[j];
    total += c.size();
    // the inverse map permutes classes as an involution
    CHECK(g.inverse_class[g.inverse_class[j]] == j);
    CHECK(g.class_of[g.inv(c.rep)] == g.inverse_class[j]);
    // all members really are conjugate: same order, same class id
    for (int m : c.members) {
      CHECK(g.class_of[m] == j);
      CHECK(perm_order(g.elements[m]) == c.rep_order);
    }
    // power map lands where it claims
    for (i64 t = 0; t < c.rep_order; ++t) {
      int x = 0;
      for (i64 u = 0; u < t; ++u) x = g.mul(x, c.rep);
      CHECK(g.class_of[x] == c.power_class[t]);
    }
  }
  CHECK(total == g.order);
}

TEST_CASE("derived subgroup matches the all-pairs oracle") {
  for (const GroupSpec& s :
       {symmetric_group(3), symmetric_group(4), alternating_group(4), quaternion8(),
        dihedral_group(6), frobenius_agl1(7), cyclic_group(12), sl2_group(3)}) {
    GroupData g = enumerate(s);
    REQUIRE(g.order <= 200);
    CHECK(derived_subgroup_data(g).elems == derived_oracle(g).elems);
  }
}

TEST_CASE("known derived subgroup orders") {
  CHECK(derived_subgroup_data(enumerate(symmetric_group(3))).order() == 3);
  CHECK(derived_subgroup_data(enumerate(symmetric_group(4))).order() == 12);
  CHECK(derived_subgroup_data(enumerate(alternating_group(4))).order() == 4);
  CHECK(derived_subgroup_data(enumerate(quaternion8())).order() == 2);
  CHECK(derived_subgroup_data(enumerate(sl2_group(3))).order() == 8);
  CHECK(derived_subgroup_data(enumerate(frobenius_agl1(7))).order() == 7);
  CHECK(derived_subgroup_data(enumerate(cyclic_group(12))).order() == 1);
}

TEST_CASE("perfectness") {
  CHECK(is_perfect(enumerate(alternating_group(5))));
  CHECK(is_perfect(enumerate(sl2_group(5))));
  CHECK_FALSE(is_perfect(enumerate(symmetric_group(5))));
  CHECK_FALSE(is_perfect(enumerate(alternating_group(4))));
  CHECK_FALSE(is_perfect(enumerate(sl2_group(3))));
}

TEST_CASE("sylow counts") {
  GroupData s3 = enumerate(symmetric_group(3));
  CHECK(sylow_count(s3, 2) == 3);
  CHECK(sylow_count(s3, 3) == 1);
  CHECK(sylow_count(enumerate(cyclic_group(4)), 2) == 1);
  GroupData a5 = enumerate(alternating_group(5));
  CHECK(sylow_count(a5, 2) == 5);
  CHECK(sylow_count(a5, 3) == 10);
  CHECK(sylow_count(a5, 5) == 6);
  GroupData sl23 = enumerate(sl2_group(3));
  CHECK(sylow_count(sl23, 2) == 1);  // the quaternion subgroup is normal
  CHECK(sylow_count(sl23, 3) == 4);
}

TEST_CASE("sylow subgroups have full prime part and live in the ambient") {
  GroupData g = enumerate(symmetric_group(4));
  std::vector<int> all(g.order);
  std::iota(all.begin(), all.end(), 0);
  for (i64 r : {2, 3}) {
    Subgroup p = sylow_subgroup_in(g, all, r);
    CHECK(p.order() == r_part(g.order, r));
    for (int e : p.elems) {
      i64 o = perm_order(g.elements[e]);
      CHECK(o == r_part(o, r));  // every element has r-power order
    }
  }
}

TEST_CASE("order cap aborts runaway enumeration") {
  CHECK_THROWS_AS(enumerate_group(symmetric_group(5), 50), Error);
}

TEST_CASE("direct product acts on the disjoint union of the factor domains") {
  GroupSpec s = direct_product(symmetric_group(3), cyclic_group(4));
  CHECK(s.degree == 7);
  GroupData g = enumerate(s);
  CHECK(g.order == 24);
  CHECK(g.exponent == 12);
}
