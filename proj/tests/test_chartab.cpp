#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "codeg/chartab.hpp"
#include "codeg/error.hpp"
#include "codeg/group.hpp"
#include "doctest.h"

using namespace codeg;

namespace {

std::vector<i64> degrees_of(const CharacterTable& t) {
  std::vector<i64> d;
  for (const auto& c : t.chars) d.push_back(c.degree);
  std::sort(d.begin(), d.end());
  return d;
}

/*
 * oracle: every multiset of r divisors of |G| with sum of squares |G| and a
 * prescribed number of 1s. When the solution is unique it pins the degree
 * multiset with no character theory at all.
 */
void degree_solutions(i64 remaining, int slots, i64 min_d, const std::vector<i64>& divisors,
                      std::vector<i64>& cur, std::vector<std::vector<i64>>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (i64 d : divisors) {
    if (d < min_d) continue;
    if (d * d > remaining) break;
    cur.push_back(d);
    degree_solutions(remaining - d * d, slots - 1, d, divisors, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<i64>> degree_multisets(i64 order, int classes, i64 linears) {
  std::vector<i64> divisors;
  for (i64 d = 1; d <= order; ++d)
    if (order % d == 0) divisors.push_back(d);
  std::vector<i64> cur;
  std::vector<std::vector<i64>> all;
  degree_solutions(order, classes, 1, divisors, cur, all);
  std::vector<std::vector<i64>> out;
  for (auto& v : all)
    if ((i64)std::count(v.begin(), v.end(), 1) == linears) out.push_back(v);
  return out;
}

}  // namespace

TEST_CASE("structure constants of S3") {
  GroupData g = enumerate_group(symmetric_group(3));
  int t = -1, c = -1;
  for (int j = 0; j < g.num_classes(); ++j) {
    if (g.classes[j].size() == 3) t = j;
    if (g.classes[j].size() == 2) c = j;
  }
  REQUIRE(t >= 0);
  REQUIRE(c >= 0);
  for (int j = 0; j < g.num_classes(); ++j)
    for (int k = 0; k < g.num_classes(); ++k)
      CHECK(structure_constant(g, 0, j, k) == (j == k ? 1 : 0));
  CHECK(structure_constant(g, t, t, 0) == 3);
  CHECK(structure_constant(g, t, t, c) == 3);
  CHECK(structure_constant(g, c, c, c) == 1);
}

TEST_CASE("structure constants do not depend on the class representative") {
  GroupData g = enumerate_group(symmetric_group(4));
  for (int k = 0; k < g.num_classes(); ++k) {
    int z = g.classes[k].members.back();  // not the stored representative
    for (int i = 0; i < g.num_classes(); ++i)
      for (int j = 0; j < g.num_classes(); ++j) {
        i64 count = 0;
        for (int x : g.classes[i].members)
          for (int y : g.classes[j].members)
            if (g.mul(x, y) == z) ++count;
        CHECK(count == structure_constant(g, i, j, k));
      }
  }
}

TEST_CASE("degree multisets match the arithmetic oracle") {
  struct Case {
    GroupSpec spec;
    std::vector<i64> expect;
  };
  for (const auto& [spec, expect] : {
           Case{symmetric_group(3), {1, 1, 2}},
           Case{symmetric_group(4), {1, 1, 2, 3, 3}},
           Case{alternating_group(5), {1, 3, 3, 4, 5}},
           Case{quaternion8(), {1, 1, 1, 1, 2}},
           Case{sl2_group(3), {1, 1, 1, 2, 2, 2, 3}},
       }) {
    GroupData g = enumerate_group(spec);
    CharacterTable t = compute_table(g);
    CHECK(degrees_of(t) == expect);

    // the multiset is already forced by |G|, the class count, and |G : G'|
    i64 linears = g.order / derived_subgroup_data(g).order();
    auto solutions = degree_multisets(g.order, g.num_classes(), linears);
    REQUIRE(solutions.size() == 1);
    CHECK(solutions[0] == expect);
  }
}

TEST_CASE("linear character count equals the abelianization order") {
  for (const GroupSpec& s : {symmetric_group(4), alternating_group(4), quaternion8(),
                             sl2_group(3), frobenius_agl1(7), cyclic_group(12),
                             dihedral_group(5), frobenius_agl1(8)}) {
    GroupData g = enumerate_group(s);
    CharacterTable t = compute_table(g);
    i64 linears = 0;
    for (const auto& c : t.chars)
      if (c.degree == 1) ++linears;
    CHECK(linears == g.order / derived_subgroup_data(g).order());
  }
}

TEST_CASE("known splitting primes") {
  CHECK(compute_table(enumerate_group(symmetric_group(3))).ctx.p == 7);
  CHECK(compute_table(enumerate_group(cyclic_group(60))).ctx.p == 61);
  CHECK(compute_table(enumerate_group(sl2_group(9))).ctx.p == 241);
  CHECK(compute_table(enumerate_group(symmetric_group(7))).ctx.p == 421);
}

TEST_CASE("eigenvalue multiplicities are exact lifts") {
  for (const GroupSpec& s : {symmetric_group(4), quaternion8(), sl2_group(3)}) {
    GroupData g = enumerate_group(s);
    CharacterTable t = compute_table(g);
    for (int chi = 0; chi < (int)t.chars.size(); ++chi) {
      const Character& c = t.chars[chi];
      for (int cls = 0; cls < g.num_classes(); ++cls) {
        i64 o = g.classes[cls].rep_order;
        i64 total = 0;
        for (i64 tp = 0; tp < o; ++tp) {
          i64 m = eigenvalue_multiplicity(t, g, chi, cls, tp);
          CHECK(m >= 0);
          CHECK(m <= c.degree);
          total += m;
        }
        CHECK(total == c.degree);  // the representing matrix is diagonalizable

        bool fixed_space_full = eigenvalue_multiplicity(t, g, chi, cls, 0) == c.degree;
        bool in_kernel = std::binary_search(c.kernel_classes.begin(), c.kernel_classes.end(), cls);
        CHECK(fixed_space_full == in_kernel);
      }
    }
  }
}

TEST_CASE("kernels are subgroups of the stated order") {
  GroupData g = enumerate_group(symmetric_group(4));
  CharacterTable t = compute_table(g);
  std::multiset<i64> kernel_orders;
  for (const auto& c : t.chars) {
    std::vector<int> members;
    for (int cls : c.kernel_classes)
      for (int m : g.classes[cls].members) members.push_back(m);
    CHECK((i64)members.size() == c.kernel_order);
    CHECK(subgroup_closure(g, members).order() == c.kernel_order);
    CHECK(g.order % c.kernel_order == 0);
    kernel_orders.insert(c.kernel_order);
  }
  CHECK(kernel_orders == std::multiset<i64>{24, 12, 4, 1, 1});
}

TEST_CASE("tables are deterministic and seed-independent after sorting") {
  for (const GroupSpec& s : {symmetric_group(4), alternating_group(5)}) {
    GroupData g = enumerate_group(s);
    CharacterTable a = compute_table(g, 1);
    CharacterTable b = compute_table(g, 1);
    CharacterTable c = compute_table(g, 987654321);
    REQUIRE(a.chars.size() == b.chars.size());
    REQUIRE(a.chars.size() == c.chars.size());
    for (size_t i = 0; i < a.chars.size(); ++i) {
      CHECK(a.chars[i].values_modp == b.chars[i].values_modp);
      CHECK(a.chars[i].values_modp == c.chars[i].values_modp);
      CHECK(a.chars[i].kernel_classes == c.chars[i].kernel_classes);
    }
  }
}

TEST_CASE("self checks re-run clean and the class cap trips") {
  GroupData g = enumerate_group(symmetric_group(4));
  CharacterTable t = compute_table(g);
  CHECK_NOTHROW(check_table(t, g));
  CHECK(t.order == 24);
  CHECK(t.class_sizes.size() == 5);

  GroupData big = enumerate_group(cyclic_group(64));
  CHECK_THROWS_AS(compute_table(big), Error);  // 64 classes over the default cap
}
