#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "codeg/codegree.hpp"
#include "codeg/error.hpp"
#include "codeg/group.hpp"
#include "codeg/psl2.hpp"
#include "doctest.h"

using namespace codeg;

namespace {

CodegreeSet cod_of(const GroupSpec& s) {
  GroupData g = enumerate_group(s);
  CharacterTable t = compute_table(g);
  return codegree_set(g, t);
}

}  // namespace

TEST_CASE("codegree sets of small groups") {
  CHECK(cod_of(alternating_group(5)).values == std::vector<i64>{1, 12, 15, 20});
  CHECK(cod_of(cyclic_group(6)).values == std::vector<i64>{1, 2, 3, 6});
  CHECK(cod_of(quaternion8()).values == std::vector<i64>{1, 2, 4});
  CHECK(cod_of(symmetric_group(3)).values == std::vector<i64>{1, 2, 3});
  CHECK(cod_of(sl2_group(3)).values == std::vector<i64>{1, 3, 4, 12});
  CHECK(cod_of(frobenius_agl1(5)).values == std::vector<i64>{1, 2, 4, 5});
}

TEST_CASE("faithful characters divide out nothing") {
  for (const GroupSpec& s : {quaternion8(), sl2_group(3)}) {
    GroupData g = enumerate_group(s);
    CharacterTable t = compute_table(g);
    int faithful = 0;
    for (const auto& c : t.chars)
      if (c.kernel_order == 1) {
        ++faithful;
        CHECK(codegree(c, g) == g.order / c.degree);
      }
    CHECK(faithful > 0);
  }
}

TEST_CASE("pairwise products vs true product codegrees") {
  CodegreeSet s3 = cod_of(symmetric_group(3));
  CodegreeSet naive = product_codegree_set(s3, s3);
  CHECK(naive.values == std::vector<i64>{1, 2, 3, 4, 6, 9});

  /*
   * The naive set overshoots: ker(sgn x sgn) in S3 x S3 is the index-2
   * diagonal subgroup, not ker(sgn) x ker(sgn) of index 4, so the codegree
   * of sgn x sgn is 2 and 4 is never attained. Spelling out all nine tensor
   * pairs of {trivial, sgn, standard} gives exactly {1,2,3,6,9}.
   */
  CodegreeSet actual = cod_of(direct_product(symmetric_group(3), symmetric_group(3)));
  CHECK(actual.values == std::vector<i64>{1, 2, 3, 6, 9});
  for (i64 v : actual.values) {
    bool divides_some = false;
    for (i64 w : naive.values) divides_some |= (w % v == 0);
    CHECK(divides_some);
  }

  // coprime-order factors have coprime central character orders, so the
  // naive set is exact there
  CodegreeSet c2 = cod_of(cyclic_group(2));
  CodegreeSet c3 = cod_of(cyclic_group(3));
  CHECK(product_codegree_set(c2, c3).values ==
        cod_of(direct_product(cyclic_group(2), cyclic_group(3))).values);
  CHECK(product_codegree_set(c2, c3).values == cod_of(cyclic_group(6)).values);
}

TEST_CASE("central quotients lose codegrees") {
  for (i64 q : {5, 7, 9}) {
    CodegreeSet quotient = cod_of(build_psl2(q).group);
    CodegreeSet cover = cod_of(sl2_group(q));
    CHECK(quotient.subset_of(cover));
    CHECK_FALSE(quotient.same_values(cover));
  }
}

TEST_CASE("set construction normalizes and validates") {
  CodegreeSet s = make_codegree_set({20, 1, 15, 12, 12}, "scrambled");
  CHECK(s.values == std::vector<i64>{1, 12, 15, 20});
  CHECK(s.source_label == "scrambled");
  CHECK(s.contains(15));
  CHECK_FALSE(s.contains(13));
  CHECK_THROWS_AS(make_codegree_set({1, 0, 4}, "bad"), Error);
  CHECK_THROWS_AS(make_codegree_set({-3}, "bad"), Error);

  CodegreeSet sub = make_codegree_set({1, 12}, "sub");
  CHECK(sub.subset_of(s));
  CHECK_FALSE(s.subset_of(sub));
  CHECK(s.same_values(make_codegree_set({1, 12, 15, 20}, "other label")));
}

TEST_CASE("prime power obstruction for non-perfect groups") {
  auto run = [](const GroupSpec& s) {
    GroupData g = enumerate_group(s);
    CharacterTable t = compute_table(g);
    return nonperfect_prime_power_obstruction(g, t);
  };
  CHECK(run(symmetric_group(3)) == Obstruction::holds);
  CHECK(run(cyclic_group(6)) == Obstruction::holds);
  CHECK(run(dihedral_group(7)) == Obstruction::holds);
  CHECK(run(alternating_group(5)) == Obstruction::not_applicable);
  CHECK(run(sl2_group(5)) == Obstruction::not_applicable);
}
