#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <queue>

#include "codeg/error.hpp"
#include "codeg/psl2.hpp"
#include "doctest.h"

using namespace codeg;

namespace {

/* orbit of point 0 under the generators, by plain BFS */
size_t orbit_size(const GroupSpec& s) {
  std::vector<char> seen(s.degree, 0);
  std::queue<int> work;
  seen[0] = 1;
  work.push(0);
  size_t count = 1;
  while (!work.empty()) {
    int x = work.front();
    work.pop();
    for (const Perm& g : s.generators) {
      int y = g(x);
      if (!seen[y]) {
        seen[y] = 1;
        work.push(y);
        ++count;
      }
    }
  }
  return count;
}

}  // namespace

TEST_CASE("orders and degrees") {
  CHECK(psl2_order(4) == 60);
  CHECK(psl2_order(5) == 60);
  CHECK(psl2_order(7) == 168);
  CHECK(psl2_order(8) == 504);
  CHECK(psl2_order(9) == 360);
  CHECK(psl2_order(11) == 660);
  CHECK_THROWS_AS(psl2_order(6), Error);
  CHECK_THROWS_AS(psl2_order(2), Error);
  CHECK_THROWS_AS(psl2_order(3), Error);

  for (i64 q : {4, 5, 7, 8, 9}) {
    Psl2Spec s = build_psl2(q);
    CHECK(s.q == q);
    CHECK(s.group.degree == q + 1);
    CHECK(enumerate_group(s.group).order == psl2_order(q));
  }
}

TEST_CASE("the projective line is a single orbit") {
  for (i64 q : {7, 9}) CHECK(orbit_size(build_psl2(q).group) == size_t(q + 1));
}

TEST_CASE("epsilon is the quadratic character of -1") {
  CHECK(epsilon_q(5) == 1);
  CHECK(epsilon_q(7) == -1);
  CHECK(epsilon_q(9) == 1);
  CHECK(epsilon_q(11) == -1);
  CHECK(epsilon_q(13) == 1);
  CHECK(build_psl2(7).epsilon == -1);
  CHECK_FALSE(build_psl2(8).epsilon.has_value());
}

TEST_CASE("closed-form codegree sets") {
  CHECK(closed_form_cod(4).values == std::vector<i64>{1, 12, 15, 20});
  CHECK(closed_form_cod(5).values == std::vector<i64>{1, 12, 15, 20});
  CHECK(closed_form_cod(7).values == std::vector<i64>{1, 21, 24, 28, 56});
  CHECK(closed_form_cod(8).values == std::vector<i64>{1, 56, 63, 72});
  CHECK(closed_form_cod(9).values == std::vector<i64>{1, 36, 40, 45, 72});
  CHECK(closed_form_cod(11).values == std::vector<i64>{1, 55, 60, 66, 132});
  CHECK(closed_form_cod(13).values == std::vector<i64>{1, 78, 84, 91, 156});

  // q = 5 is served by the isomorphic q = 4 group and says so
  CHECK(closed_form_cod(5).source_label.find("PSL(2,4)") != std::string::npos);
}

TEST_CASE("closed-form degree sets") {
  CHECK(closed_form_cd(4) == std::vector<i64>{1, 3, 4, 5});
  CHECK(closed_form_cd(5) == std::vector<i64>{1, 3, 4, 5});
  CHECK(closed_form_cd(7) == std::vector<i64>{1, 3, 6, 7, 8});
  CHECK(closed_form_cd(8) == std::vector<i64>{1, 7, 8, 9});
  CHECK(closed_form_cd(9) == std::vector<i64>{1, 5, 8, 9, 10});
  CHECK(closed_form_cd(11) == std::vector<i64>{1, 5, 10, 11, 12});
  CHECK(closed_form_cd(13) == std::vector<i64>{1, 7, 12, 13, 14});
}

TEST_CASE("computed codegrees agree with the closed form") {
  Psl2Spec s = build_psl2(7);
  GroupData g = enumerate_group(s.group);
  CharacterTable t = compute_table(g);
  CHECK(codegree_set(g, t).values == closed_form_cod(7).values);
  CHECK(degree_set(t) == closed_form_cd(7));
}

TEST_CASE("order cap is enforced") {
  CHECK_THROWS_AS(build_psl2(13, 500), Error);
}
