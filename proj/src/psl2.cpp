#include "codeg/psl2.hpp"

#include <algorithm>
#include <numeric>

#include "codeg/error.hpp"

namespace codeg {

i64 psl2_order(i64 q) {
  if (!prime_power(q) || q < 4) throw Error("psl2_order: q must be a prime power >= 4");
  return q * (q * q - 1) / std::gcd((i64)2, q - 1);
}

int epsilon_q(i64 q) {
  if (q % 2 == 0) throw Error("epsilon_q: defined for odd q only");
  return ((q - 1) / 2) % 2 == 0 ? 1 : -1;
}

Psl2Spec build_psl2(i64 q, i64 order_cap) {
  auto pp = prime_power(q);
  if (!pp || q < 4) throw Error("build_psl2: q must be a prime power >= 4");

  Psl2Spec out;
  out.q = q;
  out.field = field_make(pp->first, pp->second);
  if (q % 2 == 1) out.epsilon = epsilon_q(q);
  const FieldSpec& k = out.field;

  GroupSpec s;
  s.degree = (int)q + 1;
  s.label = "psl2:" + std::to_string(q);
  const int inf = (int)q;
  auto elems = enumerate_field(k);

  // x -> x + b for each basis element b, fixing infinity
  for (int bi = 0; bi < k.f; ++bi) {
    FieldElem b = fe_basis(k, bi);
    Perm t;
    t.img.resize(s.degree);
    t.img[inf] = inf;
    for (i64 i = 0; i < q; ++i) t.img[i] = (int)fe_index(k, fadd(k, elems[i], b));
    s.generators.push_back(std::move(t));
  }
  // the Weyl inversion x -> -1/x
  {
    Perm w;
    w.img.resize(s.degree);
    w.img[inf] = (int)fe_index(k, fe_zero(k));
    for (i64 i = 0; i < q; ++i) {
      if (fe_is_zero(elems[i])) {
        w.img[i] = inf;
        continue;
      }
      w.img[i] = (int)fe_index(k, fneg(k, finv(k, elems[i])));
    }
    s.generators.push_back(std::move(w));
  }

  i64 want = psl2_order(q);
  if (want > order_cap)
    throw Error("build_psl2: |PSL(2," + std::to_string(q) + ")| = " + std::to_string(want) +
                " exceeds order cap " + std::to_string(order_cap));
  GroupData d = enumerate_group(s, want);
  if (d.order != want)
    throw Error("build_psl2: enumerated order " + std::to_string(d.order) + " != " +
                std::to_string(want) + " for q = " + std::to_string(q));

  out.group = std::move(s);
  return out;
}

CodegreeSet closed_form_cod(i64 q) {
  if (!prime_power(q) || q < 4) throw Error("closed_form_cod: q must be a prime power >= 4");
  std::string label = "psl2:" + std::to_string(q);
  if (q == 5) {
    label += " (codegrees via psl2:4; PSL(2,5) is isomorphic to PSL(2,4))";
    q = 4;
  }
  if (q % 2 == 0)
    return make_codegree_set({1, q * (q - 1), q * (q + 1), q * q - 1}, std::move(label));
  i64 eps = epsilon_q(q);
  return make_codegree_set(
      {1, q * (q - 1) / 2, q * (q + 1) / 2, (q * q - 1) / 2, q * (q - eps)}, std::move(label));
}

std::vector<i64> closed_form_cd(i64 q) {
  if (!prime_power(q) || q < 4) throw Error("closed_form_cd: q must be a prime power >= 4");
  if (q == 5) q = 4;
  std::vector<i64> out;
  if (q % 2 == 0)
    out = {1, q - 1, q, q + 1};
  else
    out = {1, (q + epsilon_q(q)) / 2, q - 1, q, q + 1};
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace codeg
