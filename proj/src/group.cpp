#include "codeg/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "codeg/error.hpp"
#include "codeg/gf.hpp"

namespace codeg {

int GroupData::element_index(const Perm& p) const {
  auto it = index.find(p);
  return it == index.end() ? -1 : it->second;
}

int GroupData::mul(int a, int b) const {
  int i = element_index(pmul(elements[a], elements[b]));
  if (i < 0) throw Error("GroupData::mul: product escaped the group");
  return i;
}

int GroupData::conj(int x, int g) const {
  const Perm& pg = elements[g];
  int i = element_index(pmul(pmul(pinv(pg), elements[x]), pg));
  if (i < 0) throw Error("GroupData::conj: conjugate escaped the group");
  return i;
}

GroupData enumerate_group(const GroupSpec& spec, i64 order_cap) {
  if (spec.degree < 1) throw Error("enumerate_group: degree must be >= 1");
  for (const Perm& g : spec.generators)
    if (g.degree() != spec.degree)
      throw Error("enumerate_group: generator degree mismatch in '" + spec.label + "'");

  GroupData d;
  d.spec = spec;
  d.elements.push_back(Perm::identity(spec.degree));
  d.index.emplace(d.elements[0], 0);
  for (size_t at = 0; at < d.elements.size(); ++at) {
    for (const Perm& g : spec.generators) {
      Perm y = pmul(d.elements[at], g);
      if (d.index.find(y) == d.index.end()) {
        if ((i64)d.elements.size() + 1 > order_cap)
          throw Error("enumerate_group: order cap " + std::to_string(order_cap) +
                      " exceeded for '" + spec.label + "'");
        d.index.emplace(y, (int)d.elements.size());
        d.elements.push_back(std::move(y));
      }
    }
  }
  d.order = (i64)d.elements.size();

  d.inv_element.resize(d.order);
  for (int i = 0; i < d.order; ++i) {
    int j = d.element_index(pinv(d.elements[i]));
    if (j < 0) throw Error("enumerate_group: inverse not found");
    d.inv_element[i] = j;
  }

  // conjugacy classes: orbits under conjugation by the generators
  std::vector<Perm> gen_invs;
  for (const Perm& g : spec.generators) gen_invs.push_back(pinv(g));
  d.class_of.assign(d.order, -1);
  for (int i = 0; i < d.order; ++i) {
    if (d.class_of[i] >= 0) continue;
    int c = (int)d.classes.size();
    ConjClass cls;
    cls.rep = i;
    std::deque<int> work{i};
    d.class_of[i] = c;
    cls.members.push_back(i);
    while (!work.empty()) {
      int x = work.front();
      work.pop_front();
      for (size_t k = 0; k < spec.generators.size(); ++k) {
        Perm y = pmul(pmul(gen_invs[k], d.elements[x]), spec.generators[k]);
        int iy = d.element_index(y);
        if (iy < 0) throw Error("enumerate_group: conjugate not found");
        if (d.class_of[iy] < 0) {
          d.class_of[iy] = c;
          cls.members.push_back(iy);
          work.push_back(iy);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    d.classes.push_back(std::move(cls));
  }
  if (d.classes[0].rep != 0 || d.classes[0].size() != 1)
    throw Error("enumerate_group: identity class is not class 0");

  d.exponent = 1;
  for (auto& cls : d.classes) {
    cls.rep_order = perm_order(d.elements[cls.rep]);
    d.exponent = std::lcm(d.exponent, cls.rep_order);
    cls.power_class.resize(cls.rep_order);
    Perm pw = Perm::identity(spec.degree);
    for (i64 t = 0; t < cls.rep_order; ++t) {
      int idx = d.element_index(pw);
      if (idx < 0) throw Error("enumerate_group: power not found");
      cls.power_class[t] = d.class_of[idx];
      pw = pmul(pw, d.elements[cls.rep]);
    }
  }

  d.inverse_class.resize(d.classes.size());
  for (size_t c = 0; c < d.classes.size(); ++c)
    d.inverse_class[c] = d.class_of[d.inv_element[d.classes[c].rep]];
  for (size_t c = 0; c < d.classes.size(); ++c)
    if (d.inverse_class[d.inverse_class[c]] != (int)c)
      throw Error("enumerate_group: inverse class map is not an involution");

  return d;
}

Subgroup subgroup_closure(const GroupData& g, std::vector<int> generator_indices) {
  std::vector<char> member(g.order, 0);
  std::vector<int> elems{0};
  member[0] = 1;
  std::sort(generator_indices.begin(), generator_indices.end());
  generator_indices.erase(std::unique(generator_indices.begin(), generator_indices.end()),
                          generator_indices.end());
  for (size_t at = 0; at < elems.size(); ++at)
    for (int s : generator_indices) {
      int y = g.mul(elems[at], s);
      if (!member[y]) {
        member[y] = 1;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  Subgroup h;
  h.elems = std::move(elems);
  h.gens = std::move(generator_indices);
  return h;
}

bool subgroup_contains(const Subgroup& h, int element) {
  return std::binary_search(h.elems.begin(), h.elems.end(), element);
}

Subgroup derived_subgroup_data(const GroupData& g) {
  // every commutator is conjugate to one with a class representative on the
  // left, so the normal closure over these pairs is the full derived subgroup
  std::vector<char> seen(g.order, 0);
  std::vector<int> comms;
  for (const auto& cls : g.classes) {
    int c = cls.rep;
    int cinv = g.inv(c);
    for (int y = 0; y < g.order; ++y) {
      int k = g.mul(g.mul(cinv, g.inv(y)), g.mul(c, y));
      if (!seen[k]) {
        seen[k] = 1;
        comms.push_back(k);
      }
    }
  }
  Subgroup h = subgroup_closure(g, comms);
  std::vector<int> gen_idx;
  for (const Perm& gen : g.spec.generators) gen_idx.push_back(g.element_index(gen));
  for (;;) {
    std::vector<int> escaped;
    for (int x : h.elems)
      for (int gi : gen_idx)
        if (int y = g.conj(x, gi); !subgroup_contains(h, y)) escaped.push_back(y);
    if (escaped.empty()) break;
    std::vector<int> next = h.gens;
    next.insert(next.end(), escaped.begin(), escaped.end());
    h = subgroup_closure(g, std::move(next));
  }
  return h;
}

GroupSpec derived_subgroup(const GroupData& g) {
  Subgroup h = derived_subgroup_data(g);
  GroupSpec spec;
  spec.degree = g.spec.degree;
  spec.label = g.spec.label + "-derived";
  for (int s : h.gens)
    if (s != 0) spec.generators.push_back(g.elements[s]);
  return spec;
}

bool is_perfect(const GroupData& g) { return derived_subgroup_data(g).order() == g.order; }

namespace {

bool normalizes(const GroupData& g, const Subgroup& p, int x) {
  for (int s : p.gens)
    if (!subgroup_contains(p, g.conj(s, x))) return false;
  return true;
}

}  // namespace

Subgroup sylow_subgroup_in(const GroupData& g, const std::vector<int>& ambient, i64 r) {
  if (!is_prime(r)) throw Error("sylow_subgroup_in: r must be prime");
  i64 h = (i64)ambient.size();
  i64 target = r_part(h, r);
  Subgroup p = subgroup_closure(g, {});
  if (target == 1) return p;

  for (int x : ambient) {
    i64 o = perm_order(g.elements[x]);
    if (o % r == 0) {
      i64 rp = r_part(o, r);
      int y = x;
      i64 rest = o / rp;
      // y = x^rest has exact order rp, a power of r
      Perm acc = Perm::identity(g.spec.degree);
      for (i64 t = 0; t < rest; ++t) acc = pmul(acc, g.elements[x]);
      y = g.element_index(acc);
      p = subgroup_closure(g, {y});
      break;
    }
  }
  if (p.order() == 1) throw Error("sylow_subgroup_in: no element of order divisible by r");

  while (p.order() < target) {
    int grow = -1;
    for (int x : ambient) {
      if (subgroup_contains(p, x)) continue;
      if (!normalizes(g, p, x)) continue;
      i64 o = perm_order(g.elements[x]);
      if (r_part(o, r) == o) {
        grow = x;
        break;
      }
    }
    if (grow < 0)
      throw Error("sylow_subgroup_in: normalizer has no r-element outside the subgroup");
    std::vector<int> next = p.gens;
    next.push_back(grow);
    Subgroup bigger = subgroup_closure(g, std::move(next));
    if (bigger.order() <= p.order() || r_part(bigger.order(), r) != bigger.order())
      throw Error("sylow_subgroup_in: extension failed to stay an r-group");
    p = std::move(bigger);
  }
  if (p.order() != target) throw Error("sylow_subgroup_in: wrong final order");
  return p;
}

i64 normalizer_order_in(const GroupData& g, const Subgroup& p, const std::vector<int>& ambient) {
  i64 n = 0;
  for (int x : ambient)
    if (normalizes(g, p, x)) ++n;
  return n;
}

bool is_normal_in(const GroupData& g, const Subgroup& p, const std::vector<int>& ambient) {
  return normalizer_order_in(g, p, ambient) == (i64)ambient.size();
}

i64 sylow_count(const GroupData& g, i64 r) {
  std::vector<int> all(g.order);
  for (int i = 0; i < g.order; ++i) all[i] = i;
  Subgroup p = sylow_subgroup_in(g, all, r);
  i64 n = normalizer_order_in(g, p, all);
  if (g.order % n != 0) throw Error("sylow_count: normalizer order does not divide |G|");
  i64 count = g.order / n;
  if (count % r != 1 && count != 1)
    throw Error("sylow_count: count " + std::to_string(count) + " violates n_r = 1 mod r");
  return count;
}

GroupSpec cyclic_group(int n) {
  if (n < 1) throw Error("cyclic_group: n must be >= 1");
  GroupSpec s;
  s.degree = n;
  s.label = "cyclic:" + std::to_string(n);
  if (n > 1) {
    Perm rot;
    rot.img.resize(n);
    for (int i = 0; i < n; ++i) rot.img[i] = (i + 1) % n;
    s.generators.push_back(rot);
  }
  return s;
}

GroupSpec dihedral_group(int n) {
  if (n < 3) throw Error("dihedral_group: need at least 3 vertices");
  GroupSpec s;
  s.degree = n;
  s.label = "dihedral:" + std::to_string(n);
  Perm rot, flip;
  rot.img.resize(n);
  flip.img.resize(n);
  for (int i = 0; i < n; ++i) {
    rot.img[i] = (i + 1) % n;
    flip.img[i] = (n - i) % n;
  }
  s.generators = {rot, flip};
  return s;
}

GroupSpec symmetric_group(int n) {
  if (n < 1) throw Error("symmetric_group: n must be >= 1");
  GroupSpec s;
  s.degree = n;
  s.label = "sym:" + std::to_string(n);
  if (n >= 2) {
    Perm swap = Perm::identity(n);
    std::swap(swap.img[0], swap.img[1]);
    s.generators.push_back(swap);
  }
  if (n >= 3) {
    Perm rot;
    rot.img.resize(n);
    for (int i = 0; i < n; ++i) rot.img[i] = (i + 1) % n;
    s.generators.push_back(rot);
  }
  return s;
}

GroupSpec alternating_group(int n) {
  if (n < 3) throw Error("alternating_group: n must be >= 3");
  GroupSpec s;
  s.degree = n;
  s.label = "alt:" + std::to_string(n);
  s.generators.push_back(perm_from_cycles(n, {{1, 2, 3}}));
  if (n >= 4) {
    std::vector<int> cyc;
    for (int i = (n % 2 == 1) ? 1 : 2; i <= n; ++i) cyc.push_back(i);
    s.generators.push_back(perm_from_cycles(n, {cyc}));
  }
  return s;
}

GroupSpec frobenius_agl1(i64 q) {
  FieldSpec k = field_make_for_order(q);
  GroupSpec s;
  s.degree = (int)q;
  s.label = "frobenius:" + std::to_string(q);

  auto elems = enumerate_field(k);
  Perm shift, mult;
  shift.img.resize(q);
  mult.img.resize(q);
  FieldElem gen = fe_zero(k);
  for (const auto& a : elems)
    if (!fe_is_zero(a) && fe_mult_order(k, a) == q - 1) {
      gen = a;
      break;
    }
  if (fe_is_zero(gen)) throw Error("frobenius_agl1: no multiplicative generator found");
  for (i64 i = 0; i < q; ++i) {
    shift.img[i] = (int)fe_index(k, fadd(k, elems[i], fe_one(k)));
    mult.img[i] = (int)fe_index(k, fmul(k, elems[i], gen));
  }
  s.generators = {shift, mult};

  GroupData d = enumerate_group(s, q * (q - 1) + 1);
  if (d.order != q * (q - 1))
    throw Error("frobenius_agl1: order " + std::to_string(d.order) + " != q(q-1)");
  return s;
}

GroupSpec quaternion8() {
  GroupSpec s;
  s.degree = 8;
  s.label = "quaternion8";
  s.generators = {perm_from_cycles(8, {{1, 2, 3, 4}, {5, 6, 7, 8}}),
                  perm_from_cycles(8, {{1, 5, 3, 7}, {2, 8, 4, 6}})};
  return s;
}

GroupSpec sl2_group(i64 q) {
  FieldSpec k = field_make_for_order(q);
  GroupSpec s;
  s.degree = (int)(q * q - 1);
  s.label = "sl2:" + std::to_string(q);

  // row vectors (a, b), nonzero; point id = (index(a) * q + index(b)) - 1
  auto point = [&](const FieldElem& a, const FieldElem& b) {
    return (int)(fe_index(k, a) * q + fe_index(k, b)) - 1;
  };
  auto elems = enumerate_field(k);
  auto transvection = [&](const FieldElem& t, bool upper) {
    Perm p;
    p.img.resize(s.degree);
    for (i64 ia = 0; ia < q; ++ia)
      for (i64 ib = 0; ib < q; ++ib) {
        if (ia == 0 && ib == 0) continue;
        const FieldElem &a = elems[ia], &b = elems[ib];
        // v -> v * M for M = [[1, t], [0, 1]] (upper) or [[1, 0], [t, 1]]
        FieldElem na = upper ? a : fadd(k, a, fmul(k, b, t));
        FieldElem nb = upper ? fadd(k, b, fmul(k, a, t)) : b;
        p.img[point(a, b)] = point(na, nb);
      }
    return p;
  };
  for (int i = 0; i < k.f; ++i) {
    s.generators.push_back(transvection(fe_basis(k, i), true));
    s.generators.push_back(transvection(fe_basis(k, i), false));
  }

  GroupData d = enumerate_group(s, q * (q * q - 1) + 1);
  if (d.order != q * (q * q - 1))
    throw Error("sl2_group: order " + std::to_string(d.order) + " != q(q^2-1)");
  return s;
}

GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b) {
  GroupSpec s;
  s.degree = a.degree + b.degree;
  s.label = "product:" + a.label + "*" + b.label;
  for (const Perm& g : a.generators) {
    Perm e = Perm::identity(s.degree);
    std::copy(g.img.begin(), g.img.end(), e.img.begin());
    s.generators.push_back(std::move(e));
  }
  for (const Perm& g : b.generators) {
    Perm e = Perm::identity(s.degree);
    for (int i = 0; i < b.degree; ++i) e.img[a.degree + i] = a.degree + g.img[i];
    s.generators.push_back(std::move(e));
  }
  return s;
}

}  // namespace codeg
