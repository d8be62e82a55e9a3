#include "codeg/nq.hpp"

#include <algorithm>

#include "codeg/error.hpp"

namespace codeg {

namespace {

i64 pow_i64(i64 b, int e) {
  i64 out = 1;
  while (e-- > 0) out *= b;
  return out;
}

std::vector<int> decode_vec(i64 idx, i64 p, int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) {
    v[i] = (int)(idx % p);
    idx /= p;
  }
  return v;
}

i64 encode_vec(const std::vector<int>& v, i64 p) {
  i64 idx = 0;
  for (int i = (int)v.size() - 1; i >= 0; --i) idx = idx * p + v[i];
  return idx;
}

std::vector<int> apply_row(const std::vector<int>& v, const std::vector<int>& a, i64 p, int n) {
  std::vector<int> w(n, 0);
  for (int i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < n; ++j) w[j] = (int)((w[j] + (i64)v[i] * a[(size_t)i * n + j]) % p);
  }
  return w;
}

i64 matrix_rank(std::vector<int> a, i64 p, int n) {
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pr = -1;
    for (int i = rank; i < n; ++i)
      if (a[(size_t)i * n + col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(a[(size_t)pr * n + j], a[(size_t)rank * n + j]);
    i64 inv = mod_inv(a[(size_t)rank * n + col], p);
    for (int j = 0; j < n; ++j) a[(size_t)rank * n + j] = (int)(a[(size_t)rank * n + j] * inv % p);
    for (int i = 0; i < n; ++i) {
      if (i == rank) continue;
      i64 f = a[(size_t)i * n + col];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j)
        a[(size_t)i * n + j] =
            (int)(((a[(size_t)i * n + j] - f * a[(size_t)rank * n + j]) % p + p) % p);
    }
    ++rank;
  }
  return rank;
}

std::vector<int> identity_matrix(int n) {
  std::vector<int> m((size_t)n * n, 0);
  for (int i = 0; i < n; ++i) m[(size_t)i * n + i] = 1;
  return m;
}

}  // namespace

void validate_module(const LinearGModule& m, i64 size_cap) {
  if (!is_prime(m.p)) throw Error("module: p must be prime");
  if (m.n < 1) throw Error("module: dimension must be >= 1");
  i64 size = 1;
  for (int i = 0; i < m.n; ++i) {
    size *= m.p;
    if (size > size_cap) throw Error("module: p^n exceeds cap");
  }
  for (const auto& g : m.generators) {
    if ((int)g.size() != m.n * m.n) throw Error("module: generator is not n x n");
    for (int v : g)
      if (v < 0 || v >= m.p) throw Error("module: entry out of [0, p)");
    if (matrix_rank(g, m.p, m.n) != m.n)
      throw Error("module: generator matrix is singular");
  }
}

GroupSpec module_perm_spec(const LinearGModule& m) {
  validate_module(m);
  i64 size = pow_i64(m.p, m.n);
  GroupSpec s;
  s.degree = (int)(size - 1);
  s.label = m.label.empty() ? ("glmod:" + std::to_string(m.p) + "^" + std::to_string(m.n))
                            : m.label;
  for (const auto& g : m.generators) {
    Perm perm;
    perm.img.resize(s.degree);
    for (i64 v = 1; v < size; ++v) {
      i64 w = encode_vec(apply_row(decode_vec(v, m.p, m.n), g, m.p, m.n), m.p);
      if (w < 1) throw Error("module_perm_spec: nonzero vector mapped to zero");
      perm.img[v - 1] = (int)(w - 1);
    }
    s.generators.push_back(std::move(perm));
  }
  return s;
}

bool satisfies_nr(const LinearGModule& m, i64 r) {
  if (!is_prime(r)) throw PreconditionError("satisfies_nr: r must be prime");
  GroupData d = enumerate_group(module_perm_spec(m));

  // kernel of the action on M; the action on nonzero vectors is faithful,
  // so this is the identity alone, but compute it rather than assume it
  i64 kernel = 0;
  for (const Perm& e : d.elements)
    if (e.is_identity()) ++kernel;
  i64 action_order = d.order / kernel;
  if (action_order % r != 0)
    throw PreconditionError("satisfies_nr: r = " + std::to_string(r) +
                            " does not divide the action order " + std::to_string(action_order));

  i64 full = r_part(d.order, r);
  for (int v = 0; v < d.spec.degree; ++v) {
    std::vector<int> stab;
    for (int i = 0; i < d.order; ++i)
      if (d.elements[i].img[v] == v) stab.push_back(i);
    if (r_part((i64)stab.size(), r) != full) return false;
    Subgroup p = sylow_subgroup_in(d, stab, r);
    if (!is_normal_in(d, p, stab)) return false;
  }
  return true;
}

CountCheck lemma_count_check(const LinearGModule& m, i64 r) {
  if (!is_prime(r)) throw PreconditionError("lemma_count_check: r must be prime");
  GroupData d = enumerate_group(module_perm_spec(m));
  if (d.order % r != 0)
    throw PreconditionError("lemma_count_check: r does not divide the group order");
  std::vector<int> all(d.order);
  for (int i = 0; i < d.order; ++i) all[i] = i;
  Subgroup q = sylow_subgroup_in(d, all, r);

  i64 size = pow_i64(m.p, m.n);
  i64 fixed = 0;
  for (i64 v = 0; v < size; ++v) {
    bool ok = true;
    for (int s : q.gens)
      if (v != 0 && d.elements[s].img[v - 1] != v - 1) {
        ok = false;
        break;
      }
    if (ok) ++fixed;
  }
  CountCheck out;
  out.fixed_space_size = fixed;
  if (fixed <= 1)
    throw Error("lemma_count_check: C_M(Q) is trivial, the quotient is undefined");
  if ((size - 1) % (fixed - 1) != 0)
    throw Error("lemma_count_check: (|M|-1) is not divisible by (|C_M(Q)|-1)");
  out.lhs = (size - 1) / (fixed - 1);
  out.rhs = d.order / normalizer_order_in(d, q, all);
  out.equal = out.lhs == out.rhs;
  return out;
}

namespace {

void add_transvections(LinearGModule& m, bool upper_only) {
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      if (i == j || (upper_only && i > j)) continue;
      auto g = identity_matrix(m.n);
      g[(size_t)i * m.n + j] = 1;
      m.generators.push_back(std::move(g));
    }
}

void add_diagonals(LinearGModule& m) {
  if (m.p == 2) return;  // the diagonal torus is trivial over F_2
  i64 g = primitive_root(m.p);
  for (int i = 0; i < m.n; ++i) {
    auto d = identity_matrix(m.n);
    d[(size_t)i * m.n + i] = (int)g;
    m.generators.push_back(std::move(d));
  }
}

LinearGModule base_module(int n, i64 p, const std::string& family) {
  LinearGModule m;
  m.p = p;
  m.n = n;
  m.label = family + ":" + std::to_string(n) + ":" + std::to_string(p);
  return m;
}

}  // namespace

LinearGModule gl_module(int n, i64 p) {
  LinearGModule m = base_module(n, p, "gl");
  add_transvections(m, false);
  if (p > 2) {
    auto d = identity_matrix(n);
    d[0] = (int)primitive_root(p);
    m.generators.push_back(std::move(d));
  }
  return m;
}

LinearGModule sl_module(int n, i64 p) {
  if (n < 2) throw Error("sl_module: need n >= 2");
  LinearGModule m = base_module(n, p, "sl");
  add_transvections(m, false);
  return m;
}

LinearGModule borel_module(int n, i64 p) {
  LinearGModule m = base_module(n, p, "borel");
  add_transvections(m, true);
  add_diagonals(m);
  return m;
}

LinearGModule diagonal_module(int n, i64 p) {
  LinearGModule m = base_module(n, p, "diag");
  add_diagonals(m);
  return m;
}

LinearGModule unitriangular_module(int n, i64 p) {
  LinearGModule m = base_module(n, p, "unitri");
  add_transvections(m, true);
  return m;
}

std::vector<LinearGModule> nq_catalog(i64 max_group_order, i64 max_module_size) {
  auto gl_order = [](int n, i64 p) {
    i64 pn = pow_i64(p, n), out = 1;
    i64 pi = 1;
    for (int i = 0; i < n; ++i) {
      out *= pn - pi;
      if (out < 0 || out > (i64)1 << 60) return (i64)1 << 60;
      pi *= p;
    }
    return out;
  };
  std::vector<LinearGModule> out;
  for (i64 p = 2; p <= max_module_size; ++p) {
    if (!is_prime(p)) continue;
    for (int n = 1; pow_i64(p, n) <= max_module_size; ++n) {
      i64 glo = gl_order(n, p);
      i64 half = pow_i64(p, n * (n - 1) / 2);
      i64 torus = pow_i64(p - 1, n);
      if (glo <= max_group_order) out.push_back(gl_module(n, p));
      if (n >= 2) {
        if (p > 2 && glo / (p - 1) <= max_group_order) out.push_back(sl_module(n, p));
        if (torus * half <= max_group_order) out.push_back(borel_module(n, p));
        if (p > 2 && torus <= max_group_order) out.push_back(diagonal_module(n, p));
        if (half <= max_group_order) out.push_back(unitriangular_module(n, p));
      }
    }
  }
  return out;
}

}  // namespace codeg
