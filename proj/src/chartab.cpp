#include "codeg/chartab.hpp"

#include <algorithm>
#include <random>

#include "codeg/error.hpp"

namespace codeg {

namespace {

/* dense matrices over F_p, row major */
struct FpMat {
  int rows = 0, cols = 0;
  std::vector<i64> a;
  FpMat() = default;
  FpMat(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}
  i64& at(int r, int c) { return a[(size_t)r * cols + c]; }
  i64 at(int r, int c) const { return a[(size_t)r * cols + c]; }
  static FpMat eye(int n) {
    FpMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
};

FpMat mat_mul(const FpMat& x, const FpMat& y, i64 p) {
  FpMat out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      i64 v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) out.at(i, j) = (out.at(i, j) + v * y.at(k, j)) % p;
    }
  return out;
}

/* reduced row echelon form in place; returns pivot columns */
std::vector<int> rref(FpMat& m, i64 p) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pr = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
    i64 inv = mod_inv(m.at(row, col), p);
    for (int j = 0; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * inv % p;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      i64 f = m.at(i, col);
      for (int j = 0; j < m.cols; ++j)
        m.at(i, j) = ((m.at(i, j) - f * m.at(row, j)) % p + p) % p;
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/* column basis of {v : A v = 0} */
FpMat nullspace(const FpMat& sq, i64 p) {
  FpMat m = sq;
  std::vector<int> pivots = rref(m, p);
  std::vector<char> is_pivot(m.cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FpMat basis(m.cols, (int)free_cols.size());
  for (size_t fj = 0; fj < free_cols.size(); ++fj) {
    int fc = free_cols[fj];
    basis.at(fc, (int)fj) = 1;
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      basis.at(pivots[pi], (int)fj) = (p - m.at((int)pi, fc)) % p;
  }
  return basis;
}

/* X with B X = C for B of full column rank; C must lie in the column space */
FpMat solve_in_basis(const FpMat& b, const FpMat& c, i64 p) {
  int d = b.cols, m = c.cols;
  FpMat aug(b.rows, d + m);
  for (int i = 0; i < b.rows; ++i) {
    for (int j = 0; j < d; ++j) aug.at(i, j) = b.at(i, j);
    for (int j = 0; j < m; ++j) aug.at(i, d + j) = c.at(i, j);
  }
  std::vector<int> pivots = rref(aug, p);
  if ((int)pivots.size() < d)
    throw Error("solve_in_basis: basis matrix is column deficient");
  for (int i = 0; i < d; ++i)
    if (pivots[i] != i) throw Error("solve_in_basis: subspace not preserved");
  for (size_t i = d; i < pivots.size(); ++i)
    throw Error("solve_in_basis: inconsistent system, image escapes the subspace");
  FpMat x(d, m);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < m; ++j) x.at(i, j) = aug.at(i, d + j);
  return x;
}

/*
 * Characteristic polynomial: similarity reduction to upper Hessenberg form,
 * then the standard leading-principal-minor recurrence. Coefficients are
 * returned low degree first, monic of degree n.
 */
std::vector<i64> charpoly(FpMat h, i64 p) {
  int n = h.rows;
  for (int k = 0; k + 2 < n; ++k) {
    int pr = -1;
    for (int i = k + 1; i < n; ++i)
      if (h.at(i, k) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != k + 1) {
      for (int j = 0; j < n; ++j) std::swap(h.at(pr, j), h.at(k + 1, j));
      for (int i = 0; i < n; ++i) std::swap(h.at(i, pr), h.at(i, k + 1));
    }
    i64 inv = mod_inv(h.at(k + 1, k), p);
    for (int i = k + 2; i < n; ++i) {
      if (h.at(i, k) == 0) continue;
      i64 f = h.at(i, k) * inv % p;
      for (int j = 0; j < n; ++j) h.at(i, j) = ((h.at(i, j) - f * h.at(k + 1, j)) % p + p) % p;
      for (int i2 = 0; i2 < n; ++i2)
        h.at(i2, k + 1) = (h.at(i2, k + 1) + f * h.at(i2, i)) % p;
    }
  }

  std::vector<std::vector<i64>> polys(n + 1);
  polys[0] = {1};
  for (int m = 1; m <= n; ++m) {
    const auto& prev = polys[m - 1];
    std::vector<i64> cur(m + 1, 0);
    i64 diag = h.at(m - 1, m - 1);
    for (int t = 0; t < m; ++t) {
      cur[t + 1] = (cur[t + 1] + prev[t]) % p;
      cur[t] = ((cur[t] - diag * prev[t]) % p + p) % p;
    }
    i64 prod = 1;
    for (int k = 2; k <= m; ++k) {
      prod = prod * h.at(m - k + 1, m - k) % p;
      if (prod == 0) break;
      i64 coef = h.at(m - k, m - 1) * prod % p;
      if (coef == 0) continue;
      const auto& old = polys[m - k];
      for (size_t t = 0; t < old.size(); ++t)
        cur[t] = ((cur[t] - coef * old[t]) % p + p) % p;
    }
    polys[m] = std::move(cur);
  }
  return polys[n];
}

i64 poly_eval(const std::vector<i64>& c, i64 x, i64 p) {
  i64 acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * x + *it) % p;
  return acc;
}

i64 smallest_dixon_prime(i64 exponent, i64 order) {
  i64 lower = 2 * isqrt(order);
  for (i64 p = exponent + 1;; p += exponent) {
    if (p > lower && is_prime(p)) return p;
    if (p > (i64)1 << 40) throw Error("smallest_dixon_prime: runaway search");
  }
}

}  // namespace

i64 structure_constant(const GroupData& g, int i, int j, int k) {
  int r = g.num_classes();
  if (i < 0 || j < 0 || k < 0 || i >= r || j >= r || k >= r)
    throw Error("structure_constant: class index out of range");
  int zk = g.classes[k].rep;
  i64 count = 0;
  for (int x : g.classes[i].members)
    if (g.class_of[g.mul(g.inv(x), zk)] == j) ++count;
  return count;
}

CharacterTable compute_table(const GroupData& g, unsigned long long seed, int class_cap) {
  int r = g.num_classes();
  if (r > class_cap)
    throw Error("compute_table: " + std::to_string(r) + " classes exceeds cap " +
                std::to_string(class_cap));

  CharacterTable tab;
  tab.order = g.order;
  for (const auto& cls : g.classes) tab.class_sizes.push_back(cls.size());
  tab.ctx.e = g.exponent;
  tab.ctx.seed = seed;
  tab.ctx.p = smallest_dixon_prime(g.exponent, g.order);
  const i64 p = tab.ctx.p;
  tab.ctx.z = mod_pow(primitive_root(p), (p - 1) / g.exponent, p);

  // structure constant tensor a[i][j][k]
  std::vector<i64> a((size_t)r * r * r, 0);
  auto at3 = [r](int i, int j, int k) { return ((size_t)i * r + j) * r + k; };
  for (int x = 0; x < g.order; ++x) {
    int i = g.class_of[x];
    int xi = g.inv(x);
    for (int k = 0; k < r; ++k) {
      int j = g.class_of[g.mul(xi, g.classes[k].rep)];
      ++a[at3(i, j, k)];
    }
  }

  // split the common eigenspaces by class matrices in seeded random order
  std::vector<int> order_of_matrices;
  for (int i = 1; i < r; ++i) order_of_matrices.push_back(i);
  std::mt19937_64 rng(seed);
  for (int i = (int)order_of_matrices.size() - 1; i > 0; --i) {
    int j = (int)(rng() % (unsigned long long)(i + 1));
    std::swap(order_of_matrices[i], order_of_matrices[j]);
  }

  std::vector<FpMat> spaces{FpMat::eye(r)};
  auto all_split = [&spaces] {
    return std::all_of(spaces.begin(), spaces.end(), [](const FpMat& v) { return v.cols == 1; });
  };
  for (int mi : order_of_matrices) {
    if (all_split()) break;
    FpMat m(r, r);
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) m.at(j, k) = a[at3(mi, j, k)] % p;
    std::vector<FpMat> next;
    for (FpMat& v : spaces) {
      if (v.cols == 1) {
        next.push_back(std::move(v));
        continue;
      }
      FpMat c = mat_mul(m, v, p);
      FpMat x = solve_in_basis(v, c, p);
      std::vector<i64> cp = charpoly(x, p);
      int found = 0;
      for (i64 lam = 0; lam < p; ++lam) {
        if (poly_eval(cp, lam, p) != 0) continue;
        FpMat shifted = x;
        for (int i = 0; i < x.rows; ++i)
          shifted.at(i, i) = ((shifted.at(i, i) - lam) % p + p) % p;
        FpMat ns = nullspace(shifted, p);
        if (ns.cols == 0) throw Error("compute_table: root without eigenvector");
        next.push_back(mat_mul(v, ns, p));
        found += ns.cols;
      }
      if (found != v.cols)
        throw Error("compute_table: class matrix not diagonalizable over F_p");
    }
    spaces = std::move(next);
  }
  if (!all_split()) throw Error("compute_table: common eigenspaces failed to split");
  if ((int)spaces.size() != r) throw Error("compute_table: wrong number of eigenspaces");

  // each line gives omega_j = |C_j| chi(g_j) / chi(1) mod p after normalizing
  // the identity coordinate to 1
  std::vector<i64> size_inv(r);
  for (int j = 0; j < r; ++j) size_inv[j] = mod_inv(g.classes[j].size() % p, p);
  i64 sq = isqrt(g.order);

  for (const FpMat& v : spaces) {
    i64 head = v.at(0, 0);
    if (head == 0) throw Error("compute_table: eigenvector vanishes at the identity class");
    i64 head_inv = mod_inv(head, p);
    std::vector<i64> w(r);
    for (int j = 0; j < r; ++j) w[j] = v.at(j, 0) * head_inv % p;

    // |G| / chi(1)^2 = sum_j w_j w_{j*} / |C_j|
    i64 t = 0;
    for (int j = 0; j < r; ++j) t = (t + w[j] * w[g.inverse_class[j]] % p * size_inv[j]) % p;
    if (t == 0) throw Error("compute_table: degenerate norm sum");
    i64 target = g.order % p * mod_inv(t, p) % p;
    i64 degree = 0;
    for (i64 d = 1; d <= sq; ++d)
      if (d * d % p == target) {
        if (degree != 0) throw Error("compute_table: degree lift not unique");
        degree = d;
      }
    if (degree == 0) throw Error("compute_table: no degree lift in [1, sqrt(|G|)]");
    if (g.order % degree != 0) throw Error("compute_table: degree does not divide |G|");

    Character chi;
    chi.degree = degree;
    chi.values_modp.resize(r);
    for (int j = 0; j < r; ++j)
      chi.values_modp[j] = w[j] * (degree % p) % p * size_inv[j] % p;

    // kernel: class j is in ker(chi) iff the fixed-space multiplicity
    // m0 = (1/o) sum_t chi(g_j^t) lifts to exactly chi(1)
    for (int j = 0; j < r; ++j) {
      const auto& cls = g.classes[j];
      i64 s = 0;
      for (i64 tt = 0; tt < cls.rep_order; ++tt)
        s = (s + chi.values_modp[cls.power_class[tt]]) % p;
      i64 m0 = s * mod_inv(cls.rep_order % p, p) % p;
      if (m0 > degree)
        throw Error("compute_table: multiplicity lift out of range");
      if (m0 == degree) chi.kernel_classes.push_back(j);
    }
    for (int j : chi.kernel_classes) chi.kernel_order += g.classes[j].size();
    if (chi.kernel_classes.empty() || chi.kernel_classes[0] != 0)
      throw Error("compute_table: kernel misses the identity class");
    if (g.order % chi.kernel_order != 0)
      throw Error("compute_table: kernel order does not divide |G|");

    tab.chars.push_back(std::move(chi));
  }

  std::sort(tab.chars.begin(), tab.chars.end(), [](const Character& x, const Character& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    return x.values_modp < y.values_modp;
  });

  check_table(tab, g);
  return tab;
}

void check_table(const CharacterTable& t, const GroupData& g) {
  const i64 p = t.ctx.p;
  int r = g.num_classes();
  if ((int)t.chars.size() != r) throw Error("check_table: #chars != #classes");

  i64 degsum = 0;
  for (const auto& chi : t.chars) degsum += chi.degree * chi.degree;
  if (degsum != g.order) throw Error("check_table: sum of squared degrees != |G|");

  int trivial = 0;
  for (const auto& chi : t.chars)
    if (chi.degree == 1 && chi.kernel_order == g.order) ++trivial;
  if (trivial != 1) throw Error("check_table: trivial character count != 1");

  for (int x = 0; x < r; ++x)
    for (int y = x; y < r; ++y) {
      i64 s = 0;
      for (int j = 0; j < r; ++j) {
        i64 cj = g.classes[j].size() % p;
        s = (s + cj * t.chars[x].values_modp[j] % p *
                     t.chars[y].values_modp[g.inverse_class[j]]) % p;
      }
      i64 want = (x == y) ? g.order % p : 0;
      if (s != want) throw Error("check_table: row orthogonality fails");
    }

  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      i64 s = 0;
      for (const auto& chi : t.chars)
        s = (s + chi.values_modp[i] * chi.values_modp[g.inverse_class[j]]) % p;
      i64 want = (i == j) ? (g.order / g.classes[i].size()) % p : 0;
      if (s != want) throw Error("check_table: column orthogonality fails");
    }
}

i64 eigenvalue_multiplicity(const CharacterTable& t, const GroupData& g, int chi, int cls,
                            i64 tpow) {
  const i64 p = t.ctx.p;
  const auto& c = g.classes[cls];
  const auto& ch = t.chars[chi];
  i64 o = c.rep_order;
  i64 zeta_inv = mod_inv(mod_pow(t.ctx.z, t.ctx.e / o, p), p);
  i64 s = 0;
  for (i64 u = 0; u < o; ++u) {
    i64 w = mod_pow(zeta_inv, tpow * u % o, p);
    s = (s + ch.values_modp[c.power_class[u]] * w) % p;
  }
  i64 m = s * mod_inv(o % p, p) % p;
  if (m > ch.degree) throw Error("eigenvalue_multiplicity: lift out of range");
  return m;
}

std::vector<i64> degree_set(const CharacterTable& t) {
  std::vector<i64> out;
  for (const Character& chi : t.chars) out.push_back(chi.degree);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace codeg
