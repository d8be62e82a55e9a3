#include "codeg/perm.hpp"

#include <numeric>

#include "codeg/error.hpp"

namespace codeg {

Perm Perm::identity(int n) {
  Perm p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img[i] != i) return false;
  return true;
}

Perm pmul(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw Error("pmul: degree mismatch");
  Perm out;
  out.img.resize(a.degree());
  for (int i = 0; i < a.degree(); ++i) out.img[i] = b.img[a.img[i]];
  return out;
}

Perm pinv(const Perm& a) {
  Perm out;
  out.img.resize(a.degree());
  for (int i = 0; i < a.degree(); ++i) out.img[a.img[i]] = i;
  return out;
}

long long perm_order(const Perm& a) {
  long long ord = 1;
  std::vector<char> seen(a.degree(), 0);
  for (int i = 0; i < a.degree(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (int j = i; !seen[j]; j = a.img[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string cycle_string(const Perm& a) {
  std::string s;
  std::vector<char> seen(a.degree(), 0);
  for (int i = 0; i < a.degree(); ++i) {
    if (seen[i] || a.img[i] == i) {
      seen[i] = 1;
      continue;
    }
    s += "(";
    bool first = true;
    for (int j = i; !seen[j]; j = a.img[j]) {
      seen[j] = 1;
      if (!first) s += " ";
      s += std::to_string(j + 1);
      first = false;
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  if (degree < 1) throw Error("perm_from_cycles: degree must be >= 1");
  Perm p = Perm::identity(degree);
  std::vector<char> used(degree, 0);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > degree || to < 1 || to > degree)
        throw Error("perm_from_cycles: point out of range [1, " + std::to_string(degree) + "]");
      if (used[from - 1]) throw Error("perm_from_cycles: cycles are not disjoint");
      used[from - 1] = 1;
      p.img[from - 1] = to - 1;
    }
  }
  return p;
}

}  // namespace codeg
