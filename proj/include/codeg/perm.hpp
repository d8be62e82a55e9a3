#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace codeg {

/* permutation of {0, ..., n-1}; composition is left-to-right */
struct Perm {
  std::vector<int> img;

  int degree() const { return (int)img.size(); }
  int operator()(int x) const { return img[x]; }
  bool operator==(const Perm&) const = default;

  static Perm identity(int n);
  bool is_identity() const;
};

/* (a * b)(x) = b(a(x)) : apply a, then b */
Perm pmul(const Perm& a, const Perm& b);
Perm pinv(const Perm& a);
long long perm_order(const Perm& a);

/* "(1 2 3)(4 5)" with 1-indexed points; identity prints as "()" */
std::string cycle_string(const Perm& a);

/* cycles are 1-indexed and must be disjoint */
Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

struct PermHash {
  size_t operator()(const Perm& a) const {
    size_t h = 1469598103934665603ull;
    for (int v : a.img) {
      h ^= (size_t)v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace codeg
