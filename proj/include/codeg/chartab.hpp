#pragma once

#include "codeg/group.hpp"
#include "codeg/numth.hpp"

namespace codeg {

inline constexpr int kDefaultClassCap = 60;

/* modular splitting context: p = 1 (mod e), p > 2*floor(sqrt(|G|)),
 * z a fixed element of multiplicative order exactly e in F_p */
struct DixonContext {
  i64 p = 0;
  i64 e = 1;
  i64 z = 1;
  unsigned long long seed = 0;
};

struct Character {
  i64 degree = 0;
  std::vector<i64> values_modp;    // chi(g_j) mod p, indexed by class
  std::vector<int> kernel_classes; // ascending class indices
  i64 kernel_order = 0;
};

struct CharacterTable {
  DixonContext ctx;
  i64 order = 0;
  std::vector<i64> class_sizes;
  std::vector<Character> chars;  // sorted by (degree, values)
};

/* a_ijk = #{(x,y) in C_i x C_j : xy = rep(C_k)} */
i64 structure_constant(const GroupData& g, int i, int j, int k);

CharacterTable compute_table(const GroupData& g, unsigned long long seed = 1,
                             int class_cap = kDefaultClassCap);

/* orthogonality, degree and kernel self-checks; throws on any violation */
void check_table(const CharacterTable& t, const GroupData& g);

/* multiplicity of the eigenvalue zeta_o^t of rho(g_cls) for chars[chi];
 * t = 0 recovers the fixed-space dimension used for kernel detection */
i64 eigenvalue_multiplicity(const CharacterTable& t, const GroupData& g, int chi, int cls,
                            i64 tpow);

/* sorted distinct irreducible character degrees */
std::vector<i64> degree_set(const CharacterTable& t);

}  // namespace codeg
