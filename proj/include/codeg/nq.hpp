#pragma once

#include <string>
#include <vector>

#include "codeg/group.hpp"
#include "codeg/numth.hpp"

namespace codeg {

/*
 * A finite group of invertible n x n matrices over F_p together with its
 * natural module M = F_p^n. Vectors are rows and matrices act on the right,
 * v -> v * A. Vector v is encoded as an integer with digit i (base p) being
 * coordinate i.
 */
struct LinearGModule {
  i64 p = 0;
  int n = 0;
  std::vector<std::vector<int>> generators;  // row-major, length n*n each
  std::string label;
};

void validate_module(const LinearGModule& m, i64 size_cap = 20000);

/* faithful permutation action on the p^n - 1 nonzero vectors */
GroupSpec module_perm_spec(const LinearGModule& m);

/*
 * N_r: every nonzero v in M has C_G(v) containing a normal Sylow r-subgroup
 * of G. Throws PreconditionError when r does not divide |G / C_G(M)|.
 */
bool satisfies_nr(const LinearGModule& m, i64 r);

/* (|M| - 1)/(|C_M(Q)| - 1) = n_r(G) for Q a Sylow r-subgroup */
struct CountCheck {
  i64 lhs = 0;
  i64 rhs = 0;
  bool equal = false;
  i64 fixed_space_size = 0;  // |C_M(Q)|, including the zero vector
};

CountCheck lemma_count_check(const LinearGModule& m, i64 r);

/* module builders over prime fields */
LinearGModule gl_module(int n, i64 p);
LinearGModule sl_module(int n, i64 p);
LinearGModule borel_module(int n, i64 p);          // invertible upper triangular
LinearGModule diagonal_module(int n, i64 p);
LinearGModule unitriangular_module(int n, i64 p);

/* all catalog modules with |G| <= max_group_order and p^n <= max_module_size */
std::vector<LinearGModule> nq_catalog(i64 max_group_order = 1000, i64 max_module_size = 81);

}  // namespace codeg
