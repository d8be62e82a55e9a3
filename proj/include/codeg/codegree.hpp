#pragma once

#include <string>

#include "codeg/chartab.hpp"

namespace codeg {

/* sorted, deduplicated set of positive integers with a provenance label */
struct CodegreeSet {
  std::vector<i64> values;
  std::string source_label;

  bool contains(i64 v) const;
  bool subset_of(const CodegreeSet& other) const;
  bool same_values(const CodegreeSet& other) const;
};

CodegreeSet make_codegree_set(std::vector<i64> values, std::string label);

/* cod(chi) = |G : ker chi| / chi(1) */
i64 codegree(const Character& chi, const GroupData& g);

CodegreeSet codegree_set(const GroupData& g, const CharacterTable& t);

/*
 * Pairwise products {x*y}. Equals cod(G x H) when every pair of irreducibles
 * has coprime central character orders, e.g. nonabelian simple factors or
 * factors of coprime order. In general cod(chi x psi) only divides
 * cod(chi) * cod(psi): in S3 x S3 the kernel of sgn x sgn is the index-2
 * diagonal, so 4 is never attained.
 */
CodegreeSet product_codegree_set(const CodegreeSet& a, const CodegreeSet& b);

/* non-perfect groups must expose a nontrivial prime power codegree */
enum class Obstruction { not_applicable, holds, violated };
Obstruction nonperfect_prime_power_obstruction(const GroupData& g, const CharacterTable& t);

}  // namespace codeg
