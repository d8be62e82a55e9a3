#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "codeg/numth.hpp"
#include "codeg/perm.hpp"

namespace codeg {

inline constexpr i64 kDefaultGroupOrderCap = 20000;

struct GroupSpec {
  int degree = 1;
  std::vector<Perm> generators;
  std::string label;
};

struct ConjClass {
  int rep = 0;                    // smallest element index in the class
  std::vector<int> members;       // ascending element indices
  i64 rep_order = 1;
  std::vector<int> power_class;   // class of rep^t for t in [0, rep_order)
  i64 size() const { return (i64)members.size(); }
};

/*
 * Fully enumerated group: element 0 is the identity and class 0 is the
 * identity class. All maps below are index based.
 */
struct GroupData {
  GroupSpec spec;
  std::vector<Perm> elements;
  i64 order = 0;
  i64 exponent = 1;
  std::vector<int> class_of;      // element -> class
  std::vector<ConjClass> classes;
  std::vector<int> inv_element;   // element -> element
  std::vector<int> inverse_class; // class -> class (involution)
  std::unordered_map<Perm, int, PermHash> index;

  int num_classes() const { return (int)classes.size(); }
  int element_index(const Perm& p) const;  // -1 if absent
  int mul(int a, int b) const;
  int inv(int a) const { return inv_element[a]; }
  int conj(int x, int g) const;  // g^{-1} x g
};

GroupData enumerate_group(const GroupSpec& spec, i64 order_cap = kDefaultGroupOrderCap);

/* subgroup of an enumerated group, as element indices */
struct Subgroup {
  std::vector<int> elems;  // ascending, contains 0
  std::vector<int> gens;   // generating subset (element indices)
  i64 order() const { return (i64)elems.size(); }
};

Subgroup subgroup_closure(const GroupData& g, std::vector<int> generator_indices);
bool subgroup_contains(const Subgroup& h, int element);

/* derived subgroup G' (normal closure of commutators) and perfectness */
Subgroup derived_subgroup_data(const GroupData& g);
GroupSpec derived_subgroup(const GroupData& g);
bool is_perfect(const GroupData& g);

/*
 * Sylow machinery. `ambient` must be (the element list of) a subgroup.
 * sylow_subgroup_in grows an r-subgroup through normalizers until it has
 * full r-part order; sylow_count returns n_r = |H : N_H(P)|.
 */
Subgroup sylow_subgroup_in(const GroupData& g, const std::vector<int>& ambient, i64 r);
i64 normalizer_order_in(const GroupData& g, const Subgroup& p, const std::vector<int>& ambient);
bool is_normal_in(const GroupData& g, const Subgroup& p, const std::vector<int>& ambient);
i64 sylow_count(const GroupData& g, i64 r);

/* constructors; labels follow the "family:parameter" convention */
GroupSpec cyclic_group(int n);
GroupSpec dihedral_group(int n);  // n >= 3 vertices, order 2n
GroupSpec symmetric_group(int n);
GroupSpec alternating_group(int n);
GroupSpec frobenius_agl1(i64 q);  // AGL(1,q) = F_q : F_q^*, order q(q-1)
GroupSpec quaternion8();
GroupSpec sl2_group(i64 q);       // on the q^2-1 nonzero row vectors
GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b);

}  // namespace codeg
