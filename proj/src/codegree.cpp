#include "codeg/codegree.hpp"

#include <algorithm>

#include "codeg/error.hpp"

namespace codeg {

bool CodegreeSet::contains(i64 v) const {
  return std::binary_search(values.begin(), values.end(), v);
}

bool CodegreeSet::subset_of(const CodegreeSet& other) const {
  return std::includes(other.values.begin(), other.values.end(), values.begin(), values.end());
}

bool CodegreeSet::same_values(const CodegreeSet& other) const { return values == other.values; }

CodegreeSet make_codegree_set(std::vector<i64> values, std::string label) {
  for (i64 v : values)
    if (v < 1) throw Error("make_codegree_set: codegrees are positive integers");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return CodegreeSet{std::move(values), std::move(label)};
}

i64 codegree(const Character& chi, const GroupData& g) {
  if (chi.kernel_order < 1 || g.order % chi.kernel_order != 0)
    throw Error("codegree: kernel order does not divide |G|");
  i64 index = g.order / chi.kernel_order;
  if (index % chi.degree != 0)
    throw Error("codegree: degree does not divide |G : ker|");
  return index / chi.degree;
}

CodegreeSet codegree_set(const GroupData& g, const CharacterTable& t) {
  std::vector<i64> vals;
  vals.reserve(t.chars.size());
  for (const auto& chi : t.chars) vals.push_back(codegree(chi, g));
  return make_codegree_set(std::move(vals), g.spec.label);
}

CodegreeSet product_codegree_set(const CodegreeSet& a, const CodegreeSet& b) {
  std::vector<i64> vals;
  vals.reserve(a.values.size() * b.values.size());
  for (i64 x : a.values)
    for (i64 y : b.values) vals.push_back(x * y);
  return make_codegree_set(std::move(vals),
                           "product:" + a.source_label + "*" + b.source_label);
}

Obstruction nonperfect_prime_power_obstruction(const GroupData& g, const CharacterTable& t) {
  if (is_perfect(g)) return Obstruction::not_applicable;
  CodegreeSet cod = codegree_set(g, t);
  for (i64 v : cod.values)
    if (v > 1 && prime_power(v)) return Obstruction::holds;
  return Obstruction::violated;
}

}  // namespace codeg
