#pragma once

#include <optional>
#include <string>
#include <vector>

#include "codeg/numth.hpp"

namespace codeg {

/*
 * Pure arithmetic recognition of PSL(2,q) from a codegree set. No group is
 * ever constructed and no floating point is used.
 */
struct RecognitionResult {
  std::vector<i64> matches;  // ascending q
  std::string note;
};

/* unique positive q with q(q+sign) = m, if any; sign is +1 or -1 */
std::optional<i64> integer_root_qq1(i64 m, int sign);

std::optional<std::pair<i64, int>> is_prime_power(i64 n);

RecognitionResult recognize(const std::vector<i64>& values);

/*
 * Disjointness/uniqueness certificate for the closed-form sets:
 * no 4-element even-q set embeds in a 5-element odd-q set, and the sets are
 * pairwise distinct within each family, for 2^alpha with alpha in
 * [2, alpha_max] against odd prime powers 5 < q <= q_max.
 */
struct LemmaCertificate {
  bool pass = false;
  int alpha_max = 0;
  i64 q_max = 0;
  i64 cells_checked = 0;
  std::string counterexample;  // empty when pass
};

LemmaCertificate verify_lemma_G_over_N(int alpha_max, i64 q_max);

}  // namespace codeg
