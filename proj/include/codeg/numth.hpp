#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace codeg {

using i64 = long long;

bool is_prime(i64 n);

/* floor(sqrt(n)), exact; no floating point in the correctness path */
i64 isqrt(i64 n);

/* largest power of r dividing n (n > 0, r prime) */
i64 r_part(i64 n, i64 r);

/* n = r^f with r prime, f >= 1; nullopt otherwise */
std::optional<std::pair<i64, int>> prime_power(i64 n);

i64 mod_pow(i64 base, i64 exp, i64 m);
i64 mod_inv(i64 a, i64 p);  // p prime, a not divisible by p

std::vector<i64> prime_factors(i64 n);  // distinct, ascending

/* smallest generator of (Z/p)^* */
i64 primitive_root(i64 p);

}  // namespace codeg
