#pragma once

#include <cstdint>
#include <vector>

namespace vwbm::arith {

/// Euler totient.  Requires k >= 1.
std::int64_t euler_phi(std::int64_t k);

/// Moebius function.  Requires k >= 1.
int mobius(std::int64_t k);

/// Positive divisors of k in increasing order.  Requires k >= 1.
std::vector<std::int64_t> divisors(std::int64_t k);

/// Units of Z/kZ in increasing order (1 for k = 1).
std::vector<std::int64_t> units_mod(std::int64_t k);

bool is_prime(std::int64_t k);
bool is_power_of_two(std::int64_t k);

}  // namespace vwbm::arith
