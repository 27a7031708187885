#include "vwbm/number_theory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vwbm::arith {

namespace {

void require_positive(std::int64_t k, const char* what) {
    if (k < 1) throw std::invalid_argument(std::string(what) + ": argument must be >= 1");
}

}  // namespace

std::int64_t euler_phi(std::int64_t k) {
    require_positive(k, "euler_phi");
    std::int64_t result = k;
    for (std::int64_t p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        while (k % p == 0) k /= p;
        result -= result / p;
    }
    if (k > 1) result -= result / k;
    return result;
}

int mobius(std::int64_t k) {
    require_positive(k, "mobius");
    int sign = 1;
    for (std::int64_t p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        k /= p;
        if (k % p == 0) return 0;
        sign = -sign;
    }
    if (k > 1) sign = -sign;
    return sign;
}

std::vector<std::int64_t> divisors(std::int64_t k) {
    require_positive(k, "divisors");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= k; ++d) {
        if (k % d != 0) continue;
        small.push_back(d);
        if (d * d != k) large.push_back(k / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<std::int64_t> units_mod(std::int64_t k) {
    require_positive(k, "units_mod");
    if (k == 1) return {1};
    std::vector<std::int64_t> out;
    for (std::int64_t a = 1; a < k; ++a)
        if (std::gcd(a, k) == 1) out.push_back(a);
    return out;
}

bool is_prime(std::int64_t k) {
    if (k < 2) return false;
    for (std::int64_t p = 2; p * p <= k; ++p)
        if (k % p == 0) return false;
    return true;
}

bool is_power_of_two(std::int64_t k) { return k > 0 && (k & (k - 1)) == 0; }

}  // namespace vwbm::arith
