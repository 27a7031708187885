#include "vwbm/curve_params.hpp"

#include <numeric>

namespace vwbm {

InvalidParams::InvalidParams() : std::invalid_argument("n, m must exceed 1 and nm ≥ 6") {}

bool CurveParams::valid(std::int64_t n, std::int64_t m) noexcept {
    return n > 1 && m > 1 && n <= kMaxParam && m <= kMaxParam && n * m >= 6;
}

CurveParams::CurveParams(std::int64_t n, std::int64_t m) : n_(n), m_(m), gamma_(1) {
    if (n > kMaxParam || m > kMaxParam) throw InvalidParams("n, m must not exceed " + std::to_string(kMaxParam));
    if (!valid(n, m)) throw InvalidParams();
    gamma_ = std::gcd(n, m);
}

std::string CurveParams::to_string() const { return "(" + std::to_string(n_) + "," + std::to_string(m_) + ")"; }

}  // namespace vwbm
