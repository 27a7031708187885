#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace vwbm {

/// Thrown for pairs outside n, m > 1, nm >= 6, or too large for 64-bit
/// residue arithmetic.
class InvalidParams : public std::invalid_argument {
public:
    InvalidParams();
    explicit InvalidParams(const std::string& what) : std::invalid_argument(what) {}
};

/// Largest accepted n or m.
inline constexpr std::int64_t kMaxParam = 1 << 20;

/// A validated pair (n, m) with N = 2nm, gamma = gcd(n, m), l = lcm(n, m).
class CurveParams {
public:
    CurveParams(std::int64_t n, std::int64_t m);

    static bool valid(std::int64_t n, std::int64_t m) noexcept;

    std::int64_t n() const noexcept { return n_; }
    std::int64_t m() const noexcept { return m_; }
    std::int64_t N() const noexcept { return 2 * n_ * m_; }
    std::int64_t gamma() const noexcept { return gamma_; }
    std::int64_t l() const noexcept { return n_ * m_ / gamma_; }

    bool n_odd() const noexcept { return n_ % 2 != 0; }
    bool m_odd() const noexcept { return m_ % 2 != 0; }
    bool both_even() const noexcept { return !n_odd() && !m_odd(); }

    CurveParams swapped() const { return {m_, n_}; }
    std::string to_string() const;

    friend bool operator==(const CurveParams& a, const CurveParams& b) noexcept {
        return a.n_ == b.n_ && a.m_ == b.m_;
    }
    friend std::strong_ordering operator<=>(const CurveParams& a, const CurveParams& b) noexcept {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.m_ <=> b.m_;
    }

private:
    std::int64_t n_;
    std::int64_t m_;
    std::int64_t gamma_;
};

}  // namespace vwbm
