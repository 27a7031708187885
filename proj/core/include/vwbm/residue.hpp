#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>

namespace vwbm::arith {

/// Element of Z/NZ.  Arithmetic between residues of different moduli throws
/// std::invalid_argument.
class Residue {
public:
    Residue(std::int64_t value, std::int64_t modulus);

    std::int64_t value() const noexcept { return value_; }
    std::int64_t modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }

    /// Order of the element in the additive group Z/NZ.
    std::int64_t additive_order() const noexcept;

    Residue& operator+=(const Residue& rhs);
    Residue& operator-=(const Residue& rhs);
    Residue& operator*=(const Residue& rhs);
    Residue& operator*=(std::int64_t k);

    friend Residue operator+(Residue a, const Residue& b) { return a += b; }
    friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
    friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
    friend Residue operator*(Residue a, std::int64_t k) { return a *= k; }
    friend Residue operator*(std::int64_t k, Residue a) { return a *= k; }
    Residue operator-() const;

    friend bool operator==(const Residue&, const Residue&) = default;
    friend auto operator<=>(const Residue& a, const Residue& b) {
        if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
        return a.value_ <=> b.value_;
    }

private:
    void require_same_modulus(const Residue& other) const;

    std::int64_t value_;
    std::int64_t modulus_;
};

/// Canonical representative of k in [0, modulus).
constexpr std::int64_t mod_floor(std::int64_t k, std::int64_t modulus) noexcept {
    const std::int64_t r = k % modulus;
    return r < 0 ? r + modulus : r;
}

std::ostream& operator<<(std::ostream& os, const Residue& r);

}  // namespace vwbm::arith
