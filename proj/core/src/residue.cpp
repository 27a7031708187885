#include "vwbm/residue.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace vwbm::arith {

namespace {
__extension__ typedef __int128 wide_int;
}  // namespace

Residue::Residue(std::int64_t value, std::int64_t modulus) : value_(0), modulus_(modulus) {
    if (modulus <= 0) throw std::invalid_argument("Residue: modulus must be positive");
    value_ = mod_floor(value, modulus);
}

std::int64_t Residue::additive_order() const noexcept {
    return modulus_ / std::gcd(value_, modulus_);
}

void Residue::require_same_modulus(const Residue& other) const {
    if (modulus_ != other.modulus_)
        throw std::invalid_argument("Residue: mixed moduli " + std::to_string(modulus_) + " and " +
                                    std::to_string(other.modulus_));
}

Residue& Residue::operator+=(const Residue& rhs) {
    require_same_modulus(rhs);
    value_ = mod_floor(value_ + rhs.value_, modulus_);
    return *this;
}

Residue& Residue::operator-=(const Residue& rhs) {
    require_same_modulus(rhs);
    value_ = mod_floor(value_ - rhs.value_, modulus_);
    return *this;
}

Residue& Residue::operator*=(const Residue& rhs) {
    require_same_modulus(rhs);
    value_ = static_cast<std::int64_t>((static_cast<wide_int>(value_) * rhs.value_) % modulus_);
    return *this;
}

Residue& Residue::operator*=(std::int64_t k) {
    const auto wide = (static_cast<wide_int>(value_) * mod_floor(k, modulus_)) % modulus_;
    value_ = static_cast<std::int64_t>(wide);
    return *this;
}

Residue Residue::operator-() const { return Residue(-value_, modulus_); }

std::ostream& operator<<(std::ostream& os, const Residue& r) {
    return os << r.value() << " (mod " << r.modulus() << ")";
}

}  // namespace vwbm::arith
