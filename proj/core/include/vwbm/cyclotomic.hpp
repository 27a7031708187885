#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "vwbm/polynomial.hpp"
#include "vwbm/rational.hpp"

namespace vwbm::arith {

/// Q(xi_K) presented as Q[x]/Phi_K.  Instances are shared and immutable;
/// obtain them through CyclotomicField::get.
class CyclotomicField {
public:
    static std::shared_ptr<const CyclotomicField> get(std::int64_t order);

    std::int64_t order() const noexcept { return order_; }
    std::size_t degree() const noexcept { return degree_; }
    const IntPolynomial& modulus() const noexcept { return phi_; }

    /// Power-basis coordinates of x^k mod Phi_K, for any integer k.
    const std::vector<BigInt>& power(std::int64_t k) const;

    explicit CyclotomicField(std::int64_t order);

private:
    std::int64_t order_;
    std::size_t degree_;
    IntPolynomial phi_;
    std::vector<std::vector<BigInt>> powers_;  // x^k for 0 <= k < K
};

class CyclotomicElement {
public:
    /// The zero element of Q(xi_K).
    explicit CyclotomicElement(std::int64_t order);

    static CyclotomicElement rational(std::int64_t order, const Rational& q);
    static CyclotomicElement one(std::int64_t order) { return rational(order, 1); }
    /// sum of c * xi_K^e over the given (c, e) terms.
    static CyclotomicElement from_powers(std::int64_t order,
                                         const std::vector<std::pair<Rational, std::int64_t>>& terms);
    /// xi_K^e + xi_K^-e.
    static CyclotomicElement zeta_sum(std::int64_t order, std::int64_t e);

    std::int64_t order() const noexcept { return field_->order(); }
    const std::vector<Rational>& coords() const noexcept { return coords_; }
    bool is_zero() const;

    CyclotomicElement& operator+=(const CyclotomicElement& rhs);
    CyclotomicElement& operator-=(const CyclotomicElement& rhs);
    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
    friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
    friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
    CyclotomicElement operator-() const;

    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);

    /// Image under the automorphism x -> x^a.  Throws std::invalid_argument
    /// unless gcd(a, K) = 1.
    CyclotomicElement galois(std::int64_t a) const;

    /// Whether x -> x^a fixes this element.  Compares coordinate by
    /// coordinate and stops at the first difference.  Throws
    /// std::invalid_argument unless gcd(a, K) = 1.
    bool galois_orbit_fixes(std::int64_t a) const;

    std::string to_string() const;

private:
    void require_same_field(const CyclotomicElement& other) const;
    void add_scaled_power(const Rational& c, std::int64_t k);

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Rational> coords_;
};

bool galois_orbit_fixes(const CyclotomicElement& e, std::int64_t a);

/// Number of units a mod K fixing every element of the list.
std::int64_t stabilizer_size(const std::vector<CyclotomicElement>& elements);

/// Degree over Q of the subfield generated by the elements:
/// phi(K) / stabilizer_size.  All elements must share one order.
std::int64_t generated_field_degree(const std::vector<CyclotomicElement>& elements);

}  // namespace vwbm::arith
