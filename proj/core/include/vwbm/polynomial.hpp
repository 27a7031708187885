#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "vwbm/rational.hpp"

namespace vwbm::arith {

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree with no trailing zero.  The zero polynomial has
/// no coefficients and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);
    IntPolynomial(std::initializer_list<std::int64_t> coefficients);

    static IntPolynomial constant(BigInt c);
    static IntPolynomial monomial(BigInt c, std::size_t degree);
    /// The linear polynomial x - root.
    static IntPolynomial linear(std::int64_t root);

    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    BigInt coefficient(std::size_t k) const;
    const BigInt& leading() const;

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const { return !is_zero() && leading() == 1; }

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const BigInt& scalar);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
    friend IntPolynomial operator*(const BigInt& s, IntPolynomial a) { return a *= s; }
    IntPolynomial operator-() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    IntPolynomial pow(unsigned exponent) const;

    Rational evaluate(const Rational& x) const;
    double evaluate(double x) const;

    /// Human-readable form, highest degree first, e.g. "u^2 + u - 1".
    std::string to_string(std::string_view var = "u") const;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

struct PolynomialDivision {
    IntPolynomial quotient;
    IntPolynomial remainder;
};

/// Division with remainder over Z.  Every step must divide the leading
/// coefficient exactly (always true for monic divisors); otherwise throws
/// std::domain_error.  Throws std::invalid_argument on a zero divisor.
PolynomialDivision divide(const IntPolynomial& dividend, const IntPolynomial& divisor);

/// Quotient of an exact division; throws std::domain_error on a nonzero
/// remainder.
IntPolynomial divide_exact(const IntPolynomial& dividend, const IntPolynomial& divisor);

/// The polynomial Q with positive leading coefficient such that Q*Q == p.
/// Built top-down coefficient by coefficient and confirmed by an exact
/// multiplication; throws std::domain_error when no integer square root
/// exists.
IntPolynomial exact_sqrt(const IntPolynomial& p);

/// C_k with C_k(p + 1/p) = p^k + p^-k, i.e. C_k(u) = 2 T_k(u/2).
IntPolynomial chebyshev_T(unsigned k);

/// The K-th cyclotomic polynomial.  Requires K >= 1.
IntPolynomial cyclotomic_poly(std::int64_t order);

}  // namespace vwbm::arith
