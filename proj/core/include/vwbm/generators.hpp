#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vwbm/curve_params.hpp"
#include "vwbm/polynomial.hpp"

namespace vwbm {

using arith::IntPolynomial;

enum class GeneratorCase { m_odd, m_even_n_odd, both_even };

std::string to_string(GeneratorCase c);

/// rhs = (u-2)^power * factor^multiplicity.
struct FactoredRhs {
    std::int64_t power_of_u_minus_2;
    IntPolynomial factor;
    std::int64_t multiplicity;
};

/// y^y_exponent = rhs(u), differential y du / D(u).  All polynomials have
/// integer coefficients and rhs is monic.
struct GeneratorEquation {
    GeneratorCase kind;
    std::int64_t y_exponent;
    IntPolynomial rhs;
    FactoredRhs rhs_factored;
    IntPolynomial differential_denominator;
};

/// m odd:          y^2n = C_m - 2 = (u-2) Q^2,   D = (u-2) Q
/// m even, n odd:  y^2n = (u-2)^n C_{m/2}^2,     D = (u-2) C_{m/2}
/// both even:      y^n  = (u-2)^(n/2) C_{m/2},   D = (u-2) C_{m/2}
GeneratorEquation generator_equation(const CurveParams& params);

/// The rhs as a product of (u - 2cos(.)) factors, evaluated in floating point.
double product_form_rhs(const CurveParams& params, double u);
double product_form_denominator(const CurveParams& params, double u);

struct NumericCheck {
    bool passed;
    double max_relative_deviation;
    std::size_t samples;
};

/// Compares the exact rhs and D(u) against the product forms at 2 deg + 1
/// rational points of [-3, 3], each kept at least 1e-3 from every root.
NumericCheck verify_equation_numeric(const GeneratorEquation& eq, const CurveParams& params,
                                     const arith::Rational& tolerance);

struct DifferentialDescription {
    std::string text;
    IntPolynomial denominator;
    /// D^2 divides (u-2)^a rhs^b.
    std::int64_t a;
    std::int64_t b;
};

/// Throws std::logic_error if D^2 does not divide (u-2)^a rhs^b.
DifferentialDescription differential_description(const GeneratorEquation& eq);

/// Coefficient arrays in ascending degree.
nlohmann::ordered_json to_json(const GeneratorEquation& eq);
nlohmann::ordered_json to_json(const IntPolynomial& p);

}  // namespace vwbm
