#include "vwbm/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace vwbm {

using arith::BigInt;
using arith::Rational;

std::string to_string(GeneratorCase c) {
    switch (c) {
        case GeneratorCase::m_odd: return "m_odd";
        case GeneratorCase::m_even_n_odd: return "m_even_n_odd";
        case GeneratorCase::both_even: return "both_even";
    }
    return "?";
}

namespace {

const IntPolynomial& u_minus_2() {
    static const IntPolynomial p = IntPolynomial::linear(2);
    return p;
}

unsigned as_unsigned(std::int64_t k) { return static_cast<unsigned>(k); }

// Roots of the product factor: 2cos(2 pi j / m) for m odd, 2cos(pi (2j-1) / m) for m even.
std::vector<double> factor_roots(const CurveParams& params) {
    const std::int64_t m = params.m();
    std::vector<double> roots;
    if (params.m_odd()) {
        for (std::int64_t j = 1; j <= (m - 1) / 2; ++j)
            roots.push_back(2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m)));
    } else {
        for (std::int64_t j = 1; j <= m / 2; ++j)
            roots.push_back(
                2.0 * std::cos(std::numbers::pi * static_cast<double>(2 * j - 1) / static_cast<double>(m)));
    }
    return roots;
}

double factor_product(const std::vector<double>& roots, double u) {
    double p = 1.0;  // empty product
    for (double r : roots) p *= (u - r);
    return p;
}

}  // namespace

GeneratorEquation generator_equation(const CurveParams& params) {
    const std::int64_t n = params.n(), m = params.m();
    GeneratorEquation eq;
    if (params.m_odd()) {
        eq.kind = GeneratorCase::m_odd;
        eq.y_exponent = 2 * n;
        eq.rhs = arith::chebyshev_T(as_unsigned(m)) - IntPolynomial::constant(2);
        const IntPolynomial q = arith::exact_sqrt(arith::divide_exact(eq.rhs, u_minus_2()));
        eq.rhs_factored = {1, q, 2};
        eq.differential_denominator = u_minus_2() * q;
    } else {
        const IntPolynomial half = arith::chebyshev_T(as_unsigned(m / 2));
        eq.differential_denominator = u_minus_2() * half;
        if (params.n_odd()) {
            eq.kind = GeneratorCase::m_even_n_odd;
            eq.y_exponent = 2 * n;
            eq.rhs = u_minus_2().pow(as_unsigned(n)) * half * half;
            eq.rhs_factored = {n, half, 2};
        } else {
            eq.kind = GeneratorCase::both_even;
            eq.y_exponent = n;
            eq.rhs = u_minus_2().pow(as_unsigned(n / 2)) * half;
            eq.rhs_factored = {n / 2, half, 1};
        }
    }
    return eq;
}

double product_form_rhs(const CurveParams& params, double u) {
    const double f = factor_product(factor_roots(params), u);
    const double n = static_cast<double>(params.n());
    if (params.m_odd()) return (u - 2.0) * f * f;
    if (params.n_odd()) return std::pow(u - 2.0, n) * f * f;
    return std::pow(u - 2.0, n / 2.0) * f;
}

double product_form_denominator(const CurveParams& params, double u) {
    return (u - 2.0) * factor_product(factor_roots(params), u);
}

NumericCheck verify_equation_numeric(const GeneratorEquation& eq, const CurveParams& params,
                                     const Rational& tolerance) {
    if (tolerance.sign() <= 0) throw std::invalid_argument("verify_equation_numeric: tolerance must be positive");
    std::vector<double> roots = factor_roots(params);
    roots.push_back(2.0);
    const std::size_t samples = 2 * static_cast<std::size_t>(std::max(eq.rhs.degree(), 0)) + 1;
    const Rational step(6, static_cast<std::int64_t>(std::max<std::size_t>(samples - 1, 1)));
    const Rational nudge(1, 256);

    double worst = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        Rational x = Rational(-3) + step * Rational(static_cast<std::int64_t>(i));
        auto near_root = [&](const Rational& v) {
            const double d = v.to_double();
            return std::any_of(roots.begin(), roots.end(), [d](double r) { return std::abs(d - r) < 1e-3; });
        };
        while (near_root(x)) x += nudge;
        const double u = x.to_double();
        const std::pair<const IntPolynomial*, double> checks[] = {
            {&eq.rhs, product_form_rhs(params, u)},
            {&eq.differential_denominator, product_form_denominator(params, u)}};
        for (const auto& [poly, approx] : checks) {
            const double exact = poly->evaluate(x).to_double();
            const double dev = std::abs(exact - approx) / std::max(std::abs(exact), 1e-300);
            worst = std::max(worst, dev);
        }
    }
    return {worst < tolerance.to_double(), worst, samples};
}

DifferentialDescription differential_description(const GeneratorEquation& eq) {
    DifferentialDescription d{"", eq.differential_denominator, 1, 1};
    if (eq.kind == GeneratorCase::both_even) d = {"", eq.differential_denominator, 0, 2};
    const IntPolynomial target = u_minus_2().pow(as_unsigned(d.a)) * eq.rhs.pow(as_unsigned(d.b));
    const auto division = arith::divide(target, d.denominator * d.denominator);
    if (!division.remainder.is_zero()) throw std::logic_error("differential_description: D^2 does not divide");
    d.text = "y du / (" + d.denominator.to_string() + ")";
    return d;
}

nlohmann::ordered_json to_json(const IntPolynomial& p) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const BigInt& c : p.coefficients()) {
        if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
            arr.push_back(c.convert_to<std::int64_t>());
        else
            arr.push_back(c.str());
    }
    return arr;
}

nlohmann::ordered_json to_json(const GeneratorEquation& eq) {
    const auto diff = differential_description(eq);
    return {
        {"case", to_string(eq.kind)},
        {"y_exponent", eq.y_exponent},
        {"rhs", to_json(eq.rhs)},
        {"rhs_text", eq.rhs.to_string()},
        {"rhs_factored",
         {{"power_of_u_minus_2", eq.rhs_factored.power_of_u_minus_2},
          {"factor", to_json(eq.rhs_factored.factor)},
          {"multiplicity", eq.rhs_factored.multiplicity}}},
        {"differential_denominator", to_json(eq.differential_denominator)},
        {"differential", diff.text},
    };
}

}  // namespace vwbm
