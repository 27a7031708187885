#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "support/oracles.hpp"
#include "vwbm/cyclotomic.hpp"
#include "vwbm/number_theory.hpp"
#include "vwbm/polynomial.hpp"
#include "vwbm/rational.hpp"
#include "vwbm/residue.hpp"

using namespace vwbm::arith;
using vwbm::testing::totient_by_gcd;

TEST(Rational, NormalizesSignAndLowestTerms) {
    const Rational q(BigInt(6), BigInt(-4));
    EXPECT_EQ(q.num(), -3);
    EXPECT_EQ(q.den(), 2);
    EXPECT_EQ(q.to_string(), "-3/2");
    EXPECT_EQ(Rational(4).to_string(), "4");
    EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST(Rational, ParseRoundTrip) {
    for (const char* s : {"0", "7", "-7", "3/5", "-12/35", "123456789012345678901234567890/11"})
        EXPECT_EQ(Rational::parse(s).to_string(), s);
    EXPECT_EQ(Rational::parse("4/6"), Rational(BigInt(2), BigInt(3)));
    for (const char* bad : {"", "/", "1/", "a", "1/0", "1/2/3", "1.5"})
        EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
}

TEST(Rational, Arithmetic) {
    const Rational a(BigInt(1), BigInt(3)), b(BigInt(1), BigInt(6));
    EXPECT_EQ(a + b, Rational(BigInt(1), BigInt(2)));
    EXPECT_EQ(a - b, b);
    EXPECT_EQ(a * b, Rational(BigInt(1), BigInt(18)));
    EXPECT_EQ(a / b, Rational(2));
    EXPECT_THROW(a / Rational(0), std::domain_error);
    EXPECT_LT(b, a);
    EXPECT_EQ(max(a, b), a);
}

TEST(Rational, FractionalPartProperty) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-100000, 100000), den(1, 997);
    for (int i = 0; i < 2000; ++i) {
        const Rational q(BigInt(num(rng)), BigInt(den(rng)));
        const Rational f = q.fractional_part();
        EXPECT_GE(f, Rational(0));
        EXPECT_LT(f, Rational(1));
        EXPECT_TRUE((q - f).is_integer());
        EXPECT_EQ(Rational(q.floor()) + f, q);
    }
}

TEST(Residue, ArithmeticAndOrder) {
    const Residue a(-3, 28), b(30, 28);
    EXPECT_EQ(a.value(), 25);
    EXPECT_EQ((a + b).value(), 27);
    EXPECT_EQ((a * 3).value(), 19);
    EXPECT_EQ((-b).value(), 26);
    EXPECT_EQ(Residue(7, 28).additive_order(), 4);
    EXPECT_EQ(Residue(0, 28).additive_order(), 1);
    EXPECT_THROW(Residue(1, 28) + Residue(1, 12), std::invalid_argument);
    EXPECT_EQ(mod_floor(-29, 28), 27);
}

TEST(NumberTheory, TotientAgainstGcdScan) {
    EXPECT_EQ(euler_phi(1), 1);
    EXPECT_EQ(euler_phi(28), 12);
    EXPECT_EQ(euler_phi(30), 8);
    for (std::int64_t k = 1; k <= 500; ++k) EXPECT_EQ(euler_phi(k), totient_by_gcd(k)) << k;
}

TEST(NumberTheory, DivisorsUnitsPrimes) {
    EXPECT_EQ(divisors(28), (std::vector<std::int64_t>{1, 2, 4, 7, 14, 28}));
    EXPECT_EQ(units_mod(12), (std::vector<std::int64_t>{1, 5, 7, 11}));
    EXPECT_EQ(mobius(30), -1);
    EXPECT_EQ(mobius(12), 0);
    EXPECT_TRUE(is_prime(97));
    EXPECT_FALSE(is_prime(91));
    EXPECT_FALSE(is_prime(1));
    EXPECT_TRUE(is_power_of_two(64));
    EXPECT_FALSE(is_power_of_two(48));
}

TEST(Polynomial, ArithmeticAndText) {
    const IntPolynomial p{-1, 1, 1};  // u^2 + u - 1
    EXPECT_EQ(p.to_string(), "u^2 + u - 1");
    EXPECT_EQ((p * p).degree(), 4);
    EXPECT_EQ(IntPolynomial::linear(2).to_string(), "u - 2");
    EXPECT_EQ(p.evaluate(Rational(2)), Rational(5));
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(IntPolynomial().degree(), -1);
}

TEST(Polynomial, DivisionWithRemainder) {
    const IntPolynomial a{1, 0, 0, 1}, b{1, 1};
    const auto d = divide(a, b);
    EXPECT_EQ(d.quotient, (IntPolynomial{1, -1, 1}));
    EXPECT_TRUE(d.remainder.is_zero());
    EXPECT_THROW(divide(a, IntPolynomial()), std::invalid_argument);
    EXPECT_THROW(divide_exact(IntPolynomial{1, 0, 1}, b), std::domain_error);
}

TEST(Polynomial, ExactSqrtProperty) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> coef(-50, 50), deg(0, 8);
    for (int i = 0; i < 300; ++i) {
        std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = coef(rng);
        if (c.back() == 0) c.back() = 1;
        const IntPolynomial p(c);
        const IntPolynomial s = exact_sqrt(p * p);
        EXPECT_TRUE(s == p || s == -p) << p.to_string();
    }
    EXPECT_THROW(exact_sqrt(IntPolynomial{1, 0, 1}), std::domain_error);
}

TEST(Polynomial, ChebyshevSmallCases) {
    EXPECT_EQ(chebyshev_T(0), IntPolynomial::constant(2));
    EXPECT_EQ(chebyshev_T(2), (IntPolynomial{-2, 0, 1}));
    EXPECT_EQ(chebyshev_T(5), (IntPolynomial{0, 5, 0, -5, 0, 1}));
}

TEST(Polynomial, ChebyshevAgainstRecurrenceAndCosine) {
    for (unsigned k = 0; k <= 40; ++k) {
        const IntPolynomial c = chebyshev_T(k);
        EXPECT_EQ(c, vwbm::testing::chebyshev_by_recurrence(k)) << k;
        if (k > 20) continue;
        for (double theta : {0.1, 0.7, 1.3, 2.9}) {
            const double expect = 2.0 * std::cos(static_cast<double>(k) * theta);
            EXPECT_NEAR(c.evaluate(2.0 * std::cos(theta)), expect, 1e-8) << k;
        }
    }
}

TEST(Polynomial, CyclotomicSmallCases) {
    EXPECT_EQ(cyclotomic_poly(1), (IntPolynomial{-1, 1}));
    EXPECT_EQ(cyclotomic_poly(4), (IntPolynomial{1, 0, 1}));
    EXPECT_EQ(cyclotomic_poly(28).degree(), 12);
    EXPECT_EQ(cyclotomic_poly(28), vwbm::testing::cyclotomic_by_division(28));
}

TEST(Polynomial, CyclotomicProductFormula) {
    for (std::int64_t k = 1; k <= 64; ++k) {
        IntPolynomial prod = IntPolynomial::constant(1);
        for (auto d : divisors(k)) prod = prod * cyclotomic_poly(d);
        EXPECT_EQ(prod, IntPolynomial::monomial(1, static_cast<std::size_t>(k)) - IntPolynomial::constant(1)) << k;
        EXPECT_EQ(cyclotomic_poly(k).degree(), euler_phi(k));
    }
}

TEST(Cyclotomic, FieldDegreeAndReduction) {
    const auto f = CyclotomicField::get(28);
    EXPECT_EQ(f->degree(), 12U);
    // xi^14 = -1
    const auto e = CyclotomicElement::from_powers(28, {{Rational(1), 14}});
    EXPECT_EQ(e, CyclotomicElement::rational(28, Rational(-1)));
    const auto z = CyclotomicElement::from_powers(28, {{Rational(1), 1}});
    auto p = CyclotomicElement::one(28);
    for (int i = 0; i < 28; ++i) p = p * z;
    EXPECT_EQ(p, CyclotomicElement::one(28));
}

TEST(Cyclotomic, GaloisOrbitFixes) {
    const auto e = CyclotomicElement::zeta_sum(28, 1);
    EXPECT_TRUE(galois_orbit_fixes(e, 27));
    EXPECT_FALSE(galois_orbit_fixes(e, 3));
    for (auto a : units_mod(28)) EXPECT_TRUE(galois_orbit_fixes(CyclotomicElement::one(28), a));
    EXPECT_THROW(e.galois(2), std::invalid_argument);
    EXPECT_EQ(generated_field_degree({e}), 6);
    EXPECT_EQ(generated_field_degree({CyclotomicElement::one(28)}), 1);
}

TEST(Cyclotomic, GaloisIsMultiplicative) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> coef(-3, 3);
    for (std::int64_t k = 1; k <= 40; ++k) {
        std::uniform_int_distribution<std::int64_t> expo(0, k - 1);
        auto random_element = [&] {
            std::vector<std::pair<Rational, std::int64_t>> terms;
            for (int t = 0; t < 4; ++t) terms.emplace_back(Rational(coef(rng)), expo(rng));
            return CyclotomicElement::from_powers(k, terms);
        };
        const auto e = random_element(), f = random_element();
        for (auto a : units_mod(k)) {
            EXPECT_EQ((e * f).galois(a), e.galois(a) * f.galois(a)) << "K=" << k << " a=" << a;
            EXPECT_EQ((e + f).galois(a), e.galois(a) + f.galois(a));
        }
    }
}

TEST(Cyclotomic, NumericEmbeddingAgrees) {
    // zeta_sum(K, e) is 2 cos(2 pi e / K) under the standard embedding.
    for (std::int64_t k : {5, 12, 28, 30}) {
        const auto prod = CyclotomicElement::zeta_sum(k, 1) * CyclotomicElement::zeta_sum(k, 2);
        const auto sum = CyclotomicElement::zeta_sum(k, 3) + CyclotomicElement::zeta_sum(k, 1);
        EXPECT_EQ(prod, sum) << k;  // 2cos x * 2cos 2x = 2cos 3x + 2cos x
    }
}
