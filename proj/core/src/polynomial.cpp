#include "vwbm/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "vwbm/number_theory.hpp"

namespace vwbm::arith {

namespace {

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (auto c : coefficients) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }

IntPolynomial IntPolynomial::monomial(BigInt c, std::size_t degree) {
    std::vector<BigInt> v(degree + 1);
    v[degree] = std::move(c);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(std::int64_t root) { return IntPolynomial{-root, 1}; }

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

const BigInt& IntPolynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) { return *this = *this * rhs; }

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
    IntPolynomial result = constant(1);
    IntPolynomial base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

double IntPolynomial::evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<double>();
    return acc;
}

std::string IntPolynomial::to_string(std::string_view var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const BigInt mag = negative ? BigInt(-c) : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (k == 0 || mag != 1) os << mag;
        if (k >= 1) os << var;
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

PolynomialDivision divide(const IntPolynomial& dividend, const IntPolynomial& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<BigInt> rem = dividend.coefficients();
    const auto& d = divisor.coefficients();
    const std::size_t dn = d.size();
    if (rem.size() < dn) return {IntPolynomial(), dividend};

    std::vector<BigInt> quot(rem.size() - dn + 1);
    const BigInt& lead = d.back();
    for (std::size_t k = rem.size(); k-- >= dn;) {
        if (rem[k].is_zero()) continue;
        if (rem[k] % lead != 0) throw std::domain_error("polynomial division does not stay in Z[x]");
        const BigInt q = rem[k] / lead;
        const std::size_t shift = k - (dn - 1);
        quot[shift] = q;
        for (std::size_t i = 0; i < dn; ++i) rem[shift + i] -= q * d[i];
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial divide_exact(const IntPolynomial& dividend, const IntPolynomial& divisor) {
    auto [q, r] = divide(dividend, divisor);
    if (!r.is_zero()) throw std::domain_error("polynomial division leaves remainder " + r.to_string());
    return q;
}

IntPolynomial exact_sqrt(const IntPolynomial& p) {
    if (p.is_zero()) return {};
    if (p.degree() % 2 != 0) throw std::domain_error("odd-degree polynomial has no square root");
    const BigInt& lead = p.leading();
    if (lead.sign() < 0) throw std::domain_error("negative leading coefficient has no square root");
    const BigInt root_lead = boost::multiprecision::sqrt(lead);
    if (root_lead * root_lead != lead) throw std::domain_error("leading coefficient is not a perfect square");

    const std::size_t half = static_cast<std::size_t>(p.degree()) / 2;
    std::vector<BigInt> q(half + 1);
    q[half] = root_lead;
    const BigInt twice_lead = 2 * root_lead;
    // Coefficient of x^(2*half - k) involves q[half-k] linearly via 2*q[half]*q[half-k].
    for (std::size_t k = 1; k <= half; ++k) {
        BigInt acc = p.coefficient(2 * half - k);
        for (std::size_t i = half - k + 1; i <= half; ++i) {
            const std::size_t j = 2 * half - k - i;
            if (j > half - k && j <= half) acc -= q[i] * q[j];
        }
        if (acc % twice_lead != 0) throw std::domain_error("polynomial is not a square in Z[x]");
        q[half - k] = acc / twice_lead;
    }
    IntPolynomial root(std::move(q));
    if (root * root != p) throw std::domain_error("polynomial is not a square in Z[x]");
    return root;
}

IntPolynomial chebyshev_T(unsigned k) {
    if (k == 0) return IntPolynomial::constant(2);
    // C_k(u) = sum_j (-1)^j [binom(k-j, j) + binom(k-j-1, j-1)] u^(k-2j)
    std::vector<BigInt> c(k + 1);
    for (unsigned j = 0; 2 * j <= k; ++j) {
        BigInt coeff = binomial(k - j, j);
        if (j >= 1) coeff += binomial(k - j - 1, j - 1);
        c[k - 2 * j] = (j % 2 == 0) ? coeff : BigInt(-coeff);
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial cyclotomic_poly(std::int64_t order) {
    if (order < 1) throw std::invalid_argument("cyclotomic_poly: order must be >= 1");
    // Phi_K = prod_{d | K} (x^d - 1)^{mu(K/d)}
    IntPolynomial numerator = IntPolynomial::constant(1);
    IntPolynomial denominator = IntPolynomial::constant(1);
    for (std::int64_t d : divisors(order)) {
        const int mu = mobius(order / d);
        if (mu == 0) continue;
        IntPolynomial factor = IntPolynomial::monomial(1, static_cast<std::size_t>(d)) - IntPolynomial::constant(1);
        (mu > 0 ? numerator : denominator) *= factor;
    }
    return divide_exact(numerator, denominator);
}

}  // namespace vwbm::arith
