#include "vwbm/rational.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace vwbm::arith {

namespace {

BigInt parse_integer(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw std::invalid_argument("integer literal has no digits");
    BigInt value = 0;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c < '0' || c > '9')
            throw std::invalid_argument("invalid character in integer literal: " + std::string(text));
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    normalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den.is_zero()) throw std::invalid_argument("zero denominator: " + std::string(text));
    return Rational(parse_integer(text.substr(0, slash)), std::move(den));
}

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (den_ == 1) return;
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

BigInt Rational::floor() const {
    if (den_ == 1) return num_;
    BigInt q = num_ / den_;  // truncates toward zero
    if (num_.sign() < 0) q -= 1;
    return q;
}

Rational Rational::fractional_part() const {
    if (den_ == 1) return Rational();
    Rational r = *this;
    r.num_ -= floor() * den_;
    return r;
}

Rational Rational::abs() const {
    Rational r = *this;
    if (r.num_.sign() < 0) r.num_ = -r.num_;
    return r;
}

double Rational::to_double() const {
    return boost::multiprecision::cpp_rational(num_, den_).convert_to<double>();
}

std::string Rational::to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ == 1 && rhs.den_ == 1) {
        num_ += rhs.num_;
        return *this;
    }
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    if (den_ == 1 && rhs.den_ == 1) {
        num_ -= rhs.num_;
        return *this;
    }
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    if (den_ == 1 && rhs.den_ == 1) return *this;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_.is_zero()) throw std::domain_error("Rational: division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return a.num_.compare(b.num_) <=> 0;
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    return lhs.compare(rhs) <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace vwbm::arith
