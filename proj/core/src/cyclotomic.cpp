#include "vwbm/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "vwbm/number_theory.hpp"
#include "vwbm/residue.hpp"

namespace vwbm::arith {

std::shared_ptr<const CyclotomicField> CyclotomicField::get(std::int64_t order) {
    if (order < 1) throw std::invalid_argument("CyclotomicField: order must be >= 1");
    static std::mutex mutex;
    static std::map<std::int64_t, std::shared_ptr<const CyclotomicField>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[order];
    if (!slot) slot = std::make_shared<const CyclotomicField>(order);
    return slot;
}

CyclotomicField::CyclotomicField(std::int64_t order)
    : order_(order), degree_(static_cast<std::size_t>(euler_phi(order))), phi_(cyclotomic_poly(order)) {
    const auto& phi = phi_.coefficients();
    powers_.reserve(static_cast<std::size_t>(order));
    std::vector<BigInt> cur(degree_);
    cur[0] = 1;
    powers_.push_back(cur);
    for (std::int64_t k = 1; k < order; ++k) {
        // multiply by x, then fold the overflow x^d back using the monic Phi
        BigInt top = cur[degree_ - 1];
        for (std::size_t i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (!top.is_zero())
            for (std::size_t i = 0; i < degree_; ++i) cur[i] -= top * phi[i];
        powers_.push_back(cur);
    }
}

const std::vector<BigInt>& CyclotomicField::power(std::int64_t k) const {
    return powers_[static_cast<std::size_t>(mod_floor(k, order_))];
}

CyclotomicElement::CyclotomicElement(std::int64_t order)
    : field_(CyclotomicField::get(order)), coords_(field_->degree()) {}

void CyclotomicElement::add_scaled_power(const Rational& c, std::int64_t k) {
    if (c.is_zero()) return;
    const auto& p = field_->power(k);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!p[i].is_zero()) coords_[i] += c * Rational(p[i]);
}

CyclotomicElement CyclotomicElement::rational(std::int64_t order, const Rational& q) {
    CyclotomicElement e(order);
    e.coords_[0] = q;
    return e;
}

CyclotomicElement CyclotomicElement::from_powers(std::int64_t order,
                                                 const std::vector<std::pair<Rational, std::int64_t>>& terms) {
    CyclotomicElement e(order);
    for (const auto& [c, k] : terms) e.add_scaled_power(c, k);
    return e;
}

CyclotomicElement CyclotomicElement::zeta_sum(std::int64_t order, std::int64_t e) {
    return from_powers(order, {{Rational(1), e}, {Rational(1), -e}});
}

bool CyclotomicElement::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

void CyclotomicElement::require_same_field(const CyclotomicElement& other) const {
    if (order() != other.order())
        throw std::invalid_argument("CyclotomicElement: mixed orders " + std::to_string(order()) + " and " +
                                    std::to_string(other.order()));
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& rhs) {
    require_same_field(rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
    return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& rhs) {
    require_same_field(rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
    return *this;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
    a.require_same_field(b);
    const std::size_t d = a.coords_.size();
    std::vector<Rational> wide(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (a.coords_[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (!b.coords_[j].is_zero()) wide[i + j] += a.coords_[i] * b.coords_[j];
    }
    CyclotomicElement out(a.order());
    for (std::size_t k = 0; k < wide.size(); ++k) out.add_scaled_power(wide[k], static_cast<std::int64_t>(k));
    return out;
}

CyclotomicElement CyclotomicElement::operator-() const {
    CyclotomicElement r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    return a.order() == b.order() && a.coords_ == b.coords_;
}

namespace {

void require_unit(std::int64_t a, std::int64_t order) {
    if (std::gcd(mod_floor(a, order), order) != 1)
        throw std::invalid_argument("Galois action: " + std::to_string(a) + " is not a unit mod " +
                                    std::to_string(order));
}

}  // namespace

CyclotomicElement CyclotomicElement::galois(std::int64_t a) const {
    require_unit(a, order());
    CyclotomicElement out(order());
    for (std::size_t i = 0; i < coords_.size(); ++i)
        out.add_scaled_power(coords_[i], a * static_cast<std::int64_t>(i));
    return out;
}

bool CyclotomicElement::galois_orbit_fixes(std::int64_t a) const {
    require_unit(a, order());
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        Rational image;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i].is_zero()) continue;
            const BigInt& p = field_->power(a * static_cast<std::int64_t>(i))[j];
            if (!p.is_zero()) image += coords_[i] * Rational(p);
        }
        if (image != coords_[j]) return false;
    }
    return true;
}

std::string CyclotomicElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << '(' << coords_[i] << ")*z^" << i;
    }
    if (first) os << '0';
    os << " in Q(z_" << order() << ')';
    return os.str();
}

bool galois_orbit_fixes(const CyclotomicElement& e, std::int64_t a) { return e.galois_orbit_fixes(a); }

std::int64_t stabilizer_size(const std::vector<CyclotomicElement>& elements) {
    if (elements.empty()) throw std::invalid_argument("stabilizer_size: no elements");
    const std::int64_t order = elements.front().order();
    for (const auto& e : elements)
        if (e.order() != order) throw std::invalid_argument("stabilizer_size: mixed orders");
    std::int64_t count = 0;
    for (std::int64_t a : units_mod(order)) {
        bool fixed = true;
        for (const auto& e : elements)
            if (!e.galois_orbit_fixes(a)) {
                fixed = false;
                break;
            }
        if (fixed) ++count;
    }
    return count;
}

std::int64_t generated_field_degree(const std::vector<CyclotomicElement>& elements) {
    const std::int64_t s = stabilizer_size(elements);
    return euler_phi(elements.front().order()) / s;
}

}  // namespace vwbm::arith
