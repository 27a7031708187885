#include "vwbm/rowspan.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vwbm {

RowVector::RowVector(std::array<std::int64_t, 4> entries, std::int64_t modulus) : r_(entries), modulus_(modulus) {
    if (modulus <= 0) throw std::invalid_argument("RowVector: modulus must be positive");
    for (auto& x : r_) x = arith::mod_floor(x, modulus);
}

bool RowVector::is_zero() const noexcept {
    return std::all_of(r_.begin(), r_.end(), [](std::int64_t x) { return x == 0; });
}

bool RowVector::has_zero_entry() const noexcept {
    return std::any_of(r_.begin(), r_.end(), [](std::int64_t x) { return x == 0; });
}

RowVector RowVector::operator+(const RowVector& rhs) const {
    if (modulus_ != rhs.modulus_) throw std::invalid_argument("RowVector: mixed moduli");
    return RowVector({r_[0] + rhs.r_[0], r_[1] + rhs.r_[1], r_[2] + rhs.r_[2], r_[3] + rhs.r_[3]}, modulus_);
}

RowVector RowVector::operator-(const RowVector& rhs) const { return *this + (-rhs); }

RowVector RowVector::operator-() const { return RowVector({-r_[0], -r_[1], -r_[2], -r_[3]}, modulus_); }

RowVector RowVector::scaled(std::int64_t k) const {
    const std::int64_t kk = arith::mod_floor(k, modulus_);
    std::array<std::int64_t, 4> out{};
    for (std::size_t j = 0; j < 4; ++j) out[j] = (r_[j] * kk) % modulus_;
    return RowVector(out, modulus_);
}

RowVector RowVector::lifted(std::int64_t new_modulus) const {
    if (new_modulus % modulus_ != 0) throw std::invalid_argument("RowVector::lifted: modulus must divide the target");
    const std::int64_t k = new_modulus / modulus_;
    return RowVector({r_[0] * k, r_[1] * k, r_[2] * k, r_[3] * k}, new_modulus);
}

std::string RowVector::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RowVector& r) {
    return os << '(' << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << ") mod " << r.modulus();
}

DefiningMatrix defining_matrix(const CurveParams& params) {
    const std::int64_t n = params.n(), m = params.m(), nm = n * m, N = params.N();
    return {RowVector({nm - n - m, nm + n - m, nm + n + m, nm - n + m}, N),
            RowVector({nm + n - m, nm - n - m, nm - n + m, nm + n + m}, N)};
}

template <std::size_t D>
std::vector<std::array<std::int64_t, D>> subgroup_closure(const std::vector<std::array<std::int64_t, D>>& gens,
                                                          std::int64_t modulus, std::size_t cap) {
    using Vec = std::array<std::int64_t, D>;
    std::set<Vec> seen{Vec{}};
    std::deque<Vec> frontier{Vec{}};
    while (!frontier.empty()) {
        const Vec v = frontier.front();
        frontier.pop_front();
        for (const Vec& g : gens) {
            Vec w{};
            for (std::size_t j = 0; j < D; ++j) w[j] = arith::mod_floor(v[j] + g[j], modulus);
            if (seen.insert(w).second) {
                if (seen.size() > cap) throw std::logic_error("subgroup_closure: exceeded element cap");
                frontier.push_back(w);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

template std::vector<std::array<std::int64_t, 2>> subgroup_closure<2>(
    const std::vector<std::array<std::int64_t, 2>>&, std::int64_t, std::size_t);
template std::vector<std::array<std::int64_t, 4>> subgroup_closure<4>(
    const std::vector<std::array<std::int64_t, 4>>&, std::int64_t, std::size_t);

std::vector<RowVector> row_span(const CurveParams& params) {
    const auto rows = defining_matrix(params);
    const std::int64_t N = params.N();
    const auto cap = static_cast<std::size_t>(N) * static_cast<std::size_t>(N);
    const auto raw = subgroup_closure<4>({rows[0].entries(), rows[1].entries()}, N, cap);
    std::vector<RowVector> out;
    out.reserve(raw.size());
    for (const auto& v : raw) out.emplace_back(v, N);
    return out;
}

bool span_contains(const std::vector<RowVector>& span, const RowVector& r) {
    return std::binary_search(span.begin(), span.end(), r);
}

TValues t_values(const RowVector& r) {
    TValues out;
    for (std::size_t j = 0; j < 4; ++j) {
        out.t[j] = Rational(r[j], r.modulus());
        out.total += out.t[j];
    }
    return out;
}

Angles summand_angles(const RowVector& r) {
    const auto tv = t_values(-r);
    const auto& t = tv.t;
    const Rational one(1);
    return {(one - t[0] - t[2]).abs(), (one - t[1] - t[2]).abs(), (one - t[0] - t[1]).abs()};
}

Rational summand_lyapunov(const RowVector& r, const CurveParams& params) {
    const auto tv = t_values(-r);
    Rational smallest(1);
    for (const auto& t : tv.t) smallest = arith::min(smallest, arith::min(t, Rational(1) - t));
    const Rational denom = Rational(1) - Rational(1, params.n()) - Rational(1, params.m());
    return Rational(2) * smallest / denom;
}

bool is_tiling(const Angles& angles) {
    return angles.mu.num() == 1 && angles.nu.num() == 1;
}

bool is_selected(const RowVector& r) {
    const auto tv = t_values(r);
    if (tv.total != 2 || t_values(-r).total != 2) return false;
    return tv.t[0] > tv.t[1] && tv.t[0] > tv.t[2] && tv.t[0] > tv.t[3];
}

std::vector<Summand> summands(const CurveParams& params, const std::vector<RowVector>& span) {
    std::vector<Summand> out;
    for (const auto& r : span) {
        if (r.has_zero_entry() || !is_selected(r)) continue;
        Summand s{r, summand_angles(r), summand_lyapunov(r, params), false};
        s.tiling = is_tiling(s.angles);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Summand& a, const Summand& b) {
        if (a.lyapunov != b.lyapunov) return a.lyapunov > b.lyapunov;
        if (a.angles.mu != b.angles.mu) return a.angles.mu < b.angles.mu;
        if (a.angles.nu != b.angles.nu) return a.angles.nu < b.angles.nu;
        return a.r < b.r;
    });
    return out;
}

std::vector<Summand> summands(const CurveParams& params) { return summands(params, row_span(params)); }

RowVector klein_action(const RowVector& r, KleinElement g) {
    const std::int64_t N = r.modulus();
    switch (g) {
        case KleinElement::id:
            return r;
        case KleinElement::sigma2:
            return RowVector({r[1], r[0], r[3], r[2]}, N);
        case KleinElement::sigma4:
            return RowVector({r[3], r[2], r[1], r[0]}, N);
        case KleinElement::sigma3:
            return RowVector({r[2], r[3], r[0], r[1]}, N);
    }
    throw std::invalid_argument("klein_action: unknown element");
}

std::vector<RowVector> klein_orbit(const RowVector& r) {
    std::vector<RowVector> out;
    for (auto g : kKleinGroup) out.push_back(klein_action(r, g));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::int64_t summand_dimension(const RowVector& r) {
    if (r.is_zero()) throw std::invalid_argument("summand_dimension: zero vector");
    if (r.has_zero_entry()) return 0;
    const Rational d = t_values(r).total + t_values(-r).total - Rational(2);
    return d.num().convert_to<std::int64_t>();
}

}  // namespace vwbm
