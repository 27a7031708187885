#pragma once

// Independent reference computations used only by tests.  None of these call
// into the library code they are compared against.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <vector>

#include "vwbm/polynomial.hpp"

namespace vwbm::testing {

using Vec4 = std::array<std::int64_t, 4>;

inline std::int64_t modn(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

inline std::int64_t totient_by_gcd(std::int64_t k) {
    std::int64_t count = 0;
    for (std::int64_t a = 1; a <= k; ++a)
        if (std::gcd(a, k) == 1) ++count;
    return count;
}

/// C_0 = 2, C_1 = u, C_{k+1} = u C_k - C_{k-1}.
inline arith::IntPolynomial chebyshev_by_recurrence(unsigned k) {
    using P = arith::IntPolynomial;
    P prev = P::constant(2), cur = P::monomial(1, 1);
    if (k == 0) return prev;
    for (unsigned j = 1; j < k; ++j) {
        P next = P::monomial(1, 1) * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Phi_K = (x^K - 1) / prod over proper divisors d of Phi_d.
inline arith::IntPolynomial cyclotomic_by_division(std::int64_t k) {
    using P = arith::IntPolynomial;
    static std::map<std::int64_t, P> cache;
    if (auto it = cache.find(k); it != cache.end()) return it->second;
    P p = P::monomial(1, static_cast<std::size_t>(k)) - P::constant(1);
    for (std::int64_t d = 1; d < k; ++d)
        if (k % d == 0) p = arith::divide_exact(p, cyclotomic_by_division(d));
    cache.emplace(k, p);
    return p;
}

inline Vec4 row1(std::int64_t n, std::int64_t m) {
    const std::int64_t N = 2 * n * m, b = n * m;
    return {modn(b - n - m, N), modn(b + n - m, N), modn(b + n + m, N), modn(b - n + m, N)};
}

inline Vec4 row2(std::int64_t n, std::int64_t m) {
    const std::int64_t N = 2 * n * m, b = n * m;
    return {modn(b + n - m, N), modn(b - n - m, N), modn(b - n + m, N), modn(b + n + m, N)};
}

/// {a row1 + b row2 : a, b in Z/N}.
inline std::set<Vec4> span_by_parametrization(std::int64_t n, std::int64_t m) {
    const std::int64_t N = 2 * n * m;
    const Vec4 r1 = row1(n, m), r2 = row2(n, m);
    std::set<Vec4> out;
    for (std::int64_t a = 0; a < N; ++a)
        for (std::int64_t b = 0; b < N; ++b) {
            Vec4 v;
            for (int j = 0; j < 4; ++j) v[j] = modn(a * r1[j] + b * r2[j], N);
            out.insert(v);
        }
    return out;
}

/// |<r1, r2>| = |<r1>| * |<r2>| / |<r1> cap <r2>|.
inline std::int64_t span_size_by_orbit_stabilizer(std::int64_t n, std::int64_t m) {
    const std::int64_t N = 2 * n * m;
    const Vec4 r1 = row1(n, m), r2 = row2(n, m);
    auto cyclic = [N](const Vec4& r) {
        std::set<Vec4> s;
        for (std::int64_t a = 0; a < N; ++a) s.insert({modn(a * r[0], N), modn(a * r[1], N), modn(a * r[2], N), modn(a * r[3], N)});
        return s;
    };
    const auto c1 = cyclic(r1), c2 = cyclic(r2);
    std::int64_t common = 0;
    for (const auto& v : c1) common += static_cast<std::int64_t>(c2.count(v));
    return static_cast<std::int64_t>(c1.size() * c2.size()) / common;
}

/// Half the sum of t(r) + t(-r) - 2 over one zero-free vector per free orbit
/// of {id, (12)(34), (14)(23), (13)(24)} acting on positions.
inline std::int64_t half_free_orbit_dimension_sum(std::int64_t n, std::int64_t m) {
    const std::int64_t N = 2 * n * m;
    const auto span = span_by_parametrization(n, m);
    std::set<Vec4> seen;
    std::int64_t total = 0;
    for (const auto& v : span) {
        if (std::find(v.begin(), v.end(), 0) != v.end() || seen.count(v)) continue;
        const std::set<Vec4> orbit = {v, {v[1], v[0], v[3], v[2]}, {v[3], v[2], v[1], v[0]}, {v[2], v[3], v[0], v[1]}};
        seen.insert(orbit.begin(), orbit.end());
        if (orbit.size() != 4) continue;
        std::int64_t plus = 0, minus = 0;
        for (auto x : v) plus += x, minus += modn(-x, N);
        total += (plus + minus) / N - 2;
    }
    return total / 2;
}

/// Degree of Q(x_1, ..., x_k) for x_i = f_i(zeta) in Q(zeta_K), counted as
/// the number of distinct numeric Galois images of the tuple.
template <class F>
std::int64_t numeric_field_degree(std::int64_t K, F&& tuple_at) {
    std::vector<std::vector<double>> images;
    for (std::int64_t a = 1; a < std::max<std::int64_t>(K, 2); ++a) {
        if (std::gcd(a, K) != 1) continue;
        const std::vector<double> v = tuple_at(a);
        const bool known = std::any_of(images.begin(), images.end(), [&](const std::vector<double>& w) {
            for (std::size_t i = 0; i < v.size(); ++i)
                if (std::abs(v[i] - w[i]) > 1e-9) return false;
            return true;
        });
        if (!known) images.push_back(v);
    }
    return static_cast<std::int64_t>(images.size());
}

/// 2 cos(pi a k / l): the image of xi_2l^k + xi_2l^-k under xi -> xi^a.
inline double two_cos(std::int64_t a, std::int64_t k, std::int64_t l) {
    return 2.0 * std::cos(std::numbers::pi * static_cast<double>(a * k % (2 * l)) / static_cast<double>(l));
}

/// Smallest positive multiple of x (in Z/N) equal to zero.
inline std::int64_t element_order(std::int64_t x, std::int64_t N) { return N / std::gcd(modn(x, N), N); }

}  // namespace vwbm::testing
