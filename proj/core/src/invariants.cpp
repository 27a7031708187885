#include "vwbm/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "vwbm/number_theory.hpp"

namespace vwbm {

using arith::CyclotomicElement;
using arith::euler_phi;

std::vector<Rational> lyapunov_spectrum(const CurveParams& params) {
    std::vector<Rational> out;
    for (const auto& s : summands(params)) out.push_back(s.lyapunov);
    return out;
}

std::int64_t genus(const CurveParams& params) {
    const std::int64_t n = params.n(), m = params.m(), g = params.gamma();
    const std::int64_t base = (n - 1) * (m - 1);
    Rational value;
    if (!params.both_even())
        value = Rational(base, 2) + Rational(1 - g, 2);
    else if ((n / g) % 2 != 0 && (m / g) % 2 != 0)
        value = Rational(base, 4) + Rational(3 - 2 * g, 4);
    else
        value = Rational(base, 4) + Rational(3 - g, 4);
    if (!value.is_integer()) throw std::logic_error("genus: non-integral value " + value.to_string());
    return value.num().convert_to<std::int64_t>();
}

bool is_arithmetic(const CurveParams& params) {
    static const std::array<std::pair<std::int64_t, std::int64_t>, 6> list = {
        {{2, 3}, {2, 4}, {2, 6}, {3, 3}, {4, 4}, {6, 6}}};
    const auto a = std::min(params.n(), params.m()), b = std::max(params.n(), params.m());
    return std::find(list.begin(), list.end(), std::pair{a, b}) != list.end();
}

Classification classify(const CurveParams& params) {
    const std::int64_t n = params.n(), m = params.m(), g = params.gamma();
    const std::string sn = std::to_string(n), sm = std::to_string(m);
    Uniformizer u;
    if (n != m && !params.both_even())
        u = {UniformizerKind::triangle, "Delta(" + sn + "," + sm + ",∞)"};
    else if (n != m)
        u = {UniformizerKind::index_two_subgroup, "IndexTwoSubgroup(Delta(" + sn + "," + sm + ",∞))"};
    else if (n % 2 != 0)
        u = {UniformizerKind::triangle_2_n, "Delta(2," + sn + ",∞)"};
    else
        u = {UniformizerKind::triangle_half_n, "Delta(" + std::to_string(n / 2) + ",∞,∞)"};

    const bool halved = params.both_even() && ((n / g) % 2 == 0 || (m / g) % 2 == 0);
    const std::int64_t count = halved ? g / 2 : g;
    const std::int64_t total = 2 * genus(params) - 2;
    if (total % count != 0) throw std::logic_error("classify: zero orders do not divide 2g-2");
    return {is_arithmetic(params), u, {count, true, total / count}};
}

std::vector<CurveParams> covers(const CurveParams& params) {
    const std::int64_t n = params.n(), m = params.m();
    std::vector<CurveParams> out;
    for (std::int64_t a : arith::divisors(n))
        for (std::int64_t b : arith::divisors(m)) {
            if (!CurveParams::valid(a, b) || (a == n && b == m)) continue;
            if (params.both_even() && (n / a + m / b) % 2 != 0) continue;
            out.emplace_back(a, b);
        }
    std::sort(out.begin(), out.end());
    return out;
}

CoverCertificate verify_cover(const CurveParams& big, const std::vector<RowVector>& big_span,
                              const CurveParams& small) {
    const std::int64_t big_nm = big.n() * big.m(), small_nm = small.n() * small.m();
    if (big_nm % small_nm != 0)
        throw std::invalid_argument("verify_cover: " + std::to_string(small_nm) + " does not divide " +
                                    std::to_string(big_nm));
    const auto rows = defining_matrix(small);
    CoverCertificate cert{false, big_nm / small_nm, {rows[0].lifted(big.N()), rows[1].lifted(big.N())}, {}};
    for (const auto& r : row_span(small)) {
        const RowVector image = r.lifted(big.N());
        if (!span_contains(big_span, image)) {
            cert.witness = image;
            return cert;
        }
    }
    cert.contained = true;
    return cert;
}

CoverCertificate verify_cover(const CurveParams& big, const CurveParams& small) {
    return verify_cover(big, row_span(big), small);
}

std::vector<CurveParams> covers_by_containment(const CurveParams& params) {
    const auto span = row_span(params);
    const std::int64_t nm = params.n() * params.m();
    std::vector<CurveParams> out;
    for (std::int64_t d : arith::divisors(nm))
        for (std::int64_t a : arith::divisors(d)) {
            const std::int64_t b = d / a;
            if (!CurveParams::valid(a, b) || (a == params.n() && b == params.m())) continue;
            const CurveParams small(a, b);
            // checking the scaled generators suffices: the image of a subgroup
            const auto rows = defining_matrix(small);
            if (span_contains(span, rows[0].lifted(params.N())) && span_contains(span, rows[1].lifted(params.N())))
                out.push_back(small);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<bool> tiling_flags(const CurveParams& params) {
    std::vector<bool> out;
    for (const auto& s : summands(params)) out.push_back(s.tiling);
    return out;
}

TraceDegrees trace_degrees(const CurveParams& params) {
    const std::int64_t n = params.n(), m = params.m(), g = params.gamma();
    const std::int64_t phi = euler_phi(2 * params.l());
    const std::int64_t F = g == 1 ? phi / 4 : phi / 2;
    std::int64_t E = F;
    if (params.both_even()) {
        const bool exceptional = g > 2 && ((n / g) % 2 == 0 || (m / g) % 2 == 0);
        E = exceptional ? phi / 2 : phi / 4;
    }
    return {F, E};
}

TraceDegrees trace_degrees_oracle(const CurveParams& params) {
    const std::int64_t l = params.l(), K = 2 * l, n = params.n(), m = params.m();
    const auto c2n = CyclotomicElement::zeta_sum(K, l / n);
    const auto c2m = CyclotomicElement::zeta_sum(K, l / m);
    const auto cn = CyclotomicElement::zeta_sum(K, 2 * l / n);
    const auto cm = CyclotomicElement::zeta_sum(K, 2 * l / m);
    return {arith::generated_field_degree({c2n, c2m}), arith::generated_field_degree({cn, cm, c2n * c2m})};
}

bool admissible_triangle_group(const CurveParams& params) {
    const auto d = trace_degrees(params);
    return d.F != 2 * d.E;
}

bool primitivity_criterion(const CurveParams& params) {
    auto qualifies = [](std::int64_t x) {
        return arith::is_prime(x) || (x % 2 == 0 && arith::is_prime(x / 2)) || arith::is_power_of_two(x);
    };
    return (params.n() == 2 && qualifies(params.m())) || (params.m() == 2 && qualifies(params.n()));
}

std::string to_string(Primitivity p) {
    switch (p) {
        case Primitivity::primitive: return "primitive";
        case Primitivity::not_primitive: return "not_primitive";
        case Primitivity::not_applicable: return "arithmetic_not_applicable";
    }
    return "?";
}

PrimitivityVerdict algebraically_primitive(const CurveParams& params) {
    const bool criterion = primitivity_criterion(params);
    const bool degree = trace_degrees(params).E == genus(params);
    if (is_arithmetic(params)) return {Primitivity::not_applicable, criterion, degree};
    return {degree ? Primitivity::primitive : Primitivity::not_primitive, criterion, degree};
}

HeckeScalars hecke_scalars(const CurveParams& params) {
    const std::int64_t n = params.n(), m = params.m(), nm = n * m, N = params.N();
    const std::int64_t r1 = nm - n - m, r2 = nm + n - m;
    HeckeScalars out;
    for (auto [p, q] : std::array<std::pair<std::int64_t, std::int64_t>, 3>{{{1, 1}, {1, -1}, {1, 0}}}) {
        const std::int64_t e1 = p * r1 + q * r2, e2 = p * r2 + q * r1;
        out.scalars.push_back(CyclotomicElement::from_powers(N, {{1, e1}, {1, -e1}, {1, e2}, {1, -e2}}));
    }
    out.field_degree = arith::generated_field_degree(out.scalars);
    return out;
}

CurveReport build_report(const CurveParams& params) {
    CurveReport r{params, genus(params), summands(params), {}, classify(params), covers(params),
                  trace_degrees(params), admissible_triangle_group(params), algebraically_primitive(params),
                  std::nullopt, {}};
    if (params.N() <= kHeckeReportLimit) r.hecke_field_degree = hecke_scalars(params).field_degree;
    for (const auto& s : r.summands) r.spectrum.push_back(s.lyapunov);
    const std::string sn = std::to_string(params.n()), sm = std::to_string(params.m());
    if (params.n() != params.m())
        r.notes.push_back("T(" + sn + "," + sm + ") = T(" + sm + "," + sn + ")");
    for (auto [a, b] : {std::pair{params.n(), params.m()}, std::pair{params.m(), params.n()}}) {
        if (a == 2) r.notes.push_back("Veech curve of the regular " + std::to_string(b) + "-gon");
        if (a == 3) r.notes.push_back("Ward curve (n = 3, m = " + std::to_string(b) + ")");
        if (a == b) break;
    }
    return r;
}

}  // namespace vwbm
