#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vwbm/curve_params.hpp"
#include "vwbm/cyclotomic.hpp"
#include "vwbm/rowspan.hpp"

namespace vwbm {

/// Lyapunov exponents, one per summand, in summand order (descending).
std::vector<Rational> lyapunov_spectrum(const CurveParams& params);

/// Closed-form genus of the fibers of T(n,m).
std::int64_t genus(const CurveParams& params);

bool is_arithmetic(const CurveParams& params);

enum class UniformizerKind { triangle, index_two_subgroup, triangle_2_n, triangle_half_n };

struct Uniformizer {
    UniformizerKind kind;
    std::string label;
};

struct Zeros {
    std::int64_t count;
    bool equal_order;
    std::int64_t order;
};

struct Classification {
    bool arithmetic;
    Uniformizer uniformizer;
    Zeros zeros;
};

/// Arithmeticity, uniformizing group and zeros of the generating differential.
/// Zeros: gamma of them, or gamma/2 when n, m are both even and one of
/// n/gamma, m/gamma is even.
Classification classify(const CurveParams& params);

/// Pairs (n',m') != (n,m), n' | n, m' | m, n',m' > 1, n'm' >= 6, with
/// n/n' + m/m' even when n and m are both even.  Sorted.
std::vector<CurveParams> covers(const CurveParams& params);

struct CoverCertificate {
    bool contained = false;
    std::int64_t k = 1;
    /// k times the two defining rows of the small curve, read mod 2nm.
    std::array<RowVector, 2> generator_images;
    /// First scaled span element missing from the big span.
    std::optional<RowVector> witness;
};

/// Whether k times the row span of `small` lies in the row span of `big`,
/// where nm = k n'm'.  Throws std::invalid_argument unless n'm' divides nm.
CoverCertificate verify_cover(const CurveParams& big, const CurveParams& small);
CoverCertificate verify_cover(const CurveParams& big, const std::vector<RowVector>& big_span,
                              const CurveParams& small);

/// Every valid (n',m') != (n,m) with n'm' | nm that passes verify_cover.
std::vector<CurveParams> covers_by_containment(const CurveParams& params);

/// Per summand (summand order): mu and nu are both unit fractions.
std::vector<bool> tiling_flags(const CurveParams& params);

struct TraceDegrees {
    std::int64_t F;
    std::int64_t E;
    friend bool operator==(const TraceDegrees&, const TraceDegrees&) = default;
};

/// Closed forms in phi(2l) and gamma.
TraceDegrees trace_degrees(const CurveParams& params);

/// Galois stabilizers in Q(xi_2l) of the field generators.
TraceDegrees trace_degrees_oracle(const CurveParams& params);

/// False exactly when deg F = 2 deg E.
bool admissible_triangle_group(const CurveParams& params);

/// One of n, m is 2 and the other is a prime, twice a prime, or a power of two.
bool primitivity_criterion(const CurveParams& params);

enum class Primitivity { primitive, not_primitive, not_applicable };

struct PrimitivityVerdict {
    Primitivity verdict;
    bool criterion;
    bool degree_equals_genus;
    bool consistent() const { return verdict == Primitivity::not_applicable || criterion == degree_equals_genus; }
};

std::string to_string(Primitivity p);

/// not_applicable for arithmetic pairs.  Otherwise the verdict follows the
/// degree check deg E = genus; `criterion` holds the number-theoretic answer.
PrimitivityVerdict algebraically_primitive(const CurveParams& params);

struct HeckeScalars {
    std::vector<arith::CyclotomicElement> scalars;  // (p,q) = (1,1), (1,-1), (1,0)
    std::int64_t field_degree;
};

/// xi^e1 + xi^-e1 + xi^e2 + xi^-e2 in Q(xi_N) with e1 = p r1 + q r2,
/// e2 = p r2 + q r1, r1 = nm-n-m, r2 = nm+n-m.
HeckeScalars hecke_scalars(const CurveParams& params);

struct CurveReport {
    CurveParams params;
    std::int64_t genus;
    std::vector<Summand> summands;
    std::vector<Rational> spectrum;
    Classification classification;
    std::vector<CurveParams> covers;
    TraceDegrees trace;
    bool admissible_triangle_group;
    PrimitivityVerdict primitivity;
    /// Absent when N exceeds kHeckeReportLimit.
    std::optional<std::int64_t> hecke_field_degree;
    std::vector<std::string> notes;
};

/// Largest N = 2nm for which reports include the Hecke field degree; the
/// cyclotomic power table grows like N * phi(N).
inline constexpr std::int64_t kHeckeReportLimit = 1024;

CurveReport build_report(const CurveParams& params);

}  // namespace vwbm
