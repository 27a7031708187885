#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vwbm/curve_params.hpp"
#include "vwbm/rational.hpp"

namespace vwbm {

/// A pair (c1, c2) in (Z/N)^2.
using Label = std::array<std::int64_t, 2>;

enum class Color : std::uint8_t { white, black };

inline Color flip(Color c) { return c == Color::white ? Color::black : Color::white; }

struct Square {
    Label label;
    Color color;

    friend bool operator==(const Square&, const Square&) = default;
    friend auto operator<=>(const Square&, const Square&) = default;
};

std::string to_string(const Square& s);

/// Edges of a square, named by the pillowcase cone points they join.
enum class EdgeTag { e12, e23, e34, e14 };

std::string to_string(EdgeTag e);

/// The subgroup of (Z/N)^2 spanned by the four columns of the defining
/// matrix; it is the deck group of the cover.
class ColumnSpan {
public:
    explicit ColumnSpan(const CurveParams& params);

    std::int64_t modulus() const noexcept { return modulus_; }
    /// col_1 .. col_4 at indices 0 .. 3.
    const std::array<Label, 4>& columns() const noexcept { return columns_; }
    const std::vector<Label>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }

    bool contains(const Label& c) const;
    /// Position of c in elements(); throws std::out_of_range if absent.
    std::size_t index_of(const Label& c) const;

    Label add(const Label& a, const Label& b) const;
    Label sub(const Label& a, const Label& b) const;
    Label neg(const Label& a) const;
    std::int64_t order(const Label& a) const;

    /// Smaller generating set: {(-m,-m), (-n,n)} if n or m is odd, else
    /// {(-2m,-2m), (-2n,2n), (-n-m, n-m)}.
    static std::vector<Label> reduced_generators(const CurveParams& params);

private:
    std::int64_t modulus_;
    std::array<Label, 4> columns_;
    std::vector<Label> elements_;
};

/// Subgroup of (Z/N)^2 generated by the given labels, sorted.
std::vector<Label> label_span(const std::vector<Label>& gens, std::int64_t modulus);

/// Squares are numbered 2 * (label index) + (0 white, 1 black).
using Permutation = std::vector<std::uint32_t>;

/// The square-tiled surface S(n,m): two squares (white, black) per element of
/// the column span.  White c and black c + o_e share the edge e, with
/// o_34 = 0, o_14 = col4, o_12 = col1 + col4, o_23 = -col3.
class CombSurface {
public:
    explicit CombSurface(const CurveParams& params);

    const CurveParams& params() const noexcept { return params_; }
    const ColumnSpan& span() const noexcept { return span_; }
    std::size_t square_count() const noexcept { return 2 * span_.size(); }

    std::uint32_t index(const Square& s) const;
    Square square(std::uint32_t idx) const;

    /// T_j for j = 1..4: add col_j, keep the color.
    Square deck(int j, const Square& s) const;
    Square translate(const Square& s, const Label& h) const;
    Permutation translation(const Label& h) const;

    Label edge_offset(EdgeTag e) const;
    /// The square on the other side of edge e.
    Square across(const Square& s, EdgeTag e) const;

private:
    CurveParams params_;
    ColumnSpan span_;
};

enum class LiftKind { sigma2, sigma4 };

/// A lift of a pillowcase symmetry to S(n,m), tabulated as a permutation of
/// squares.  `variant` is 1 or 2 for sigma4 and 0 for sigma2; `shift` is an
/// extra deck translation applied after the base formula.
struct SymmetryLift {
    LiftKind kind;
    int variant;
    Label shift;
    Permutation action;

    Square operator()(const CombSurface& surface, const Square& s) const {
        return surface.square(action[surface.index(s)]);
    }
    std::string name() const;
};

/// (c1,c2)_w -> (c2,c1)_b and (c1,c2)_b -> (c2,c1)_w, followed by tau_shift.
SymmetryLift lift_sigma2(const CombSurface& surface, const Label& shift = {0, 0});

/// Variant 1: (c)_w -> (-c2,-c1)+col4 black, (c)_b -> (-c2,-c1)+col3 white.
/// Variant 2: the shifts are col1 and col2.  Variant 2 exists only when n and
/// m are both even; otherwise throws std::invalid_argument.
SymmetryLift lift_sigma4(const CombSurface& surface, int variant, const Label& shift = {0, 0});

/// Lifts with a fixed point: sigma2 lifts must swap the two squares along a
/// 12 or 34 edge, sigma4 lifts along a 14 or 23 edge.
struct FixedEdge {
    Label white_label;
    EdgeTag edge;
};
std::vector<FixedEdge> fixed_edges(const CombSurface& surface, const SymmetryLift& lift);

/// First square where the property fails, if any.
std::optional<Square> involution_witness(const CombSurface& surface, const SymmetryLift& lift);
std::optional<Square> commutation_witness(const CombSurface& surface, const SymmetryLift& a,
                                          const SymmetryLift& b);

/// sigma2 T_1 sigma2 = T_2, sigma2 T_3 sigma2 = T_4 (and symmetrically);
/// sigma4 swaps T_1 <-> T_4 and T_2 <-> T_3.
std::optional<Square> deck_conjugation_witness(const CombSurface& surface, const SymmetryLift& lift);

/// sigma2 tau_(c1,c2) sigma2 = tau_(c2,c1) and sigma4 tau_(c1,c2) sigma4 =
/// tau_(-c2,-c1) for every c in the column span.
struct ConjugationFailure {
    Label translation;
    Square square;
};
std::optional<ConjugationFailure> general_conjugation_witness(const CombSurface& surface, const SymmetryLift& lift);

struct CylinderCertificate {
    bool preserved = true;
    std::optional<Square> witness;
};

/// For every square s, lift(s) and the flip of s across the cylinder's
/// crossing edge (34 for sigma2, 14 for sigma4) must differ by a power of
/// T1 T4 (sigma2) or T1 T2 (sigma4).
CylinderCertificate cylinder_preservation_check(const CombSurface& surface, const SymmetryLift& lift);

/// Riemann-Hurwitz: 2 - 2g = |G| (2 - sum_j (1 - 1/e_j)), e_j the order of col_j.
std::int64_t surface_genus(const CombSurface& surface);

struct LiftClassCount {
    std::size_t sigma2_candidates = 0;
    std::size_t sigma4_candidates = 0;
    std::size_t commuting_pairs = 0;
    std::size_t classes = 0;
};

/// Enumerates tau_d sigma2 and tau_e sigma4 (variant 1) over all d, e in the
/// column span, keeps involutions with a fixed edge whose pair commutes, and
/// counts pairs up to simultaneous conjugation by deck translations.
LiftClassCount count_lift_classes(const CombSurface& surface);

}  // namespace vwbm
