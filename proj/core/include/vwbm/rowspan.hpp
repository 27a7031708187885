#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vwbm/curve_params.hpp"
#include "vwbm/rational.hpp"
#include "vwbm/residue.hpp"

namespace vwbm {

using arith::Rational;
using arith::Residue;

/// Element (r1, r2, r3, r4) of (Z/N)^4.  Entries are kept reduced in [0, N).
class RowVector {
public:
    RowVector(std::array<std::int64_t, 4> entries, std::int64_t modulus);
    static RowVector zero(std::int64_t modulus) { return RowVector({0, 0, 0, 0}, modulus); }

    std::int64_t modulus() const noexcept { return modulus_; }
    std::int64_t operator[](std::size_t j) const noexcept { return r_[j]; }
    const std::array<std::int64_t, 4>& entries() const noexcept { return r_; }
    Residue residue(std::size_t j) const { return Residue(r_[j], modulus_); }

    bool is_zero() const noexcept;
    bool has_zero_entry() const noexcept;

    RowVector operator+(const RowVector& rhs) const;
    RowVector operator-(const RowVector& rhs) const;
    RowVector operator-() const;
    RowVector scaled(std::int64_t k) const;
    /// Image under the embedding Z/N -> Z/K, x -> (K/N) x.  K must be a
    /// multiple of N.
    RowVector lifted(std::int64_t new_modulus) const;

    std::string to_string() const;

    friend bool operator==(const RowVector&, const RowVector&) = default;
    friend auto operator<=>(const RowVector& a, const RowVector& b) {
        if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
        return a.r_ <=> b.r_;
    }

private:
    std::array<std::int64_t, 4> r_;
    std::int64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const RowVector& r);

using DefiningMatrix = std::array<RowVector, 2>;

/// Rows (nm-n-m, nm+n-m, nm+n+m, nm-n+m) and (nm+n-m, nm-n-m, nm-n+m, nm+n+m) mod 2nm.
DefiningMatrix defining_matrix(const CurveParams& params);

/// Subgroup of (Z/N)^d generated by `gens`, by breadth-first closure under
/// addition of generators.  Sorted.  Throws std::logic_error if more than
/// `cap` elements appear.
template <std::size_t D>
std::vector<std::array<std::int64_t, D>> subgroup_closure(const std::vector<std::array<std::int64_t, D>>& gens,
                                                          std::int64_t modulus, std::size_t cap);

/// The row span of S(n,m), lexicographically sorted.
std::vector<RowVector> row_span(const CurveParams& params);

/// Membership test against a sorted row span.
bool span_contains(const std::vector<RowVector>& span, const RowVector& r);

struct TValues {
    std::array<Rational, 4> t;
    Rational total;
};

/// t_j = {r_j / N}, total = sum of the t_j.
TValues t_values(const RowVector& r);

/// Triangle angles in units of pi.
struct Angles {
    Rational kappa;
    Rational mu;
    Rational nu;

    friend bool operator==(const Angles&, const Angles&) = default;
    friend auto operator<=>(const Angles&, const Angles&) = default;
};

struct Summand {
    RowVector r;
    Angles angles;
    Rational lyapunov;
    bool tiling = false;
};

/// Angles of the triangle attached to r, from t_i = t_i(-r).
Angles summand_angles(const RowVector& r);

/// 2 min_j{t_j(-r), 1 - t_j(-r)} / (1 - 1/n - 1/m).
Rational summand_lyapunov(const RowVector& r, const CurveParams& params);

/// True iff mu and nu are both unit fractions.
bool is_tiling(const Angles& angles);

/// Whether r is selected: t(r) = 2 = t(-r) and t1 strictly exceeds t2, t3, t4.
bool is_selected(const RowVector& r);

/// One summand per selected row-span vector, by descending exponent, then
/// ascending (mu, nu).
std::vector<Summand> summands(const CurveParams& params);
std::vector<Summand> summands(const CurveParams& params, const std::vector<RowVector>& span);

enum class KleinElement { id, sigma2, sigma3, sigma4 };

inline constexpr std::array<KleinElement, 4> kKleinGroup = {KleinElement::id, KleinElement::sigma2,
                                                            KleinElement::sigma3, KleinElement::sigma4};

/// sigma2 = (r1 r2)(r3 r4), sigma4 = (r1 r4)(r2 r3), sigma3 = sigma2 sigma4.
RowVector klein_action(const RowVector& r, KleinElement g);

/// Distinct images of r under the Klein group, sorted.
std::vector<RowVector> klein_orbit(const RowVector& r);

/// t(r) + t(-r) - 2, or 0 when r has a zero entry.  Throws
/// std::invalid_argument for the zero vector.
std::int64_t summand_dimension(const RowVector& r);

}  // namespace vwbm
