#include "vwbm/square_tiled.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "vwbm/residue.hpp"
#include "vwbm/rowspan.hpp"

namespace vwbm {

using arith::mod_floor;

std::string to_string(const Square& s) {
    return "(" + std::to_string(s.label[0]) + "," + std::to_string(s.label[1]) + ")_" +
           (s.color == Color::white ? "w" : "b");
}

std::string to_string(EdgeTag e) {
    switch (e) {
        case EdgeTag::e12: return "12";
        case EdgeTag::e23: return "23";
        case EdgeTag::e34: return "34";
        case EdgeTag::e14: return "14";
    }
    return "?";
}

std::vector<Label> label_span(const std::vector<Label>& gens, std::int64_t modulus) {
    const auto cap = static_cast<std::size_t>(modulus) * static_cast<std::size_t>(modulus);
    return subgroup_closure<2>(gens, modulus, cap);
}

ColumnSpan::ColumnSpan(const CurveParams& params) : modulus_(params.N()) {
    const auto rows = defining_matrix(params);
    for (std::size_t j = 0; j < 4; ++j) columns_[j] = {rows[0][j], rows[1][j]};
    elements_ = label_span({columns_.begin(), columns_.end()}, modulus_);
}

bool ColumnSpan::contains(const Label& c) const { return std::binary_search(elements_.begin(), elements_.end(), c); }

std::size_t ColumnSpan::index_of(const Label& c) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), c);
    if (it == elements_.end() || *it != c) throw std::out_of_range("label not in the column span");
    return static_cast<std::size_t>(it - elements_.begin());
}

Label ColumnSpan::add(const Label& a, const Label& b) const {
    return {mod_floor(a[0] + b[0], modulus_), mod_floor(a[1] + b[1], modulus_)};
}

Label ColumnSpan::sub(const Label& a, const Label& b) const {
    return {mod_floor(a[0] - b[0], modulus_), mod_floor(a[1] - b[1], modulus_)};
}

Label ColumnSpan::neg(const Label& a) const { return {mod_floor(-a[0], modulus_), mod_floor(-a[1], modulus_)}; }

std::int64_t ColumnSpan::order(const Label& a) const {
    std::int64_t k = 1;
    for (Label w = a; w != Label{0, 0}; w = add(w, a)) ++k;
    return k;
}

std::vector<Label> ColumnSpan::reduced_generators(const CurveParams& params) {
    const std::int64_t n = params.n(), m = params.m(), N = params.N();
    auto lab = [N](std::int64_t a, std::int64_t b) { return Label{mod_floor(a, N), mod_floor(b, N)}; };
    if (!params.both_even()) return {lab(-m, -m), lab(-n, n)};
    return {lab(-2 * m, -2 * m), lab(-2 * n, 2 * n), lab(-n - m, n - m)};
}

CombSurface::CombSurface(const CurveParams& params) : params_(params), span_(params) {}

std::uint32_t CombSurface::index(const Square& s) const {
    return static_cast<std::uint32_t>(2 * span_.index_of(s.label) + (s.color == Color::black ? 1 : 0));
}

Square CombSurface::square(std::uint32_t idx) const {
    return {span_.elements().at(idx / 2), (idx % 2 == 0) ? Color::white : Color::black};
}

Square CombSurface::deck(int j, const Square& s) const {
    if (j < 1 || j > 4) throw std::invalid_argument("deck: j must be in 1..4");
    return {span_.add(s.label, span_.columns()[static_cast<std::size_t>(j - 1)]), s.color};
}

Square CombSurface::translate(const Square& s, const Label& h) const { return {span_.add(s.label, h), s.color}; }

Permutation CombSurface::translation(const Label& h) const {
    Permutation p(square_count());
    for (std::uint32_t i = 0; i < p.size(); ++i) p[i] = index(translate(square(i), h));
    return p;
}

Label CombSurface::edge_offset(EdgeTag e) const {
    const auto& c = span_.columns();
    switch (e) {
        case EdgeTag::e34: return {0, 0};
        case EdgeTag::e14: return c[3];
        case EdgeTag::e12: return span_.add(c[0], c[3]);
        case EdgeTag::e23: return span_.neg(c[2]);
    }
    throw std::invalid_argument("edge_offset: unknown edge");
}

Square CombSurface::across(const Square& s, EdgeTag e) const {
    const Label o = edge_offset(e);
    if (s.color == Color::white) return {span_.add(s.label, o), Color::black};
    return {span_.sub(s.label, o), Color::white};
}

std::string SymmetryLift::name() const {
    std::string out = kind == LiftKind::sigma2 ? "sigma2" : "sigma4/v" + std::to_string(variant);
    if (shift != Label{0, 0}) out += "+(" + std::to_string(shift[0]) + "," + std::to_string(shift[1]) + ")";
    return out;
}

namespace {

template <class F>
Permutation tabulate(const CombSurface& surface, F&& f) {
    Permutation p(surface.square_count());
    for (std::uint32_t i = 0; i < p.size(); ++i) p[i] = surface.index(f(surface.square(i)));
    return p;
}

std::vector<EdgeTag> allowed_edges(LiftKind kind) {
    if (kind == LiftKind::sigma2) return {EdgeTag::e12, EdgeTag::e34};
    return {EdgeTag::e14, EdgeTag::e23};
}

// c -> L(c) as a function on labels: the conjugation law tau_c -> tau_phi(c)
Label conjugated_translation(const ColumnSpan& g, LiftKind kind, const Label& c) {
    if (kind == LiftKind::sigma2) return {c[1], c[0]};
    return g.neg({c[1], c[0]});
}

}  // namespace

SymmetryLift lift_sigma2(const CombSurface& surface, const Label& shift) {
    const auto& g = surface.span();
    auto f = [&](const Square& s) {
        return Square{g.add({s.label[1], s.label[0]}, shift), flip(s.color)};
    };
    return {LiftKind::sigma2, 0, shift, tabulate(surface, f)};
}

SymmetryLift lift_sigma4(const CombSurface& surface, int variant, const Label& shift) {
    if (variant != 1 && variant != 2) throw std::invalid_argument("lift_sigma4: variant must be 1 or 2");
    if (variant == 2 && !surface.params().both_even())
        throw std::invalid_argument("lift_sigma4: variant 2 needs n and m both even");
    const auto& g = surface.span();
    const auto& col = g.columns();
    const Label white_shift = variant == 1 ? col[3] : col[0];
    const Label black_shift = variant == 1 ? col[2] : col[1];
    auto f = [&](const Square& s) {
        const Label base = g.neg({s.label[1], s.label[0]});
        const Label& o = s.color == Color::white ? white_shift : black_shift;
        return Square{g.add(g.add(base, o), shift), flip(s.color)};
    };
    return {LiftKind::sigma4, variant, shift, tabulate(surface, f)};
}

std::vector<FixedEdge> fixed_edges(const CombSurface& surface, const SymmetryLift& lift) {
    std::vector<FixedEdge> out;
    for (const Label& c : surface.span().elements()) {
        const Square w{c, Color::white};
        const Square image = lift(surface, w);
        for (EdgeTag e : allowed_edges(lift.kind))
            if (image == surface.across(w, e)) out.push_back({c, e});
    }
    return out;
}

std::optional<Square> involution_witness(const CombSurface& surface, const SymmetryLift& lift) {
    for (std::uint32_t i = 0; i < lift.action.size(); ++i)
        if (lift.action[lift.action[i]] != i) return surface.square(i);
    return std::nullopt;
}

std::optional<Square> commutation_witness(const CombSurface& surface, const SymmetryLift& a, const SymmetryLift& b) {
    for (std::uint32_t i = 0; i < a.action.size(); ++i)
        if (a.action[b.action[i]] != b.action[a.action[i]]) return surface.square(i);
    return std::nullopt;
}

std::optional<Square> deck_conjugation_witness(const CombSurface& surface, const SymmetryLift& lift) {
    // partner[j] is the index k with L T_j L = T_k
    const std::array<int, 4> partner =
        lift.kind == LiftKind::sigma2 ? std::array<int, 4>{2, 1, 4, 3} : std::array<int, 4>{4, 3, 2, 1};
    for (int j = 1; j <= 4; ++j) {
        for (std::uint32_t i = 0; i < lift.action.size(); ++i) {
            const Square s = surface.square(i);
            const Square lhs = lift(surface, surface.deck(j, lift(surface, s)));
            if (lhs != surface.deck(partner[static_cast<std::size_t>(j - 1)], s)) return s;
        }
    }
    return std::nullopt;
}

std::optional<ConjugationFailure> general_conjugation_witness(const CombSurface& surface, const SymmetryLift& lift) {
    const auto& g = surface.span();
    for (const Label& c : g.elements()) {
        const Label image = conjugated_translation(g, lift.kind, c);
        for (std::uint32_t i = 0; i < lift.action.size(); ++i) {
            const Square s = surface.square(i);
            const Square lhs = lift(surface, surface.translate(lift(surface, s), c));
            if (lhs != surface.translate(s, image)) return ConjugationFailure{c, s};
        }
    }
    return std::nullopt;
}

CylinderCertificate cylinder_preservation_check(const CombSurface& surface, const SymmetryLift& lift) {
    const auto& g = surface.span();
    const auto& col = g.columns();
    const Label core = lift.kind == LiftKind::sigma2 ? g.add(col[0], col[3]) : g.add(col[0], col[1]);
    const EdgeTag crossing = lift.kind == LiftKind::sigma2 ? EdgeTag::e34 : EdgeTag::e14;
    const auto powers = label_span({core}, g.modulus());
    for (std::uint32_t i = 0; i < lift.action.size(); ++i) {
        const Square s = surface.square(i);
        const Square image = surface.square(lift.action[i]);
        const Square flipped = surface.across(s, crossing);
        if (image.color != flipped.color ||
            !std::binary_search(powers.begin(), powers.end(), g.sub(image.label, flipped.label)))
            return {false, s};
    }
    return {};
}

std::int64_t surface_genus(const CombSurface& surface) {
    const auto& g = surface.span();
    Rational branching;
    for (const Label& c : g.columns()) branching += Rational(1) - Rational(1, g.order(c));
    const Rational chi = Rational(static_cast<std::int64_t>(g.size())) * (Rational(2) - branching);
    const Rational genus = (Rational(2) - chi) / Rational(2);
    if (!genus.is_integer()) throw std::logic_error("surface_genus: non-integral genus " + genus.to_string());
    return genus.num().convert_to<std::int64_t>();
}

LiftClassCount count_lift_classes(const CombSurface& surface) {
    const auto& g = surface.span();
    const auto& elems = g.elements();
    LiftClassCount out;

    auto admissible = [&](const SymmetryLift& l) {
        return !involution_witness(surface, l) && !fixed_edges(surface, l).empty();
    };
    std::vector<SymmetryLift> s2, s4;
    for (const Label& d : elems) {
        if (auto l = lift_sigma2(surface, d); admissible(l)) s2.push_back(std::move(l));
        if (auto l = lift_sigma4(surface, 1, d); admissible(l)) s4.push_back(std::move(l));
    }
    out.sigma2_candidates = s2.size();
    out.sigma4_candidates = s4.size();

    using Key = std::pair<Permutation, Permutation>;
    std::vector<Key> pairs;
    for (const auto& a : s2)
        for (const auto& b : s4)
            if (!commutation_witness(surface, a, b)) pairs.emplace_back(a.action, b.action);
    out.commuting_pairs = pairs.size();

    std::vector<Permutation> translations;
    translations.reserve(elems.size());
    for (const Label& h : elems) translations.push_back(surface.translation(h));

    auto conjugate = [](const Permutation& l, const Permutation& t, const Permutation& t_inv) {
        Permutation out(l.size());
        for (std::size_t i = 0; i < l.size(); ++i) out[i] = t[l[t_inv[i]]];
        return out;
    };

    std::set<Key> seen;
    for (const auto& p : pairs) {
        if (seen.count(p)) continue;
        ++out.classes;
        for (std::size_t h = 0; h < elems.size(); ++h) {
            const auto& t = translations[h];
            const auto& t_inv = translations[g.index_of(g.neg(elems[h]))];
            seen.insert({conjugate(p.first, t, t_inv), conjugate(p.second, t, t_inv)});
        }
    }
    return out;
}

}  // namespace vwbm
