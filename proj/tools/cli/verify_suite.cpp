#include "verify_suite.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "parallel.hpp"
#include "vwbm/generators.hpp"
#include "vwbm/invariants.hpp"
#include "vwbm/rowspan.hpp"
#include "vwbm/square_tiled.hpp"

namespace vwbm::cli {

namespace {

using arith::IntPolynomial;

struct Outcome {
    std::string check;
    bool ok;
    std::string detail;
};

class Recorder {
public:
    explicit Recorder(const CurveParams& p) : prefix_("(" + std::to_string(p.n()) + "," + std::to_string(p.m()) + ") ") {}

    void expect(const std::string& check, bool ok, const std::string& detail = {}) {
        out_.push_back({check, ok, ok ? std::string() : prefix_ + detail});
    }
    std::vector<Outcome> take() { return std::move(out_); }

private:
    std::string prefix_;
    std::vector<Outcome> out_;
};

std::string str(const Rational& q) { return q.to_string(); }

void check_rowspan(const CurveParams& p, const std::vector<RowVector>& span, Recorder& rec) {
    bool t_ok = true, equiv_ok = true;
    std::string t_msg, equiv_msg;
    for (const auto& r : span) {
        if (r.is_zero()) continue;
        const auto t = t_values(r), tn = t_values(-r);
        const bool sums_two = t.total == 2 && tn.total == 2;
        if (!r.has_zero_entry()) {
            const bool ok = sums_two && t.t[0] + t.t[2] == 1 && t.t[1] + t.t[3] == 1;
            if (!ok && t_ok) t_ok = false, t_msg = r.to_string();
        }
        if (sums_two == r.has_zero_entry() && equiv_ok) equiv_ok = false, equiv_msg = r.to_string();
    }
    rec.expect("rowspan.t-identities", t_ok, t_msg);
    rec.expect("rowspan.summand-condition", equiv_ok, equiv_msg);
    (void)p;
}

void check_klein(const std::vector<RowVector>& span, Recorder& rec) {
    std::set<RowVector> seen;
    bool ok = true;
    std::string msg;
    for (const auto& r : span) {
        if (r.is_zero() || r.has_zero_entry() || seen.count(r)) continue;
        const auto orbit = klein_orbit(r);
        seen.insert(orbit.begin(), orbit.end());
        const auto selected = std::count_if(orbit.begin(), orbit.end(), is_selected);
        const long expected = orbit.size() == 4 ? 1 : 0;
        if (selected != expected && ok) {
            ok = false;
            msg = "orbit of " + r.to_string() + " has " + std::to_string(selected) + " selected";
        }
    }
    rec.expect("klein.one-per-free-orbit", ok, msg);
}

void check_genus(const CurveParams& p, const std::vector<RowVector>& span, const std::vector<Summand>& sums,
                 Recorder& rec) {
    const std::int64_t g = genus(p);
    rec.expect("genus.closed-form=summands", g == static_cast<std::int64_t>(sums.size()),
               std::to_string(g) + " vs " + std::to_string(sums.size()));

    std::set<RowVector> seen;
    std::int64_t free_sum = 0, total = 0;
    for (const auto& r : span) {
        if (r.is_zero()) continue;
        total += summand_dimension(r);
        if (r.has_zero_entry() || seen.count(r)) continue;
        const auto orbit = klein_orbit(r);
        seen.insert(orbit.begin(), orbit.end());
        if (orbit.size() == 4) free_sum += summand_dimension(r);
    }
    rec.expect("genus.closed-form=transversal", 2 * g == free_sum,
               "half transversal sum " + std::to_string(free_sum) + "/2 vs " + std::to_string(g));
    const std::int64_t gs = surface_genus(CombSurface(p));
    rec.expect("genus.riemann-hurwitz", total == 2 * gs,
               "dimension sum " + std::to_string(total) + " vs 2g(S) = " + std::to_string(2 * gs));
}

void check_spectrum(const CurveParams& p, const std::vector<Summand>& sums, Recorder& rec) {
    const Rational unit(p.gamma(), p.n() * p.m() - p.n() - p.m());
    const Rational defect = Rational(1) - Rational(1, p.n()) - Rational(1, p.m());
    bool mult_ok = true, area_ok = true, angle_ok = true;
    std::string mult_msg, area_msg, angle_msg;
    Rational top;
    for (const auto& s : sums) {
        const Rational q = s.lyapunov / unit;
        if ((!q.is_integer() || q.sign() <= 0) && mult_ok) mult_ok = false, mult_msg = str(s.lyapunov);
        const auto& a = s.angles;
        if ((Rational(1) - a.kappa - a.mu - a.nu) / defect != s.lyapunov && area_ok)
            area_ok = false, area_msg = s.r.to_string();
        const bool sane = a.kappa.is_zero() && a.mu.sign() > 0 && a.mu < 1 && a.nu.sign() > 0 && a.nu < 1 &&
                          (a.mu * Rational(p.m())).is_integer() && (a.nu * Rational(p.n())).is_integer();
        if (!sane && angle_ok) angle_ok = false, angle_msg = s.r.to_string();
        top = arith::max(top, s.lyapunov);
    }
    rec.expect("spectrum.multiples", mult_ok, mult_msg);
    rec.expect("spectrum.area-identity", area_ok, area_msg);
    rec.expect("spectrum.angles", angle_ok, angle_msg);
    const bool top_ok = !sums.empty() && top == 1 && sums.front().angles == Angles{0, Rational(1, p.m()), Rational(1, p.n())};
    rec.expect("spectrum.top-exponent", top_ok, "largest " + str(top));

    std::set<Angles> unit_triples, from_covers;
    for (const auto& s : sums)
        if (s.tiling) unit_triples.insert(s.angles);
    auto cov = covers(p);
    cov.push_back(p);
    for (const auto& c : cov) from_covers.insert({0, Rational(1, c.m()), Rational(1, c.n())});
    rec.expect("spectrum.tiling=covers", unit_triples == from_covers, "tiling triples differ from covers");

    const CurveParams q = p.swapped();
    auto sorted = [](std::vector<Rational> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    auto swapped_covers = covers(q);
    for (auto& c : swapped_covers) c = c.swapped();
    std::sort(swapped_covers.begin(), swapped_covers.end());
    const bool swap_ok = genus(q) == genus(p) && sorted(lyapunov_spectrum(q)) == sorted(lyapunov_spectrum(p)) &&
                         trace_degrees(q) == trace_degrees(p) && swapped_covers == covers(p);
    rec.expect("spectrum.swap-invariance", swap_ok, "T(n,m) and T(m,n) disagree");
}

void check_trace(const CurveParams& p, Recorder& rec) {
    const auto closed = trace_degrees(p);
    const auto oracle = trace_degrees_oracle(p);
    rec.expect("trace.closed-form=oracle", closed == oracle,
               "closed (" + std::to_string(closed.F) + "," + std::to_string(closed.E) + ") oracle (" +
                   std::to_string(oracle.F) + "," + std::to_string(oracle.E) + ")");
    const std::int64_t g = p.gamma();
    const bool inadmissible = p.both_even() && (g == 2 || ((p.n() / g) % 2 != 0 && (p.m() / g) % 2 != 0));
    rec.expect("trace.degree-two-extension", inadmissible == (oracle.F == 2 * oracle.E) &&
                                                 admissible_triangle_group(p) == !inadmissible,
               "inadmissibility set disagrees with degrees");
    const auto hecke = hecke_scalars(p);
    rec.expect("trace.hecke-degree", hecke.field_degree == oracle.E,
               "hecke " + std::to_string(hecke.field_degree) + " vs deg E " + std::to_string(oracle.E));
}

void check_covers(const CurveParams& p, const std::vector<RowVector>& span, Recorder& rec) {
    const auto crit = covers(p);
    const auto oracle = covers_by_containment(p);
    rec.expect("covers.criterion=containment", crit == oracle, "criterion and containment disagree");
    bool certified = true;
    std::string msg;
    for (const auto& c : crit) {
        if (!verify_cover(p, span, c).contained && certified) certified = false, msg = c.to_string();
    }
    rec.expect("covers.certificates", certified, "no certificate for " + msg);
}

void check_primitivity(const CurveParams& p, Recorder& rec) {
    if (is_arithmetic(p)) return;
    const auto v = algebraically_primitive(p);
    rec.expect("primitivity.criterion=degree", v.consistent(),
               std::string("criterion ") + (v.criterion ? "true" : "false") + ", deg E = genus " +
                   (v.degree_equals_genus ? "true" : "false"));
}

void check_lifts(const CurveParams& p, bool inject_fault, Recorder& rec) {
    const CombSurface surface(p);
    const SymmetryLift s2 = lift_sigma2(surface);
    std::vector<SymmetryLift> s4;
    const Label fault = inject_fault ? surface.span().columns()[0] : Label{0, 0};
    s4.push_back(lift_sigma4(surface, 1, fault));
    if (p.both_even()) s4.push_back(lift_sigma4(surface, 2, fault));

    auto sq = [](const std::optional<Square>& s) { return s ? to_string(*s) : std::string(); };
    std::vector<const SymmetryLift*> all{&s2};
    for (const auto& l : s4) all.push_back(&l);
    for (const SymmetryLift* l : all) {
        const auto inv = involution_witness(surface, *l);
        rec.expect("lifts.involution", !inv, l->name() + " fails at " + sq(inv));
        rec.expect("lifts.fixed-edge", !fixed_edges(surface, *l).empty(), l->name() + " has no fixed edge");
        const auto deck = deck_conjugation_witness(surface, *l);
        rec.expect("lifts.deck-conjugation", !deck, l->name() + " fails at " + sq(deck));
        const auto gen = general_conjugation_witness(surface, *l);
        rec.expect("lifts.general-conjugation", !gen,
                   l->name() + (gen ? " fails at " + to_string(gen->square) : std::string()));
        const auto cyl = cylinder_preservation_check(surface, *l);
        rec.expect("lifts.cylinders", cyl.preserved, l->name() + " fails at " + sq(cyl.witness));
    }
    for (const auto& l : s4) {
        const auto w = commutation_witness(surface, s2, l);
        rec.expect("lifts.commute", !w, "sigma2 and " + l.name() + " differ at " + sq(w));
    }
    if (p.n() <= kLiftClassBound && p.m() <= kLiftClassBound) {
        const auto count = count_lift_classes(surface);
        const std::size_t expected = p.both_even() ? 2 : 1;
        rec.expect("lifts.class-count", count.classes == expected,
                   std::to_string(count.classes) + " classes, expected " + std::to_string(expected));
    }
}

void check_generators(const CurveParams& p, Recorder& rec) {
    const auto eq = generator_equation(p);
    const auto numeric = verify_equation_numeric(eq, p, Rational(1, 1000000000));
    std::ostringstream dev;
    dev << "max relative deviation " << std::scientific << numeric.max_relative_deviation;
    rec.expect("generators.numeric", numeric.passed, dev.str());

    const std::int64_t m = p.m();
    const IntPolynomial cm = arith::chebyshev_T(static_cast<unsigned>(m));
    const IntPolynomial u2 = IntPolynomial::linear(2);
    bool identity = true;
    if (p.m_odd()) {
        const auto q = eq.rhs_factored.factor;
        identity = cm - IntPolynomial::constant(2) == u2 * q * q && q.degree() == (m - 1) / 2;
    } else {
        const auto half = arith::chebyshev_T(static_cast<unsigned>(m / 2));
        identity = cm + IntPolynomial::constant(2) == half * half;
        if (p.both_even())
            identity = identity && eq.rhs * eq.rhs == u2.pow(static_cast<unsigned>(p.n())) *
                                                           (cm + IntPolynomial::constant(2));
    }
    rec.expect("generators.chebyshev-identities", identity, "polynomial identity fails");
    bool divides = true;
    try {
        differential_description(eq);
    } catch (const std::logic_error&) {
        divides = false;
    }
    rec.expect("generators.differential", divides, "D^2 does not divide");
}

std::vector<Outcome> run_pair(const CurveParams& p, const VerifyOptions& opt) {
    auto wants = [&](const char* g) { return opt.groups.empty() || opt.groups.count(g) != 0; };
    Recorder rec(p);
    const bool need_span = wants("rowspan") || wants("klein") || wants("genus") || wants("spectrum") || wants("covers");
    std::vector<RowVector> span;
    std::vector<Summand> sums;
    if (need_span) {
        span = row_span(p);
        sums = summands(p, span);
    }
    if (wants("rowspan")) check_rowspan(p, span, rec);
    if (wants("klein")) check_klein(span, rec);
    if (wants("genus")) check_genus(p, span, sums, rec);
    if (wants("spectrum")) check_spectrum(p, sums, rec);
    if (wants("trace")) check_trace(p, rec);
    if (wants("covers")) check_covers(p, span, rec);
    if (wants("primitivity")) check_primitivity(p, rec);
    if (wants("lifts")) check_lifts(p, opt.inject_sigma4_fault, rec);
    if (wants("generators")) check_generators(p, rec);
    return rec.take();
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
    std::vector<CurveParams> pairs;
    for (std::int64_t n = 2; n <= options.nmax; ++n)
        for (std::int64_t m = 2; m <= options.nmax; ++m)
            if (CurveParams::valid(n, m)) pairs.emplace_back(n, m);

    std::vector<std::vector<Outcome>> per_pair(pairs.size());
    parallel_for(pairs.size(), options.workers, [&](std::size_t i) { per_pair[i] = run_pair(pairs[i], options); });

    std::vector<CheckResult> results;
    std::map<std::string, std::size_t> index;
    for (const auto& outcomes : per_pair)
        for (const auto& o : outcomes) {
            auto [it, inserted] = index.try_emplace(o.check, results.size());
            if (inserted) results.push_back({o.check, 0, 0, {}});
            auto& r = results[it->second];
            ++r.cases;
            if (!o.ok && r.failures++ == 0) r.first_failure = o.detail;
        }
    return results;
}

}  // namespace vwbm::cli
