#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support/oracles.hpp"
#include "vwbm/invariants.hpp"
#include "vwbm/number_theory.hpp"

using namespace vwbm;
namespace T = vwbm::testing;

namespace {

std::vector<CurveParams> pairs_up_to(std::int64_t bound) {
    std::vector<CurveParams> out;
    for (std::int64_t n = 2; n <= bound; ++n)
        for (std::int64_t m = 2; m <= bound; ++m)
            if (CurveParams::valid(n, m)) out.emplace_back(n, m);
    return out;
}

std::vector<std::string> strings(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.to_string());
    std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
        return Rational::parse(a) < Rational::parse(b);
    });
    return out;
}

TraceDegrees numeric_trace_degrees(const CurveParams& p) {
    const std::int64_t l = p.l(), n = p.n(), m = p.m();
    const std::int64_t F = T::numeric_field_degree(2 * l, [&](std::int64_t a) {
        return std::vector<double>{T::two_cos(a, l / n, l), T::two_cos(a, l / m, l)};
    });
    const std::int64_t E = T::numeric_field_degree(2 * l, [&](std::int64_t a) {
        return std::vector<double>{T::two_cos(a, 2 * l / n, l), T::two_cos(a, 2 * l / m, l),
                                   T::two_cos(a, l / n, l) * T::two_cos(a, l / m, l)};
    });
    return {F, E};
}

}  // namespace

TEST(Spectrum, PublishedExamples) {
    EXPECT_EQ(strings(lyapunov_spectrum(CurveParams(2, 7))), (std::vector<std::string>{"1/5", "3/5", "1"}));
    EXPECT_EQ(strings(lyapunov_spectrum(CurveParams(4, 5))),
              (std::vector<std::string>{"1/11", "2/11", "3/11", "6/11", "7/11", "1"}));
    EXPECT_EQ(strings(lyapunov_spectrum(CurveParams(6, 10))),
              (std::vector<std::string>{"1/11", "1/11", "2/11", "2/11", "3/11", "4/11", "5/11", "6/11", "7/11",
                                        "8/11", "1"}));
}

TEST(Spectrum, MultiplesOfBaseUnitAndTopIsOne) {
    for (const auto& p : pairs_up_to(20)) {
        const Rational unit(p.gamma());
        const Rational base = unit / Rational(p.n() * p.m() - p.n() - p.m());
        const auto spec = lyapunov_spectrum(p);
        for (const auto& x : spec) {
            const Rational k = x / base;
            EXPECT_TRUE(k.is_integer()) << p.to_string() << " " << x;
            EXPECT_GT(k, Rational(0));
        }
        EXPECT_EQ(*std::max_element(spec.begin(), spec.end()), Rational(1)) << p.to_string();
        const auto first = summands(p).front();
        EXPECT_EQ(first.angles, (Angles{Rational(0), Rational(1) / Rational(p.m()), Rational(1) / Rational(p.n())}));
    }
}

TEST(Spectrum, AngleDefectIdentity) {
    for (const auto& p : pairs_up_to(20)) {
        const Rational defect = Rational(1) - Rational(1) / Rational(p.n()) - Rational(1) / Rational(p.m());
        for (const auto& s : summands(p)) {
            const auto& a = s.angles;
            EXPECT_EQ(s.lyapunov, (Rational(1) - a.kappa - a.mu - a.nu) / defect) << p.to_string();
        }
    }
}

TEST(Spectrum, SwapInvariance) {
    for (const auto& p : pairs_up_to(14)) {
        const auto q = p.swapped();
        EXPECT_EQ(strings(lyapunov_spectrum(p)), strings(lyapunov_spectrum(q)));
        EXPECT_EQ(genus(p), genus(q));
        EXPECT_EQ(trace_degrees(p), trace_degrees(q));
        EXPECT_EQ(is_arithmetic(p), is_arithmetic(q));
        EXPECT_EQ(classify(p).zeros.count, classify(q).zeros.count);
    }
}

TEST(Genus, Examples) {
    EXPECT_EQ(genus(CurveParams(2, 7)), 3);
    EXPECT_EQ(genus(CurveParams(6, 10)), 11);
    EXPECT_EQ(genus(CurveParams(8, 8)), 9);
    EXPECT_EQ(genus(CurveParams(2, 3)), 1);
}

TEST(Classify, Examples) {
    const auto c33 = classify(CurveParams(3, 3));
    EXPECT_TRUE(c33.arithmetic);
    EXPECT_EQ(c33.uniformizer.label, "Delta(2,3,∞)");
    EXPECT_EQ(c33.zeros.count, 3);

    const auto c46 = classify(CurveParams(4, 6));
    EXPECT_FALSE(c46.arithmetic);
    EXPECT_EQ(c46.uniformizer.label, "IndexTwoSubgroup(Delta(4,6,∞))");
    EXPECT_EQ(c46.zeros.count, 1);
    EXPECT_EQ(c46.zeros.order, 2 * genus(CurveParams(4, 6)) - 2);

    const auto c88 = classify(CurveParams(8, 8));
    EXPECT_EQ(c88.uniformizer.label, "Delta(4,∞,∞)");
    EXPECT_EQ(c88.zeros.count, 8);
    EXPECT_EQ(c88.zeros.order, 2);

    EXPECT_EQ(classify(CurveParams(2, 7)).uniformizer.label, "Delta(2,7,∞)");
    EXPECT_EQ(classify(CurveParams(5, 5)).uniformizer.kind, UniformizerKind::triangle_2_n);
}

// Regular 2b-gon surfaces: the octagon and 12-gon have a single zero, the
// decagon two.
TEST(Classify, RegularPolygonZeros) {
    const auto oct = classify(CurveParams(2, 8)).zeros;
    EXPECT_EQ(oct.count, 1);
    EXPECT_EQ(oct.order, 2);
    const auto dec = classify(CurveParams(2, 10)).zeros;
    EXPECT_EQ(dec.count, 2);
    EXPECT_EQ(dec.order, 1);
    const auto dodec = classify(CurveParams(2, 12)).zeros;
    EXPECT_EQ(dodec.count, 1);
    EXPECT_EQ(dodec.order, 4);
    const auto hept = classify(CurveParams(2, 7)).zeros;
    EXPECT_EQ(hept.count, 1);
    EXPECT_EQ(hept.order, 4);
}

TEST(Classify, ArithmeticSetIsExact) {
    const std::set<std::pair<std::int64_t, std::int64_t>> arithmetic = {{2, 3}, {3, 2}, {2, 4}, {4, 2}, {2, 6}, {6, 2},
                                                                        {3, 3}, {4, 4}, {6, 6}};
    for (const auto& p : pairs_up_to(20))
        EXPECT_EQ(is_arithmetic(p), arithmetic.count({p.n(), p.m()}) == 1) << p.to_string();
}

TEST(Classify, ZeroOrdersPartitionCanonicalDivisor) {
    for (const auto& p : pairs_up_to(20)) {
        const auto z = classify(p).zeros;
        EXPECT_GT(z.count, 0);
        EXPECT_EQ(z.count * z.order, 2 * genus(p) - 2) << p.to_string();
    }
}

TEST(Covers, Examples) {
    const auto c = covers(CurveParams(2, 24));
    EXPECT_TRUE(std::count(c.begin(), c.end(), CurveParams(2, 8)));
    EXPECT_FALSE(std::count(c.begin(), c.end(), CurveParams(2, 12)));
    EXPECT_FALSE(std::count(c.begin(), c.end(), CurveParams(2, 6)));
    EXPECT_EQ(covers(CurveParams(8, 8)), (std::vector<CurveParams>{{2, 4}, {4, 2}, {4, 4}}));
    EXPECT_TRUE(covers(CurveParams(2, 7)).empty());
}

TEST(Covers, CertificateExamples) {
    const CurveParams big(2, 24);
    const auto yes = verify_cover(big, CurveParams(2, 8));
    EXPECT_TRUE(yes.contained);
    EXPECT_EQ(yes.k, 3);
    EXPECT_FALSE(yes.witness);
    const auto no = verify_cover(big, CurveParams(2, 12));
    EXPECT_FALSE(no.contained);
    ASSERT_TRUE(no.witness);
    EXPECT_FALSE(span_contains(row_span(big), *no.witness));
    EXPECT_FALSE(verify_cover(big, CurveParams(2, 6)).contained);
    const auto self = verify_cover(CurveParams(5, 7), CurveParams(5, 7));
    EXPECT_TRUE(self.contained);
    EXPECT_EQ(self.k, 1);
    EXPECT_THROW(verify_cover(CurveParams(2, 7), CurveParams(2, 5)), std::invalid_argument);
}

TEST(Covers, CriterionMatchesContainment) {
    for (const auto& p : pairs_up_to(12)) EXPECT_EQ(covers(p), covers_by_containment(p)) << p.to_string();
}

TEST(Covers, TilingTriplesMatchCovers) {
    for (const auto& p : pairs_up_to(12)) {
        std::set<Angles> tiling, expected;
        for (const auto& s : summands(p))
            if (s.tiling) tiling.insert(s.angles);
        auto list = covers(p);
        list.push_back(p);
        for (const auto& c : list)
            expected.insert({Rational(0), Rational(1) / Rational(c.m()), Rational(1) / Rational(c.n())});
        EXPECT_EQ(tiling, expected) << p.to_string();
        const auto flags = tiling_flags(p);
        const auto sums = summands(p);
        ASSERT_EQ(flags.size(), sums.size());
        for (std::size_t i = 0; i < sums.size(); ++i) EXPECT_EQ(flags[i], sums[i].tiling);
    }
}

TEST(Tiling, Examples) {
    auto flagged = [](std::int64_t n, std::int64_t m) {
        std::set<std::pair<std::string, std::string>> out;
        for (const auto& s : summands(CurveParams(n, m)))
            if (s.tiling) out.emplace(s.angles.mu.to_string(), s.angles.nu.to_string());
        return out;
    };
    using S = std::set<std::pair<std::string, std::string>>;
    EXPECT_EQ(flagged(2, 9), (S{{"1/3", "1/2"}, {"1/9", "1/2"}}));
    EXPECT_EQ(flagged(3, 9), (S{{"1/3", "1/3"}, {"1/9", "1/3"}}));
    EXPECT_EQ(flagged(4, 6), (S{{"1/3", "1/2"}, {"1/2", "1/4"}, {"1/6", "1/4"}}));
}

TEST(TraceField, Examples) {
    EXPECT_EQ(trace_degrees(CurveParams(4, 6)), (TraceDegrees{4, 2}));
    EXPECT_EQ(trace_degrees(CurveParams(4, 8)).E, 4);
    EXPECT_EQ(trace_degrees_oracle(CurveParams(6, 10)), trace_degrees(CurveParams(6, 10)));
    EXPECT_FALSE(admissible_triangle_group(CurveParams(4, 6)));
    EXPECT_TRUE(admissible_triangle_group(CurveParams(2, 7)));
    EXPECT_TRUE(admissible_triangle_group(CurveParams(4, 8)));
}

TEST(TraceField, ClosedFormMatchesExactAndNumericOracles) {
    for (const auto& p : pairs_up_to(20)) {
        const auto closed = trace_degrees(p);
        EXPECT_EQ(closed, trace_degrees_oracle(p)) << p.to_string();
        EXPECT_EQ(closed, numeric_trace_degrees(p)) << p.to_string();
    }
}

TEST(TraceField, DegreeTwoExtensionSet) {
    for (const auto& p : pairs_up_to(20)) {
        const auto d = trace_degrees(p);
        const std::int64_t g = p.gamma();
        const bool listed = p.both_even() && (g == 2 || ((p.n() / g) % 2 == 1 && (p.m() / g) % 2 == 1));
        EXPECT_EQ(listed, d.F == 2 * d.E) << p.to_string();
        EXPECT_EQ(admissible_triangle_group(p), !listed);
    }
}

TEST(Hecke, ScalarsAreRealAndGenerateInvariantTraceField) {
    for (const auto& p : pairs_up_to(10)) {
        const auto h = hecke_scalars(p);
        ASSERT_EQ(h.scalars.size(), 3U);
        for (const auto& s : h.scalars) EXPECT_TRUE(s.galois_orbit_fixes(p.N() - 1));
        EXPECT_EQ(h.field_degree, trace_degrees(p).E) << p.to_string();
    }
    EXPECT_EQ(hecke_scalars(CurveParams(2, 7)).field_degree, 3);
}

TEST(Primitivity, Examples) {
    EXPECT_EQ(algebraically_primitive(CurveParams(2, 7)).verdict, Primitivity::primitive);
    EXPECT_EQ(algebraically_primitive(CurveParams(3, 5)).verdict, Primitivity::not_primitive);
    EXPECT_EQ(algebraically_primitive(CurveParams(2, 16)).verdict, Primitivity::primitive);
    EXPECT_EQ(algebraically_primitive(CurveParams(3, 3)).verdict, Primitivity::not_applicable);
    EXPECT_EQ(to_string(Primitivity::not_applicable), "arithmetic_not_applicable");
}

TEST(Primitivity, CriterionMatchesDegreeCount) {
    for (const auto& p : pairs_up_to(20)) {
        if (is_arithmetic(p)) continue;
        const bool by_degree = trace_degrees(p).E == genus(p);
        const std::int64_t other = p.n() == 2 ? p.m() : p.m() == 2 ? p.n() : 0;
        const bool by_numbers = other != 0 && (arith::is_prime(other) || (other % 2 == 0 && arith::is_prime(other / 2)) ||
                                               arith::is_power_of_two(other));
        EXPECT_EQ(primitivity_criterion(p), by_numbers) << p.to_string();
        EXPECT_EQ(by_numbers, by_degree) << p.to_string();
        EXPECT_TRUE(algebraically_primitive(p).consistent());
    }
}

TEST(Report, NotesAndOptionalHecke) {
    const auto r = build_report(CurveParams(2, 7));
    EXPECT_EQ(r.genus, 3);
    ASSERT_TRUE(r.hecke_field_degree);
    EXPECT_EQ(*r.hecke_field_degree, 3);
    EXPECT_NE(std::find(r.notes.begin(), r.notes.end(), "Veech curve of the regular 7-gon"), r.notes.end());
    const auto w = build_report(CurveParams(5, 3));
    EXPECT_NE(std::find(w.notes.begin(), w.notes.end(), "Ward curve (n = 3, m = 5)"), w.notes.end());
    EXPECT_FALSE(build_report(CurveParams(2, 257)).hecke_field_degree);
}
