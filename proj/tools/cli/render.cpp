#include "render.hpp"

#include <sstream>

#include "vwbm/generators.hpp"
#include "vwbm/square_tiled.hpp"

namespace vwbm::cli {

namespace {

Json strings(const std::vector<Rational>& qs) {
    Json arr = Json::array();
    for (const auto& q : qs) arr.push_back(q.to_string());
    return arr;
}

Json row_json(const RowVector& r) {
    Json arr = Json::array();
    for (auto x : r.entries()) arr.push_back(x);
    return arr;
}

Json label_json(const Label& c) { return Json::array({c[0], c[1]}); }

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

void flatten(const Json& v, const std::string& key, std::vector<std::pair<std::string, std::string>>& out) {
    if (v.is_object()) {
        for (const auto& [k, child] : v.items()) flatten(child, key.empty() ? k : key + "." + k, out);
    } else if (v.is_array() && !v.empty()) {
        for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], key + "." + std::to_string(i), out);
    } else {
        out.emplace_back(key, v.is_array() ? "" : scalar_text(v));
    }
}

std::string md_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += "\\|";
        else out += c;
    }
    return out;
}

}  // namespace

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

Json params_json(const CurveParams& p) {
    return {{"n", p.n()}, {"m", p.m()}, {"N", p.N()}, {"gamma", p.gamma()}, {"l", p.l()}};
}

Json summand_json(const Summand& s) {
    return {{"r", row_json(s.r)},
            {"kappa", s.angles.kappa.to_string()},
            {"mu", s.angles.mu.to_string()},
            {"nu", s.angles.nu.to_string()},
            {"lyapunov", s.lyapunov.to_string()},
            {"tiling", s.tiling}};
}

Json report_json(const CurveReport& rep) {
    std::vector<Rational> ascending(rep.spectrum.rbegin(), rep.spectrum.rend());
    Json summands = Json::array();
    for (const auto& s : rep.summands) summands.push_back(summand_json(s));
    Json covers = Json::array();
    for (const auto& c : rep.covers) covers.push_back(Json::array({c.n(), c.m()}));
    const auto& z = rep.classification.zeros;
    Json trace = {{"deg_F", rep.trace.F},
                  {"deg_E", rep.trace.E},
                  {"admissible_triangle_group", rep.admissible_triangle_group},
                  {"hecke_field_degree", nullptr}};
    if (rep.hecke_field_degree) trace["hecke_field_degree"] = *rep.hecke_field_degree;
    return {{"schema", kReportSchema},
            {"params", params_json(rep.params)},
            {"genus", rep.genus},
            {"spectrum", strings(ascending)},
            {"summands", summands},
            {"arithmetic", rep.classification.arithmetic},
            {"uniformizer", rep.classification.uniformizer.label},
            {"zeros", {{"count", z.count}, {"equal_order", z.equal_order}, {"order", z.order}}},
            {"covers", covers},
            {"trace", trace},
            {"primitivity", to_string(rep.primitivity.verdict)},
            {"generator", to_json(generator_equation(rep.params))},
            {"notes", rep.notes}};
}

Json spectrum_json(const CurveParams& p) {
    const auto sums = summands(p);
    std::vector<Rational> ascending;
    for (auto it = sums.rbegin(); it != sums.rend(); ++it) ascending.push_back(it->lyapunov);
    Json rows = Json::array();
    for (const auto& s : sums) rows.push_back(summand_json(s));
    return {{"schema", kReportSchema},
            {"params", params_json(p)},
            {"spectrum", strings(ascending)},
            {"summands", rows}};
}

Json covers_json(const CurveParams& p, bool certify) {
    Json list = Json::array();
    const auto span = certify ? row_span(p) : std::vector<RowVector>{};
    for (const auto& c : covers(p)) {
        Json entry = {{"n", c.n()}, {"m", c.m()}};
        if (certify) {
            const auto cert = verify_cover(p, span, c);
            entry["certificate"] = {{"contained", cert.contained},
                                    {"k", cert.k},
                                    {"generator_images", Json::array({row_json(cert.generator_images[0]),
                                                                      row_json(cert.generator_images[1])})}};
            if (cert.witness) entry["certificate"]["witness"] = row_json(*cert.witness);
        }
        list.push_back(entry);
    }
    return {{"schema", kReportSchema}, {"params", params_json(p)}, {"covers", list}};
}

Json generator_json(const CurveParams& p) {
    const auto eq = generator_equation(p);
    const auto check = verify_equation_numeric(eq, p, Rational(1, 1000000000));
    std::ostringstream dev;
    dev << std::scientific << check.max_relative_deviation;
    return {{"schema", kReportSchema},
            {"params", params_json(p)},
            {"generator", to_json(eq)},
            {"numeric_check",
             {{"passed", check.passed}, {"samples", check.samples}, {"max_relative_deviation", dev.str()}}}};
}

Json tracefield_json(const CurveParams& p) {
    const auto closed = trace_degrees(p);
    const auto oracle = trace_degrees_oracle(p);
    Json trace = {{"deg_F", closed.F},
                  {"deg_E", closed.E},
                  {"oracle_deg_F", oracle.F},
                  {"oracle_deg_E", oracle.E},
                  {"admissible_triangle_group", admissible_triangle_group(p)},
                  {"hecke_field_degree", nullptr}};
    if (p.N() <= kHeckeReportLimit) trace["hecke_field_degree"] = hecke_scalars(p).field_degree;
    return {{"schema", kReportSchema},
            {"params", params_json(p)},
            {"trace", trace},
            {"primitivity", to_string(algebraically_primitive(p).verdict)}};
}

Json surface_json(const CurveParams& p) {
    const CombSurface surface(p);
    Json columns = Json::array();
    for (const auto& c : surface.span().columns()) columns.push_back(label_json(c));
    Json lifts = Json::array();
    std::vector<SymmetryLift> all{lift_sigma2(surface), lift_sigma4(surface, 1)};
    if (p.both_even()) all.push_back(lift_sigma4(surface, 2));
    for (const auto& l : all) {
        lifts.push_back({{"name", l.name()},
                         {"involution", !involution_witness(surface, l)},
                         {"fixed_edges", fixed_edges(surface, l).size()},
                         {"deck_conjugation", !deck_conjugation_witness(surface, l)},
                         {"general_conjugation", !general_conjugation_witness(surface, l)},
                         {"cylinders", cylinder_preservation_check(surface, l).preserved},
                         {"commutes_with_sigma2", !commutation_witness(surface, all.front(), l)}});
    }
    Json doc = {{"schema", kReportSchema},
                {"params", params_json(p)},
                {"squares", surface.square_count()},
                {"deck_group_order", surface.span().size()},
                {"columns", columns},
                {"surface_genus", surface_genus(surface)},
                {"lifts", lifts},
                {"lift_classes", nullptr}};
    if (p.n() <= kLiftClassBound && p.m() <= kLiftClassBound) doc["lift_classes"] = count_lift_classes(surface).classes;
    return doc;
}

Json verify_json(std::int64_t nmax, const std::vector<std::string>& groups, const std::vector<CheckResult>& results) {
    Json checks = Json::array();
    bool passed = true;
    for (const auto& r : results) {
        passed = passed && r.failures == 0;
        checks.push_back({{"check", r.name},
                          {"cases", r.cases},
                          {"failures", r.failures},
                          {"status", r.failures == 0 ? "pass" : "fail"},
                          {"first_failure", r.first_failure}});
    }
    return {{"schema", "vwbm-verify/1"}, {"nmax", nmax}, {"groups", groups}, {"passed", passed}, {"checks", checks}};
}

std::string render(const Json& doc, OutputFormat format) {
    if (format == OutputFormat::json) return doc.dump(2) + "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(doc, "", rows);
    std::ostringstream os;
    if (format == OutputFormat::csv) {
        os << "key,value\n";
        for (const auto& [k, v] : rows) os << csv_field(k) << ',' << csv_field(v) << '\n';
    } else {
        os << "| key | value |\n|---|---|\n";
        for (const auto& [k, v] : rows) os << "| " << md_cell(k) << " | " << md_cell(v) << " |\n";
    }
    return os.str();
}

std::string render_tables(const std::vector<CurveTable>& tables, OutputFormat format) {
    std::ostringstream os;
    if (format == OutputFormat::json) {
        Json list = Json::array();
        for (const auto& t : tables) {
            Json rows = Json::array();
            for (auto it = t.summands.rbegin(); it != t.summands.rend(); ++it) {
                Json row = summand_json(*it);
                row.erase("r");
                rows.push_back(row);
            }
            list.push_back({{"n", t.params.n()}, {"m", t.params.m()}, {"rows", rows}});
        }
        return Json{{"schema", kReportSchema}, {"tables", list}}.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        os << "n,m,row,kappa,mu,nu,lyapunov,tiling\n";
        for (const auto& t : tables) {
            std::size_t row = 0;
            for (auto it = t.summands.rbegin(); it != t.summands.rend(); ++it) {
                const auto& a = it->angles;
                os << t.params.n() << ',' << t.params.m() << ',' << ++row << ',' << a.kappa << ',' << a.mu << ','
                   << a.nu << ',' << it->lyapunov << ',' << (it->tiling ? "true" : "false") << '\n';
            }
        }
        return os.str();
    }
    bool first = true;
    for (const auto& t : tables) {
        if (!first) os << '\n';
        first = false;
        os << "### T" << t.params.to_string() << "\n\n| (κ, μ, ν) | λ |\n|---|---|\n";
        for (auto it = t.summands.rbegin(); it != t.summands.rend(); ++it) {
            const auto& a = it->angles;
            const std::string triple = "(" + a.kappa.to_string() + ", " + a.mu.to_string() + ", " + a.nu.to_string() + ")";
            if (it->tiling)
                os << "| **" << triple << "** | **" << it->lyapunov << "** |\n";
            else
                os << "| " << triple << " | " << it->lyapunov << " |\n";
        }
    }
    return os.str();
}

std::string render_verify(std::int64_t nmax, const std::vector<std::string>& groups,
                          const std::vector<CheckResult>& results, OutputFormat format) {
    if (format == OutputFormat::json) return verify_json(nmax, groups, results).dump(2) + "\n";
    std::ostringstream os;
    if (format == OutputFormat::csv) {
        os << "check,cases,failures,status,first_failure\n";
        for (const auto& r : results)
            os << csv_field(r.name) << ',' << r.cases << ',' << r.failures << ',' << (r.failures == 0 ? "pass" : "fail")
               << ',' << csv_field(r.first_failure) << '\n';
        return os.str();
    }
    os << "| check | cases | failures | status | first failure |\n|---|---|---|---|---|\n";
    for (const auto& r : results)
        os << "| " << r.name << " | " << r.cases << " | " << r.failures << " | " << (r.failures == 0 ? "pass" : "FAIL")
           << " | " << md_cell(r.first_failure) << " |\n";
    return os.str();
}

}  // namespace vwbm::cli
