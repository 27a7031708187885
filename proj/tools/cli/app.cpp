#include "app.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "parallel.hpp"
#include "render.hpp"
#include "verify_suite.hpp"

namespace vwbm::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::map<std::string, OutputFormat> kFormats = {
    {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"md", OutputFormat::md}};

void add_format(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "md"}));
}

void add_pair(CLI::App* cmd, std::int64_t& n, std::int64_t& m) {
    cmd->add_option("n", n, "First parameter")->required();
    cmd->add_option("m", m, "Second parameter")->required();
}

/// "all", "<group>", "<group>-only", or a comma-separated list of those.
std::set<std::string> parse_level(const std::string& level) {
    std::set<std::string> groups;
    if (level == "all") return groups;
    std::stringstream ss(level);
    std::string item;
    const auto& known = verify_groups();
    while (std::getline(ss, item, ',')) {
        if (item.size() > 5 && item.ends_with("-only")) item.resize(item.size() - 5);
        if (std::find(known.begin(), known.end(), item) == known.end())
            throw UsageError("unknown verify level '" + item + "'");
        groups.insert(item);
    }
    if (groups.empty()) throw UsageError("empty verify level");
    return groups;
}

std::vector<CurveTable> build_tables(std::int64_t nmax, std::int64_t mmax) {
    if (nmax < 2 || mmax < 2) throw InvalidParams();
    std::vector<CurveParams> pairs;
    // When the ranges hold no valid pair, widen m to the first one that does.
    for (std::int64_t hi = mmax; pairs.empty(); ++hi)
        for (std::int64_t n = 2; n <= nmax; ++n)
            for (std::int64_t m = 2; m <= hi; ++m)
                if (CurveParams::valid(n, m)) pairs.emplace_back(n, m);
    std::vector<CurveTable> tables(pairs.size(), CurveTable{pairs.front(), {}});
    parallel_for(pairs.size(), worker_count(), [&](std::size_t i) { tables[i] = {pairs[i], summands(pairs[i])}; });
    return tables;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants of the Teichmüller curves T(n,m)", "vwbm"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "vwbm 0.1.0");

    std::string format = "json";
    std::int64_t n = 0, m = 0;

    auto* info = app.add_subcommand("info", "Full report for T(n,m)");
    auto* spectrum = app.add_subcommand("spectrum", "Summands and Lyapunov exponents");
    auto* covers_cmd = app.add_subcommand("covers", "Curves T(n',m') covered by T(n,m)");
    auto* generator = app.add_subcommand("generator", "Defining equation of the generating surface");
    auto* tracefield = app.add_subcommand("tracefield", "Trace field degrees");
    auto* surface = app.add_subcommand("surface", "Square-tiled model and its symmetry lifts");
    for (auto* cmd : {info, spectrum, covers_cmd, generator, tracefield, surface}) {
        add_pair(cmd, n, m);
        add_format(cmd, format);
    }
    bool certify = false;
    covers_cmd->add_flag("--certify", certify, "Include row-span containment certificates");

    auto* table = app.add_subcommand("table", "Summand tables for 2 <= n <= nmax, 2 <= m <= mmax");
    std::int64_t nmax = 0, mmax = 0;
    table->add_option("nmax", nmax)->required();
    table->add_option("mmax", mmax, "Defaults to nmax");
    add_format(table, format);

    auto* verify = app.add_subcommand("verify", "Cross-check invariants for all valid n, m <= nmax");
    std::int64_t verify_nmax = 12;
    std::string level = "all", fault;
    verify->add_option("nmax", verify_nmax, "Largest n and m")->capture_default_str();
    verify->add_option("--level", level, "all, <group> or <group>-only, comma separated")->capture_default_str();
    verify->add_option("--inject-fault", fault, "Negative control")->check(CLI::IsMember({"sigma4-shift"}));
    add_format(verify, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const OutputFormat fmt = kFormats.at(format);
        if (*table) {
            out << render_tables(build_tables(nmax, *table->get_option("mmax") ? mmax : nmax), fmt);
            return 0;
        }
        if (*verify) {
            if (verify_nmax < 3) throw UsageError("nmax must be at least 3");
            VerifyOptions opt;
            opt.nmax = verify_nmax;
            opt.groups = parse_level(level);
            opt.inject_sigma4_fault = fault == "sigma4-shift";
            opt.workers = worker_count();
            const auto results = run_verify(opt);
            std::vector<std::string> groups(opt.groups.begin(), opt.groups.end());
            if (groups.empty()) groups = verify_groups();
            out << render_verify(verify_nmax, groups, results, fmt);
            int code = 0;
            for (const auto& r : results)
                if (r.failures != 0) {
                    err << "FAIL " << r.name << ": " << r.failures << " of " << r.cases << ", first " << r.first_failure
                        << '\n';
                    code = 1;
                }
            return code;
        }
        const CurveParams p(n, m);
        Json doc;
        if (*info) doc = report_json(build_report(p));
        else if (*spectrum) doc = spectrum_json(p);
        else if (*covers_cmd) doc = covers_json(p, certify);
        else if (*generator) doc = generator_json(p);
        else if (*tracefield) doc = tracefield_json(p);
        else doc = surface_json(p);
        out << render(doc, fmt);
        return 0;
    } catch (const InvalidParams& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        return 2;
    }
}

}  // namespace vwbm::cli
