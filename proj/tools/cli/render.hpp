#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "verify_suite.hpp"
#include "vwbm/invariants.hpp"

namespace vwbm::cli {

using Json = nlohmann::ordered_json;

enum class OutputFormat { json, csv, md };

inline constexpr const char* kReportSchema = "vwbm-report/1";

Json params_json(const CurveParams& p);
Json summand_json(const Summand& s);
Json report_json(const CurveReport& report);
Json spectrum_json(const CurveParams& p);
Json covers_json(const CurveParams& p, bool certify);
Json generator_json(const CurveParams& p);
Json tracefield_json(const CurveParams& p);
Json surface_json(const CurveParams& p);
Json verify_json(std::int64_t nmax, const std::vector<std::string>& groups, const std::vector<CheckResult>& results);

/// Generic renderer: pretty JSON, flattened key,value CSV, or a two-column
/// markdown table.
std::string render(const Json& doc, OutputFormat format);

struct CurveTable {
    CurveParams params;
    std::vector<Summand> summands;  // canonical order, largest exponent first
};

/// Rows run from the smallest exponent up, so the exponent-1 row is last.
std::string render_tables(const std::vector<CurveTable>& tables, OutputFormat format);

std::string render_verify(std::int64_t nmax, const std::vector<std::string>& groups,
                          const std::vector<CheckResult>& results, OutputFormat format);

std::string csv_field(const std::string& s);

}  // namespace vwbm::cli
