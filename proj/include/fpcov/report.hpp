#pragma once

#include <string>

#include "json.hpp"

#include "fpcov/generator.hpp"

namespace fpcov {

/// Bumped whenever the JSON layout changes incompatibly.
inline constexpr int kReportSchemaVersion = 1;

/// Serializes a run to the documented JSON schema. Field order is fixed so
/// identical runs produce byte-identical documents; wall_seconds is placed
/// last as the only run-to-run varying field. When `summary` is given its
/// aggregate statistics are embedded under "runs_summary".
nlohmann::ordered_json report_to_json(const RunReport& report,
                                      const RunSummary* summary = nullptr);

/// Inverse of report_to_json. Throws ConfigError on missing/ill-typed
/// fields or an unsupported schema_version. If `summary_out` is non-null
/// and the document has a "runs_summary" object, it is filled in.
RunReport report_from_json(const nlohmann::ordered_json& doc,
                           RunSummary* summary_out = nullptr);

/// One row per test, value indices, header "p0,p1,...". Ends with a
/// trailing newline.
std::string suite_to_csv(const TestSuite& suite);

/// Same shape, but each index is replaced by names[param][index].
/// Requires names to cover every parameter and level (ConfigError).
std::string suite_to_csv(
    const TestSuite& suite,
    const std::vector<std::vector<std::string>>& names);

/// Reads a value-name file: one non-comment line per parameter, holding
/// comma-separated names for that parameter's levels (at least as many as
/// the model's cardinality there). '#' starts a comment line.
std::vector<std::vector<std::string>> parse_names_file(
    const std::string& path, const SystemModel& model);

}  // namespace fpcov
