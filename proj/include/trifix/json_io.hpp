#pragma once

// JSON forms of the library's inputs and reports. Rationals are always the
// strings "p/q" (or "p"), never numbers, so nothing is rounded on the way
// out. Report payloads carry "schema": 1.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "trifix/feasibility.hpp"
#include "trifix/genus.hpp"
#include "trifix/localization.hpp"

namespace trifix::json_io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// { "half_dim": n, "mode": "oriented"|"unitary",
///   "points": [{ "label": str, "weights": [int...], "epsilon": 1|-1 }] }
/// Throws Error(kMalformedModel) naming the offending field.
FixedPointModel model_from_json(const json& doc);
FixedPointModel load_model(const std::filesystem::path& path);
json model_to_json(const FixedPointModel& model);

json partition_to_json(const Partition& p);
Partition partition_from_json(const json& doc);

/// { genus, k, coefficients: [{ partition: [..], value: "p/q" }] }, all
/// partitions of k in lexicographic order (zero coefficients included).
json coefficients_to_json(const GenusSpec& genus, int k, const GradedPolynomial& poly);

json verdict_to_json(const DimensionVerdict& verdict);
json dim8_solutions_to_json(const std::vector<Dim8Solution>& solutions,
                            const std::vector<UnitaryCandidate>& candidates);
json parity_to_json(long chi_minus1, long chi_plus1, std::size_t searched,
                    const std::vector<ParityAssignment>& matches);
json unitary_report_to_json(const UnitaryReport& report);
json theorem_report_to_json(const TheoremReport& report);

}  // namespace trifix::json_io
