#include "trifix/json_io.hpp"

#include <fstream>

#include "trifix/error.hpp"

namespace trifix::json_io {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::kMalformedModel, what);
}

const json& require(const json& doc, const char* key, const std::string& where) {
  if (!doc.is_object() || !doc.contains(key)) {
    malformed(where + ": missing field '" + key + "'");
  }
  return doc.at(key);
}

long require_integer(const json& value, const std::string& where) {
  if (!value.is_number_integer()) {
    malformed(where + ": expected an integer, got " + value.dump());
  }
  return value.get<long>();
}

json dims_to_json(const std::vector<int>& dims) { return json(dims); }

json form_to_json(const std::map<Partition, BigRational>& form) {
  json out = json::array();
  for (const auto& [index, value] : form) {
    out.push_back({{"partition", partition_to_json(index)}, {"value", value.to_string()}});
  }
  return out;
}

}  // namespace

FixedPointModel model_from_json(const json& doc) {
  if (!doc.is_object()) {
    malformed("model: expected a JSON object");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "half_dim" && key != "mode" && key != "points") {
      malformed("model: unknown field '" + key + "'");
    }
  }
  const long half_dim = require_integer(require(doc, "half_dim", "model"), "model.half_dim");
  const json& mode_field = require(doc, "mode", "model");
  if (!mode_field.is_string()) {
    malformed("model.mode: expected \"oriented\" or \"unitary\"");
  }
  const auto mode_name = mode_field.get<std::string>();
  ModelMode mode;
  if (mode_name == "oriented") {
    mode = ModelMode::kOriented;
  } else if (mode_name == "unitary") {
    mode = ModelMode::kUnitary;
  } else {
    malformed("model.mode: expected \"oriented\" or \"unitary\", got \"" + mode_name + "\"");
  }
  const json& points_field = require(doc, "points", "model");
  if (!points_field.is_array()) {
    malformed("model.points: expected an array");
  }
  std::vector<FixedPoint> points;
  for (std::size_t i = 0; i < points_field.size(); ++i) {
    const std::string where = "model.points[" + std::to_string(i) + "]";
    const json& entry = points_field[i];
    FixedPoint point;
    if (entry.is_object() && entry.contains("label")) {
      if (!entry["label"].is_string()) {
        malformed(where + ".label: expected a string");
      }
      point.label = entry["label"].get<std::string>();
    } else {
      point.label = "q" + std::to_string(i);
    }
    const json& weights = require(entry, "weights", where);
    if (!weights.is_array()) {
      malformed(where + ".weights: expected an array of integers");
    }
    for (std::size_t j = 0; j < weights.size(); ++j) {
      point.weights.push_back(
          require_integer(weights[j], where + ".weights[" + std::to_string(j) + "]"));
    }
    point.epsilon =
        static_cast<int>(require_integer(require(entry, "epsilon", where), where + ".epsilon"));
    points.push_back(std::move(point));
  }
  return FixedPointModel(static_cast<int>(half_dim), mode, std::move(points));
}

FixedPointModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    malformed("cannot open model file '" + path.string() + "'");
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    malformed("model file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return model_from_json(doc);
}

json model_to_json(const FixedPointModel& model) {
  json points = json::array();
  for (const auto& point : model.points()) {
    points.push_back(
        {{"label", point.label}, {"weights", point.weights}, {"epsilon", point.epsilon}});
  }
  return {{"half_dim", model.half_dim()}, {"mode", to_string(model.mode())}, {"points", points}};
}

json partition_to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& doc) {
  if (!doc.is_array()) {
    throw Error(ErrorKind::kInvalidArgument, "partition: expected an array of integers");
  }
  std::vector<int> parts;
  for (const auto& part : doc) {
    if (!part.is_number_integer()) {
      throw Error(ErrorKind::kInvalidArgument, "partition: expected an array of integers");
    }
    parts.push_back(part.get<int>());
  }
  return Partition(std::move(parts));
}

json coefficients_to_json(const GenusSpec& genus, int k, const GradedPolynomial& poly) {
  json rows = json::array();
  for (const auto& index : partitions(k)) {
    rows.push_back(
        {{"partition", partition_to_json(index)}, {"value", poly.coefficient(index).to_string()}});
  }
  return {{"schema", kSchemaVersion},
          {"genus", genus.name()},
          {"flavor", to_string(genus.flavor())},
          {"k", k},
          {"coefficients", rows}};
}

json verdict_to_json(const DimensionVerdict& verdict) {
  json witnesses = json::array();
  for (const auto& w : verdict.reason.witnesses) {
    witnesses.push_back({{"partition", partition_to_json(w.index)},
                         {"coefficient", w.coefficient.to_string()},
                         {"nu2", w.valuation.to_string()}});
  }
  json reason = {{"rule", verdict.reason.rule},
                 {"detail", verdict.reason.detail},
                 {"witnesses", witnesses}};
  if (!verdict.reason.citation.empty()) {
    reason["citation"] = verdict.reason.citation;
  }
  return {{"dim", verdict.dim}, {"status", to_string(verdict.status)}, {"reason", reason}};
}

json dim8_solutions_to_json(const std::vector<Dim8Solution>& solutions,
                            const std::vector<UnitaryCandidate>& candidates) {
  json sols = json::array();
  for (const auto& s : solutions) {
    sols.push_back({{"sign", s.sign.get_str()},
                    {"c4", s.c4.get_str()},
                    {"c22", s.c22.get_str()},
                    {"todd", s.todd.get_str()}});
  }
  json cands = json::array();
  for (const auto& c : candidates) {
    cands.push_back({{"sign", c.sign.get_str()},
                     {"c4", c.c_top.get_str()},
                     {"c22", c.c_pair.to_string()},
                     {"todd", c.todd.to_string()},
                     {"integral", c.integral}});
  }
  return {{"schema", kSchemaVersion}, {"solutions", sols}, {"candidates", cands}};
}

json parity_to_json(long chi_minus1, long chi_plus1, std::size_t searched,
                    const std::vector<ParityAssignment>& matches) {
  json rows = json::array();
  for (const auto& a : matches) {
    rows.push_back({{"d", a.d}, {"epsilon", a.epsilon}});
  }
  return {{"schema", kSchemaVersion},
          {"chi_minus1", chi_minus1},
          {"chi_1", chi_plus1},
          {"searched", searched},
          {"assignments", rows}};
}

json unitary_report_to_json(const UnitaryReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    json cands = json::array();
    for (const auto& c : row.candidates) {
      cands.push_back({{"sign", c.sign.get_str()},
                       {"c_top", c.c_top.get_str()},
                       {"c_pair", c.c_pair.to_string()},
                       {"todd", c.todd.to_string()},
                       {"integral", c.integral}});
    }
    json reason = {{"rule", row.reason.rule}, {"detail", row.reason.detail}};
    if (!row.reason.citation.empty()) {
      reason["citation"] = row.reason.citation;
    }
    rows.push_back({{"k", row.k},
                    {"dim", row.dim},
                    {"sign_form", form_to_json(row.sign_form)},
                    {"todd_form", form_to_json(row.todd_form)},
                    {"candidates", cands},
                    {"status", to_string(row.status)},
                    {"reason", reason}});
  }
  return {{"rows", rows}, {"admissible", dims_to_json(report.admissible_dims)}};
}

json theorem_report_to_json(const TheoremReport& report) {
  json oriented = json::array();
  for (const auto& v : report.oriented) {
    oriented.push_back(verdict_to_json(v));
  }
  json spin = json::array();
  for (const auto& v : report.spin) {
    spin.push_back(verdict_to_json(v));
  }
  return {{"schema", kSchemaVersion},
          {"max_dim", report.max_dim},
          {"admissible",
           {{"oriented", dims_to_json(report.oriented_admissible())},
            {"spin", dims_to_json(report.spin_admissible())},
            {"unitary", dims_to_json(report.unitary_admissible())}}},
          {"oriented", oriented},
          {"spin", spin},
          {"unitary", unitary_report_to_json(report.unitary)}};
}

}  // namespace trifix::json_io
