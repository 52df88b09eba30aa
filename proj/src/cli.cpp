#include "trifix/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <optional>

#include <CLI11.hpp>

#include "trifix/error.hpp"
#include "trifix/feasibility.hpp"
#include "trifix/genus.hpp"
#include "trifix/json_io.hpp"
#include "trifix/localization.hpp"

namespace trifix::cli {

namespace {

using json_io::json;

struct RunConfig {
  bool json_output = false;
  bool meta = false;

  std::string genus = "L";
  int k = 1;

  std::string model_path;
  std::string class_spec;
  bool summary = false;

  int max_dim = 16;
  std::string manifold_class = "oriented";

  long chi_minus1 = 0;
  long chi_plus1 = 0;
  int parity_n = 4;
  int parity_points = 3;
};

std::string join(const std::vector<int>& values) {
  std::string out;
  for (int v : values) {
    out += (out.empty() ? "" : " ") + std::to_string(v);
  }
  return out;
}

json meta_block(const std::vector<std::string>& args) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return {{"tool", "trifix"}, {"version", kVersion}, {"argv", args}, {"time", stamp}};
}

void emit(std::ostream& out, const RunConfig& cfg, json payload,
          const std::vector<std::string>& args) {
  if (cfg.meta) {
    payload["meta"] = meta_block(args);
  }
  out << payload.dump(2) << "\n";
}

void run_coeffs(const RunConfig& cfg, std::ostream& out, const std::vector<std::string>& args) {
  const GenusSpec& genus = GenusSpec::by_name(cfg.genus);
  const auto poly = genus_polynomial(genus, cfg.k);
  if (cfg.json_output) {
    emit(out, cfg, json_io::coefficients_to_json(genus, cfg.k, poly), args);
    return;
  }
  out << genus.name() << " genus, k = " << cfg.k << " (" << to_string(genus.flavor())
      << " classes)\n";
  for (const auto& index : partitions(cfg.k)) {
    out << index << " " << poly.coefficient(index) << "\n";
  }
}

void run_localize(const RunConfig& cfg, std::ostream& out, const std::vector<std::string>& args) {
  if (cfg.class_spec.empty() && !cfg.summary) {
    throw Error(ErrorKind::kInvalidArgument, "localize needs --class SPEC and/or --summary");
  }
  const FixedPointModel model = json_io::load_model(cfg.model_path);
  json payload = {{"schema", json_io::kSchemaVersion},
                  {"half_dim", model.half_dim()},
                  {"mode", to_string(model.mode())}};
  std::optional<BigRational> value;
  if (!cfg.class_spec.empty()) {
    value = integrate(model, parse_class(model, cfg.class_spec));
    payload["class"] = cfg.class_spec;
    payload["value"] = value->to_string();
  }
  ResidueReport residues;
  std::optional<IntPolynomial> chi;
  long signature = 0;
  if (cfg.summary) {
    signature = signature_of(model);
    residues = residue_consistency(model);
    json res = json::array();
    for (const auto& [label, r] : residues.residues) {
      res.push_back({{"label", label}, {"residue", r.to_string()}});
    }
    payload["signature"] = signature;
    payload["residues"] = {
        {"consistent", residues.consistent}, {"total", residues.total.to_string()}, {"points", res}};
    if (model.mode() == ModelMode::kUnitary) {
      chi = chi_y(model);
      payload["chi_y"] = *chi;
      payload["chi_y_text"] = to_string(*chi);
    }
  }
  if (cfg.json_output) {
    emit(out, cfg, std::move(payload), args);
    return;
  }
  if (value && !cfg.summary) {
    out << value->to_string() << "\n";
    return;
  }
  if (value) {
    out << "<" << cfg.class_spec << ", [M]> = " << value->to_string() << "\n";
  }
  out << "signature = " << signature << "\n";
  for (const auto& [label, r] : residues.residues) {
    out << "residue " << label << " = " << r << "\n";
  }
  out << "residue sum = " << residues.total << (residues.consistent ? " (consistent)" : " (INCONSISTENT)")
      << "\n";
  if (chi) {
    out << "chi_y = " << to_string(*chi) << "\n";
  }
}

json filter_payload(const std::string& manifold_class, int max_dim,
                    const std::vector<DimensionVerdict>& verdicts) {
  json rows = json::array();
  std::vector<int> admissible;
  for (const auto& v : verdicts) {
    rows.push_back(json_io::verdict_to_json(v));
    if (v.admissible()) {
      admissible.push_back(v.dim);
    }
  }
  return {{"schema", json_io::kSchemaVersion},
          {"class", manifold_class},
          {"max_dim", max_dim},
          {"admissible", admissible},
          {"verdicts", rows}};
}

void print_verdicts(std::ostream& out, const std::vector<DimensionVerdict>& verdicts) {
  for (const auto& v : verdicts) {
    if (v.dim % 4 != 0) {
      continue;
    }
    out << v.dim << " " << to_string(v.status) << " [" << v.reason.rule << "] "
        << v.reason.detail;
    if (!v.reason.citation.empty()) {
      out << " (cited: " << v.reason.citation << ")";
    }
    out << "\n";
  }
}

void print_unitary(std::ostream& out, const UnitaryReport& report) {
  out << "4 admissible [realized] CP^2\n";
  for (const auto& row : report.rows) {
    out << row.dim << " " << to_string(row.status) << " [" << row.reason.rule << "] "
        << row.reason.detail;
    if (!row.reason.citation.empty()) {
      out << " (cited: " << row.reason.citation << ")";
    }
    out << "\n";
  }
}

void run_feasible(const RunConfig& cfg, std::ostream& out, const std::vector<std::string>& args) {
  if (cfg.max_dim < 4) {
    throw Error(ErrorKind::kInvalidArgument, "--max-dim must be at least 4");
  }
  if (cfg.manifold_class == "unitary") {
    const auto report = unitary_dimension_report(std::max(1, cfg.max_dim / 8));
    if (cfg.json_output) {
      json payload = json_io::unitary_report_to_json(report);
      payload["schema"] = json_io::kSchemaVersion;
      payload["class"] = "unitary";
      payload["max_dim"] = cfg.max_dim;
      emit(out, cfg, std::move(payload), args);
      return;
    }
    print_unitary(out, report);
    out << "admissible: " << join(report.admissible_dims) << "\n";
    return;
  }
  std::vector<DimensionVerdict> verdicts;
  for (int dim = 1; dim <= cfg.max_dim; ++dim) {
    verdicts.push_back(cfg.manifold_class == "spin" ? spin_filter(dim) : oriented_filter(dim));
  }
  if (cfg.json_output) {
    emit(out, cfg, filter_payload(cfg.manifold_class, cfg.max_dim, verdicts), args);
    return;
  }
  print_verdicts(out, verdicts);
  std::vector<int> admissible;
  for (const auto& v : verdicts) {
    if (v.admissible()) {
      admissible.push_back(v.dim);
    }
  }
  out << "admissible: " << join(admissible) << "\n";
}

void run_solve_dim8(const RunConfig& cfg, std::ostream& out,
                    const std::vector<std::string>& args) {
  const auto candidates = unitary_candidates(1);
  const auto solutions = dim8_unitary_solve();
  if (cfg.json_output) {
    emit(out, cfg, json_io::dim8_solutions_to_json(solutions, candidates), args);
    return;
  }
  out << "sign c4 c22 todd integral\n";
  for (const auto& c : candidates) {
    out << c.sign.get_str() << " " << c.c_top.get_str() << " " << c.c_pair << " " << c.todd
        << " " << (c.integral ? "yes" : "no") << "\n";
  }
  out << "solutions: " << solutions.size() << "\n";
  for (const auto& s : solutions) {
    out << "sign = " << s.sign.get_str() << ", c4 = " << s.c4.get_str()
        << ", c22 = " << s.c22.get_str() << ", td = " << s.todd.get_str() << "\n";
  }
}

void run_parity(const RunConfig& cfg, std::ostream& out, const std::vector<std::string>& args) {
  const auto matches =
      kosniowski_parity_search(cfg.parity_n, cfg.parity_points, cfg.chi_minus1, cfg.chi_plus1);
  const auto searched = parity_search_space(cfg.parity_n, cfg.parity_points);
  if (cfg.json_output) {
    emit(out, cfg, json_io::parity_to_json(cfg.chi_minus1, cfg.chi_plus1, searched, matches), args);
    return;
  }
  out << "searched " << searched << " assignments, " << matches.size() << " match\n";
  for (const auto& a : matches) {
    out << "d =";
    for (int d : a.d) {
      out << " " << d;
    }
    out << "; epsilon =";
    for (int e : a.epsilon) {
      out << " " << (e > 0 ? "+1" : "-1");
    }
    out << "\n";
  }
}

void run_verify(const RunConfig& cfg, std::ostream& out, const std::vector<std::string>& args) {
  const auto report = verify_theorem(cfg.max_dim);
  if (cfg.json_output) {
    emit(out, cfg, json_io::theorem_report_to_json(report), args);
    return;
  }
  out << "oriented: " << join(report.oriented_admissible()) << "\n";
  out << "spin: " << join(report.spin_admissible()) << "\n";
  out << "unitary: " << join(report.unitary_admissible()) << "\n";
}

void print_error(std::ostream& err, const std::string& kind, const std::string& message,
                 const std::string& where) {
  json body = {{"kind", kind}, {"message", message}};
  if (!where.empty()) {
    body["where"] = where;
  }
  err << json{{"error", body}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app("Exact characteristic-number toolkit for circle actions with three fixed points",
               "trifix");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--meta", cfg.meta, "Attach run metadata (version, argv, time) to JSON output");

  auto* coeffs = app.add_subcommand("coeffs", "Coefficient table of a genus polynomial");
  coeffs->add_option("--genus", cfg.genus, "L or Todd")->required();
  coeffs->add_option("--k", cfg.k, "Degree (partitions of k)")->required()->check(CLI::Range(1, 40));
  coeffs->add_flag("--json", cfg.json_output);

  auto* localize = app.add_subcommand("localize", "Integrate a class over a fixed-point model");
  localize->add_option("--model", cfg.model_path, "Model JSON file")->required();
  localize->add_option("--class", cfg.class_spec, "t^k, p<j>, euler, or a '*' product");
  localize->add_flag("--summary", cfg.summary, "Signature, residue check and chi_y");
  localize->add_flag("--json", cfg.json_output);

  auto* feasible = app.add_subcommand("feasible", "Dimension filter for one manifold class");
  feasible->add_option("--max-dim", cfg.max_dim)->required()->check(CLI::Range(4, 4096));
  feasible->add_option("--class", cfg.manifold_class)
      ->check(CLI::IsMember({"oriented", "spin", "unitary"}));
  feasible->add_flag("--json", cfg.json_output);

  auto* solve = app.add_subcommand("solve-dim8", "Integral solutions in dimension 8 (unitary)");
  solve->add_flag("--json", cfg.json_output);

  auto* parity = app.add_subcommand("parity-search", "Exhaustive chi_y parity search");
  parity->add_option("--chi-neg1", cfg.chi_minus1, "Required value at y = -1")->required();
  parity->add_option("--chi-1", cfg.chi_plus1, "Required value at y = 1")->required();
  parity->add_option("--n", cfg.parity_n, "Complex dimension")->check(CLI::Range(0, 8));
  parity->add_option("--points", cfg.parity_points, "Number of fixed points")
      ->check(CLI::Range(1, 4));
  parity->add_flag("--json", cfg.json_output);

  auto* verify = app.add_subcommand("verify", "Admissible dimensions for all three classes");
  verify->add_option("--max-dim", cfg.max_dim)->required()->check(CLI::Range(16, 4096));
  verify->add_flag("--json", cfg.json_output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    print_error(err, "usage", e.what(), "");
    return 2;
  }

  try {
    if (coeffs->parsed()) {
      run_coeffs(cfg, out, args);
    } else if (localize->parsed()) {
      run_localize(cfg, out, args);
    } else if (feasible->parsed()) {
      run_feasible(cfg, out, args);
    } else if (solve->parsed()) {
      run_solve_dim8(cfg, out, args);
    } else if (parity->parsed()) {
      run_parity(cfg, out, args);
    } else if (verify->parsed()) {
      run_verify(cfg, out, args);
    }
  } catch (const Error& e) {
    print_error(err, to_string(e.kind()), e.what(), e.location());
    return 2;
  }
  return 0;
}

}  // namespace trifix::cli
