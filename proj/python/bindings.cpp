// Python bindings. Exact values cross the boundary as "p/q" strings; the
// trifix package turns them into fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trifix/error.hpp"
#include "trifix/feasibility.hpp"
#include "trifix/genus.hpp"
#include "trifix/json_io.hpp"
#include "trifix/localization.hpp"

namespace py = pybind11;
using trifix::json_io::json;

namespace {

trifix::FixedPointModel model_from_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw trifix::Error(trifix::ErrorKind::kMalformedModel,
                        std::string("model is not valid JSON: ") + e.what());
  }
  return trifix::json_io::model_from_json(doc);
}

py::dict verdict_dict(const trifix::DimensionVerdict& v) {
  py::list witnesses;
  for (const auto& w : v.reason.witnesses) {
    witnesses.append(py::make_tuple(w.index.parts(), w.coefficient.to_string(),
                                    w.valuation.is_infinite() ? py::object(py::none())
                                                              : py::object(py::int_(w.valuation.value()))));
  }
  py::dict out;
  out["dim"] = v.dim;
  out["status"] = trifix::to_string(v.status);
  out["rule"] = v.reason.rule;
  out["detail"] = v.reason.detail;
  out["citation"] = v.reason.citation;
  out["witnesses"] = witnesses;
  return out;
}

}  // namespace

PYBIND11_MODULE(_trifix, m) {
  m.doc() = "Exact characteristic-number toolkit (native core)";

  static py::exception<trifix::Error> error_type(m, "TrifixError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (const trifix::Error& e) {
      py::set_error(error_type, (std::string(trifix::to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def("bernoulli", [](unsigned i) { return trifix::bernoulli(i).to_string(); }, py::arg("i"));
  m.def(
      "nu2",
      [](const std::string& value) -> py::object {
        const auto v = trifix::nu2(trifix::BigRational::parse(value));
        return v.is_infinite() ? py::object(py::none()) : py::object(py::int_(v.value()));
      },
      py::arg("value"));

  m.def(
      "genus_coefficient",
      [](const std::string& genus, std::vector<int> parts) {
        return trifix::genus_coefficient(trifix::GenusSpec::by_name(genus),
                                         trifix::Partition(std::move(parts)))
            .to_string();
      },
      py::arg("genus"), py::arg("partition"));
  m.def(
      "genus_polynomial",
      [](const std::string& genus, int k) {
        const auto poly = trifix::genus_polynomial(trifix::GenusSpec::by_name(genus), k);
        std::vector<std::pair<std::vector<int>, std::string>> rows;
        for (const auto& index : trifix::partitions(k)) {
          rows.emplace_back(index.parts(), poly.coefficient(index).to_string());
        }
        return rows;
      },
      py::arg("genus"), py::arg("k"));

  m.def("integrate", [](const std::string& model_json, const std::string& class_spec) {
    const auto model = model_from_text(model_json);
    return trifix::integrate(model, trifix::parse_class(model, class_spec)).to_string();
  });
  m.def("signature", [](const std::string& model_json) {
    return trifix::signature_of(model_from_text(model_json));
  });
  m.def("residue_sum", [](const std::string& model_json) {
    return trifix::residue_consistency(model_from_text(model_json)).total.to_string();
  });
  m.def("chi_y", [](const std::string& model_json) {
    return trifix::chi_y(model_from_text(model_json));
  });

  m.def("oriented_filter", [](int dim) { return verdict_dict(trifix::oriented_filter(dim)); });
  m.def("spin_filter", [](int dim) { return verdict_dict(trifix::spin_filter(dim)); });
  m.def("admissible_oriented_dims", &trifix::admissible_oriented_dims, py::arg("max_dim"));
  m.def("dim8_unitary_solve", [](std::vector<long> signs) {
    std::vector<std::tuple<std::string, std::string, std::string, std::string>> out;
    for (const auto& s : trifix::dim8_unitary_solve(signs)) {
      out.emplace_back(s.sign.get_str(), s.c4.get_str(), s.c22.get_str(), s.todd.get_str());
    }
    return out;
  }, py::arg("signs") = std::vector<long>{1});
  m.def(
      "parity_search",
      [](long chi_minus1, long chi_plus1, int n, int points) {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
        for (const auto& a : trifix::kosniowski_parity_search(n, points, chi_minus1, chi_plus1)) {
          out.emplace_back(a.d, a.epsilon);
        }
        return out;
      },
      py::arg("chi_minus1"), py::arg("chi_1"), py::arg("n") = 4, py::arg("points") = 3);
  m.def(
      "verify_json",
      [](int max_dim) {
        return trifix::json_io::theorem_report_to_json(trifix::verify_theorem(max_dim)).dump();
      },
      py::arg("max_dim"));
}
