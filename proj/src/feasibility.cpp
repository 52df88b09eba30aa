#include "trifix/feasibility.hpp"

#include <algorithm>

#include "trifix/error.hpp"
#include "trifix/genus.hpp"

namespace trifix {

const char* to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kAdmissible:
      return "admissible";
    case VerdictStatus::kExcluded:
      return "excluded";
    case VerdictStatus::kExcludedByCitedResult:
      return "excluded-by-cited-result";
  }
  return "unknown";
}

namespace {

ValuationWitness witness_for(const Partition& index) {
  BigRational coefficient = s_coeff(index);
  Valuation valuation = nu2(coefficient);
  return {index, std::move(coefficient), valuation};
}

std::string describe(const ValuationWitness& w) {
  return "nu2(s_" + w.index.to_string() + ") = " + w.valuation.to_string();
}

}  // namespace

DimensionVerdict oriented_filter(int dim) {
  if (dim <= 0) {
    throw Error(ErrorKind::kInvalidArgument, "dimension must be positive");
  }
  DimensionVerdict verdict{dim, VerdictStatus::kExcluded, {}};
  if (dim % 2 != 0) {
    verdict.reason = {"odd-dimension",
                      "isolated fixed points only occur in even dimensions", {}, ""};
    return verdict;
  }
  if (dim % 4 != 0) {
    verdict.reason = {"signature-parity",
                      "sign(M) = 3 mod 2 is nonzero, so dim M = 0 mod 4", {}, ""};
    return verdict;
  }

  // sign(M) = +-1 is a sum of s_I p_I[M] with integral p_I[M], so some
  // surviving coefficient must have nu2 <= 0.
  std::vector<ValuationWitness> witnesses;
  if (dim % 8 == 4) {
    const int weight = dim / 4;
    witnesses.push_back(witness_for(Partition{weight}));
  } else {
    const int k = dim / 8;
    witnesses.push_back(witness_for(Partition{2 * k}));
    witnesses.push_back(witness_for(Partition{k, k}));
  }
  const auto best = std::min_element(
      witnesses.begin(), witnesses.end(),
      [](const auto& a, const auto& b) { return a.valuation < b.valuation; });

  std::string detail;
  for (const auto& w : witnesses) {
    detail += (detail.empty() ? "" : ", ") + describe(w);
  }
  if (best->valuation <= Valuation::finite(0)) {
    verdict.status = VerdictStatus::kAdmissible;
    verdict.reason = {"signature-valuation", detail + "; some coefficient has nu2 <= 0",
                      std::move(witnesses), ""};
  } else {
    verdict.reason = {"signature-valuation",
                      detail + "; all > 0, so nu2(sign(M)) > 0 contradicts sign(M) = +-1",
                      std::move(witnesses), ""};
  }
  return verdict;
}

std::vector<int> admissible_oriented_dims(int max_dim) {
  if (max_dim < 4) {
    throw Error(ErrorKind::kInvalidArgument, "admissible_oriented_dims needs max_dim >= 4");
  }
  std::vector<int> out;
  for (int dim = 4; dim <= max_dim; dim += 4) {
    if (oriented_filter(dim).admissible()) {
      out.push_back(dim);
    }
  }
  return out;
}

std::vector<int> oriented_closed_form_dims(int max_dim) {
  std::set<long> dims;
  for (long a = 0; (4L << a) <= max_dim; ++a) {
    dims.insert(4L << a);
  }
  for (long a = 0; (8L << a) <= max_dim; ++a) {
    for (long b = a + 1; 8L * ((1L << a) + (1L << b)) <= max_dim; ++b) {
      dims.insert(8L * ((1L << a) + (1L << b)));
    }
  }
  return {dims.begin(), dims.end()};
}

DimensionVerdict spin_filter(int dim) {
  if (dim <= 0) {
    throw Error(ErrorKind::kInvalidArgument, "dimension must be positive");
  }
  if (dim % 4 != 0) {
    return oriented_filter(dim);
  }
  if (dim % 8 == 4) {
    return {dim,
            VerdictStatus::kExcluded,
            {"spin-signature-mod-8",
             "dim M = 4 mod 8 and M spin: the intersection form is even, so 8 | sign(M), "
             "contradicting sign(M) = +-1",
             {},
             ""}};
  }
  DimensionVerdict oriented = oriented_filter(dim);
  if (!oriented.admissible()) {
    return oriented;
  }
  const int k = dim / 4;
  if (k == 2 || k == 4) {
    oriented.reason.detail += "; dim/4 in {2, 4}";
    return oriented;
  }
  return {dim,
          VerdictStatus::kExcludedByCitedResult,
          {"spin-cited-restriction",
           "passes the mod-8 and valuation filters; only p_(k/2,k/2), p_(k) nonzero and "
           "sign = +-1 force k in {2, 4}, here k = " +
               std::to_string(k),
           std::move(oriented.reason.witnesses),
           kSpinCitation}};
}

std::vector<UnitaryCandidate> unitary_candidates(int k, const std::vector<long>& signs) {
  if (k < 1) {
    throw Error(ErrorKind::kInvalidArgument, "unitary_candidates needs k >= 1");
  }
  const Partition pair{2 * k, 2 * k};
  const Partition top{4 * k};
  const std::set<Partition> surviving{pair, top};
  const auto sign_form = genus_linear_form(GenusSpec::l_genus(), 2 * k, surviving);
  const auto todd_form = genus_linear_form(GenusSpec::todd(), 2 * k, surviving);
  const BigRational& alpha = sign_form.at(pair);
  const BigRational& beta = sign_form.at(top);
  if (alpha.is_zero()) {
    throw Error(ErrorKind::kInvalidArgument, "signature form does not involve c_(2k,2k)");
  }

  std::vector<UnitaryCandidate> out;
  for (long sign : signs) {
    for (long c_top : {-3L, -1L, 1L, 3L}) {
      UnitaryCandidate cand;
      cand.sign = sign;
      cand.c_top = c_top;
      cand.c_pair = (BigRational(sign) - beta * BigRational(c_top)) / alpha;
      cand.todd = todd_form.at(pair) * cand.c_pair + todd_form.at(top) * BigRational(c_top);
      cand.integral = cand.c_pair.is_integer() && cand.todd.is_integer();
      out.push_back(std::move(cand));
    }
  }
  return out;
}

std::vector<Dim8Solution> dim8_unitary_solve(const std::vector<long>& signs) {
  std::vector<Dim8Solution> out;
  for (const auto& cand : unitary_candidates(1, signs)) {
    if (cand.integral) {
      out.push_back({cand.sign, cand.c_top, cand.c_pair.numerator(), cand.todd.numerator()});
    }
  }
  return out;
}

std::size_t parity_search_space(int n, int num_points) {
  std::size_t total = 1;
  for (int i = 0; i < num_points; ++i) {
    total *= static_cast<std::size_t>(2 * (n + 1));
  }
  return total;
}

std::vector<ParityAssignment> kosniowski_parity_search(int n, int num_points, long chi_minus1,
                                                       long chi_plus1) {
  if (n < 0 || num_points < 1) {
    throw Error(ErrorKind::kInvalidArgument, "parity search needs n >= 0 and num_points >= 1");
  }
  std::vector<ParityAssignment> out;
  // Odometer over (d_q, e_q) pairs; choice c in [0, 2(n+1)) maps to
  // d = c / 2 and epsilon = -1 for even c, +1 for odd c.
  const int base = 2 * (n + 1);
  std::vector<int> digits(static_cast<std::size_t>(num_points), 0);
  const std::size_t total = parity_search_space(n, num_points);
  for (std::size_t step = 0; step < total; ++step) {
    ParityAssignment a;
    for (int c : digits) {
      a.d.push_back(c / 2);
      a.epsilon.push_back(c % 2 == 0 ? -1 : 1);
    }
    std::vector<long> poly(static_cast<std::size_t>(n) + 1, 0);
    std::vector<long> mirror(static_cast<std::size_t>(n) + 1, 0);
    long at_minus1 = 0;
    long at_plus1 = 0;
    for (std::size_t q = 0; q < a.d.size(); ++q) {
      const int d = a.d[q];
      const int e = a.epsilon[q];
      poly[static_cast<std::size_t>(d)] += (d % 2 == 0 ? 1 : -1) * e;
      mirror[static_cast<std::size_t>(n - d)] += ((n - d) % 2 == 0 ? 1 : -1) * e;
      at_minus1 += e;
      at_plus1 += (d % 2 == 0 ? 1 : -1) * e;
    }
    if (poly == mirror && at_minus1 == chi_minus1 && at_plus1 == chi_plus1) {
      out.push_back(std::move(a));
    }
    for (std::size_t pos = digits.size(); pos-- > 0;) {
      if (++digits[pos] < base) {
        break;
      }
      digits[pos] = 0;
    }
  }
  return out;
}

UnitaryReport unitary_dimension_report(int max_k) {
  if (max_k < 1) {
    throw Error(ErrorKind::kInvalidArgument, "unitary_dimension_report needs max_k >= 1");
  }
  UnitaryReport report;
  report.admissible_dims.push_back(4);
  for (int k = 1; k <= max_k; ++k) {
    UnitaryRow row;
    row.k = k;
    row.dim = 8 * k;
    const std::set<Partition> surviving{Partition{2 * k, 2 * k}, Partition{4 * k}};
    row.sign_form = genus_linear_form(GenusSpec::l_genus(), 2 * k, surviving);
    row.todd_form = genus_linear_form(GenusSpec::todd(), 2 * k, surviving);
    row.candidates = unitary_candidates(k);

    std::vector<const UnitaryCandidate*> integral;
    for (const auto& cand : row.candidates) {
      if (cand.integral) {
        integral.push_back(&cand);
      }
    }

    const DimensionVerdict oriented = oriented_filter(row.dim);
    if (!oriented.admissible()) {
      row.status = oriented.status;
      row.reason = oriented.reason;
      row.reason.detail = "oriented filter: " + row.reason.detail;
    } else if (integral.empty()) {
      row.status = VerdictStatus::kExcluded;
      row.reason = {"no-integral-solution",
                    "no (sign, c_top) candidate gives integral c_(2k,2k) and Todd genus", {}, ""};
    } else if (k == 1) {
      // chi_{-1} = c_4[M] and chi_1 = sign(M) for the parity search.
      bool any_survives = false;
      std::string detail;
      for (const auto* cand : integral) {
        const auto matches = kosniowski_parity_search(4, 3, cand->c_top.get_si(),
                                                      cand->sign.get_si());
        any_survives = any_survives || !matches.empty();
        detail += (detail.empty() ? "" : "; ") + std::string("candidate (sign, c4, c22, td) = (") +
                  cand->sign.get_str() + ", " + cand->c_top.get_str() + ", " +
                  cand->c_pair.to_string() + ", " + cand->todd.to_string() + "): " +
                  std::to_string(matches.size()) + " chi_y parity assignments of " +
                  std::to_string(parity_search_space(4, 3));
      }
      row.status = any_survives ? VerdictStatus::kAdmissible : VerdictStatus::kExcluded;
      row.reason = {"kosniowski-parity", detail, {}, ""};
    } else {
      row.status = VerdictStatus::kExcludedByCitedResult;
      row.reason = {"unitary-cited-restriction",
                    std::to_string(integral.size()) +
                        " integral candidate(s) remain; no 8k-dimensional unitary manifold "
                        "with these Chern-number constraints exists for k >= 2",
                    {},
                    kUnitaryCitation};
    }
    if (row.status == VerdictStatus::kAdmissible) {
      report.admissible_dims.push_back(row.dim);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<int> TheoremReport::oriented_admissible() const {
  std::vector<int> out;
  for (const auto& v : oriented) {
    if (v.admissible()) {
      out.push_back(v.dim);
    }
  }
  return out;
}

std::vector<int> TheoremReport::spin_admissible() const {
  std::vector<int> out;
  for (const auto& v : spin) {
    if (v.admissible()) {
      out.push_back(v.dim);
    }
  }
  return out;
}

TheoremReport verify_theorem(int max_dim) {
  if (max_dim < 16) {
    throw Error(ErrorKind::kInvalidArgument, "verify_theorem needs max_dim >= 16");
  }
  TheoremReport report;
  report.max_dim = max_dim;
  for (int dim = 1; dim <= max_dim; ++dim) {
    report.oriented.push_back(oriented_filter(dim));
    report.spin.push_back(spin_filter(dim));
  }
  report.unitary = unitary_dimension_report(max_dim / 8);
  return report;
}

}  // namespace trifix
