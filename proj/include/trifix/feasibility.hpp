#pragma once

// Dimension restrictions for closed S^1-manifolds with exactly three fixed
// points. Every exclusion carries the exact quantities that produced it;
// exclusions resting on results proved elsewhere are reported as
// kExcludedByCitedResult and never merged with ones computed here.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "trifix/exact_arith.hpp"
#include "trifix/partition.hpp"

namespace trifix {

enum class VerdictStatus { kAdmissible, kExcluded, kExcludedByCitedResult };

const char* to_string(VerdictStatus status);

/// nu2 of one genus coefficient, as used by a valuation filter.
struct ValuationWitness {
  Partition index;
  BigRational coefficient;
  Valuation valuation;
};

struct VerdictReason {
  /// Machine-readable rule id, e.g. "odd-dimension", "signature-valuation".
  std::string rule;
  std::string detail;
  std::vector<ValuationWitness> witnesses;
  /// Bibliographic tag for kExcludedByCitedResult verdicts.
  std::string citation;
};

struct DimensionVerdict {
  int dim = 0;
  VerdictStatus status = VerdictStatus::kAdmissible;
  VerdictReason reason;

  bool admissible() const { return status == VerdictStatus::kAdmissible; }
};

inline constexpr const char* kSpinCitation = "MR3999512, Cor. 19 (via Thm. 18)";
inline constexpr const char* kUnitaryCitation = "hu21, proof of Prop. 3.2";

/// Parity filters, then the signature valuation argument: for dim = 8k+4 the
/// only Pontrjagin number is p_(2k+1), for dim = 8k they are p_(k,k) and
/// p_(2k); sign = +-1 forces some coefficient with nu2 <= 0.
DimensionVerdict oriented_filter(int dim);

/// Dimensions in [4, max_dim] that pass oriented_filter.
std::vector<int> admissible_oriented_dims(int max_dim);

/// {4 * 2^a} u {8 (2^a + 2^b), a != b}, intersected with [4, max_dim].
std::vector<int> oriented_closed_form_dims(int max_dim);

/// Mod-8 signature filter, oriented_filter, then the cited restriction
/// dim / 4 in {2, 4}.
DimensionVerdict spin_filter(int dim);

struct Dim8Solution {
  BigInt sign;
  BigInt c4;
  BigInt c22;
  BigInt todd;

  friend bool operator==(const Dim8Solution&, const Dim8Solution&) = default;
};

/// One candidate (sign, c_{4k}) of the unitary integrality sweep and what
/// became of it.
struct UnitaryCandidate {
  BigInt sign;
  BigInt c_top;
  /// Solved c_{2k,2k} and the resulting Todd genus (exact, maybe fractional).
  BigRational c_pair;
  BigRational todd;
  bool integral = false;
};

/// Sweeps sign in `signs` and c_{4k} in {-3,-1,1,3} for the 8k-dimensional
/// unitary case, solving the signature equation for c_{2k,2k}. Coefficients
/// come from genus_linear_form.
std::vector<UnitaryCandidate> unitary_candidates(int k, const std::vector<long>& signs = {1});

/// Integral solutions of the dimension-8 signature and Todd equations with
/// sign in `signs` and c_4 in {+-1, +-3}.
std::vector<Dim8Solution> dim8_unitary_solve(const std::vector<long>& signs = {1});

struct ParityAssignment {
  std::vector<int> d;
  std::vector<int> epsilon;

  friend bool operator==(const ParityAssignment&, const ParityAssignment&) = default;
  friend auto operator<=>(const ParityAssignment&, const ParityAssignment&) = default;
};

/// All (d_q, epsilon'(q)) with d_q in [0, n], epsilon' = +-1 over
/// `num_points` points such that P(y) = sum epsilon' (-y)^{d_q} equals its
/// mirror sum epsilon' (-y)^{n - d_q}, P(-1) == chi_minus1 and
/// P(1) == chi_plus1. Lexicographic order on (d_1, e_1, d_2, e_2, ...).
std::vector<ParityAssignment> kosniowski_parity_search(int n, int num_points, long chi_minus1,
                                                       long chi_plus1);

/// Number of assignments examined by kosniowski_parity_search.
std::size_t parity_search_space(int n, int num_points);

struct UnitaryRow {
  int k = 0;
  int dim = 0;
  /// Sign and Todd forms over {(2k,2k), (4k)}.
  std::map<Partition, BigRational> sign_form;
  std::map<Partition, BigRational> todd_form;
  std::vector<UnitaryCandidate> candidates;
  VerdictStatus status = VerdictStatus::kAdmissible;
  VerdictReason reason;
};

struct UnitaryReport {
  std::vector<UnitaryRow> rows;
  /// Unitary dims that survive; dim 4 (CP^2) plus surviving 8k rows.
  std::vector<int> admissible_dims;
};

/// Rows for dim = 8k, k = 1 .. max_k.
UnitaryReport unitary_dimension_report(int max_k);

struct TheoremReport {
  int max_dim = 0;
  std::vector<DimensionVerdict> oriented;
  std::vector<DimensionVerdict> spin;
  UnitaryReport unitary;

  std::vector<int> oriented_admissible() const;
  std::vector<int> spin_admissible() const;
  std::vector<int> unitary_admissible() const { return unitary.admissible_dims; }
};

/// Runs all three classes over dims in [1, max_dim]. Throws for max_dim < 16.
TheoremReport verify_theorem(int max_dim);

}  // namespace trifix
