#pragma once

// Characteristic numbers of a circle action with isolated fixed points, from
// the weight data at the fixed points alone. Every class here is a single
// pure-degree element a_q * t^m of H^*(BS^1) = Q[t] at each fixed point q;
// the cohomological degree is 2m.

#include <string>
#include <vector>

#include "trifix/exact_arith.hpp"

namespace trifix {

enum class ModelMode { kOriented, kUnitary };

const char* to_string(ModelMode mode);

struct FixedPoint {
  std::string label;
  /// Oriented mode: positive magnitudes mu_i. Unitary mode: signed mu'_i.
  std::vector<long> weights;
  /// epsilon(q) in oriented mode, epsilon'(q) in unitary mode.
  int epsilon = 1;
};

class FixedPointModel {
 public:
  /// Validates the invariants (n weights per point, none zero, epsilon = +-1).
  /// Oriented-mode input may carry signed weights; they are normalized to
  /// magnitudes with epsilon flipped once per negative weight.
  FixedPointModel(int half_dim, ModelMode mode, std::vector<FixedPoint> points);

  int half_dim() const { return half_dim_; }
  ModelMode mode() const { return mode_; }
  const std::vector<FixedPoint>& points() const { return points_; }

  /// Oriented model of a unitary one: weight magnitudes, epsilon' flipped
  /// once per negative weight. Identity on oriented models.
  FixedPointModel to_oriented() const;

 private:
  int half_dim_;
  ModelMode mode_;
  std::vector<FixedPoint> points_;
};

/// Per-point values a_q of a class a_q * t^{t_exponent}.
struct EquivariantClassAssignment {
  int t_exponent = 0;
  std::vector<BigRational> values;

  int degree() const { return 2 * t_exponent; }
};

/// prod |mu_i|; the t^n factor of e(q) is carried by the grading.
BigInt euler_product(const FixedPoint& point);

/// Coefficient of t^{2j} in the restriction of the equivariant p_j:
/// e_j(mu_1^2, ..., mu_n^2). Throws unless 1 <= j <= n.
BigInt pontrjagin_restriction(const FixedPoint& point, int j);

/// sum_q a_q epsilon(q) / euler_product(q). Throws Error(kDegreeMismatch)
/// unless the class has top degree 2n, and on a point count mismatch.
BigRational integrate(const FixedPointModel& model, const EquivariantClassAssignment& cls);

/// Class builders over a model.
EquivariantClassAssignment t_power_class(const FixedPointModel& model, int exponent);
EquivariantClassAssignment pontrjagin_class(const FixedPointModel& model, int j);
/// Restriction epsilon(q) * e(q), integrating to the number of fixed points.
EquivariantClassAssignment euler_class(const FixedPointModel& model);
EquivariantClassAssignment product(const EquivariantClassAssignment& a,
                                   const EquivariantClassAssignment& b);

/// Parses a product of factors separated by '*': "t", "t^k", "p<j>",
/// "euler". For example "p1", "p1*p1", "t^2".
EquivariantClassAssignment parse_class(const FixedPointModel& model, const std::string& spec);

/// sum_q epsilon(q). Oriented models only (unitary models are converted).
long signature_of(const FixedPointModel& model);

/// Integer polynomial in y, coefficient of y^i at index i.
using IntPolynomial = std::vector<long>;

/// Which weights d_q counts at each fixed point.
enum class DqConvention { kPositiveWeights, kNegativeWeights };

/// sum_q epsilon'(q) (-y)^{d_q}, d_q = number of positive weights at q by
/// default. Unitary models only.
IntPolynomial chi_y(const FixedPointModel& model,
                    DqConvention convention = DqConvention::kPositiveWeights);

BigInt evaluate(const IntPolynomial& poly, long y);
std::string to_string(const IntPolynomial& poly);

struct ResidueReport {
  bool consistent = false;
  BigRational total;
  /// epsilon(q) / euler_product(q), in point order.
  std::vector<std::pair<std::string, BigRational>> residues;
};

/// Checks sum_q epsilon(q) / euler_product(q) == 0, the integral of t^n.
ResidueReport residue_consistency(const FixedPointModel& model);

}  // namespace trifix
