#pragma once

// Multiplicative sequences. A genus is fixed by its characteristic power
// series Q(z) = 1 + q_1 z + q_2 z^2 + ...; the degree-k polynomial K_k is the
// degree-k part of prod_i Q(z_i) rewritten in the elementary symmetric
// functions e_j(z). For the L-genus z_i = x_i^2 and e_j(z) = p_j; for the Todd
// genus z_i = x_i and e_j(z) = c_j.
//
// Two independent routes compute the coefficients:
//   * genus_polynomial: expands every e_mu in the monomial basis and solves
//     the unitriangular change of basis (full table, weights up to ~20).
//   * genus_coefficient: log Q -> power sums -> Newton identities -> exp,
//     carried out in the quotient ring of e-monomials dividing e_I, so a
//     single coefficient of large weight is cheap.

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>

#include "trifix/exact_arith.hpp"
#include "trifix/partition.hpp"
#include "trifix/series.hpp"

namespace trifix {

enum class Flavor { kPontrjagin, kChern };

const char* to_string(Flavor flavor);

class GenusSpec {
 public:
  /// `generator(d)` must return q_0 .. q_d with q_0 == 1.
  using SeriesGenerator = std::function<series::Series(unsigned degree)>;

  GenusSpec(std::string name, Flavor flavor, SeriesGenerator generator);

  /// Q(z) = sqrt(z) / tanh(sqrt(z)), Pontrjagin grading.
  static const GenusSpec& l_genus();
  /// Q(z) = z / (1 - e^{-z}), Chern grading.
  static const GenusSpec& todd();
  /// Looks up "L" or "Todd" (case-insensitive). Throws on anything else.
  static const GenusSpec& by_name(const std::string& name);

  const std::string& name() const { return name_; }
  Flavor flavor() const { return flavor_; }

  BigRational series_coefficient(unsigned j) const;
  /// q_0 .. q_degree.
  series::Series characteristic_series(unsigned degree) const;
  /// Coefficients of log Q(z), l_0 .. l_degree.
  series::Series log_series(unsigned degree) const;

 private:
  friend struct GenusCacheAccess;
  struct Cache;

  std::string name_;
  Flavor flavor_;
  std::shared_ptr<Cache> cache_;
};

/// Sum of coeff(I) * x_I over partitions I of `grade`.
struct GradedPolynomial {
  int grade = 0;
  std::map<Partition, BigRational> terms;

  /// Zero for partitions that are absent.
  BigRational coefficient(const Partition& index) const;
};

/// K_k for `genus`, via the monomial-basis route. Memoized per genus; the
/// cache is safe for concurrent use. Throws for k < 1.
GradedPolynomial genus_polynomial(const GenusSpec& genus, int k);

/// Coefficient of x_I in K_{weight(I)}, via the power-sum route.
BigRational genus_coefficient(const GenusSpec& genus, const Partition& index);

/// L-genus coefficient s_I.
BigRational s_coeff(const Partition& index);
/// Todd-genus coefficient t_I.
BigRational t_coeff(const Partition& index);

/// 2^{2k} (2^{2k-1} - 1) |B_{2k}| / (2k)!, from Bernoulli numbers directly.
BigRational l_single_part_closed_form(int k);
/// (-1)^k B_k / k!.
BigRational todd_single_part_closed_form(int k);

/// Characteristic numbers p_I[M] or c_I[M], all indexed by partitions of
/// `grade`. Missing entries are zero.
class CharNumberVector {
 public:
  CharNumberVector(Flavor flavor, int grade, std::map<Partition, BigInt> entries = {});

  Flavor flavor() const { return flavor_; }
  int grade() const { return grade_; }
  const std::map<Partition, BigInt>& entries() const { return entries_; }

  BigInt at(const Partition& index) const;
  /// Throws if the weight of `index` differs from the grade.
  void set(const Partition& index, BigInt value);

 private:
  Flavor flavor_;
  int grade_;
  std::map<Partition, BigInt> entries_;
};

/// sum_I coeff(I) * numbers[I]. Throws Error(kFlavorMismatch) when the genus
/// and the numbers use different characteristic classes.
BigRational evaluate_genus(const GenusSpec& genus, const CharNumberVector& numbers);

/// The genus of a unitary 4k-manifold whose Chern numbers vanish outside
/// `surviving` (partitions of 2k), as a linear form in the surviving Chern
/// numbers. Pontrjagin-flavoured genera go through chern_to_pontrjagin_forms.
std::map<Partition, BigRational> genus_linear_form(const GenusSpec& genus, int k,
                                                   const std::set<Partition>& surviving);

}  // namespace trifix
