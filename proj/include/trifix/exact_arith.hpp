#pragma once

// Exact rational scalars and the small number-theoretic helpers the
// feasibility filters are built from. Nothing in this library touches
// floating point.

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace trifix {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (zero is 0/1).
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT: implicit by design of arithmetic
  BigRational(int value) : value_(value) {}   // NOLINT
  BigRational(const BigInt& value) : value_(value) {}  // NOLINT
  BigRational(const BigInt& numerator, const BigInt& denominator);
  BigRational(long numerator, long denominator);

  /// Parses "p", "-p" or "p/q". Throws Error(kInvalidArgument) on bad input
  /// or a zero denominator.
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  BigRational abs() const;
  BigRational pow(unsigned exponent) const;

  /// "p/q", or "p" when q == 1.
  std::string to_string() const;

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& lhs, const BigRational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigRational& lhs, const BigRational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit BigRational(mpq_class value);

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& value);

/// Extended 2-adic valuation: an integer, or infinity for the value 0.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  static Valuation finite(long value) { return Valuation(value); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Precondition: !is_infinite().
  long value() const;

  std::string to_string() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& lhs, const Valuation& rhs);
  friend Valuation operator+(const Valuation& lhs, const Valuation& rhs);

 private:
  Valuation() = default;
  explicit Valuation(long value) : value_(value) {}

  std::optional<long> value_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& value);

Valuation nu2(const BigInt& value);
Valuation nu2(const BigRational& value);

/// Number of ones in the binary expansion of |x|.
unsigned hamming_weight(std::int64_t x);
unsigned hamming_weight(const BigInt& x);

/// B_i with the generating function s/(e^s - 1), so B_1 = -1/2. Note that
/// some references use B_1 = +1/2; only B_1 differs between the two.
BigRational bernoulli(unsigned i);

/// B_0 .. B_n in one vector.
std::vector<BigRational> bernoulli_table(unsigned n);

BigRational binomial(unsigned n, unsigned k);
BigRational factorial(unsigned n);

/// det(values_n^(j-1)), by elimination on the assembled matrix.
/// Precondition: values nonempty.
BigRational vandermonde_det(std::span<const BigRational> values);

/// prod_{i<j} (values_j - values_i).
BigRational vandermonde_product(std::span<const BigRational> values);

/// Determinant of a square matrix by exact Gaussian elimination.
BigRational determinant(std::vector<std::vector<BigRational>> matrix);

}  // namespace trifix
