#include "trifix/exact_arith.hpp"

#include <bit>
#include <cctype>
#include <mutex>
#include <utility>

#include "trifix/error.hpp"

namespace trifix {

BigRational::BigRational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

BigRational::BigRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::kInvalidArgument, "rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

BigRational::BigRational(long numerator, long denominator)
    : BigRational(BigInt(numerator), BigInt(denominator)) {}

BigRational BigRational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view digits) {
    std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
    if (digits.size() == start) {
      throw Error(ErrorKind::kInvalidArgument, "not a rational: '" + std::string(text) + "'");
    }
    for (std::size_t i = start; i < digits.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
        throw Error(ErrorKind::kInvalidArgument, "not a rational: '" + std::string(text) + "'");
      }
    }
    std::string owned(digits[0] == '+' ? digits.substr(1) : digits);
    return BigInt(owned, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return BigRational(parse_int(text));
  }
  return BigRational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(value_))); }

BigRational BigRational::pow(unsigned exponent) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return BigRational(num, den);
}

std::string BigRational::to_string() const {
  if (is_integer()) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) {
    throw Error(ErrorKind::kInvalidArgument, "division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const BigRational& value) {
  return os << value.to_string();
}

long Valuation::value() const {
  if (!value_) {
    throw Error(ErrorKind::kInvalidArgument, "value() of infinite valuation");
  }
  return *value_;
}

std::string Valuation::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

std::strong_ordering operator<=>(const Valuation& lhs, const Valuation& rhs) {
  if (lhs.is_infinite() || rhs.is_infinite()) {
    return lhs.is_infinite() <=> rhs.is_infinite();
  }
  return *lhs.value_ <=> *rhs.value_;
}

Valuation operator+(const Valuation& lhs, const Valuation& rhs) {
  if (lhs.is_infinite() || rhs.is_infinite()) {
    return Valuation::infinity();
  }
  return Valuation::finite(*lhs.value_ + *rhs.value_);
}

std::ostream& operator<<(std::ostream& os, const Valuation& value) {
  return os << value.to_string();
}

Valuation nu2(const BigInt& value) {
  if (value == 0) {
    return Valuation::infinity();
  }
  return Valuation::finite(static_cast<long>(mpz_scan1(value.get_mpz_t(), 0)));
}

Valuation nu2(const BigRational& value) {
  if (value.is_zero()) {
    return Valuation::infinity();
  }
  const long num = nu2(value.numerator()).value();
  const long den = nu2(value.denominator()).value();
  return Valuation::finite(num - den);
}

unsigned hamming_weight(std::int64_t x) {
  // Unsigned negation keeps INT64_MIN well defined.
  const auto magnitude = x < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(x)
                               : static_cast<std::uint64_t>(x);
  return static_cast<unsigned>(std::popcount(magnitude));
}

unsigned hamming_weight(const BigInt& x) {
  const BigInt magnitude = ::abs(x);
  return static_cast<unsigned>(mpz_popcount(magnitude.get_mpz_t()));
}

namespace {

struct BernoulliCache {
  std::mutex mutex;
  std::vector<BigRational> values{BigRational(1)};
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace

std::vector<BigRational> bernoulli_table(unsigned n) {
  auto& cache = bernoulli_cache();
  std::lock_guard lock(cache.mutex);
  auto& b = cache.values;
  // (e^s - 1) * sum B_i s^i / i! = s gives sum_{j<=m} C(m+1, j) B_j = 0.
  for (unsigned m = static_cast<unsigned>(b.size()); m <= n; ++m) {
    BigRational acc;
    for (unsigned j = 0; j < m; ++j) {
      acc += binomial(m + 1, j) * b[j];
    }
    b.push_back(-acc / BigRational(static_cast<long>(m) + 1));
  }
  return {b.begin(), b.begin() + n + 1};
}

BigRational bernoulli(unsigned i) { return bernoulli_table(i).back(); }

BigRational binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return BigRational(out);
}

BigRational factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return BigRational(out);
}

BigRational determinant(std::vector<std::vector<BigRational>> matrix) {
  const std::size_t n = matrix.size();
  for (const auto& row : matrix) {
    if (row.size() != n) {
      throw Error(ErrorKind::kInvalidArgument, "determinant of a non-square matrix");
    }
  }
  BigRational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && matrix[pivot][col].is_zero()) {
      ++pivot;
    }
    if (pivot == n) {
      return BigRational(0);
    }
    if (pivot != col) {
      std::swap(matrix[pivot], matrix[col]);
      det = -det;
    }
    det *= matrix[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (matrix[row][col].is_zero()) {
        continue;
      }
      const BigRational factor = matrix[row][col] / matrix[col][col];
      for (std::size_t j = col; j < n; ++j) {
        matrix[row][j] -= factor * matrix[col][j];
      }
    }
  }
  return det;
}

BigRational vandermonde_det(std::span<const BigRational> values) {
  if (values.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "vandermonde_det of an empty list");
  }
  const std::size_t n = values.size();
  std::vector<std::vector<BigRational>> matrix(n, std::vector<BigRational>(n));
  for (std::size_t row = 0; row < n; ++row) {
    BigRational power(1);
    for (std::size_t col = 0; col < n; ++col) {
      matrix[row][col] = power;
      power *= values[row];
    }
  }
  return determinant(std::move(matrix));
}

BigRational vandermonde_product(std::span<const BigRational> values) {
  BigRational product(1);
  for (std::size_t j = 0; j < values.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      product *= values[j] - values[i];
    }
  }
  return product;
}

}  // namespace trifix
