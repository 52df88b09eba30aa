#include "trifix/series.hpp"

#include <algorithm>

#include "trifix/error.hpp"

namespace trifix::series {

Series exp_series(unsigned n, const BigRational& scale) {
  Series out(n + 1);
  BigRational term(1);
  for (unsigned j = 0; j <= n; ++j) {
    out[j] = term;
    term *= scale / BigRational(static_cast<long>(j) + 1);
  }
  return out;
}

Series multiply(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.size(), b.size());
  Series out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; i + j < n; ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Series divide(const Series& a, const Series& b) {
  if (b.empty() || b[0].is_zero()) {
    throw Error(ErrorKind::kInvalidArgument, "series division by a non-unit");
  }
  const std::size_t n = std::min(a.size(), b.size());
  Series out(n);
  for (std::size_t m = 0; m < n; ++m) {
    BigRational acc = a[m];
    for (std::size_t j = 1; j <= m; ++j) {
      if (!b[j].is_zero()) {
        acc -= b[j] * out[m - j];
      }
    }
    out[m] = acc / b[0];
  }
  return out;
}

Series log(const Series& a) {
  if (a.empty() || a[0] != BigRational(1)) {
    throw Error(ErrorKind::kInvalidArgument, "series log needs constant term 1");
  }
  // x L' = x A' / A, coefficientwise: m l_m = m a_m - sum_{i<m} i l_i a_{m-i}.
  const std::size_t n = a.size();
  Series out(n);
  for (std::size_t m = 1; m < n; ++m) {
    BigRational acc = BigRational(static_cast<long>(m)) * a[m];
    for (std::size_t i = 1; i < m; ++i) {
      if (!out[i].is_zero() && !a[m - i].is_zero()) {
        acc -= BigRational(static_cast<long>(i)) * out[i] * a[m - i];
      }
    }
    out[m] = acc / BigRational(static_cast<long>(m));
  }
  return out;
}

Series exp(const Series& a) {
  if (!a.empty() && !a[0].is_zero()) {
    throw Error(ErrorKind::kInvalidArgument, "series exp needs constant term 0");
  }
  // x E' = (x A') E: m e_m = sum_{j=1..m} j a_j e_{m-j}.
  const std::size_t n = a.size();
  Series out(n);
  if (n == 0) {
    return out;
  }
  out[0] = BigRational(1);
  for (std::size_t m = 1; m < n; ++m) {
    BigRational acc;
    for (std::size_t j = 1; j <= m; ++j) {
      if (!a[j].is_zero()) {
        acc += BigRational(static_cast<long>(j)) * a[j] * out[m - j];
      }
    }
    out[m] = acc / BigRational(static_cast<long>(m));
  }
  return out;
}

Series shift_down(const Series& a, unsigned count) {
  if (a.size() < count) {
    throw Error(ErrorKind::kInvalidArgument, "series too short to shift");
  }
  for (unsigned j = 0; j < count; ++j) {
    if (!a[j].is_zero()) {
      throw Error(ErrorKind::kInvalidArgument, "series not divisible by x^count");
    }
  }
  return Series(a.begin() + count, a.end());
}

Series even_part(const Series& a) {
  Series out;
  for (std::size_t j = 0; j < a.size(); j += 2) {
    out.push_back(a[j]);
  }
  return out;
}

}  // namespace trifix::series
