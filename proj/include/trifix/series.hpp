#pragma once

// Truncated formal power series over the rationals. A series is stored as
// its coefficient vector c_0 .. c_n; every operation keeps the length of its
// inputs (truncation at x^n).

#include <vector>

#include "trifix/exact_arith.hpp"

namespace trifix::series {

using Series = std::vector<BigRational>;

/// sum_{j<=n} (scale x)^j / j!
Series exp_series(unsigned n, const BigRational& scale = BigRational(1));

Series multiply(const Series& a, const Series& b);

/// a / b. Throws unless b_0 != 0. Result has min(len a, len b) terms.
Series divide(const Series& a, const Series& b);

/// log(a) for a_0 == 1.
Series log(const Series& a);

/// exp(a) for a_0 == 0.
Series exp(const Series& a);

/// Drop the leading `count` coefficients (division by x^count). Throws if
/// any dropped coefficient is nonzero.
Series shift_down(const Series& a, unsigned count);

/// Coefficients of the even powers: b_j = a_{2j}.
Series even_part(const Series& a);

}  // namespace trifix::series
