#include "trifix/localization.hpp"

#include <cctype>
#include <cstdlib>

#include "trifix/error.hpp"

namespace trifix {

const char* to_string(ModelMode mode) {
  return mode == ModelMode::kOriented ? "oriented" : "unitary";
}

FixedPointModel::FixedPointModel(int half_dim, ModelMode mode, std::vector<FixedPoint> points)
    : half_dim_(half_dim), mode_(mode), points_(std::move(points)) {
  if (half_dim_ < 1) {
    throw Error(ErrorKind::kMalformedModel, "half_dim must be positive");
  }
  for (auto& point : points_) {
    if (point.weights.size() != static_cast<std::size_t>(half_dim_)) {
      throw Error(ErrorKind::kMalformedModel,
                  "fixed point '" + point.label + "' has " + std::to_string(point.weights.size()) +
                      " weights, expected " + std::to_string(half_dim_));
    }
    if (point.epsilon != 1 && point.epsilon != -1) {
      throw Error(ErrorKind::kMalformedModel,
                  "fixed point '" + point.label + "' has epsilon " +
                      std::to_string(point.epsilon) + ", expected 1 or -1");
    }
    for (auto& weight : point.weights) {
      if (weight == 0) {
        throw Error(ErrorKind::kMalformedModel,
                    "fixed point '" + point.label + "' has a zero weight (not isolated)");
      }
      if (mode_ == ModelMode::kOriented && weight < 0) {
        weight = -weight;
        point.epsilon = -point.epsilon;
      }
    }
  }
}

FixedPointModel FixedPointModel::to_oriented() const {
  if (mode_ == ModelMode::kOriented) {
    return *this;
  }
  return FixedPointModel(half_dim_, ModelMode::kOriented, points_);
}

BigInt euler_product(const FixedPoint& point) {
  BigInt product = 1;
  for (long weight : point.weights) {
    product *= std::labs(weight);
  }
  return product;
}

BigInt pontrjagin_restriction(const FixedPoint& point, int j) {
  const int n = static_cast<int>(point.weights.size());
  if (j < 1 || j > n) {
    throw Error(ErrorKind::kInvalidArgument, "pontrjagin_restriction needs 1 <= j <= " +
                                                 std::to_string(n) + ", got " +
                                                 std::to_string(j));
  }
  // elementary[i] = e_i of the squares seen so far.
  std::vector<BigInt> elementary(static_cast<std::size_t>(j) + 1, BigInt(0));
  elementary[0] = 1;
  for (long weight : point.weights) {
    const BigInt square = BigInt(weight) * weight;
    for (int i = j; i >= 1; --i) {
      elementary[static_cast<std::size_t>(i)] += square * elementary[static_cast<std::size_t>(i - 1)];
    }
  }
  return elementary[static_cast<std::size_t>(j)];
}

BigRational integrate(const FixedPointModel& model, const EquivariantClassAssignment& cls) {
  if (cls.degree() != 2 * model.half_dim()) {
    throw Error(ErrorKind::kDegreeMismatch,
                "class of degree " + std::to_string(cls.degree()) +
                    " cannot be integrated over a manifold of dimension " +
                    std::to_string(2 * model.half_dim()));
  }
  if (cls.values.size() != model.points().size()) {
    throw Error(ErrorKind::kInvalidArgument, "class has " + std::to_string(cls.values.size()) +
                                                 " restrictions for " +
                                                 std::to_string(model.points().size()) +
                                                 " fixed points");
  }
  const FixedPointModel oriented = model.to_oriented();
  BigRational total;
  for (std::size_t i = 0; i < cls.values.size(); ++i) {
    const auto& point = oriented.points()[i];
    total += cls.values[i] * BigRational(point.epsilon) / BigRational(euler_product(point));
  }
  return total;
}

EquivariantClassAssignment t_power_class(const FixedPointModel& model, int exponent) {
  if (exponent < 0) {
    throw Error(ErrorKind::kInvalidArgument, "negative power of t");
  }
  return {exponent, std::vector<BigRational>(model.points().size(), BigRational(1))};
}

EquivariantClassAssignment pontrjagin_class(const FixedPointModel& model, int j) {
  EquivariantClassAssignment cls{2 * j, {}};
  for (const auto& point : model.points()) {
    cls.values.emplace_back(pontrjagin_restriction(point, j));
  }
  return cls;
}

EquivariantClassAssignment euler_class(const FixedPointModel& model) {
  const FixedPointModel oriented = model.to_oriented();
  EquivariantClassAssignment cls{model.half_dim(), {}};
  for (const auto& point : oriented.points()) {
    cls.values.emplace_back(BigRational(euler_product(point)) * BigRational(point.epsilon));
  }
  return cls;
}

EquivariantClassAssignment product(const EquivariantClassAssignment& a,
                                   const EquivariantClassAssignment& b) {
  if (a.values.size() != b.values.size()) {
    throw Error(ErrorKind::kInvalidArgument, "classes over different fixed point sets");
  }
  EquivariantClassAssignment out{a.t_exponent + b.t_exponent, a.values};
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] *= b.values[i];
  }
  return out;
}

namespace {

int parse_positive(const std::string& digits, const std::string& spec) {
  if (digits.empty() || digits.size() > 6) {
    throw Error(ErrorKind::kInvalidArgument, "bad class spec '" + spec + "'");
  }
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw Error(ErrorKind::kInvalidArgument, "bad class spec '" + spec + "'");
    }
  }
  return std::stoi(digits);
}

}  // namespace

EquivariantClassAssignment parse_class(const FixedPointModel& model, const std::string& spec) {
  EquivariantClassAssignment out = t_power_class(model, 0);
  std::size_t start = 0;
  while (start <= spec.size()) {
    const auto end = spec.find('*', start);
    const std::string factor =
        spec.substr(start, end == std::string::npos ? std::string::npos : end - start);
    EquivariantClassAssignment cls;
    if (factor == "t") {
      cls = t_power_class(model, 1);
    } else if (factor.rfind("t^", 0) == 0) {
      cls = t_power_class(model, parse_positive(factor.substr(2), spec));
    } else if (factor == "euler") {
      cls = euler_class(model);
    } else if (factor.size() > 1 && factor[0] == 'p') {
      cls = pontrjagin_class(model, parse_positive(factor.substr(1), spec));
    } else {
      throw Error(ErrorKind::kInvalidArgument,
                  "bad class spec '" + spec + "' (factors: t, t^k, p<j>, euler)");
    }
    out = product(out, cls);
    if (end == std::string::npos) {
      break;
    }
    start = end + 1;
  }
  return out;
}

long signature_of(const FixedPointModel& model) {
  long total = 0;
  const FixedPointModel oriented = model.to_oriented();
  for (const auto& point : oriented.points()) {
    total += point.epsilon;
  }
  return total;
}

IntPolynomial chi_y(const FixedPointModel& model, DqConvention convention) {
  if (model.mode() != ModelMode::kUnitary) {
    throw Error(ErrorKind::kInvalidArgument, "chi_y needs a unitary model (signed weights)");
  }
  IntPolynomial poly(static_cast<std::size_t>(model.half_dim()) + 1, 0);
  for (const auto& point : model.points()) {
    std::size_t d = 0;
    for (long weight : point.weights) {
      const bool positive = weight > 0;
      if (positive == (convention == DqConvention::kPositiveWeights)) {
        ++d;
      }
    }
    poly[d] += (d % 2 == 0 ? 1 : -1) * point.epsilon;
  }
  return poly;
}

BigInt evaluate(const IntPolynomial& poly, long y) {
  BigInt total = 0;
  BigInt power = 1;
  for (long coeff : poly) {
    total += power * coeff;
    power *= y;
  }
  return total;
}

std::string to_string(const IntPolynomial& poly) {
  std::string out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const long coeff = poly[i];
    if (coeff == 0) {
      continue;
    }
    const long magnitude = std::labs(coeff);
    if (out.empty()) {
      out += coeff < 0 ? "-" : "";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    if (i == 0 || magnitude != 1) {
      out += std::to_string(magnitude);
    }
    if (i >= 1) {
      out += "y";
    }
    if (i >= 2) {
      out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

ResidueReport residue_consistency(const FixedPointModel& model) {
  ResidueReport report;
  const FixedPointModel oriented = model.to_oriented();
  for (const auto& point : oriented.points()) {
    BigRational residue = BigRational(point.epsilon) / BigRational(euler_product(point));
    report.total += residue;
    report.residues.emplace_back(point.label, std::move(residue));
  }
  report.consistent = report.total.is_zero();
  return report;
}

}  // namespace trifix
