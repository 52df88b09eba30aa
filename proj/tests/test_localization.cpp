#include <doctest.h>

#include <algorithm>
#include <random>

#include "trifix/error.hpp"
#include "trifix/json_io.hpp"
#include "trifix/localization.hpp"

using namespace trifix;
using json_io::json;

namespace {

std::filesystem::path model_path(const char* name) {
  return std::filesystem::path(TRIFIX_DATA_DIR) / "models" / name;
}

FixedPointModel cp2() { return json_io::load_model(model_path("cp2.json")); }
FixedPointModel cp2_unitary() { return json_io::load_model(model_path("cp2_unitary.json")); }

// Independent restatement of the fixed point sum, for the random suites.
long mirror_value(const FixedPointModel& model, long y) {
  long total = 0;
  for (const auto& point : model.points()) {
    const long positive =
        std::count_if(point.weights.begin(), point.weights.end(), [](long w) { return w > 0; });
    long term = point.epsilon;
    for (long i = 0; i < model.half_dim() - positive; ++i) {
      term *= -y;
    }
    total += term;
  }
  return total;
}

FixedPointModel random_unitary_model(std::mt19937& rng, int n) {
  std::uniform_int_distribution<long> magnitude(1, 5);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<FixedPoint> points;
  for (int q = 0; q < 3; ++q) {
    FixedPoint point;
    point.label = "r" + std::to_string(q);
    for (int i = 0; i < n; ++i) {
      point.weights.push_back(coin(rng) ? magnitude(rng) : -magnitude(rng));
    }
    point.epsilon = coin(rng) ? 1 : -1;
    points.push_back(std::move(point));
  }
  return FixedPointModel(n, ModelMode::kUnitary, std::move(points));
}

// A point with d positive weights out of n.
FixedPoint point_with_d(std::mt19937& rng, int n, int d, int epsilon) {
  std::uniform_int_distribution<long> magnitude(1, 5);
  FixedPoint point;
  for (int i = 0; i < n; ++i) {
    point.weights.push_back(i < d ? magnitude(rng) : -magnitude(rng));
  }
  std::shuffle(point.weights.begin(), point.weights.end(), rng);
  point.epsilon = epsilon;
  return point;
}

}  // namespace

TEST_CASE("euler products and Pontrjagin restrictions") {
  CHECK(euler_product(FixedPoint{"a", {1, 2}, 1}) == 2);
  CHECK(euler_product(FixedPoint{"b", {1, 1, 1, 1}, 1}) == 1);
  CHECK(euler_product(FixedPoint{"c", {2, 3}, -1}) == 6);
  CHECK(euler_product(FixedPoint{"d", {-2, 3}, 1}) == 6);

  CHECK(pontrjagin_restriction(FixedPoint{"a", {1, 2}, 1}, 1) == 5);
  CHECK(pontrjagin_restriction(FixedPoint{"a", {1, 2}, 1}, 2) == 4);
  CHECK(pontrjagin_restriction(FixedPoint{"e", {1, 1}, 1}, 1) == 2);
  CHECK(pontrjagin_restriction(FixedPoint{"f", {1, 2, 3}, 1}, 2) == 4 + 9 + 36);
  CHECK_THROWS_AS(pontrjagin_restriction(FixedPoint{"a", {1, 2}, 1}, 3), Error);
  CHECK_THROWS_AS(pontrjagin_restriction(FixedPoint{"a", {1, 2}, 1}, 0), Error);
}

TEST_CASE("CP^2 fixture") {
  const auto model = cp2();
  REQUIRE(model.half_dim() == 2);
  REQUIRE(model.points().size() == 3);
  CHECK(model.points()[0].label == "[1:0:0]");

  CHECK(integrate(model, t_power_class(model, 2)) == BigRational(0));
  CHECK(integrate(model, pontrjagin_class(model, 1)) == BigRational(3));
  CHECK(integrate(model, parse_class(model, "p1")) == BigRational(3));
  CHECK(integrate(model, parse_class(model, "euler")) == BigRational(3));
  CHECK(integrate(model, parse_class(model, "t*t")) == BigRational(0));
  CHECK(signature_of(model) == 1);

  const auto report = residue_consistency(model);
  CHECK(report.consistent);
  CHECK(report.total == BigRational(0));
  REQUIRE(report.residues.size() == 3);
  CHECK(report.residues[0].second == BigRational(1, 2));
  CHECK(report.residues[1].second == BigRational(-1));
  CHECK(report.residues[2].second == BigRational(1, 2));

  // Degree 2 is not top degree on a 4-manifold.
  try {
    integrate(model, t_power_class(model, 1));
    FAIL("expected a degree mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDegreeMismatch);
  }
  CHECK_THROWS_AS(integrate(model, parse_class(model, "p1*p1")), Error);
  CHECK_THROWS_AS(parse_class(model, "q7"), Error);
  CHECK_THROWS_AS(parse_class(model, ""), Error);
}

TEST_CASE("CP^2 chi_y genus") {
  const auto model = cp2_unitary();
  const auto poly = chi_y(model);
  CHECK(poly == IntPolynomial{1, -1, 1});
  CHECK(to_string(poly) == "1 - y + y^2");
  CHECK(evaluate(poly, 1) == 1);
  CHECK(evaluate(poly, -1) == 3);
  CHECK(evaluate(poly, 0) == 1);
  CHECK(evaluate(poly, 1) == signature_of(model.to_oriented()));
  CHECK(chi_y(model, DqConvention::kNegativeWeights) == poly);
  CHECK(signature_of(model) == 1);
  CHECK(residue_consistency(model).consistent);
  CHECK_THROWS_AS(chi_y(cp2()), Error);
}

TEST_CASE("small hand models") {
  const FixedPointModel single(2, ModelMode::kOriented, {FixedPoint{"x", {2, 3}, -1}});
  CHECK(integrate(single, t_power_class(single, 2)) == BigRational(-1, 6));
  CHECK(integrate(single, EquivariantClassAssignment{2, {BigRational(5, 7)}}) ==
        BigRational(-5, 42));

  const FixedPointModel pair(1, ModelMode::kOriented,
                             {FixedPoint{"a", {3}, 1}, FixedPoint{"b", {3}, -1}});
  CHECK(signature_of(pair) == 0);
  CHECK(residue_consistency(pair).consistent);

  const FixedPointModel aligned(2, ModelMode::kOriented,
                                {FixedPoint{"a", {1, 1}, 1}, FixedPoint{"b", {1, 1}, 1},
                                 FixedPoint{"c", {1, 1}, 1}});
  CHECK(signature_of(aligned) == 3);
  const auto report = residue_consistency(aligned);
  CHECK_FALSE(report.consistent);
  CHECK(report.total == BigRational(3));

  CHECK(to_string(IntPolynomial{0, 0, 0}) == "0");
  CHECK(to_string(IntPolynomial{0, 2, -3}) == "2y - 3y^2");
}

TEST_CASE("model validation and normalization") {
  CHECK_THROWS_AS(FixedPointModel(2, ModelMode::kOriented, {FixedPoint{"a", {1}, 1}}), Error);
  CHECK_THROWS_AS(FixedPointModel(2, ModelMode::kOriented, {FixedPoint{"a", {1, 0}, 1}}), Error);
  CHECK_THROWS_AS(FixedPointModel(2, ModelMode::kOriented, {FixedPoint{"a", {1, 2}, 0}}), Error);
  CHECK_THROWS_AS(FixedPointModel(0, ModelMode::kOriented, {}), Error);

  const FixedPointModel signed_input(2, ModelMode::kOriented, {FixedPoint{"a", {-1, 2}, 1}});
  CHECK(signed_input.points()[0].weights == std::vector<long>{1, 2});
  CHECK(signed_input.points()[0].epsilon == -1);
  const FixedPointModel two_negative(2, ModelMode::kOriented, {FixedPoint{"a", {-1, -2}, 1}});
  CHECK(two_negative.points()[0].epsilon == 1);

  const auto oriented = cp2_unitary().to_oriented();
  CHECK(oriented.mode() == ModelMode::kOriented);
  CHECK(oriented.points()[1].weights == std::vector<long>{1, 1});
  CHECK(oriented.points()[1].epsilon == -1);
  CHECK(oriented.points()[2].epsilon == 1);
}

TEST_CASE("model JSON") {
  const auto doc = json_io::model_to_json(cp2());
  const auto again = json_io::model_from_json(doc);
  CHECK(json_io::model_to_json(again) == doc);

  auto bad = [](const char* text) {
    try {
      json_io::model_from_json(json::parse(text));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kMalformedModel);
      return std::string(e.what());
    }
    FAIL("expected a malformed model error for " << text);
    return std::string();
  };
  CHECK(bad(R"({"mode":"oriented","points":[]})").find("half_dim") != std::string::npos);
  CHECK(bad(R"({"half_dim":1,"mode":"complex","points":[]})").find("mode") != std::string::npos);
  CHECK(bad(R"({"half_dim":1,"mode":"oriented","points":[{"weights":[1]}]})")
            .find("points[0]") != std::string::npos);
  CHECK(bad(R"({"half_dim":1,"mode":"oriented","points":[{"weights":[1.5],"epsilon":1}]})")
            .find("weights[0]") != std::string::npos);
  CHECK(bad(R"({"half_dim":1,"mode":"oriented","points":[],"extra":0})").find("extra") !=
        std::string::npos);
  CHECK(bad("[1,2]").find("object") != std::string::npos);

  const auto unlabeled = json_io::model_from_json(
      json::parse(R"({"half_dim":1,"mode":"oriented","points":[{"weights":[2],"epsilon":1}]})"));
  CHECK(unlabeled.points()[0].label == "q0");

  CHECK_THROWS_AS(json_io::load_model(model_path("does_not_exist.json")), Error);
}

TEST_CASE("euler class integrates to the number of fixed points") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 4;
    const auto model = random_unitary_model(rng, n).to_oriented();
    CHECK(integrate(model, euler_class(model)) == BigRational(3));
  }
}

TEST_CASE("residues are invariant under relabeling and weight permutation") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 4;
    const auto model = random_unitary_model(rng, n).to_oriented();
    auto points = model.points();
    std::shuffle(points.begin(), points.end(), rng);
    for (auto& point : points) {
      std::shuffle(point.weights.begin(), point.weights.end(), rng);
      point.label += "'";
    }
    const FixedPointModel permuted(n, ModelMode::kOriented, points);
    const auto a = residue_consistency(model);
    const auto b = residue_consistency(permuted);
    CHECK(a.consistent == b.consistent);
    CHECK(a.total == b.total);
    CHECK(integrate(model, t_power_class(model, n)) ==
          integrate(permuted, t_power_class(permuted, n)));
    if (n % 2 == 0) {
      CHECK(integrate(model, pontrjagin_class(model, n / 2)) ==
            integrate(permuted, pontrjagin_class(permuted, n / 2)));
    }
  }
}

TEST_CASE("chi_y mirror symmetry on 100 random 3-point unitary models") {
  std::mt19937 rng(1729);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 4;
    const auto model = random_unitary_model(rng, n);
    const auto poly = chi_y(model);
    const auto mirror = chi_y(model, DqConvention::kNegativeWeights);
    REQUIRE(poly.size() == static_cast<std::size_t>(n) + 1);
    // The mirror sum is the reversed polynomial up to the global sign (-1)^n.
    for (int i = 0; i <= n; ++i) {
      const long reversed = poly[static_cast<std::size_t>(n - i)];
      CHECK(mirror[static_cast<std::size_t>(i)] == ((n % 2 == 0) ? reversed : -reversed));
    }
    for (long y : {-2L, -1L, 0L, 1L, 3L}) {
      CHECK(evaluate(mirror, y) == mirror_value(model, y));
    }
    if (n % 2 == 0) {
      CHECK(evaluate(poly, 1) == signature_of(model.to_oriented()));
    }
  }
}

TEST_CASE("chi_y is unchanged by d -> n - d on conjugation-symmetric models") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 * (1 + trial % 2);
    std::uniform_int_distribution<int> d_dist(0, n);
    std::uniform_int_distribution<int> coin(0, 1);
    const int d = d_dist(rng);
    const int e_pair = coin(rng) ? 1 : -1;
    const int e_mid = coin(rng) ? 1 : -1;
    std::vector<FixedPoint> points{point_with_d(rng, n, d, e_pair),
                                   point_with_d(rng, n, n - d, e_pair),
                                   point_with_d(rng, n, n / 2, e_mid)};
    std::shuffle(points.begin(), points.end(), rng);
    const FixedPointModel model(n, ModelMode::kUnitary, points);
    CHECK(chi_y(model) == chi_y(model, DqConvention::kNegativeWeights));
    CHECK(evaluate(chi_y(model), 1) == signature_of(model.to_oriented()));
  }
}
