#include <doctest.h>

#include <thread>

#include "oracles.hpp"
#include "trifix/chern_pontrjagin.hpp"
#include "trifix/error.hpp"
#include "trifix/genus.hpp"

using namespace trifix;

namespace {

const GenusSpec& L() { return GenusSpec::l_genus(); }
const GenusSpec& Todd() { return GenusSpec::todd(); }

}  // namespace

TEST_CASE("characteristic series") {
  // sqrt(z)/tanh(sqrt(z)) = 1 + z/3 - z^2/45 + 2 z^3/945 - ...
  const auto l = L().characteristic_series(3);
  CHECK(l == series::Series{BigRational(1), BigRational(1, 3), BigRational(-1, 45),
                            BigRational(2, 945)});
  // z/(1 - e^{-z}) = 1 + z/2 + z^2/12 + 0 z^3 - z^4/720
  const auto t = Todd().characteristic_series(4);
  CHECK(t == series::Series{BigRational(1), BigRational(1, 2), BigRational(1, 12), BigRational(0),
                            BigRational(-1, 720)});
  CHECK(Todd().series_coefficient(2) == BigRational(1, 12));
}

TEST_CASE("genus polynomials in low degree") {
  CHECK(genus_polynomial(L(), 1).coefficient(Partition{1}) == BigRational(1, 3));
  // t_1 = -B_1 / 1!
  const auto b = oracle::bernoulli_by_series_division(1);
  CHECK(genus_polynomial(Todd(), 1).coefficient(Partition{1}) == -b[1]);
  CHECK(genus_polynomial(Todd(), 1).coefficient(Partition{1}) == BigRational(1, 2));

  const auto l2 = genus_polynomial(L(), 2);
  CHECK(l2.grade == 2);
  CHECK(l2.coefficient(Partition{2}) == BigRational(7, 45));
  CHECK(l2.coefficient(Partition{1, 1}) == BigRational(-1, 45));
  const BigRational s1(1, 3);
  const BigRational s2(7, 45);
  CHECK(l2.coefficient(Partition{1, 1}) == (s1 * s1 - s2) / BigRational(2));

  const auto t2 = genus_polynomial(Todd(), 2);
  CHECK(t2.coefficient(Partition{1, 1}) == BigRational(1, 12));
  CHECK(t2.coefficient(Partition{2}) == BigRational(1, 12));

  CHECK_THROWS_AS(genus_polynomial(L(), 0), Error);
}

TEST_CASE("named coefficients") {
  CHECK(s_coeff(Partition{1}) == BigRational(1, 3));
  CHECK(s_coeff(Partition{2}) == BigRational(7, 45));
  CHECK(t_coeff(Partition{2}) == BigRational(1, 12));
  CHECK(t_coeff(Partition{4}) == BigRational(-1, 720));
  CHECK(t_coeff(Partition{2, 2}) == BigRational(1, 240));
  const BigRational s2 = l_single_part_closed_form(2);
  const BigRational s4 = l_single_part_closed_form(4);
  CHECK(s_coeff(Partition{2, 2}) == (s2 * s2 - s4) / BigRational(2));
  CHECK(s_coeff(Partition{2, 2}) == BigRational(-19, 14175));
  CHECK(s_coeff(Partition{}) == BigRational(1));
}

TEST_CASE("monomial route and power-sum route agree on every coefficient") {
  for (const GenusSpec* genus : {&L(), &Todd()}) {
    for (int k = 1; k <= 12; ++k) {
      const auto poly = genus_polynomial(*genus, k);
      for (const auto& index : partitions(k)) {
        CHECK_MESSAGE(poly.coefficient(index) == genus_coefficient(*genus, index),
                      genus->name() << " " << index);
      }
    }
  }
}

TEST_CASE("genus polynomials match brute-force symmetric reduction") {
  for (const GenusSpec* genus : {&L(), &Todd()}) {
    for (int k = 1; k <= 5; ++k) {
      const auto q = genus->characteristic_series(static_cast<unsigned>(k));
      const auto expected = oracle::literal_genus_polynomial(q, k);
      const auto poly = genus_polynomial(*genus, k);
      for (const auto& index : partitions(k)) {
        const auto it = expected.find(index);
        const BigRational want = it == expected.end() ? BigRational(0) : it->second;
        CHECK_MESSAGE(poly.coefficient(index) == want, genus->name() << " " << index);
      }
    }
  }
}

TEST_CASE("custom genus: Q = 1 + z gives the top elementary class") {
  const GenusSpec total_class("total", Flavor::kChern, [](unsigned degree) {
    series::Series q(degree + 1);
    q[0] = BigRational(1);
    if (degree >= 1) {
      q[1] = BigRational(1);
    }
    return q;
  });
  for (int k = 1; k <= 8; ++k) {
    const auto poly = genus_polynomial(total_class, k);
    CHECK(poly.terms.size() == 1);
    CHECK(poly.coefficient(Partition{k}) == BigRational(1));
  }
  const GenusSpec broken("broken", Flavor::kChern,
                         [](unsigned) { return series::Series{BigRational(2)}; });
  CHECK_THROWS_AS(broken.characteristic_series(3), Error);
}

TEST_CASE("single-part coefficients match the Bernoulli closed forms") {
  for (int k = 1; k <= 12; ++k) {
    CHECK_MESSAGE(s_coeff(Partition{k}) == l_single_part_closed_form(k), "k = " << k);
  }
  for (int k = 1; k <= 16; ++k) {
    CHECK_MESSAGE(t_coeff(Partition{k}) == todd_single_part_closed_form(k), "k = " << k);
  }
}

TEST_CASE("2-adic valuation law of the L-genus coefficients") {
  for (int k = 1; k <= 16; ++k) {
    const auto v = nu2(s_coeff(Partition{k}));
    CHECK_MESSAGE(v == Valuation::finite(static_cast<long>(hamming_weight(std::int64_t{k})) - 1),
                  "k = " << k);
  }
  for (int k = 1; k <= 8; ++k) {
    const auto v = nu2(s_coeff(Partition{k, k}));
    CHECK_MESSAGE(v >= Valuation::finite(static_cast<long>(hamming_weight(std::int64_t{k})) - 2),
                  "k = " << k);
  }
}

TEST_CASE("doubled-part identities") {
  for (int k = 2; k <= 8; k += 2) {
    const Partition half{k / 2};
    const Partition pair{k / 2, k / 2};
    const Partition whole{k};
    CHECK(s_coeff(pair) == (s_coeff(half) * s_coeff(half) - s_coeff(whole)) / BigRational(2));
    CHECK(t_coeff(pair) == (t_coeff(half) * t_coeff(half) - t_coeff(whole)) / BigRational(2));
  }
}

TEST_CASE("Todd genus of projective spaces is 1") {
  for (int n = 1; n <= 3; ++n) {
    CharNumberVector numbers(Flavor::kChern, n);
    for (const auto& index : partitions(n)) {
      numbers.set(index, oracle::projective_chern_number(n, index));
    }
    const auto poly = genus_polynomial(Todd(), n);
    BigRational total;
    for (const auto& [index, coeff] : poly.terms) {
      total += coeff * BigRational(numbers.at(index));
    }
    CHECK(total == BigRational(1));
    CHECK(evaluate_genus(Todd(), numbers) == BigRational(1));
  }
}

TEST_CASE("signature of even projective spaces is 1") {
  for (int n = 2; n <= 8; n += 2) {
    CharNumberVector numbers(Flavor::kPontrjagin, n / 2);
    for (const auto& index : partitions(n / 2)) {
      numbers.set(index, oracle::projective_pontrjagin_number(n, index));
    }
    CHECK_MESSAGE(evaluate_genus(L(), numbers) == BigRational(1), "CP^" << n);
  }
}

TEST_CASE("evaluate_genus") {
  const CharNumberVector dim8(Flavor::kPontrjagin, 2,
                              {{Partition{1, 1}, BigInt(4)}, {Partition{2}, BigInt(7)}});
  CHECK(evaluate_genus(L(), dim8) == BigRational(1));
  const CharNumberVector zero(Flavor::kChern, 3);
  CHECK(evaluate_genus(Todd(), zero) == BigRational(0));
  const CharNumberVector dim4(Flavor::kPontrjagin, 1, {{Partition{1}, BigInt(3)}});
  CHECK(evaluate_genus(L(), dim4) == BigRational(1));
  CHECK_THROWS_AS(evaluate_genus(Todd(), dim4), Error);
  CHECK_THROWS_AS(CharNumberVector(Flavor::kChern, 2, {{Partition{3}, BigInt(1)}}), Error);
  try {
    evaluate_genus(L(), zero);
    FAIL("expected a flavor mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kFlavorMismatch);
    CHECK(e.location().find("genus.cpp") != std::string::npos);
  }
}

TEST_CASE("Chern to Pontrjagin forms in dimension 8") {
  const std::set<Partition> surviving{Partition{2, 2}, Partition{4}};
  const auto forms = chern_to_pontrjagin_forms(2, surviving);
  REQUIRE(forms.size() == 2);
  CHECK(forms.at(Partition{1, 1}) == ChernForm{{Partition{2, 2}, BigRational(4)}});
  CHECK(forms.at(Partition{2}) ==
        ChernForm{{Partition{2, 2}, BigRational(1)}, {Partition{4}, BigRational(2)}});
  CHECK_THROWS_AS(chern_to_pontrjagin_forms(2, {Partition{3}}), Error);
}

TEST_CASE("Chern to Pontrjagin forms: general k keeps only p_(k,k) and p_(2k)") {
  for (int k = 1; k <= 12; ++k) {
    const std::set<Partition> surviving{Partition{2 * k, 2 * k}, Partition{4 * k}};
    const auto forms = chern_to_pontrjagin_forms(2 * k, surviving);
    REQUIRE(forms.size() == 2);
    CHECK(forms.at(Partition{k, k}) == ChernForm{{Partition{2 * k, 2 * k}, BigRational(4)}});
    CHECK(forms.at(Partition{2 * k}) ==
          ChernForm{{Partition{2 * k, 2 * k}, BigRational(1)}, {Partition{4 * k}, BigRational(2)}});
  }
}

TEST_CASE("Chern to Pontrjagin forms reproduce Pontrjagin numbers of CP^4") {
  // Both routes: Chern numbers from (1+x)^5 pushed through the forms, and
  // Pontrjagin numbers straight from (1+x^2)^5.
  const auto all = partitions(4);
  const std::set<Partition> surviving(all.begin(), all.end());
  const auto forms = chern_to_pontrjagin_forms(2, surviving);
  for (const auto& pontrjagin : partitions(2)) {
    BigRational via_chern;
    if (const auto it = forms.find(pontrjagin); it != forms.end()) {
      for (const auto& [chern, coeff] : it->second) {
        via_chern += coeff * BigRational(oracle::projective_chern_number(4, chern));
      }
    }
    CHECK(via_chern == BigRational(oracle::projective_pontrjagin_number(4, pontrjagin)));
  }
  // p_1 = c_1^2 - 2 c_2, p_2 = 2 c_4 - 2 c_1 c_3 + c_2^2.
  CHECK(forms.at(Partition{2}) == ChernForm{{Partition{4}, BigRational(2)},
                                            {Partition{1, 3}, BigRational(-2)},
                                            {Partition{2, 2}, BigRational(1)}});
}

TEST_CASE("genus linear forms") {
  const std::set<Partition> dim8{Partition{2, 2}, Partition{4}};
  const auto sign = genus_linear_form(L(), 2, dim8);
  CHECK(sign.at(Partition{2, 2}) == BigRational(1, 15));
  CHECK(sign.at(Partition{4}) == BigRational(14, 45));
  const BigRational s1(1, 3);
  const BigRational s2(7, 45);
  CHECK(sign.at(Partition{2, 2}) == BigRational(2) * s1 * s1 - s2);
  CHECK(sign.at(Partition{4}) == BigRational(2) * s2);

  const auto todd = genus_linear_form(Todd(), 2, dim8);
  CHECK(todd.at(Partition{2, 2}) == BigRational(1, 240));
  CHECK(todd.at(Partition{4}) == BigRational(-1, 720));

  const std::set<Partition> dim4{Partition{1, 1}, Partition{2}};
  const auto todd4 = genus_linear_form(Todd(), 1, dim4);
  const auto reference = genus_polynomial(Todd(), 2);
  CHECK(todd4.at(Partition{1, 1}) == BigRational(1, 12));
  CHECK(todd4.at(Partition{2}) == BigRational(1, 12));
  CHECK(todd4.at(Partition{1, 1}) == reference.coefficient(Partition{1, 1}));

  // All Chern numbers surviving: the signature of CP^4 from its Chern numbers.
  const auto all = partitions(4);
  const auto full = genus_linear_form(L(), 2, std::set<Partition>(all.begin(), all.end()));
  BigRational signature;
  for (const auto& [index, coeff] : full) {
    signature += coeff * BigRational(oracle::projective_chern_number(4, index));
  }
  CHECK(signature == BigRational(1));

  CHECK_THROWS_AS(genus_linear_form(L(), 2, {Partition{3}}), Error);
}

TEST_CASE("genus caches give identical answers under concurrent use") {
  const GenusSpec fresh("L-fresh", Flavor::kPontrjagin,
                        [](unsigned degree) { return GenusSpec::l_genus().characteristic_series(degree); });
  std::vector<std::thread> threads;
  std::vector<std::vector<BigRational>> results(8);
  for (std::size_t t = 0; t < results.size(); ++t) {
    threads.emplace_back([&, t] {
      for (int k = 1; k <= 8; ++k) {
        const auto poly = genus_polynomial(fresh, k);
        results[t].push_back(poly.coefficient(Partition{k}));
        results[t].push_back(genus_coefficient(fresh, Partition{k, k}));
      }
    });
  }
  for (auto& thread : threads) {
    thread.join();
  }
  for (std::size_t t = 0; t < results.size(); ++t) {
    REQUIRE(results[t].size() == 16);
    for (int k = 1; k <= 8; ++k) {
      CHECK(results[t][static_cast<std::size_t>(2 * (k - 1))] == s_coeff(Partition{k}));
      CHECK(results[t][static_cast<std::size_t>(2 * (k - 1) + 1)] == s_coeff(Partition{k, k}));
    }
  }
}
