#include "trifix/genus.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "trifix/chern_pontrjagin.hpp"
#include "trifix/error.hpp"

namespace trifix {

const char* to_string(Flavor flavor) {
  return flavor == Flavor::kPontrjagin ? "pontrjagin" : "chern";
}

struct GenusSpec::Cache {
  explicit Cache(SeriesGenerator gen) : generator(std::move(gen)) {}

  SeriesGenerator generator;

  std::mutex series_mutex;
  series::Series characteristic;
  series::Series logarithm;

  std::shared_mutex polynomial_mutex;
  std::map<int, GradedPolynomial> polynomials;

  std::shared_mutex coefficient_mutex;
  std::map<Partition, BigRational> coefficients;
};

struct GenusCacheAccess {
  static GenusSpec::Cache& of(const GenusSpec& genus) { return *genus.cache_; }
};

GenusSpec::GenusSpec(std::string name, Flavor flavor, SeriesGenerator generator)
    : name_(std::move(name)),
      flavor_(flavor),
      cache_(std::make_shared<Cache>(std::move(generator))) {}

namespace {

// x / tanh x = x cosh x / sinh x, read as a series in z = x^2.
series::Series l_series(unsigned degree) {
  const unsigned n = 2 * degree + 1;
  const auto plus = series::exp_series(n + 1);
  const auto minus = series::exp_series(n + 1, BigRational(-1));
  series::Series cosh(n + 2);
  series::Series sinh(n + 2);
  for (unsigned j = 0; j < n + 2; ++j) {
    cosh[j] = (plus[j] + minus[j]) / BigRational(2);
    sinh[j] = (plus[j] - minus[j]) / BigRational(2);
  }
  cosh.pop_back();
  const auto sinh_over_x = series::shift_down(sinh, 1);
  return series::even_part(series::divide(cosh, sinh_over_x));
}

// x / (1 - e^{-x}).
series::Series todd_series(unsigned degree) {
  auto denominator = series::exp_series(degree + 1, BigRational(-1));
  for (auto& c : denominator) {
    c = -c;
  }
  denominator[0] += BigRational(1);
  denominator = series::shift_down(denominator, 1);
  series::Series one(degree + 1);
  one[0] = BigRational(1);
  return series::divide(one, denominator);
}

}  // namespace

const GenusSpec& GenusSpec::l_genus() {
  static const GenusSpec spec("L", Flavor::kPontrjagin, l_series);
  return spec;
}

const GenusSpec& GenusSpec::todd() {
  static const GenusSpec spec("Todd", Flavor::kChern, todd_series);
  return spec;
}

const GenusSpec& GenusSpec::by_name(const std::string& name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "l") {
    return l_genus();
  }
  if (lower == "todd") {
    return todd();
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown genus '" + name + "' (expected L or Todd)");
}

series::Series GenusSpec::characteristic_series(unsigned degree) const {
  std::lock_guard lock(cache_->series_mutex);
  auto& cached = cache_->characteristic;
  if (cached.size() <= degree) {
    // Grow geometrically so increasing requests stay linear overall.
    const auto target = std::max<std::size_t>(degree, 2 * cached.size());
    auto fresh = cache_->generator(static_cast<unsigned>(target));
    if (fresh.size() <= target || fresh[0] != BigRational(1)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "characteristic series of " + name_ + " must start 1 + ...");
    }
    cached = std::move(fresh);
  }
  return {cached.begin(), cached.begin() + degree + 1};
}

BigRational GenusSpec::series_coefficient(unsigned j) const {
  return characteristic_series(j)[j];
}

series::Series GenusSpec::log_series(unsigned degree) const {
  {
    std::lock_guard lock(cache_->series_mutex);
    if (cache_->logarithm.size() > degree) {
      return {cache_->logarithm.begin(), cache_->logarithm.begin() + degree + 1};
    }
  }
  std::size_t target = degree;
  {
    std::lock_guard lock(cache_->series_mutex);
    target = std::max<std::size_t>(degree, 2 * cache_->logarithm.size());
  }
  auto fresh = series::log(characteristic_series(static_cast<unsigned>(target)));
  std::lock_guard lock(cache_->series_mutex);
  if (cache_->logarithm.size() < fresh.size()) {
    cache_->logarithm = fresh;
  }
  return {fresh.begin(), fresh.begin() + degree + 1};
}

BigRational GradedPolynomial::coefficient(const Partition& index) const {
  const auto it = terms.find(index);
  return it == terms.end() ? BigRational(0) : it->second;
}

namespace {

// Symmetric function in the monomial basis: m_lambda -> coefficient.
using MonomialExpansion = std::map<Partition, BigInt>;

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  const auto& parts = p.parts();
  if (parts.empty()) {
    return Partition{};
  }
  for (int row = 1; row <= parts.back(); ++row) {
    const auto count = std::count_if(parts.begin(), parts.end(),
                                     [row](int part) { return part >= row; });
    out.push_back(static_cast<int>(count));
  }
  return Partition(std::move(out));
}

// Coefficient of x^nu in e_r * f: sum over r-subsets S of the nonzero
// positions of nu of f[sort(nu - 1_S)]. Positions holding equal values are
// interchangeable, so subsets are counted per value group.
MonomialExpansion multiply_by_elementary(const MonomialExpansion& f, int weight, int r) {
  MonomialExpansion out;
  for (const auto& target : partitions(weight + r)) {
    std::vector<std::pair<int, int>> groups;  // (value, multiplicity)
    for (int part : target.parts()) {
      if (!groups.empty() && groups.back().first == part) {
        ++groups.back().second;
      } else {
        groups.emplace_back(part, 1);
      }
    }
    BigInt total = 0;
    std::vector<int> taken(groups.size(), 0);
    auto recurse = [&](auto&& self, std::size_t g, int remaining) -> void {
      if (g == groups.size()) {
        if (remaining != 0) {
          return;
        }
        std::vector<int> parts;
        BigInt ways = 1;
        for (std::size_t i = 0; i < groups.size(); ++i) {
          const auto [value, mult] = groups[i];
          BigInt choose;
          mpz_bin_uiui(choose.get_mpz_t(), static_cast<unsigned long>(mult),
                       static_cast<unsigned long>(taken[i]));
          ways *= choose;
          for (int c = 0; c < mult - taken[i]; ++c) {
            parts.push_back(value);
          }
          if (value > 1) {
            for (int c = 0; c < taken[i]; ++c) {
              parts.push_back(value - 1);
            }
          }
        }
        const auto it = f.find(Partition(std::move(parts)));
        if (it != f.end()) {
          total += ways * it->second;
        }
        return;
      }
      const int limit = std::min(groups[g].second, remaining);
      for (int s = 0; s <= limit; ++s) {
        taken[g] = s;
        self(self, g + 1, remaining - s);
      }
      taken[g] = 0;
    };
    recurse(recurse, 0, r);
    if (total != 0) {
      out.emplace(target, total);
    }
  }
  return out;
}

// e_mu in the monomial basis, built by extending the memoized prefix.
const MonomialExpansion& elementary_product(const Partition& mu,
                                            std::map<Partition, MonomialExpansion>& memo) {
  if (const auto it = memo.find(mu); it != memo.end()) {
    return it->second;
  }
  std::vector<int> prefix_parts(mu.parts().begin(), mu.parts().end() - 1);
  const Partition prefix(std::move(prefix_parts));
  const auto& base = elementary_product(prefix, memo);
  auto product = multiply_by_elementary(base, prefix.weight(), mu.parts().back());
  return memo.emplace(mu, std::move(product)).first->second;
}

GradedPolynomial compute_by_monomial_basis(const GenusSpec& genus, int k) {
  const auto q = genus.characteristic_series(static_cast<unsigned>(k));
  auto lambdas = partitions(k);
  // Dominance-compatible order: descending lexicographic on the
  // nonincreasing part sequence.
  std::sort(lambdas.begin(), lambdas.end(), [](const Partition& a, const Partition& b) {
    return std::lexicographical_compare(b.parts().rbegin(), b.parts().rend(),
                                        a.parts().rbegin(), a.parts().rend());
  });

  std::map<Partition, MonomialExpansion> memo{{Partition{}, MonomialExpansion{{Partition{}, 1}}}};
  GradedPolynomial out{k, {}};
  std::vector<std::pair<Partition, BigRational>> solved;
  for (const auto& lambda : lambdas) {
    // Coefficient of x^lambda in prod_i Q(z_i).
    BigRational rhs(1);
    for (int part : lambda.parts()) {
      rhs *= q[static_cast<std::size_t>(part)];
    }
    for (const auto& [mu, b] : solved) {
      const auto& expansion = elementary_product(mu, memo);
      if (const auto it = expansion.find(lambda); it != expansion.end()) {
        rhs -= b * BigRational(it->second);
      }
    }
    const Partition mu = conjugate(lambda);
    const auto& leading = elementary_product(mu, memo);
    const auto lead = leading.find(lambda);
    if (lead == leading.end() || lead->second != 1) {
      throw Error(ErrorKind::kInvalidArgument, "monomial expansion lost its unit leading term");
    }
    solved.emplace_back(mu, rhs);
    if (!rhs.is_zero()) {
      out.terms.emplace(mu, rhs);
    }
  }
  return out;
}

// Element of the quotient ring spanned by e-monomials dividing e_I.
using QuotientElement = std::map<Partition, BigRational>;

QuotientElement quotient_multiply(const QuotientElement& a, const QuotientElement& b,
                                  const Partition& top) {
  QuotientElement out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Partition product = ma.merged(mb);
      if (product.divides(top)) {
        out[product] += ca * cb;
      }
    }
  }
  std::erase_if(out, [](const auto& term) { return term.second.is_zero(); });
  return out;
}

}  // namespace

GradedPolynomial genus_polynomial(const GenusSpec& genus, int k) {
  if (k < 1) {
    throw Error(ErrorKind::kInvalidArgument, "genus polynomial needs k >= 1");
  }
  auto& cache = GenusCacheAccess::of(genus);
  {
    std::shared_lock lock(cache.polynomial_mutex);
    if (const auto it = cache.polynomials.find(k); it != cache.polynomials.end()) {
      return it->second;
    }
  }
  auto computed = compute_by_monomial_basis(genus, k);
  std::unique_lock lock(cache.polynomial_mutex);
  return cache.polynomials.emplace(k, std::move(computed)).first->second;
}

namespace {

BigRational compute_by_power_sums(const GenusSpec& genus, const Partition& index) {
  const int n = index.weight();
  if (n == 0) {
    return BigRational(1);
  }
  const auto log_q = genus.log_series(static_cast<unsigned>(n));

  std::vector<int> distinct;
  for (int part : index.parts()) {
    if (distinct.empty() || distinct.back() != part) {
      distinct.push_back(part);
    }
  }
  auto elementary = [&](int i) {
    return QuotientElement{{Partition{i}, BigRational(1)}};
  };

  // Newton: p_j = sum_{i<j} (-1)^{i-1} e_i p_{j-i} + (-1)^{j-1} j e_j, with
  // e_i = 0 unless i is a part of I.
  std::vector<QuotientElement> power_sums(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) {
    QuotientElement p;
    for (int i : distinct) {
      if (i > j) {
        break;
      }
      const BigRational sign((i - 1) % 2 == 0 ? 1 : -1);
      if (i == j) {
        p[Partition{j}] += sign * BigRational(j);
        continue;
      }
      for (const auto& [mono, coeff] :
           quotient_multiply(elementary(i), power_sums[static_cast<std::size_t>(j - i)], index)) {
        p[mono] += sign * coeff;
      }
    }
    std::erase_if(p, [](const auto& term) { return term.second.is_zero(); });
    power_sums[static_cast<std::size_t>(j)] = std::move(p);
  }

  // K = exp(sum_j l_j p_j); graded: m G_m = sum_j j l_j p_j G_{m-j}.
  std::vector<QuotientElement> graded(static_cast<std::size_t>(n) + 1);
  graded[0] = {{Partition{}, BigRational(1)}};
  for (int m = 1; m <= n; ++m) {
    QuotientElement acc;
    for (int j = 1; j <= m; ++j) {
      const auto& pj = power_sums[static_cast<std::size_t>(j)];
      const auto& rest = graded[static_cast<std::size_t>(m - j)];
      if (pj.empty() || rest.empty() || log_q[static_cast<std::size_t>(j)].is_zero()) {
        continue;
      }
      const BigRational scale = BigRational(j) * log_q[static_cast<std::size_t>(j)];
      for (const auto& [mono, coeff] : quotient_multiply(pj, rest, index)) {
        acc[mono] += scale * coeff;
      }
    }
    for (auto& [mono, coeff] : acc) {
      coeff /= BigRational(m);
    }
    std::erase_if(acc, [](const auto& term) { return term.second.is_zero(); });
    graded[static_cast<std::size_t>(m)] = std::move(acc);
  }
  const auto& top = graded[static_cast<std::size_t>(n)];
  const auto it = top.find(index);
  return it == top.end() ? BigRational(0) : it->second;
}

}  // namespace

BigRational genus_coefficient(const GenusSpec& genus, const Partition& index) {
  auto& cache = GenusCacheAccess::of(genus);
  {
    std::shared_lock lock(cache.coefficient_mutex);
    if (const auto it = cache.coefficients.find(index); it != cache.coefficients.end()) {
      return it->second;
    }
  }
  BigRational computed = compute_by_power_sums(genus, index);
  std::unique_lock lock(cache.coefficient_mutex);
  return cache.coefficients.emplace(index, std::move(computed)).first->second;
}

BigRational s_coeff(const Partition& index) {
  return genus_coefficient(GenusSpec::l_genus(), index);
}

BigRational t_coeff(const Partition& index) {
  return genus_coefficient(GenusSpec::todd(), index);
}

BigRational l_single_part_closed_form(int k) {
  if (k < 1) {
    throw Error(ErrorKind::kInvalidArgument, "closed form needs k >= 1");
  }
  const auto twice = static_cast<unsigned>(2 * k);
  const BigRational four_k = BigRational(2).pow(twice);
  const BigRational factor = BigRational(2).pow(twice - 1) - BigRational(1);
  return four_k * factor * bernoulli(twice).abs() / factorial(twice);
}

BigRational todd_single_part_closed_form(int k) {
  if (k < 1) {
    throw Error(ErrorKind::kInvalidArgument, "closed form needs k >= 1");
  }
  const auto n = static_cast<unsigned>(k);
  const BigRational sign(k % 2 == 0 ? 1 : -1);
  return sign * bernoulli(n) / factorial(n);
}

CharNumberVector::CharNumberVector(Flavor flavor, int grade, std::map<Partition, BigInt> entries)
    : flavor_(flavor), grade_(grade) {
  if (grade < 1) {
    throw Error(ErrorKind::kInvalidArgument, "characteristic numbers need grade >= 1");
  }
  for (auto& [index, value] : entries) {
    set(index, std::move(value));
  }
}

BigInt CharNumberVector::at(const Partition& index) const {
  const auto it = entries_.find(index);
  return it == entries_.end() ? BigInt(0) : it->second;
}

void CharNumberVector::set(const Partition& index, BigInt value) {
  if (index.weight() != grade_) {
    throw Error(ErrorKind::kDegreeMismatch, "partition " + index.to_string() +
                                                " does not have weight " +
                                                std::to_string(grade_));
  }
  entries_[index] = std::move(value);
}

BigRational evaluate_genus(const GenusSpec& genus, const CharNumberVector& numbers) {
  if (genus.flavor() != numbers.flavor()) {
    throw Error(ErrorKind::kFlavorMismatch, "genus " + genus.name() + " expects " +
                                                to_string(genus.flavor()) +
                                                " numbers, got " + to_string(numbers.flavor()));
  }
  BigRational total;
  for (const auto& [index, value] : numbers.entries()) {
    if (value != 0) {
      total += genus_coefficient(genus, index) * BigRational(value);
    }
  }
  return total;
}

std::map<Partition, BigRational> genus_linear_form(const GenusSpec& genus, int k,
                                                   const std::set<Partition>& surviving) {
  if (k < 1) {
    throw Error(ErrorKind::kInvalidArgument, "genus_linear_form needs k >= 1");
  }
  for (const auto& p : surviving) {
    if (p.weight() != 2 * k) {
      throw Error(ErrorKind::kDegreeMismatch, "surviving Chern partition " + p.to_string() +
                                                  " does not have weight " +
                                                  std::to_string(2 * k));
    }
  }
  std::map<Partition, BigRational> out;
  for (const auto& p : surviving) {
    out.emplace(p, BigRational(0));
  }
  if (genus.flavor() == Flavor::kChern) {
    for (auto& [index, coeff] : out) {
      coeff = genus_coefficient(genus, index);
    }
    return out;
  }
  for (const auto& [pontrjagin, form] : chern_to_pontrjagin_forms(k, surviving)) {
    const BigRational coeff = genus_coefficient(genus, pontrjagin);
    if (coeff.is_zero()) {
      continue;
    }
    for (const auto& [chern, value] : form) {
      out[chern] += coeff * value;
    }
  }
  return out;
}

}  // namespace trifix
