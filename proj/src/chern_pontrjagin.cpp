#include "trifix/chern_pontrjagin.hpp"

#include <vector>

#include "trifix/error.hpp"

namespace trifix {

namespace {

// Polynomial in Chern classes modulo the monomials that divide no surviving
// monomial. That set spans an ideal, so truncating after every product is
// exact.
class TruncatedChernRing {
 public:
  explicit TruncatedChernRing(const std::set<Partition>& surviving) : surviving_(surviving) {}

  bool kept(const Partition& monomial) const {
    for (const auto& top : surviving_) {
      if (monomial.divides(top)) {
        return true;
      }
    }
    return false;
  }

  ChernForm multiply(const ChernForm& a, const ChernForm& b) const {
    ChernForm out;
    for (const auto& [ma, ca] : a) {
      for (const auto& [mb, cb] : b) {
        Partition product = ma.merged(mb);
        if (kept(product)) {
          out[product] += ca * cb;
        }
      }
    }
    std::erase_if(out, [](const auto& term) { return term.second.is_zero(); });
    return out;
  }

  // p_j as a truncated polynomial in Chern classes, c_0 = 1.
  ChernForm pontrjagin_class(int j) const {
    ChernForm out;
    for (int i = 0; i <= 2 * j; ++i) {
      std::vector<int> parts;
      if (i > 0) {
        parts.push_back(i);
      }
      if (2 * j - i > 0) {
        parts.push_back(2 * j - i);
      }
      Partition monomial(std::move(parts));
      if (kept(monomial)) {
        out[monomial] += BigRational((i + j) % 2 == 0 ? 1 : -1);
      }
    }
    std::erase_if(out, [](const auto& term) { return term.second.is_zero(); });
    return out;
  }

 private:
  const std::set<Partition>& surviving_;
};

}  // namespace

std::map<Partition, ChernForm> chern_to_pontrjagin_forms(int k,
                                                         const std::set<Partition>& surviving) {
  if (k < 1) {
    throw Error(ErrorKind::kInvalidArgument, "chern_to_pontrjagin_forms needs k >= 1");
  }
  for (const auto& p : surviving) {
    if (p.weight() != 2 * k) {
      throw Error(ErrorKind::kDegreeMismatch, "surviving Chern partition " + p.to_string() +
                                                  " does not have weight " +
                                                  std::to_string(2 * k));
    }
  }
  const TruncatedChernRing ring(surviving);

  std::map<int, ChernForm> classes;
  std::vector<int> allowed;
  for (int j = 1; j <= k; ++j) {
    ChernForm p = ring.pontrjagin_class(j);
    if (!p.empty()) {
      allowed.push_back(j);
      classes.emplace(j, std::move(p));
    }
  }

  std::map<Partition, ChernForm> out;
  for (const auto& index : partitions_with_parts(k, allowed)) {
    ChernForm product{{Partition{}, BigRational(1)}};
    for (int part : index.parts()) {
      product = ring.multiply(product, classes.at(part));
      if (product.empty()) {
        break;
      }
    }
    if (!product.empty()) {
      out.emplace(index, std::move(product));
    }
  }
  return out;
}

}  // namespace trifix
