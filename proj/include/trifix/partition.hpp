#pragma once

#include <compare>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace trifix {

/// A partition I = (i_1 <= i_2 <= ... <= i_l) of its weight. Ordering is
/// lexicographic on the nondecreasing part list; every table this library
/// serializes is emitted in that order.
class Partition {
 public:
  Partition() = default;
  /// Parts may be given in any order; they are sorted. Throws on a part <= 0.
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Number of parts equal to `part`.
  int multiplicity(int part) const;

  /// Multiset union (product of the indexed monomials).
  Partition merged(const Partition& other) const;
  /// True if this multiset is contained in `other` (monomial divisibility).
  bool divides(const Partition& other) const;

  /// "(1,1,2)".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& lhs, const Partition& rhs) {
    return lhs.parts_ <=> rhs.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// All partitions of k in lexicographic order. k == 0 yields the single
/// empty partition; k < 0 throws.
std::vector<Partition> partitions(int k);

/// Partitions of k whose parts are all drawn from `allowed` (sorted or not).
std::vector<Partition> partitions_with_parts(int k, std::span<const int> allowed);

}  // namespace trifix
