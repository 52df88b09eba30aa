#include "trifix/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "trifix/error.hpp"

namespace trifix {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int part : parts_) {
    if (part <= 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "partition parts must be positive, got " + std::to_string(part));
    }
  }
  std::sort(parts_.begin(), parts_.end());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int part) const {
  const auto [lo, hi] = std::equal_range(parts_.begin(), parts_.end(), part);
  return static_cast<int>(hi - lo);
}

Partition Partition::merged(const Partition& other) const {
  Partition out;
  out.parts_.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(out.parts_));
  out.weight_ = weight_ + other.weight_;
  return out;
}

bool Partition::divides(const Partition& other) const {
  return std::includes(other.parts_.begin(), other.parts_.end(), parts_.begin(),
                       parts_.end());
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i != 0) {
      out += ',';
    }
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

namespace {

// Depth-first over nondecreasing part sequences; visiting smaller next parts
// first yields lexicographic order.
void extend(int remaining, std::size_t min_index, const std::vector<int>& allowed,
            std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (std::size_t i = min_index; i < allowed.size() && allowed[i] <= remaining; ++i) {
    prefix.push_back(allowed[i]);
    extend(remaining - allowed[i], i, allowed, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_with_parts(int k, std::span<const int> allowed) {
  if (k < 0) {
    throw Error(ErrorKind::kInvalidArgument, "partitions of a negative integer");
  }
  std::set<int> unique;
  for (int part : allowed) {
    if (part > 0) {
      unique.insert(part);
    }
  }
  const std::vector<int> sorted(unique.begin(), unique.end());
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend(k, 0, sorted, prefix, out);
  return out;
}

std::vector<Partition> partitions(int k) {
  if (k < 0) {
    throw Error(ErrorKind::kInvalidArgument, "partitions of a negative integer");
  }
  std::vector<int> all(static_cast<std::size_t>(k));
  std::iota(all.begin(), all.end(), 1);
  return partitions_with_parts(k, all);
}

}  // namespace trifix
