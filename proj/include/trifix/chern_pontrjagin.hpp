#pragma once

#include <map>
#include <set>

#include "trifix/exact_arith.hpp"
#include "trifix/partition.hpp"

namespace trifix {

/// Linear form in Chern numbers: Chern partition -> coefficient.
using ChernForm = std::map<Partition, BigRational>;

/// Expands p_j = sum_{i=0}^{2j} (-1)^{i+j} c_i c_{2j-i} for every Pontrjagin
/// partition J of k and expresses p_J[M] of a unitary 4k-manifold in the
/// Chern numbers listed in `surviving` (partitions of 2k); every other Chern
/// monomial is set to zero during the expansion. Only partitions J with a
/// nonzero form appear in the result.
std::map<Partition, ChernForm> chern_to_pontrjagin_forms(int k,
                                                         const std::set<Partition>& surviving);

}  // namespace trifix
