#pragma once

#include <optional>
#include <vector>

#include "spaf/matrix.hpp"

namespace spaf {

struct MaxMinProduct {
  CapacityMatrix value;
  /// witness(i,j) = smallest k with min(a(i,k), b(k,j)) == value(i,j).
  WitnessMatrix witness;
};

/// q(i,j) = max_k min(a(i,k), b(k,j)), naive cubic loop.
MaxMinProduct maxmin_product(const CapacityMatrix& a, const CapacityMatrix& b);

/// Max bottleneck over all paths: I + C + C^2 + ... up to length n-1.
CapacityMatrix maxmin_closure(const CapacityMatrix& c);

/// Per-row restriction of the intermediate index k.
using RowIndexSets = std::vector<std::vector<std::uint32_t>>;

/// q(i,j) = min_k a(i,k) + b(k,j); when `bridges` is given, k ranges over
/// bridges[i] only. The diagonal of the result is forced to 0.
DistanceMatrix minplus_product(const DistanceMatrix& a, const DistanceMatrix& b,
                               const RowIndexSets* bridges = nullptr);

/// Reflexive-transitive closure (reachability).
BoolMatrix bool_closure(const BoolMatrix& b);

}  // namespace spaf
