#pragma once

#include <optional>
#include <vector>

#include "listsep/choosability.hpp"
#include "listsep/setsys.hpp"

namespace listsep {

/// Cyclic-shift orbit of i-subsets of [n]; `members[k]` is the k-th rotation
/// of `members[0]`, which is the canonically smallest element.
struct Orbit {
  std::vector<Subset> members;
};

/// Orbits of the i-subsets of [n] under v -> v+1 (mod n), ordered by their
/// smallest element.
std::vector<Orbit> orbit_decompose(int layer, int n);

/// Multiplicity w[i-1] of the layer of i-subsets.
struct WeightVector {
  std::vector<std::int64_t> w;
};

struct BalancedPartition {
  /// classes[j-1] holds the subsets colored j; each contains vertex j.
  std::vector<std::vector<Subset>> classes;
  /// Class sizes recorded after each orbit is placed.
  std::vector<std::vector<std::size_t>> checkpoints;
};

/// Colors every element of the multiset P(n)^w with one of its own members so
/// that class sizes differ by at most one.
BalancedPartition balanced_partition(const WeightVector& weights);

struct ColorSymResult {
  std::optional<MultiColoring> coloring;  // b colors per vertex on success
  std::vector<std::int64_t> w;            // colors handed to each vertex
  bool ok() const { return coloring.has_value(); }
};

/// Greedy layer-by-layer multicoloring. Singleton blocks go to their owner;
/// each later layer hands colors out one at a time to the member with the
/// fewest colors so far (lowest index on ties), walking the layer's sets in
/// cyclic-orbit order one color per set per pass.
ColorSymResult colorsym(const ListAssignment& lists, int b);

}  // namespace listsep
