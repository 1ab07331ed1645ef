#pragma once

#include <vector>

#include "listsep/setsys.hpp"

namespace listsep {

/// Symmetric assignment: every proper intersection of an i-subset has size x[i-1].
struct SymVector {
  int n = 0;
  std::vector<std::int64_t> x;

  /// Per-vertex list size: sum_i C(n-1, i-1) x_i.
  std::int64_t list_size() const;
  /// Size of every pairwise intersection: sum_{i>=2} C(n-2, i-2) x_i.
  std::int64_t pair_intersection() const;
  /// Amplitude over all n vertices: sum_i C(n, i) x_i.
  std::int64_t amplitude() const;
};

PIVector expand_symmetric(const SymVector& x);

/// Number of sets in the family containing each vertex.
using CardinalitySupport = std::vector<int>;

CardinalitySupport cardinality_support(int n, const std::vector<Subset>& family);

struct SupportTwins {
  std::vector<Subset> small;  // k+1 subsets of size k
  std::vector<Subset> large;  // k subsets of size k+1
};

/// Two families with equal cardinality support: k+1 k-subsets and k
/// (k+1)-subsets. Requires n >= 4, k >= 2 and C(n-k+1, 2) >= k.
SupportTwins support_twins(int n, int k);

/// Quasi-symmetric counter-example for a = x*b: symmetric weight p on every
/// x-subset, shifted by one unit from a twin family of x-subsets onto the
/// matching (x+1)-subsets.
PIVector counterexample_xb(int n, int a, int b, int x);

/// Counter-example at c' = floor(2(a-b)/(n-1)) + 1 for b <= a < 2b, built
/// from singletons and pairs only.
PIVector counterexample_low(int n, int a, int b);

/// Counter-example at c' = 2a - nb + 1 for (n-1)b <= a < nb, built from the
/// (n-1)-subsets and the full set.
PIVector counterexample_high(int n, int a, int b);

struct AmplitudeBoundStep {
  int subset_size = 0;
  Rational lower_bound;  // on the amplitude of any subset of this size
  std::int64_t required = 0;  // subset_size * b
};

struct ChoosabilityCertificate {
  int c = 0;
  int lambda = 0;
  std::vector<AmplitudeBoundStep> steps;
  bool certified = false;
};

/// Amplitude lower bounds showing K_n is (a, b, floor(a^2 / (2b(n-1))))-choosable.
/// Requires a >= 2b and that this c divides a.
ChoosabilityCertificate choosable_biKn(int n, int a, int b);

/// Per-vertex sums, maximum pair intersection and full amplitude of a vector.
struct ConstructionAudit {
  std::vector<std::int64_t> list_sizes;
  std::int64_t max_pair = 0;
  std::int64_t amplitude = 0;
};

ConstructionAudit audit(const PIVector& v);

}  // namespace listsep
