#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "listsep/setsys.hpp"

namespace listsep {

/// Class counts of a-list assignments on n vertices up to proper-intersection
/// equivalence. One PIVector is one class.
struct EquivClassCount {
  int n = 0;
  int a = 0;
  BigInt total;               // all classes
  BigInt residue_full_empty;  // classes with I_p([n]) empty
  BigInt residue_tight;       // I_p([n]) empty and some I_p({i}) empty
};

struct CountingBudget {
  int max_n = 4;
  int max_a = 8;
};

EquivClassCount count_classes(int n, int a, const CountingBudget& budget = {});

/// Calls `visit` on every PIVector with all per-vertex sums equal to a.
void enumerate_uniform_vectors(int n, int a, const std::function<void(const PIVector&)>& visit);

/// (a^4 + 8a^3 + 24a^2 + 32a + 16 - [a odd]) / 16.
BigInt closed_form_L3(int a);

/// Classes on three vertices with I_p([3]) empty and some empty singleton block.
BigInt tight_count_L3(int a);

struct DegreeFit {
  int n = 0;
  int a_max = 0;
  std::vector<BigInt> values;                   // count for a = 0..a_max
  std::vector<std::vector<BigInt>> differences;  // differences[d] = d-th forward differences
  /// Least d whose d-th differences are constant over at least two entries.
  std::optional<int> degree;
  /// Same test after averaging neighbours, which cancels a (-1)^a term.
  std::optional<int> parity_adjusted_degree;
  /// Exact fit f(a) = sum_k coefficients[k] a^k + alternating * (-1)^a at the
  /// adjusted degree (alternating is zero when the plain fit already works).
  std::vector<Rational> coefficients;
  Rational alternating;
};

DegreeFit degree_fit(int n, int a_max, const CountingBudget& budget = {});

}  // namespace listsep
