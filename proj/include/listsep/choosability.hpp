#pragma once

#include <optional>
#include <vector>

#include "listsep/setsys.hpp"

namespace listsep {

/// Per-vertex color sets chosen from the lists.
struct MultiColoring {
  std::vector<ColorSet> assigned;
};

/// Either a witness coloring or a subset S whose amplitude falls short of b|S|.
/// The fast path (amplitude_ok) never produces a witness; it reports only
/// whether a violating subset exists.
struct ChoosabilityVerdict {
  bool colorable = false;
  std::optional<MultiColoring> witness;
  std::optional<Subset> violating_subset;
  std::optional<std::int64_t> violating_amplitude;
};

/// Limits for the exhaustive coloring oracle.
struct OracleLimits {
  int max_vertices = 6;
  std::size_t max_palette = 24;
};

/// Amplitude condition on K_n. Returns the smallest violating subset (by size,
/// then canonical order) when one exists.
ChoosabilityVerdict amplitude_ok(const PIVector& v, int b);

/// Exhaustive backtracking search for a b-coloring. Independent of the
/// amplitude condition; throws BudgetExceeded past the oracle limits.
ChoosabilityVerdict brute_force_color(const ListAssignment& lists, int b, const OracleLimits& limits = {});

/// True iff `coloring` picks exactly b colors from each list, pairwise disjoint.
bool is_valid_coloring(const ListAssignment& lists, const MultiColoring& coloring, int b);

struct AbcAnswer {
  bool choosable = false;
  std::optional<PIVector> counterexample;  // on n vertices, c-separating, a-uniform
};

struct SearchOptions;

/// (a,b,c)-choosability of K_n decided through the counter-example search.
AbcAnswer is_abc_choosable(int n, int a, int b, int c);
AbcAnswer is_abc_choosable(int n, int a, int b, int c, const SearchOptions& options);

}  // namespace listsep
