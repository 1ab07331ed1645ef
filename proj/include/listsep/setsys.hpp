#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "listsep/core.hpp"

namespace listsep {

using Color = std::uint32_t;

/// A set of colors kept sorted and duplicate-free.
class ColorSet {
 public:
  ColorSet() = default;
  ColorSet(std::initializer_list<Color> colors);
  explicit ColorSet(std::vector<Color> colors);

  std::size_t size() const { return colors_.size(); }
  bool empty() const { return colors_.empty(); }
  bool contains(Color c) const;
  const std::vector<Color>& elements() const { return colors_; }
  auto begin() const { return colors_.begin(); }
  auto end() const { return colors_.end(); }

  void insert(Color c);
  void erase(Color c);

  friend ColorSet set_union(const ColorSet& lhs, const ColorSet& rhs);
  friend ColorSet set_intersection(const ColorSet& lhs, const ColorSet& rhs);
  friend ColorSet set_difference(const ColorSet& lhs, const ColorSet& rhs);
  friend bool operator==(const ColorSet&, const ColorSet&) = default;

 private:
  std::vector<Color> colors_;
};

/// One color list per vertex of K_n.
class ListAssignment {
 public:
  explicit ListAssignment(std::vector<ColorSet> lists);

  int n() const { return static_cast<int>(lists_.size()); }
  const ColorSet& list(Vertex v) const { return lists_.at(v - 1); }
  const std::vector<ColorSet>& lists() const { return lists_; }

  /// Common list size if every list has the same size.
  std::optional<std::size_t> uniform_size() const;
  ColorSet palette() const;

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::vector<ColorSet> lists_;
};

/// Cardinalities of all proper intersections of a list assignment on n vertices.
/// Counts are indexed by subset mask; the empty subset is never stored.
class PIVector {
 public:
  explicit PIVector(int n);
  /// Builds from values listed in canonical subset order.
  PIVector(int n, std::span<const std::int64_t> canonical_values);

  int n() const { return n_; }
  std::int64_t operator[](Subset s) const { return counts_[s.mask()]; }
  void set(Subset s, std::int64_t value);
  void add(Subset s, std::int64_t delta);

  /// Values in canonical subset order (length 2^n - 1).
  std::vector<std::int64_t> canonical_values() const;
  std::int64_t total() const;
  const std::vector<std::int64_t>& raw() const { return counts_; }

  friend bool operator==(const PIVector&, const PIVector&) = default;

 private:
  void check(Subset s) const;

  int n_;
  std::vector<std::int64_t> counts_;
};

/// I_p(S) for every nonempty S (absent keys are empty).
std::map<std::uint32_t, ColorSet> proper_intersections(const ListAssignment& lists);

PIVector pi_vector(const ListAssignment& lists);

/// Allocates each block I_p(S) as a run of consecutive colors starting at
/// `color_base`, walking subsets in canonical order.
ListAssignment realize(const PIVector& v, Color color_base = 1);

std::int64_t list_size(const PIVector& v, Vertex i);
std::int64_t pair_intersection(const PIVector& v, Vertex i, Vertex j);
std::int64_t max_pair_intersection(const PIVector& v);

/// |intersection of L(i) for i in S|, reconstructed from proper intersections.
std::int64_t intersection_size(const PIVector& v, Subset s);

/// |union of L(i) for i in S|.
std::int64_t amplitude(const PIVector& v, Subset s);

/// Number of raw assignments over a palette of `palette` colors that share
/// this vector. Defaults to n times the largest list size.
BigInt assignment_count(const PIVector& v, std::optional<std::int64_t> palette = std::nullopt);

/// True iff every per-vertex sum equals `a`.
bool is_uniform(const PIVector& v, std::int64_t a);

/// Embeds an m-vertex vector into n >= m vertices; each new vertex gets a
/// private block of `a` colors.
PIVector pad_with_private_vertices(const PIVector& v, int n, std::int64_t a);

}  // namespace listsep
