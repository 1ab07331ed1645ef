#include "listsep/setsys.hpp"

#include <algorithm>
#include <numeric>

namespace listsep {

// ColorSet ----------------------------------------------------------------

ColorSet::ColorSet(std::initializer_list<Color> colors) : ColorSet(std::vector<Color>(colors)) {}

ColorSet::ColorSet(std::vector<Color> colors) : colors_(std::move(colors)) {
  std::sort(colors_.begin(), colors_.end());
  colors_.erase(std::unique(colors_.begin(), colors_.end()), colors_.end());
}

bool ColorSet::contains(Color c) const { return std::binary_search(colors_.begin(), colors_.end(), c); }

void ColorSet::insert(Color c) {
  auto it = std::lower_bound(colors_.begin(), colors_.end(), c);
  if (it == colors_.end() || *it != c) colors_.insert(it, c);
}

void ColorSet::erase(Color c) {
  auto it = std::lower_bound(colors_.begin(), colors_.end(), c);
  if (it != colors_.end() && *it == c) colors_.erase(it);
}

ColorSet set_union(const ColorSet& lhs, const ColorSet& rhs) {
  ColorSet out;
  std::set_union(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(out.colors_));
  return out;
}

ColorSet set_intersection(const ColorSet& lhs, const ColorSet& rhs) {
  ColorSet out;
  std::set_intersection(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(out.colors_));
  return out;
}

ColorSet set_difference(const ColorSet& lhs, const ColorSet& rhs) {
  ColorSet out;
  std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(out.colors_));
  return out;
}

// ListAssignment ------------------------------------------------------------

ListAssignment::ListAssignment(std::vector<ColorSet> lists) : lists_(std::move(lists)) {
  if (lists_.empty()) throw DomainError("list assignment needs at least one vertex");
  if (static_cast<int>(lists_.size()) > kMaxVertices)
    throw DomainError("list assignment has more than " + std::to_string(kMaxVertices) + " vertices");
}

std::optional<std::size_t> ListAssignment::uniform_size() const {
  std::size_t a = lists_.front().size();
  for (const auto& l : lists_)
    if (l.size() != a) return std::nullopt;
  return a;
}

ColorSet ListAssignment::palette() const {
  ColorSet out;
  for (const auto& l : lists_) out = set_union(out, l);
  return out;
}

// PIVector --------------------------------------------------------------------

PIVector::PIVector(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) throw DomainError("vertex count out of range: " + std::to_string(n));
  counts_.assign(std::size_t{1} << n, 0);
}

PIVector::PIVector(int n, std::span<const std::int64_t> canonical_values) : PIVector(n) {
  const auto& order = canonical_subsets(n);
  if (canonical_values.size() != order.size())
    throw DomainError("expected " + std::to_string(order.size()) + " canonical values, got " +
                      std::to_string(canonical_values.size()));
  for (std::size_t k = 0; k < order.size(); ++k) set(order[k], canonical_values[k]);
}

void PIVector::check(Subset s) const {
  if (s.empty() || s.mask() >= counts_.size())
    throw DomainError("subset " + s.to_string() + " is not a nonempty subset of [" + std::to_string(n_) + "]");
}

void PIVector::set(Subset s, std::int64_t value) {
  check(s);
  if (value < 0) throw DomainError("proper-intersection counts must be nonnegative");
  counts_[s.mask()] = value;
}

void PIVector::add(Subset s, std::int64_t delta) { set(s, counts_[s.mask()] + delta); }

std::vector<std::int64_t> PIVector::canonical_values() const {
  std::vector<std::int64_t> out;
  for (Subset s : canonical_subsets(n_)) out.push_back(counts_[s.mask()]);
  return out;
}

std::int64_t PIVector::total() const { return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0}); }

// Operations --------------------------------------------------------------------

std::map<std::uint32_t, ColorSet> proper_intersections(const ListAssignment& lists) {
  // Every color lands in exactly one block: the set of vertices whose list holds it.
  std::map<Color, std::uint32_t> owners;
  for (Vertex v = 1; v <= lists.n(); ++v)
    for (Color c : lists.list(v)) owners[c] |= 1u << (v - 1);

  std::map<std::uint32_t, ColorSet> blocks;
  for (auto [color, mask] : owners) blocks[mask].insert(color);
  return blocks;
}

PIVector pi_vector(const ListAssignment& lists) {
  PIVector v(lists.n());
  for (const auto& [mask, colors] : proper_intersections(lists))
    v.set(Subset(mask), static_cast<std::int64_t>(colors.size()));
  return v;
}

ListAssignment realize(const PIVector& v, Color color_base) {
  std::vector<std::vector<Color>> lists(v.n());
  Color next = color_base;
  for (Subset s : canonical_subsets(v.n())) {
    for (std::int64_t k = 0; k < v[s]; ++k, ++next)
      for (Vertex i : s.members()) lists[i - 1].push_back(next);
  }
  std::vector<ColorSet> sets;
  sets.reserve(lists.size());
  for (auto& l : lists) sets.emplace_back(std::move(l));
  return ListAssignment(std::move(sets));
}

std::int64_t intersection_size(const PIVector& v, Subset s) {
  if (s.empty()) throw DomainError("intersection over the empty subset");
  std::int64_t sum = 0;
  const std::uint32_t full = Subset::full(v.n()).mask();
  if ((s.mask() & ~full) != 0) throw DomainError("subset " + s.to_string() + " exceeds vertex range");
  // Enumerate supersets of s inside [n].
  const std::uint32_t rest = full & ~s.mask();
  for (std::uint32_t extra = rest;; extra = (extra - 1) & rest) {
    sum += v[Subset(s.mask() | extra)];
    if (extra == 0) break;
  }
  return sum;
}

std::int64_t list_size(const PIVector& v, Vertex i) {
  if (i < 1 || i > v.n()) throw DomainError("vertex " + std::to_string(i) + " out of range");
  return intersection_size(v, Subset::singleton(i));
}

std::int64_t pair_intersection(const PIVector& v, Vertex i, Vertex j) {
  if (i == j) throw DomainError("pair_intersection needs two distinct vertices");
  if (i < 1 || i > v.n() || j < 1 || j > v.n()) throw DomainError("vertex out of range");
  return intersection_size(v, Subset::of({i, j}));
}

std::int64_t max_pair_intersection(const PIVector& v) {
  std::int64_t best = 0;
  for (Vertex i = 1; i <= v.n(); ++i)
    for (Vertex j = i + 1; j <= v.n(); ++j) best = std::max(best, pair_intersection(v, i, j));
  return best;
}

std::int64_t amplitude(const PIVector& v, Subset s) {
  if (s.empty()) throw DomainError("amplitude over the empty subset");
  if ((s.mask() & ~Subset::full(v.n()).mask()) != 0)
    throw DomainError("subset " + s.to_string() + " exceeds vertex range");
  std::int64_t sum = 0;
  for (std::uint32_t m = 1; m < v.raw().size(); ++m)
    if (m & s.mask()) sum += v.raw()[m];
  return sum;
}

BigInt assignment_count(const PIVector& v, std::optional<std::int64_t> palette) {
  std::int64_t total = v.total();
  std::int64_t p = 0;
  if (palette) {
    p = *palette;
  } else {
    std::int64_t widest = 0;
    for (Vertex i = 1; i <= v.n(); ++i) widest = std::max(widest, list_size(v, i));
    p = v.n() * widest;
  }
  if (p < total)
    throw DomainError("palette of " + std::to_string(p) + " colors cannot hold " + std::to_string(total) + " colors");

  auto factorial = [](std::int64_t k) {
    BigInt r = 1;
    for (std::int64_t i = 2; i <= k; ++i) r *= i;
    return r;
  };
  BigInt denom = factorial(p - total);
  for (std::int64_t c : v.raw()) denom *= factorial(c);
  return factorial(p) / denom;
}

bool is_uniform(const PIVector& v, std::int64_t a) {
  for (Vertex i = 1; i <= v.n(); ++i)
    if (list_size(v, i) != a) return false;
  return true;
}

PIVector pad_with_private_vertices(const PIVector& v, int n, std::int64_t a) {
  if (n < v.n()) throw DomainError("cannot pad to fewer vertices");
  PIVector out(n);
  for (std::uint32_t m = 1; m < v.raw().size(); ++m)
    if (v.raw()[m] != 0) out.set(Subset(m), v.raw()[m]);
  for (Vertex i = v.n() + 1; i <= n; ++i) out.set(Subset::singleton(i), a);
  return out;
}

}  // namespace listsep
