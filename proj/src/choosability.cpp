#include "listsep/choosability.hpp"

#include <algorithm>
#include <numeric>

#include "listsep/search.hpp"

namespace listsep {

ChoosabilityVerdict amplitude_ok(const PIVector& v, int b) {
  if (b < 1) throw DomainError("b must be at least 1");
  ChoosabilityVerdict verdict;
  for (Subset s : canonical_subsets(v.n())) {
    std::int64_t amp = amplitude(v, s);
    if (amp < static_cast<std::int64_t>(b) * s.size()) {
      verdict.colorable = false;
      verdict.violating_subset = s;
      verdict.violating_amplitude = amp;
      return verdict;
    }
  }
  verdict.colorable = true;
  return verdict;
}

namespace {

class ColoringOracle {
 public:
  ColoringOracle(const ListAssignment& lists, int b) : lists_(lists), b_(b), chosen_(lists.n()) {
    order_.resize(lists.n());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int x, int y) { return lists.lists()[x].size() < lists.lists()[y].size(); });
  }

  bool run() { return place(0); }
  std::vector<ColorSet> take() { return std::move(chosen_); }

 private:
  bool place(std::size_t depth) {
    if (depth == order_.size()) return true;
    int vertex = order_[depth];
    std::vector<Color> free;
    for (Color c : lists_.lists()[vertex])
      if (!used_.contains(c)) free.push_back(c);
    if (free.size() < static_cast<std::size_t>(b_)) return false;

    // Lexicographic b-combinations of the free colors.
    std::vector<std::size_t> idx(b_);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
      ColorSet pick;
      for (std::size_t k : idx) pick.insert(free[k]);
      for (Color c : pick) used_.insert(c);
      chosen_[vertex] = pick;
      if (place(depth + 1)) return true;
      for (Color c : pick) used_.erase(c);

      int k = b_ - 1;
      while (k >= 0 && idx[k] == free.size() - b_ + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int j = k + 1; j < b_; ++j) idx[j] = idx[j - 1] + 1;
    }
    chosen_[vertex] = ColorSet{};
    return false;
  }

  const ListAssignment& lists_;
  int b_;
  std::vector<int> order_;
  std::vector<ColorSet> chosen_;
  ColorSet used_;
};

}  // namespace

ChoosabilityVerdict brute_force_color(const ListAssignment& lists, int b, const OracleLimits& limits) {
  if (b < 1) throw DomainError("b must be at least 1");
  if (lists.n() > limits.max_vertices)
    throw BudgetExceeded("coloring oracle limited to " + std::to_string(limits.max_vertices) + " vertices");
  if (lists.palette().size() > limits.max_palette)
    throw BudgetExceeded("coloring oracle limited to " + std::to_string(limits.max_palette) + " colors");

  ChoosabilityVerdict verdict;
  ColoringOracle oracle(lists, b);
  if (oracle.run()) {
    verdict.colorable = true;
    verdict.witness = MultiColoring{oracle.take()};
  }
  return verdict;
}

bool is_valid_coloring(const ListAssignment& lists, const MultiColoring& coloring, int b) {
  if (static_cast<int>(coloring.assigned.size()) != lists.n()) return false;
  ColorSet seen;
  std::size_t total = 0;
  for (Vertex v = 1; v <= lists.n(); ++v) {
    const ColorSet& pick = coloring.assigned[v - 1];
    if (pick.size() != static_cast<std::size_t>(b)) return false;
    if (set_intersection(pick, lists.list(v)).size() != pick.size()) return false;
    seen = set_union(seen, pick);
    total += pick.size();
  }
  return seen.size() == total;
}

AbcAnswer is_abc_choosable(int n, int a, int b, int c) { return is_abc_choosable(n, a, b, c, SearchOptions{}); }

AbcAnswer is_abc_choosable(int n, int a, int b, int c, const SearchOptions& options) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (b < 1 || b > a) throw DomainError("need 1 <= b <= a");
  if (c < 0 || c > a) throw DomainError("need 0 <= c <= a");
  AbcAnswer answer;
  for (int m = 2; m <= n; ++m) {
    if (auto found = find_counterexample(m, a, b, c, options)) {
      answer.counterexample = pad_with_private_vertices(*found, n, a);
      return answer;
    }
  }
  answer.choosable = true;
  return answer;
}

}  // namespace listsep
