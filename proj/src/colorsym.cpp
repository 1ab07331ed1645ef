#include "listsep/colorsym.hpp"

#include <algorithm>
#include <map>

namespace listsep {

namespace {

Subset rotate(Subset s, int n) {
  const std::uint32_t full = Subset::full(n).mask();
  std::uint32_t m = s.mask();
  return Subset(((m << 1) | (m >> (n - 1))) & full);
}

}  // namespace

std::vector<Orbit> orbit_decompose(int layer, int n) {
  if (n < 1 || n > kMaxVertices) throw DomainError("orbit_decompose: n out of range");
  if (layer < 1 || layer > n) throw DomainError("orbit_decompose: layer must satisfy 1 <= i <= n");
  std::vector<Orbit> orbits;
  std::vector<bool> seen(std::size_t{1} << n, false);
  for (Subset s : subsets_of_size(n, layer)) {
    if (seen[s.mask()]) continue;
    Orbit orbit;
    for (Subset cur = s; !seen[cur.mask()]; cur = rotate(cur, n)) {
      seen[cur.mask()] = true;
      orbit.members.push_back(cur);
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

BalancedPartition balanced_partition(const WeightVector& weights) {
  const int n = static_cast<int>(weights.w.size());
  if (n < 1 || n > kMaxVertices) throw DomainError("balanced_partition: weight vector length out of range");
  if (std::any_of(weights.w.begin(), weights.w.end(), [](std::int64_t x) { return x < 0; }))
    throw DomainError("balanced_partition: weights must be nonnegative");

  BalancedPartition out;
  out.classes.assign(n, {});
  auto size_of = [&](int color) { return out.classes[color - 1].size(); };
  auto snapshot = [&] {
    std::vector<std::size_t> sizes;
    for (const auto& c : out.classes) sizes.push_back(c.size());
    out.checkpoints.push_back(std::move(sizes));
  };

  for (int layer = 1; layer <= n; ++layer) {
    auto orbits = orbit_decompose(layer, n);
    for (std::int64_t copy = 0; copy < weights.w[layer - 1]; ++copy) {
      for (const Orbit& orbit : orbits) {
        if (n <= 2) {
          // Too small for the rotation argument; poorest member wins.
          for (Subset s : orbit.members) {
            Vertex pick = 0;
            for (Vertex v : s.members())
              if (pick == 0 || size_of(v) < size_of(pick)) pick = v;
            out.classes[pick - 1].push_back(s);
          }
          snapshot();
          continue;
        }

        // Start on the first color that lags its cyclic predecessor.
        int start = 1;
        for (int j = 1; j <= n; ++j) {
          int prev = (j == 1) ? n : j - 1;
          if (size_of(j) < size_of(prev)) {
            start = j;
            break;
          }
        }
        const std::size_t len = orbit.members.size();
        std::size_t anchor = 0;
        while (!orbit.members[anchor].contains(start)) ++anchor;
        for (std::size_t k = 0; k < len; ++k) {
          int color = static_cast<int>((start - 1 + k) % n) + 1;
          out.classes[color - 1].push_back(orbit.members[(anchor + k) % len]);
        }
        snapshot();
      }
    }
  }
  return out;
}

ColorSymResult colorsym(const ListAssignment& lists, int b) {
  if (b < 1) throw DomainError("b must be at least 1");
  const int n = lists.n();
  std::map<std::uint32_t, ColorSet> blocks = proper_intersections(lists);

  ColorSymResult result;
  result.w.assign(n, 0);
  std::vector<std::vector<Color>> given(n);
  auto done = [&] { return std::all_of(result.w.begin(), result.w.end(), [b](std::int64_t x) { return x >= b; }); };

  for (Vertex i = 1; i <= n; ++i) {
    auto it = blocks.find(Subset::singleton(i).mask());
    if (it == blocks.end()) continue;
    for (Color c : it->second) given[i - 1].push_back(c);
    result.w[i - 1] = static_cast<std::int64_t>(it->second.size());
  }

  for (int layer = 2; layer <= n && !done(); ++layer) {
    auto orbits = orbit_decompose(layer, n);
    std::map<std::uint32_t, std::size_t> cursor;
    bool progress = true;
    while (progress && !done()) {
      progress = false;
      for (const Orbit& orbit : orbits) {
        for (Subset s : orbit.members) {
          auto it = blocks.find(s.mask());
          if (it == blocks.end()) continue;
          std::size_t& next = cursor[s.mask()];
          if (next >= it->second.size()) continue;
          Color color = it->second.elements()[next++];
          Vertex pick = 0;
          for (Vertex v : s.members())
            if (pick == 0 || result.w[v - 1] < result.w[pick - 1]) pick = v;
          given[pick - 1].push_back(color);
          ++result.w[pick - 1];
          progress = true;
          if (done()) break;
        }
        if (done()) break;
      }
    }
  }

  if (done()) {
    MultiColoring coloring;
    for (auto& colors : given) coloring.assigned.emplace_back(std::vector<Color>(colors.begin(), colors.begin() + b));
    result.coloring = std::move(coloring);
  }
  return result;
}

}  // namespace listsep
