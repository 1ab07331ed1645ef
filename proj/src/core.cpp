#include "listsep/core.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <sstream>

namespace listsep {

Subset Subset::of(const std::vector<Vertex>& members) {
  std::uint32_t mask = 0;
  for (Vertex v : members) {
    if (v < 1 || v > kMaxVertices) throw DomainError("vertex out of range: " + std::to_string(v));
    mask |= 1u << (v - 1);
  }
  return Subset(mask);
}

std::vector<Vertex> Subset::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Vertex v : members()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

bool canonical_less(Subset lhs, Subset rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  // Equal sizes: the first differing member decides. The lowest bit present
  // in exactly one mask is the first position where the sorted sequences
  // diverge; whichever set owns it is lexicographically smaller.
  std::uint32_t diff = lhs.mask() ^ rhs.mask();
  if (diff == 0) return false;
  std::uint32_t low = diff & (~diff + 1u);
  return (lhs.mask() & low) != 0;
}

std::vector<Subset> subsets_of_size(int n, int size) {
  std::vector<Subset> out;
  if (size < 1 || size > n) return out;
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (int i : idx) mask |= 1u << i;
    out.emplace_back(mask);
    int k = size - 1;
    while (k >= 0 && idx[k] == n - size + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

const std::vector<Subset>& canonical_subsets(int n) {
  if (n < 0 || n > kMaxVertices) throw DomainError("vertex count out of range: " + std::to_string(n));
  static std::array<std::once_flag, kMaxVertices + 1> flags;
  static std::array<std::vector<Subset>, kMaxVertices + 1> cache;
  std::call_once(flags[n], [n] {
    auto& out = cache[n];
    out.reserve((std::size_t{1} << n) - 1);
    for (int k = 1; k <= n; ++k) {
      auto layer = subsets_of_size(n, k);
      out.insert(out.end(), layer.begin(), layer.end());
    }
  });
  return cache[n];
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::int64_t binomial64(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace listsep
