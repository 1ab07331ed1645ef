#include "listsep/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace listsep {

std::int64_t SymVector::list_size() const {
  std::int64_t s = 0;
  for (int i = 1; i <= n; ++i) s += binomial64(n - 1, i - 1) * x[i - 1];
  return s;
}

std::int64_t SymVector::pair_intersection() const {
  std::int64_t s = 0;
  for (int i = 2; i <= n; ++i) s += binomial64(n - 2, i - 2) * x[i - 1];
  return s;
}

std::int64_t SymVector::amplitude() const {
  std::int64_t s = 0;
  for (int i = 1; i <= n; ++i) s += binomial64(n, i) * x[i - 1];
  return s;
}

PIVector expand_symmetric(const SymVector& x) {
  if (static_cast<int>(x.x.size()) != x.n) throw DomainError("symmetric vector length must equal n");
  PIVector v(x.n);
  for (Subset s : canonical_subsets(x.n)) v.set(s, x.x[s.size() - 1]);
  return v;
}

CardinalitySupport cardinality_support(int n, const std::vector<Subset>& family) {
  CardinalitySupport beta(n, 0);
  for (Subset s : family)
    for (Vertex v : s.members()) ++beta.at(v - 1);
  return beta;
}

SupportTwins support_twins(int n, int k) {
  if (n < 4 || k < 2) throw DomainError("support twins need n >= 4 and k >= 2");
  if (binomial64(n - k + 1, 2) < k)
    throw DomainError("support twins need C(n-k+1, 2) >= k (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");

  std::vector<Vertex> head;
  SupportTwins twins;
  if (2 * k <= n) {
    for (Vertex v = 1; v <= k; ++v) head.push_back(v);
    for (int i = 1; i <= k; ++i) {
      auto members = head;
      members.push_back(k + i);
      Subset big = Subset::of(members);
      twins.large.push_back(big);
      twins.small.push_back(Subset(big.mask() & ~Subset::singleton(i).mask()));
    }
    twins.small.push_back(Subset::of(head));
    return twins;
  }

  for (Vertex v = 1; v <= k - 1; ++v) head.push_back(v);
  std::vector<std::pair<Vertex, Vertex>> couples;
  for (Vertex x = k; x <= n && static_cast<int>(couples.size()) < k; ++x)
    for (Vertex y = x + 1; y <= n && static_cast<int>(couples.size()) < k; ++y) couples.emplace_back(x, y);

  for (int i = 1; i <= k; ++i) {
    auto members = head;
    members.push_back(couples[i - 1].first);
    members.push_back(couples[i - 1].second);
    Subset big = Subset::of(members);
    twins.large.push_back(big);
    Vertex dropped = (i <= k - 1) ? i : couples[k - 1].first;
    twins.small.push_back(Subset(big.mask() & ~Subset::singleton(dropped).mask()));
  }
  auto last = head;
  last.push_back(couples[k - 1].first);
  twins.small.push_back(Subset::of(last));
  return twins;
}

PIVector counterexample_xb(int n, int a, int b, int x) {
  if (b < 1 || x < 2 || x >= n) throw DomainError("counterexample_xb needs b >= 1 and 2 <= x < n");
  if (a != x * b) throw DomainError("counterexample_xb needs a = x*b");
  std::int64_t layer = binomial64(n - 1, x - 1);
  if (a % layer != 0) throw DomainError("a must be a multiple of C(n-1, x-1) = " + std::to_string(layer));
  std::int64_t p = a / layer;
  SupportTwins twins = support_twins(n, x);

  PIVector v(n);
  for (Subset s : subsets_of_size(n, x)) v.set(s, p);
  for (Subset s : twins.small) v.add(s, -1);
  for (Subset s : twins.large) v.add(s, +1);
  return v;
}

namespace {

// Deterministic Havel-Hakimi realization; returns edges (i, j) with i < j.
std::vector<std::pair<int, int>> realize_degrees(std::vector<int> degree) {
  const int n = static_cast<int>(degree.size());
  std::vector<std::pair<int, int>> edges;
  std::vector<int> order(n);
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int u, int w) { return degree[u] > degree[w]; });
    int head = order.front();
    int d = degree[head];
    if (d == 0) break;
    if (d > n - 1) throw std::logic_error("degree sequence is not graphical");
    degree[head] = 0;
    for (int k = 1; k <= d; ++k) {
      int other = order[k];
      if (degree[other] == 0) throw std::logic_error("degree sequence is not graphical");
      --degree[other];
      edges.emplace_back(std::min(head, other), std::max(head, other));
    }
  }
  return edges;
}

}  // namespace

PIVector counterexample_low(int n, int a, int b) {
  if (n < 3 || b < 1 || a < b || a > 2 * b) throw DomainError("counterexample_low needs n >= 3 and b <= a <= 2b");
  if (a == 2 * b)
    throw DomainError("counterexample_low: at a = 2b every singleton/pair vector has amplitude >= nb");

  const std::int64_t c1 = (2 * (a - b)) / (n - 1) + 1;
  const std::int64_t alpha = (n - 1) * c1 - a;
  PIVector v(n);

  if (alpha <= 0) {
    for (Vertex i = 1; i <= n; ++i) v.set(Subset::singleton(i), a - (n - 1) * c1);
    for (Vertex i = 1; i <= n; ++i)
      for (Vertex j = i + 1; j <= n; ++j) v.set(Subset::of({i, j}), c1);
    return v;
  }

  // Pairs carry c' or c'-1. A vertex with singleton s_i needs exactly
  // alpha + s_i light pairs; vertex 1 takes s = 1 when n*alpha is odd.
  std::vector<int> light_degree(n, static_cast<int>(alpha));
  if ((n * alpha) % 2 != 0) {
    light_degree[0] += 1;
    v.set(Subset::singleton(1), 1);
  }
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) v.set(Subset::of({i, j}), c1);
  for (auto [i, j] : realize_degrees(light_degree)) v.add(Subset::of({i + 1, j + 1}), -1);
  return v;
}

PIVector counterexample_high(int n, int a, int b) {
  if (n < 3 || b < 1 || a < (n - 1) * b || a > n * b)
    throw DomainError("counterexample_high needs n >= 3 and (n-1)b <= a <= nb");
  const std::int64_t c1 = 2LL * a - static_cast<std::int64_t>(n) * b + 1;
  const std::int64_t outer = a - c1;
  const std::int64_t full = (n - 1) * c1 - static_cast<std::int64_t>(n - 2) * a;
  if (outer < 0 || full < 0)
    throw DomainError("counterexample_high: no counter-example when a = nb (sep = a)");
  PIVector v(n);
  Subset all = Subset::full(n);
  for (Vertex i = 1; i <= n; ++i) v.set(Subset(all.mask() & ~Subset::singleton(i).mask()), outer);
  v.set(all, full);
  return v;
}

ChoosabilityCertificate choosable_biKn(int n, int a, int b) {
  if (n < 2 || b < 1) throw DomainError("choosable_biKn needs n >= 2 and b >= 1");
  if (a < 2 * b) throw DomainError("choosable_biKn needs a >= 2b");
  ChoosabilityCertificate cert;
  cert.c = static_cast<int>((static_cast<std::int64_t>(a) * a) / (2LL * b * (n - 1)));
  if (cert.c < 1) throw DomainError("choosable_biKn needs floor(a^2 / (2b(n-1))) >= 1");
  if (a % cert.c != 0) throw DomainError("choosable_biKn needs c = " + std::to_string(cert.c) + " to divide a");
  cert.lambda = a / cert.c;
  cert.certified = true;
  for (int i = 1; i <= n; ++i) {
    AmplitudeBoundStep step;
    step.subset_size = i;
    step.required = static_cast<std::int64_t>(i) * b;
    if (i <= cert.lambda) {
      step.lower_bound = Rational(static_cast<std::int64_t>(i) * a) - Rational(static_cast<std::int64_t>(i) * (i - 1) * cert.c, 2);
    } else {
      step.lower_bound = Rational(static_cast<std::int64_t>(cert.lambda + 1) * a, 2);
    }
    if (step.lower_bound < step.required) cert.certified = false;
    cert.steps.push_back(step);
  }
  return cert;
}

ConstructionAudit audit(const PIVector& v) {
  ConstructionAudit out;
  for (Vertex i = 1; i <= v.n(); ++i) out.list_sizes.push_back(list_size(v, i));
  out.max_pair = max_pair_intersection(v);
  out.amplitude = amplitude(v, Subset::full(v.n()));
  return out;
}

}  // namespace listsep
