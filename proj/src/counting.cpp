#include "listsep/counting.hpp"

#include <algorithm>

namespace listsep {

namespace {

// Walks every nonnegative assignment of the non-singleton blocks that keeps
// each per-vertex sum <= a; the singleton blocks absorb the remainder.
class UniformWalker {
 public:
  UniformWalker(int n, int a) : n_(n), full_(Subset::full(n)) {
    const auto& order = canonical_subsets(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      if (it->size() >= 2) vars_.push_back(*it);
    x_.assign(std::size_t{1} << n, 0);
    slack_.assign(n, a);
  }

  template <typename Leaf>
  void walk(Leaf&& leaf) {
    step(0, leaf);
  }

  std::int64_t block(Subset s) const {
    if (s.size() == 1) return slack_[std::countr_zero(s.mask())];
    return x_[s.mask()];
  }
  const std::vector<std::int64_t>& slack() const { return slack_; }
  const std::vector<Subset>& vars() const { return vars_; }
  Subset full() const { return full_; }

 private:
  template <typename Leaf>
  void step(std::size_t pos, Leaf& leaf) {
    if (pos == vars_.size()) {
      leaf(*this);
      return;
    }
    Subset s = vars_[pos];
    std::int64_t cap = -1;
    for (std::uint32_t bits = s.mask(); bits; bits &= bits - 1) {
      std::int64_t room = slack_[std::countr_zero(bits)];
      cap = (cap < 0) ? room : std::min(cap, room);
    }
    for (std::int64_t val = 0; val <= cap; ++val) {
      x_[s.mask()] = val;
      for (std::uint32_t bits = s.mask(); bits; bits &= bits - 1) slack_[std::countr_zero(bits)] -= val;
      step(pos + 1, leaf);
      for (std::uint32_t bits = s.mask(); bits; bits &= bits - 1) slack_[std::countr_zero(bits)] += val;
    }
    x_[s.mask()] = 0;
  }

  int n_;
  Subset full_;
  std::vector<Subset> vars_;
  std::vector<std::int64_t> x_;
  std::vector<std::int64_t> slack_;
};

void check_budget(int n, int a, const CountingBudget& budget) {
  if (n < 1) throw DomainError("count_classes needs n >= 1");
  if (a < 0) throw DomainError("count_classes needs a >= 0");
  if (n > budget.max_n || a > budget.max_a)
    throw BudgetExceeded("class enumeration limited to n <= " + std::to_string(budget.max_n) +
                         ", a <= " + std::to_string(budget.max_a));
}

// Least d with constant d-th differences over at least two entries.
std::optional<int> constant_difference_order(const std::vector<BigInt>& seq,
                                             std::vector<std::vector<BigInt>>* table = nullptr) {
  std::vector<BigInt> row = seq;
  std::optional<int> found;
  for (int d = 0; !row.empty(); ++d) {
    if (table) table->push_back(row);
    if (!found && row.size() >= 2 && std::all_of(row.begin(), row.end(), [&](const BigInt& v) { return v == row[0]; }))
      found = d;
    std::vector<BigInt> next;
    for (std::size_t k = 0; k + 1 < row.size(); ++k) next.push_back(row[k + 1] - row[k]);
    row = std::move(next);
  }
  return found;
}

// Exact solution of an overdetermined but consistent system; nullopt when
// inconsistent or rank deficient.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return std::nullopt;
  const std::size_t cols = rows[0].size() - 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) return std::nullopt;
    std::swap(rows[rank], rows[pivot]);
    Rational lead = rows[rank][col];
    for (auto& v : rows[rank]) v /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (std::size_t k = 0; k <= cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rows[r][cols] != 0) return std::nullopt;
  std::vector<Rational> sol(cols);
  for (std::size_t k = 0; k < cols; ++k) sol[k] = rows[k][cols];
  return sol;
}

}  // namespace

EquivClassCount count_classes(int n, int a, const CountingBudget& budget) {
  check_budget(n, a, budget);
  EquivClassCount out;
  out.n = n;
  out.a = a;
  std::uint64_t total = 0, full_empty = 0, tight = 0;
  UniformWalker walker(n, a);
  walker.walk([&](const UniformWalker& w) {
    ++total;
    if (w.block(w.full()) != 0) return;
    ++full_empty;
    const auto& s = w.slack();
    if (std::any_of(s.begin(), s.end(), [](std::int64_t v) { return v == 0; })) ++tight;
  });
  out.total = total;
  out.residue_full_empty = full_empty;
  out.residue_tight = tight;
  return out;
}

void enumerate_uniform_vectors(int n, int a, const std::function<void(const PIVector&)>& visit) {
  if (n < 1 || n > kMaxVertices || a < 0) throw DomainError("enumerate_uniform_vectors: bad parameters");
  UniformWalker walker(n, a);
  walker.walk([&](const UniformWalker& w) {
    PIVector v(n);
    for (Subset s : w.vars())
      if (w.block(s) != 0) v.set(s, w.block(s));
    for (Vertex i = 1; i <= n; ++i) v.set(Subset::singleton(i), w.slack()[i - 1]);
    visit(v);
  });
}

BigInt closed_form_L3(int a) {
  if (a < 0) throw DomainError("closed_form_L3 needs a >= 0");
  BigInt x = a;
  BigInt num = x * x * x * x + 8 * x * x * x + 24 * x * x + 32 * x + 16 - (a % 2);
  return num / 16;
}

BigInt tight_count_L3(int a) {
  if (a < 0) throw DomainError("tight_count_L3 needs a >= 0");
  BigInt x = a;
  BigInt num = 3 * x * x + 6 * x + ((a % 2 == 0) ? 4 : 3);
  return num / 4;
}

DegreeFit degree_fit(int n, int a_max, const CountingBudget& budget) {
  if (a_max < n + 3) throw DomainError("degree_fit needs a_max >= n + 3");
  check_budget(n, a_max, budget);
  DegreeFit fit;
  fit.n = n;
  fit.a_max = a_max;
  for (int a = 0; a <= a_max; ++a) fit.values.push_back(count_classes(n, a, budget).total);
  fit.degree = constant_difference_order(fit.values, &fit.differences);

  std::vector<BigInt> paired;
  for (std::size_t k = 0; k + 1 < fit.values.size(); ++k) paired.push_back(fit.values[k] + fit.values[k + 1]);
  fit.parity_adjusted_degree = constant_difference_order(paired);

  auto solve = [&](int d, bool alternating) {
    std::vector<std::vector<Rational>> rows;
    for (int a = 0; a <= a_max; ++a) {
      std::vector<Rational> row;
      Rational power = 1;
      for (int k = 0; k <= d; ++k, power *= a) row.push_back(power);
      if (alternating) row.push_back(a % 2 == 0 ? 1 : -1);
      row.push_back(Rational(fit.values[a]));
      rows.push_back(std::move(row));
    }
    return solve_exact(std::move(rows));
  };

  if (fit.degree) {
    if (auto sol = solve(*fit.degree, false)) fit.coefficients = *sol;
  } else if (fit.parity_adjusted_degree) {
    int d = *fit.parity_adjusted_degree;
    // Need more samples than unknowns for the fit to say anything.
    if (a_max + 1 > d + 2) {
      if (auto sol = solve(d, true)) {
        fit.alternating = sol->back();
        sol->pop_back();
        fit.coefficients = *sol;
      }
    }
  }
  return fit;
}

}  // namespace listsep
