#include "listsep/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "listsep/constructions.hpp"

namespace listsep {

namespace {

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) { return -floor_div(-num, den); }

// Branch-and-bound over the non-singleton proper intersections.
//
// Once every x_S with |S| >= 2 is fixed, the singleton counts are forced by
// the per-vertex equations (x_{i} = a - sum_{S ∋ i, |S|>=2} x_S >= 0), and the
// total becomes n*a - sum_{|S|>=2} (|S|-1) x_S. The amplitude constraint
// total <= nb - 1 is therefore a covering target on the "gain"
// sum (|S|-1) x_S >= n(a-b) + 1, subject to per-vertex capacity a and
// per-pair capacity c. Variables are visited from the largest subsets down.
class CounterexampleSearch {
 public:
  CounterexampleSearch(int n, int a, int b, int c, const SearchOptions& options)
      : n_(n), a_(a), c_(c), options_(options), need_(static_cast<std::int64_t>(n) * (a - b) + 1) {
    const auto& order = canonical_subsets(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      if (it->size() >= 2) vars_.push_back(*it);
    x_.assign(std::size_t{1} << n, 0);
    vcap_.assign(n, a);
    pcap_.assign(static_cast<std::size_t>(n) * n, c);
    if (options_.symmetry_reduction) build_permutations();
    start_ = std::chrono::steady_clock::now();
  }

  std::optional<PIVector> run() {
    if (!dfs(0)) return std::nullopt;
    PIVector v(n_);
    for (Subset s : vars_)
      if (x_[s.mask()] != 0) v.set(s, x_[s.mask()]);
    for (int i = 0; i < n_; ++i) v.set(Subset::singleton(i + 1), vcap_[i]);
    return v;
  }

 private:
  void build_permutations() {
    std::vector<int> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::vector<std::uint32_t> image(vars_.size());
      for (std::size_t p = 0; p < vars_.size(); ++p) {
        std::uint32_t m = 0;
        for (std::uint32_t bits = vars_[p].mask(); bits; bits &= bits - 1) m |= 1u << perm[std::countr_zero(bits)];
        image[p] = m;
      }
      perm_images_.push_back(std::move(image));
    }
  }

  // True iff some vertex permutation maps the completed prefix to a
  // lexicographically larger one; such a branch cannot hold the orbit's
  // lex-max representative.
  bool dominated(std::size_t prefix) const {
    for (const auto& image : perm_images_) {
      for (std::size_t p = 0; p < prefix; ++p) {
        std::int64_t mine = x_[vars_[p].mask()];
        std::int64_t theirs = x_[image[p]];
        if (theirs != mine) {
          if (theirs > mine) return true;
          break;
        }
      }
    }
    return false;
  }

  std::int64_t pcap(int i, int j) const { return pcap_[static_cast<std::size_t>(i) * n_ + j]; }
  void add_pcap(int i, int j, std::int64_t d) {
    pcap_[static_cast<std::size_t>(i) * n_ + j] += d;
    pcap_[static_cast<std::size_t>(j) * n_ + i] += d;
  }

  // Upper bound on the gain still obtainable from sets of size <= smax.
  // A set of size s spends s vertex units and (s-1) pair units at each
  // member, and returns (s-1)/s gain per member.
  std::int64_t remaining_gain_bound(int smax) const {
    std::int64_t scaled = 0;  // in units of 1/(2*smax)
    for (int i = 0; i < n_; ++i) {
      std::int64_t pairs = 0;
      for (int j = 0; j < n_; ++j)
        if (j != i) pairs += std::min<std::int64_t>(pcap(i, j), vcap_[j]);
      pairs = std::min<std::int64_t>(pairs, static_cast<std::int64_t>(smax - 1) * vcap_[i]);
      scaled += std::min<std::int64_t>(2 * (smax - 1) * vcap_[i], smax * pairs);
    }
    return scaled / (2 * smax);
  }

  void tick() {
    ++nodes_;
    if (options_.node_limit && nodes_ > *options_.node_limit)
      throw BudgetExceeded("search exceeded node limit of " + std::to_string(*options_.node_limit));
    if (options_.time_limit && (nodes_ & 0xfff) == 0 &&
        std::chrono::steady_clock::now() - start_ > *options_.time_limit)
      throw BudgetExceeded("search exceeded time limit");
  }

  bool dfs(std::size_t pos) {
    tick();
    if (gain_ >= need_) return true;
    if (pos == vars_.size()) return false;

    Subset s = vars_[pos];
    int size = s.size();
    bool boundary = pos > 0 && vars_[pos - 1].size() != size;
    if (boundary && !perm_images_.empty() && dominated(pos)) return false;
    if (gain_ + remaining_gain_bound(size) < need_) return false;

    std::vector<int> members;
    for (std::uint32_t bits = s.mask(); bits; bits &= bits - 1) members.push_back(std::countr_zero(bits));
    std::int64_t cap = a_;
    for (std::size_t u = 0; u < members.size(); ++u) {
      cap = std::min(cap, vcap_[members[u]]);
      for (std::size_t w = u + 1; w < members.size(); ++w) cap = std::min(cap, pcap(members[u], members[w]));
    }

    for (std::int64_t val = cap; val >= 0; --val) {
      apply(s, members, val);
      bool found = dfs(pos + 1);
      if (found) return true;
      apply(s, members, -val);
    }
    return false;
  }

  void apply(Subset s, const std::vector<int>& members, std::int64_t delta) {
    x_[s.mask()] += delta;
    gain_ += delta * (static_cast<std::int64_t>(members.size()) - 1);
    for (std::size_t u = 0; u < members.size(); ++u) {
      vcap_[members[u]] -= delta;
      for (std::size_t w = u + 1; w < members.size(); ++w) add_pcap(members[u], members[w], -delta);
    }
  }

  int n_;
  int a_;
  int c_;
  SearchOptions options_;
  std::int64_t need_;
  std::vector<Subset> vars_;
  std::vector<std::int64_t> x_;
  std::vector<std::int64_t> vcap_;
  std::vector<std::int64_t> pcap_;
  std::vector<std::vector<std::uint32_t>> perm_images_;
  std::int64_t gain_ = 0;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

void check_query(int n, int a, int b) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (b < 1 || b > a) throw DomainError("need 1 <= b <= a");
}

}  // namespace

std::optional<PIVector> find_counterexample(int n, int a, int b, int c, const SearchOptions& options) {
  check_query(n, a, b);
  if (c < 0) throw DomainError("c must be nonnegative");
  if (n > options.max_vertices)
    throw BudgetExceeded("counter-example search limited to n <= " + std::to_string(options.max_vertices));
  c = std::min(c, a);
  return CounterexampleSearch(n, a, b, c, options).run();
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::Exhaustive:
      return "exhaustive";
    case CertificateKind::ClosedForm:
      return "closed-form";
    case CertificateKind::AmplitudeBound:
      return "amplitude-bound";
  }
  return "unknown";
}

std::optional<int> sep_closed_form(int n, int a, int b) {
  if (n < 2 || b < 1 || a < b) return std::nullopt;
  if (a >= n * b) return a;
  if (n == 2) return std::min(a, 2 * (a - b));
  if (n == 3) return (a < 2 * b) ? a - b : 2 * a - 3 * b;
  if (a < 2 * b) return static_cast<int>(floor_div(2 * (a - b), n - 1));
  if (a >= (n - 1) * b) return 2 * a - n * b;
  return std::nullopt;
}

SepResult sep(const SepQuery& q, const SearchOptions& options, std::optional<int> max_m) {
  if (q.n < 2) throw DomainError("sep needs n >= 2");
  check_query(q.n, q.a, q.b);

  SepResult result;
  result.closed_form = sep_closed_form(q.n, q.a, q.b);

  if (q.a >= q.n * q.b) {
    // |union over S| >= a >= |S| b for every S.
    result.value = q.a;
    result.certificate = CertificateKind::AmplitudeBound;
    return result;
  }

  int top = std::min(q.n, max_m.value_or(q.n));
  if (top > options.max_vertices) {
    if (q.n > options.max_vertices && result.closed_form) {
      result.value = *result.closed_form;
      result.certificate = CertificateKind::ClosedForm;
      if (q.a < 2 * q.b) {
        result.counterexample = counterexample_low(q.n, q.a, q.b);
      } else {
        result.counterexample = counterexample_high(q.n, q.a, q.b);
      }
      return result;
    }
    throw BudgetExceeded("sep search limited to n <= " + std::to_string(options.max_vertices));
  }

  int best_c = q.a + 1;
  std::optional<PIVector> best;
  for (int m = top; m >= 2; --m) {
    int hi = std::min(best_c - 1, q.a);
    if (hi < 0) break;
    auto at_hi = find_counterexample(m, q.a, q.b, hi, options);
    if (!at_hi) continue;
    int lo = 0;
    std::optional<PIVector> witness = std::move(at_hi);
    // Least feasible c lies in [lo, hi]; feasibility is monotone in c.
    while (lo < hi) {
      int mid = lo + (hi - lo) / 2;
      if (auto found = find_counterexample(m, q.a, q.b, mid, options)) {
        hi = mid;
        witness = std::move(found);
      } else {
        lo = mid + 1;
      }
    }
    best_c = hi;
    best = std::move(witness);
    result.witness_vertices = m;
  }

  if (best) {
    result.value = best_c - 1;
    result.counterexample = pad_with_private_vertices(*best, q.n, q.a);
  } else {
    result.value = q.a;
  }
  result.certificate = CertificateKind::Exhaustive;
  return result;
}

int sep_symmetric(const SepQuery& q) {
  if (q.n < 2 || q.n > 30) throw DomainError("sep_symmetric needs 2 <= n <= 30");
  check_query(q.n, q.a, q.b);
  const int n = q.n;
  std::vector<std::int64_t> size_coef(n + 1), pair_coef(n + 1), amp_coef(n + 1);
  for (int i = 1; i <= n; ++i) {
    size_coef[i] = binomial64(n - 1, i - 1);
    pair_coef[i] = binomial64(n - 2, i - 2);
    amp_coef[i] = binomial64(n, i);
  }
  const std::int64_t amp_limit = static_cast<std::int64_t>(n) * q.b - 1;
  std::int64_t best = q.a + 1;

  // x_i chosen for i = n down to 1; x_1 absorbs the remainder.
  auto rec = [&](auto&& self, int i, std::int64_t remaining, std::int64_t pair, std::int64_t amp) -> void {
    if (pair >= best || amp > amp_limit) return;
    if (i == 1) {
      amp += amp_coef[1] * remaining;
      if (amp <= amp_limit) best = pair;
      return;
    }
    for (std::int64_t x = remaining / size_coef[i]; x >= 0; --x)
      self(self, i - 1, remaining - x * size_coef[i], pair + x * pair_coef[i], amp + x * amp_coef[i]);
  };
  rec(rec, n, q.a, 0, 0);
  return best > q.a ? q.a : static_cast<int>(best - 1);
}

std::vector<ScanRow> conjecture_scan(int n, int a_max, int b_max, const SearchOptions& options, int jobs) {
  if (n < 4) throw DomainError("conjecture scan needs n >= 4");
  if (n > options.max_vertices) throw BudgetExceeded("scan limited to n <= " + std::to_string(options.max_vertices));
  std::vector<ScanRow> rows;
  for (int b = 1; b <= b_max; ++b) {
    for (int a = 2 * b; a <= a_max && a < (n - 1) * b; ++a) {
      ScanRow row;
      row.n = n;
      row.a = a;
      row.b = b;
      row.p = a / b;
      std::int64_t num = 2LL * row.p * a - static_cast<std::int64_t>(row.p) * (row.p + 1) * b;
      row.conjectured = static_cast<int>(ceil_div(num, n - 1));
      if (n == 4) row.k4_refined = static_cast<int>(ceil_div(4LL * a - 6LL * b - 1, 3));
      rows.push_back(row);
    }
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < rows.size(); k = next++) {
      try {
        auto& row = rows[k];
        row.sep = sep({row.n, row.a, row.b}, options).value;
        row.epsilon = row.sep - row.conjectured;
        row.flagged = row.epsilon < -1 || row.epsilon > 0;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  int workers = std::max(1, std::min<int>(jobs, static_cast<int>(rows.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "n,a,b,sep,conjectured,epsilon\n";
  for (const auto& r : rows) os << r.n << ',' << r.a << ',' << r.b << ',' << r.sep << ',' << r.conjectured << ',' << r.epsilon << '\n';
  return os.str();
}

}  // namespace listsep
