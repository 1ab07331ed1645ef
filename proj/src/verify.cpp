#include "listsep/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include "listsep/choosability.hpp"
#include "listsep/colorsym.hpp"
#include "listsep/constructions.hpp"
#include "listsep/counting.hpp"
#include "listsep/kernel.hpp"

namespace listsep {

namespace {

constexpr std::size_t kMaxFindings = 24;

// Counts grid points and keeps the first few mismatches.
class Tally {
 public:
  void pass() { ++checked_; }
  void fail(const std::string& what) {
    ++checked_;
    ++failed_;
    if (findings_.size() < kMaxFindings) findings_.push_back(what);
  }
  void expect(bool ok, const std::function<std::string()>& what) { ok ? pass() : fail(what()); }
  void skip(const std::string& what) { skipped_.push_back(what); }

  void finish(CheckResult& r) const {
    if (checked_ == 0) {
      r.status = CheckStatus::Skipped;
      r.observed = "no points within budget";
    } else {
      r.status = failed_ == 0 ? CheckStatus::Pass : CheckStatus::Fail;
      r.observed = std::to_string(checked_ - failed_) + "/" + std::to_string(checked_) + " points agree";
    }
    r.expected = "all points agree";
    r.findings = findings_;
    if (failed_ > findings_.size()) r.findings.push_back("... " + std::to_string(failed_ - findings_.size()) + " more");
    for (const auto& s : skipped_) r.findings.push_back("skipped: " + s);
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> findings_;
  std::vector<std::string> skipped_;
};

std::string point(int n, int a, int b) {
  return "n=" + std::to_string(n) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::ostringstream out;
  out << "(";
  for (std::size_t k = 0; k < xs.size(); ++k) out << (k ? "," : "") << xs[k];
  out << ")";
  return out.str();
}

// Exhaustive sep plus a sanity check of the returned certificate.
int checked_sep(int n, int a, int b, const VerifyConfig& config, std::string& problem) {
  SepResult r = sep({n, a, b}, config.search);
  if (r.value < a) {
    if (!r.counterexample) {
      problem = "missing counter-example";
    } else {
      const PIVector& v = *r.counterexample;
      if (!is_uniform(v, a) || max_pair_intersection(v) != r.value + 1 || amplitude_ok(v, b).colorable)
        problem = "counter-example does not certify sep";
    }
  } else if (r.certificate == CertificateKind::AmplitudeBound) {
    // Confirm the amplitude shortcut against the search itself.
    if (!is_abc_choosable(n, a, b, a, config.search).choosable) problem = "search refutes the amplitude bound";
  }
  return r.value;
}

bool selected(const VerifyConfig& config, int id) {
  return config.only.empty() || std::find(config.only.begin(), config.only.end(), id) != config.only.end();
}

void criterion_examples(const VerifyConfig& config, CheckResult& r) {
  r.title = "example reproduction";
  ListAssignment lists = config.example ? *config.example : example_assignment();
  const std::vector<std::int64_t> want = {1, 0, 0, 2, 2, 0, 0, 1, 0, 1, 1, 0, 1, 1, 0};
  if (lists.n() != 4) {
    r.status = CheckStatus::Fail;
    r.observed = "n=" + std::to_string(lists.n());
    r.expected = "n=4";
    return;
  }
  PIVector v = pi_vector(lists);
  auto got = v.canonical_values();
  std::int64_t amp123 = amplitude(v, Subset::of({1, 2, 3}));
  std::int64_t amp_full = amplitude(v, Subset::full(4));
  ChoosabilityVerdict verdict = amplitude_ok(v, 3);
  std::ostringstream obs;
  obs << "V=" << join(got) << " amp{1,2,3}=" << amp123 << " amp[4]=" << amp_full
      << " ok(b=3)=" << (verdict.colorable ? "true" : "false");
  r.observed = obs.str();
  r.expected = "V=" + join(want) + " amp{1,2,3}=8 amp[4]=10 ok(b=3)=false";
  r.status = (got == want && amp123 == 8 && amp_full == 10 && !verdict.colorable) ? CheckStatus::Pass : CheckStatus::Fail;
}

void criterion_k3(const VerifyConfig& config, CheckResult& r) {
  r.title = "K_3 closed form, 1 <= b <= a <= 9";
  Tally t;
  if (config.max_n < 3) {
    t.skip("n=3 beyond --max-n");
  } else {
    for (int b = 1; b <= 9; ++b)
      for (int a = b; a <= 9; ++a) {
        int want = (a < 2 * b) ? a - b : (a < 3 * b) ? 2 * a - 3 * b : a;
        std::string problem;
        int got = checked_sep(3, a, b, config, problem);
        t.expect(got == want && problem.empty(), [&] {
          return point(3, a, b) + ": sep " + std::to_string(got) + ", closed form " + std::to_string(want) +
                 (problem.empty() ? "" : " (" + problem + ")");
        });
      }
  }
  t.finish(r);
}

template <typename Visit>
void low_grid(const VerifyConfig& config, Tally& t, Visit&& visit) {
  for (int n : {3, 4, 5}) {
    if (n > config.max_n) {
      t.skip("n=" + std::to_string(n) + " beyond --max-n");
      continue;
    }
    for (int b = 1; b <= 4; ++b)
      for (int a = b; a <= 2 * b; ++a) visit(n, a, b);
  }
}

template <typename Visit>
void high_grid(const VerifyConfig& config, Tally& t, Visit&& visit) {
  for (int n : {3, 4}) {
    if (n > config.max_n) {
      t.skip("n=" + std::to_string(n) + " beyond --max-n");
      continue;
    }
    for (int b = 1; b <= 3; ++b)
      for (int a = (n - 1) * b; a <= n * b; ++a) visit(n, a, b);
  }
}

void criterion_low(const VerifyConfig& config, CheckResult& r) {
  r.title = "low range sep = floor(2(a-b)/(n-1)), b <= a <= 2b";
  Tally t;
  low_grid(config, t, [&](int n, int a, int b) {
    int want = 2 * (a - b) / (n - 1);
    std::string problem;
    int got = checked_sep(n, a, b, config, problem);
    t.expect(got == want && problem.empty(), [&] {
      return point(n, a, b) + ": sep " + std::to_string(got) + ", formula " + std::to_string(want) +
             (problem.empty() ? "" : " (" + problem + ")");
    });
  });
  t.finish(r);
}

void criterion_high(const VerifyConfig& config, CheckResult& r) {
  r.title = "high range sep = 2a-nb, (n-1)b <= a <= nb";
  Tally t;
  high_grid(config, t, [&](int n, int a, int b) {
    int want = 2 * a - n * b;
    std::string problem;
    int got = checked_sep(n, a, b, config, problem);
    t.expect(got == want && problem.empty(), [&] {
      return point(n, a, b) + ": sep " + std::to_string(got) + ", formula " + std::to_string(want) +
             (problem.empty() ? "" : " (" + problem + ")");
    });
  });
  t.finish(r);
}

void criterion_constructions(const VerifyConfig& config, CheckResult& r) {
  r.title = "counter-example constructors on the range grids";
  Tally t;
  auto check = [&](const char* family, int n, int a, int b, const std::function<PIVector()>& build, bool high) {
    std::string problem;
    int s = checked_sep(n, a, b, config, problem);
    try {
      ConstructionAudit au = audit(build());
      bool sums = std::all_of(au.list_sizes.begin(), au.list_sizes.end(), [a](std::int64_t x) { return x == a; });
      bool amp = high ? au.amplitude == n * b - 1 : au.amplitude < n * b;
      t.expect(sums && au.max_pair == s + 1 && amp, [&] {
        return std::string(family) + " " + point(n, a, b) + ": sums " + join(au.list_sizes) + ", max pair " +
               std::to_string(au.max_pair) + " (sep+1 = " + std::to_string(s + 1) + "), amplitude " +
               std::to_string(au.amplitude) + " (nb = " + std::to_string(n * b) + ")";
      });
    } catch (const DomainError& e) {
      t.fail(std::string(family) + " " + point(n, a, b) + ": no construction (" + e.what() + "), sep " + std::to_string(s));
    }
  };
  low_grid(config, t, [&](int n, int a, int b) { check("low", n, a, b, [=] { return counterexample_low(n, a, b); }, false); });
  high_grid(config, t, [&](int n, int a, int b) { check("high", n, a, b, [=] { return counterexample_high(n, a, b); }, true); });
  t.finish(r);
}

void criterion_oracle(const VerifyConfig& config, CheckResult& r) {
  r.title = "amplitude condition vs exhaustive coloring, n <= 4, a <= 4, b <= 3";
  Tally t;
  for (int n = 1; n <= 4; ++n) {
    if (n > config.max_n) {
      t.skip("n=" + std::to_string(n) + " beyond --max-n");
      continue;
    }
    for (int a = 1; a <= 4; ++a)
      enumerate_uniform_vectors(n, a, [&](const PIVector& v) {
        ListAssignment lists = realize(v);
        for (int b = 1; b <= 3; ++b) {
          bool fast = amplitude_ok(v, b).colorable;
          ChoosabilityVerdict slow = brute_force_color(lists, b);
          bool witness_ok = !slow.colorable || (slow.witness && is_valid_coloring(lists, *slow.witness, b));
          t.expect(fast == slow.colorable && witness_ok, [&] {
            return point(n, a, b) + " V=" + join(v.canonical_values()) + ": amplitude " + (fast ? "ok" : "violated") +
                   ", search " + (slow.colorable ? "colorable" : "not colorable");
          });
        }
      });
  }
  t.finish(r);
}

void criterion_counting(const VerifyConfig& config, CheckResult& r) {
  r.title = "class counts, closed forms and recursions";
  Tally t;
  CountingBudget budget{4, 10};
  for (int n : {2, 3}) {
    if (n > config.max_n) {
      t.skip("n=" + std::to_string(n) + " beyond --max-n");
      continue;
    }
    const int a_max = (n == 2) ? 10 : 6;
    std::optional<EquivClassCount> prev;
    for (int a = 0; a <= a_max; ++a) {
      EquivClassCount cnt = count_classes(n, a, budget);
      const std::string at = "n=" + std::to_string(n) + " a=" + std::to_string(a);
      if (n == 2) {
        t.expect(cnt.total == a + 1, [&] { return at + ": count " + cnt.total.str() + ", expected " + std::to_string(a + 1); });
      } else {
        t.expect(cnt.total == closed_form_L3(a), [&] { return at + ": count " + cnt.total.str() + ", closed form " + closed_form_L3(a).str(); });
        t.expect(cnt.residue_tight == tight_count_L3(a),
                 [&] { return at + ": tight residue " + cnt.residue_tight.str() + ", expected " + tight_count_L3(a).str(); });
      }
      if (prev && a >= 1) {
        t.expect(cnt.total == prev->total + cnt.residue_full_empty, [&] { return at + ": first recursion fails"; });
        t.expect(cnt.residue_full_empty == prev->residue_full_empty + cnt.residue_tight, [&] { return at + ": second recursion fails"; });
      }
      prev = cnt;
    }
  }
  t.finish(r);
}

void criterion_kernel(const VerifyConfig&, CheckResult& r) {
  r.title = "kernel bases, ranks and extreme points";
  using namespace kernel;
  Tally t;
  for (int n = 3; n <= 12; ++n) {
    RationalVector va = vec_a(n), vc = vec_c(n);
    auto check_family = [&](const std::vector<NamedVector>& family, int want, bool both) {
      std::vector<RationalVector> vs;
      for (const auto& nv : family) {
        vs.push_back(nv.vec);
        t.expect(dot(va, nv.vec) == 0 && (!both || dot(vc, nv.vec) == 0),
                 [&] { return "n=" + std::to_string(n) + ": " + nv.name + " not in the kernel"; });
      }
      int rk = rank(vs);
      t.expect(static_cast<int>(family.size()) == want && rk == want, [&] {
        return "n=" + std::to_string(n) + ": " + std::to_string(family.size()) + " members, rank " + std::to_string(rk) +
               ", expected " + std::to_string(want);
      });
    };
    check_family(basis_ker_a(n), n - 1, false);
    if (n >= 4) check_family(basis_ker_ac(n), n - 2, true);

    for (int a = 0; a <= 12; ++a)
      for (int c = 0; c <= a; ++c) {
        ExtremePoints xs = extreme_points(n, a, c);
        for (const auto* x : {xs.x1 ? &*xs.x1 : nullptr, xs.x2 ? &*xs.x2 : nullptr}) {
          if (!x) continue;
          bool nonneg = std::all_of(x->entries.begin(), x->entries.end(), [](const Rational& q) { return q >= 0; });
          t.expect(dot(va, *x) == a && dot(vc, *x) == c && nonneg, [&] {
            return "n=" + std::to_string(n) + " a=" + std::to_string(a) + " c=" + std::to_string(c) + ": extreme point off the constraints";
          });
        }
        t.expect(xs.x1.has_value() == (a >= (n - 1) * c), [&] { return "x1 presence wrong at n=" + std::to_string(n); });
      }
  }
  t.finish(r);
}

void criterion_colorsym(const VerifyConfig& config, CheckResult& r) {
  r.title = "ColorSym on symmetric inputs, n <= 5, a <= 6, b <= 4";
  Tally t;
  for (int n = 1; n <= 5; ++n) {
    if (n > config.max_n) {
      t.skip("n=" + std::to_string(n) + " beyond --max-n");
      continue;
    }
    for (int a = 1; a <= 6; ++a) {
      // All x >= 0 with sum_i C(n-1, i-1) x_i = a.
      SymVector x{n, std::vector<std::int64_t>(n, 0)};
      std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t left) {
        if (i == n) {
          if (left != 0) return;
          ListAssignment lists = realize(expand_symmetric(x));
          for (int b = 1; b <= 4; ++b) {
            if (x.amplitude() < n * b) continue;
            ColorSymResult res = colorsym(lists, b);
            t.expect(res.ok() && is_valid_coloring(lists, *res.coloring, b),
                     [&] { return point(n, a, b) + " x=" + join(x.x) + ": no valid coloring"; });
          }
          return;
        }
        const std::int64_t w = binomial64(n - 1, i);
        for (std::int64_t k = 0; k * w <= left; ++k) {
          x.x[i] = k;
          rec(i + 1, left - k * w);
        }
        x.x[i] = 0;
      };
      rec(0, a);
    }
  }
  t.finish(r);
}

void criterion_scan(const VerifyConfig& config, CheckResult& r) {
  r.title = "conjecture scan n=4, 2b <= a < 3b, b <= 3 (report only)";
  if (config.max_n < 4) {
    r.status = CheckStatus::Skipped;
    r.observed = "n=4 beyond --max-n";
    r.expected = "epsilon in {-1,0}";
    return;
  }
  auto rows = conjecture_scan(4, 8, 3, config.search, config.jobs);
  int flagged = 0;
  for (const ScanRow& row : rows) {
    if (!row.flagged) continue;
    ++flagged;
    r.findings.push_back(point(row.n, row.a, row.b) + ": sep " + std::to_string(row.sep) + ", conjectured " +
                         std::to_string(row.conjectured) + ", epsilon " + std::to_string(row.epsilon));
  }
  std::vector<std::int64_t> eps;
  for (const ScanRow& row : rows) eps.push_back(row.epsilon);
  r.status = CheckStatus::Report;
  r.observed = std::to_string(rows.size()) + " rows, epsilon " + join(eps) + ", " + std::to_string(flagged) + " outside {-1,0}";
  r.expected = "epsilon in {-1,0}";
}

}  // namespace

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED";
    case CheckStatus::Report: return "REPORT";
  }
  return "?";
}

bool VerifyReport::any_failed() const {
  return std::any_of(items.begin(), items.end(), [](const CheckResult& r) { return r.status == CheckStatus::Fail; });
}

ListAssignment example_assignment() {
  return ListAssignment({ColorSet{1, 2, 3, 4, 5}, ColorSet{1, 2, 3, 6, 7}, ColorSet{3, 4, 6, 7, 8}, ColorSet{4, 6, 8, 9, 10}});
}

VerifyReport verify_paper(const VerifyConfig& config) {
  using Runner = void (*)(const VerifyConfig&, CheckResult&);
  const Runner runners[] = {criterion_examples, criterion_k3,      criterion_low,     criterion_high,    criterion_constructions,
                            criterion_oracle,   criterion_counting, criterion_kernel, criterion_colorsym, criterion_scan};
  VerifyReport report;
  for (int id = 1; id <= 10; ++id) {
    if (!selected(config, id)) continue;
    CheckResult r;
    r.id = id;
    auto t0 = std::chrono::steady_clock::now();
    try {
      runners[id - 1](config, r);
    } catch (const BudgetExceeded& e) {
      r.status = CheckStatus::Skipped;
      r.observed = std::string("budget exceeded: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.items.push_back(std::move(r));
  }
  return report;
}

void print_report(const VerifyReport& report, std::ostream& out, bool timings) {
  for (const CheckResult& r : report.items) {
    out << "[" << to_string(r.status) << "] " << r.id << ". " << r.title << ": observed " << r.observed << "; expected "
        << r.expected;
    if (timings) out << " (" << static_cast<long long>(r.seconds * 1000) << " ms)";
    out << "\n";
    for (const auto& f : r.findings) out << "    " << f << "\n";
  }
}

}  // namespace listsep
