#include "doctest.h"
#include "listsep/choosability.hpp"
#include "listsep/counting.hpp"
#include "listsep/search.hpp"

using namespace listsep;

namespace {

// sep by brute force: the smallest maximum pair intersection over all
// a-uniform vectors failing the amplitude condition, minus one.
std::vector<int> naive_sep(int n, int a) {
  std::vector<int> best(a + 1, a);
  enumerate_uniform_vectors(n, a, [&](const PIVector& v) {
    int mp = static_cast<int>(max_pair_intersection(v));
    for (int b = 1; b <= a; ++b)
      if (mp - 1 < best[b] && !amplitude_ok(v, b).colorable) best[b] = mp - 1;
  });
  return best;
}

}  // namespace

TEST_CASE("search matches brute force on K_2, K_3 and K_4") {
  for (int n = 2; n <= 4; ++n)
    for (int a = 1; a <= (n == 4 ? 6 : 8); ++a) {
      auto want = naive_sep(n, a);
      for (int b = 1; b <= a; ++b) {
        CAPTURE(n);
        CAPTURE(a);
        CAPTURE(b);
        SepResult r = sep({n, a, b});
        CHECK(r.value == want[b]);
        if (r.value < a) {
          REQUIRE(r.counterexample);
          CHECK(r.counterexample->n() == n);
          CHECK(is_uniform(*r.counterexample, a));
          CHECK(max_pair_intersection(*r.counterexample) == r.value + 1);
          CHECK_FALSE(amplitude_ok(*r.counterexample, b).colorable);
        }
      }
    }
}

TEST_CASE("symmetry pruning does not change the answer") {
  SearchOptions plain;
  plain.symmetry_reduction = false;
  for (int n = 3; n <= 5; ++n)
    for (int b = 1; b <= 3; ++b)
      for (int a = b; a <= 3 * b && a <= 7; ++a) CHECK(sep({n, a, b}).value == sep({n, a, b}, plain).value);
}

TEST_CASE("K_3 values") {
  CHECK(sep({3, 5, 2}).value == 4);
  CHECK(sep({3, 3, 2}).value == 1);
  CHECK(sep({3, 6, 2}).value == 6);
  CHECK(sep({2, 3, 2}).value == 2);
  CHECK(sep({2, 5, 2}).value == 5);
}

TEST_CASE("sub-configurations on fewer vertices count") {
  SepResult full = sep({4, 5, 2});
  SepResult upto3 = sep({4, 5, 2}, {}, 3);
  CHECK(upto3.value == sep({3, 5, 2}).value);
  CHECK(full.value <= upto3.value);
  CHECK(sep({4, 5, 2}, {}, 2).value == sep({2, 5, 2}).value);
}

TEST_CASE("amplitude bound short-circuits large lists") {
  SepResult r = sep({4, 12, 3});
  CHECK(r.value == 12);
  CHECK(r.certificate == CertificateKind::AmplitudeBound);
  CHECK_FALSE(r.counterexample);
  CHECK(is_abc_choosable(4, 12, 3, 12).choosable);
}

TEST_CASE("closed forms where they apply") {
  CHECK(sep_closed_form(2, 3, 2) == 2);
  CHECK(sep_closed_form(2, 5, 2) == 5);
  CHECK(sep_closed_form(3, 5, 2) == 4);
  CHECK(sep_closed_form(4, 7, 2) == 6);
  CHECK(sep_closed_form(5, 7, 4) == 1);
  CHECK_FALSE(sep_closed_form(5, 9, 4).has_value());
  for (int n = 2; n <= 5; ++n)
    for (int b = 1; b <= 3; ++b)
      for (int a = b; a <= n * b + 1; ++a)
        if (auto cf = sep_closed_form(n, a, b); cf && (n == 3 || a != 2 * b)) CHECK(sep({n, a, b}).value == *cf);
}

TEST_CASE("symmetric bound is never below the exact value") {
  for (int n = 3; n <= 5; ++n)
    for (int b = 1; b <= 3; ++b)
      for (int a = b; a <= 2 * n; ++a) CHECK(sep_symmetric({n, a, b}) >= sep({n, a, b}).value);
}

TEST_CASE("budgets are enforced") {
  CHECK_THROWS_AS(find_counterexample(6, 3, 2, 1), BudgetExceeded);
  SearchOptions tiny;
  tiny.node_limit = 1;
  CHECK_THROWS_AS(sep({5, 7, 4}, tiny), BudgetExceeded);
  CHECK_THROWS_AS(sep({3, 0, 1}), DomainError);
}

TEST_CASE("scan rows and csv") {
  auto rows = conjecture_scan(4, 8, 3, {}, 2);
  REQUIRE(rows.size() == 6);
  for (const ScanRow& r : rows) {
    CHECK(r.sep == sep({r.n, r.a, r.b}).value);
    CHECK(r.epsilon == r.sep - r.conjectured);
    CHECK(r.flagged == (r.epsilon < -1 || r.epsilon > 0));
  }
  CHECK(conjecture_scan(4, 8, 3, {}, 1).size() == rows.size());
  std::string csv = scan_csv(rows);
  CHECK(csv.rfind("n,a,b,sep,conjectured,epsilon\n", 0) == 0);
  CHECK(csv.find("4,5,2,3,3,0\n") != std::string::npos);
}
