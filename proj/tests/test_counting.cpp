#include "doctest.h"
#include "listsep/counting.hpp"

#include <set>

using namespace listsep;

namespace {

// Odometer over every vector in [0, a]^(2^n - 1), keeping the a-uniform ones.
EquivClassCount odometer(int n, int a) {
  const auto& order = canonical_subsets(n);
  std::vector<std::int64_t> digits(order.size(), 0);
  EquivClassCount out;
  out.n = n;
  out.a = a;
  while (true) {
    PIVector v(n, digits);
    if (is_uniform(v, a)) {
      ++out.total;
      if (v[Subset::full(n)] == 0) {
        ++out.residue_full_empty;
        bool tight = false;
        for (Vertex i = 1; i <= n; ++i) tight = tight || v[Subset::singleton(i)] == 0;
        if (tight) ++out.residue_tight;
      }
    }
    std::size_t k = 0;
    while (k < digits.size() && digits[k] == a) digits[k++] = 0;
    if (k == digits.size()) break;
    ++digits[k];
  }
  return out;
}

}  // namespace

TEST_CASE("class counts match an odometer over all vectors") {
  for (auto [n, a_max] : {std::pair{1, 6}, {2, 6}, {3, 4}, {4, 1}})
    for (int a = 0; a <= a_max; ++a) {
      EquivClassCount got = count_classes(n, a);
      EquivClassCount want = odometer(n, a);
      CAPTURE(n);
      CAPTURE(a);
      CHECK(got.total == want.total);
      CHECK(got.residue_full_empty == want.residue_full_empty);
      CHECK(got.residue_tight == want.residue_tight);
    }
}

TEST_CASE("two vertices give a + 1 classes") {
  for (int a = 0; a <= 10; ++a) CHECK(count_classes(2, a, {4, 10}).total == a + 1);
}

TEST_CASE("three-vertex closed forms") {
  const std::int64_t tight[] = {1, 3, 7, 12, 19, 27, 37};
  for (int a = 0; a <= 6; ++a) {
    EquivClassCount c = count_classes(3, a);
    CHECK(c.total == closed_form_L3(a));
    CHECK(c.residue_tight == tight_count_L3(a));
    CHECK(tight_count_L3(a) == tight[a]);
  }
  CHECK(closed_form_L3(4) == 81);
}

TEST_CASE("both recursions hold up to four vertices") {
  for (int n = 1; n <= 4; ++n) {
    EquivClassCount prev = count_classes(n, 0);
    for (int a = 1; a <= (n == 4 ? 4 : 6); ++a) {
      EquivClassCount cur = count_classes(n, a);
      CHECK(cur.total == prev.total + cur.residue_full_empty);
      // For n = 1 the only singleton is the full set itself.
      if (n >= 2) CHECK(cur.residue_full_empty == prev.residue_full_empty + cur.residue_tight);
      prev = cur;
    }
  }
}

TEST_CASE("enumeration visits each uniform vector once") {
  std::set<std::vector<std::int64_t>> seen;
  enumerate_uniform_vectors(3, 3, [&](const PIVector& v) {
    CHECK(is_uniform(v, 3));
    CHECK(seen.insert(v.canonical_values()).second);
  });
  CHECK(seen.size() == 39);
}

TEST_CASE("degree fit on three vertices") {
  DegreeFit f = degree_fit(3, 8, {4, 8});
  CHECK_FALSE(f.degree.has_value());
  REQUIRE(f.parity_adjusted_degree.has_value());
  CHECK(*f.parity_adjusted_degree == 4);
  REQUIRE(f.coefficients.size() == 5);
  CHECK(f.coefficients[4] == Rational(1, 16));
  CHECK(f.coefficients[0] == Rational(31, 32));
  CHECK(f.alternating == Rational(1, 32));
  for (int a = 0; a <= 8; ++a) {
    Rational v = f.alternating * (a % 2 == 0 ? 1 : -1), p = 1;
    for (const Rational& c : f.coefficients) {
      v += c * p;
      p *= a;
    }
    CHECK(v == Rational(f.values[a]));
  }
}

TEST_CASE("degree fit on two vertices is linear") {
  DegreeFit f = degree_fit(2, 6);
  REQUIRE(f.degree.has_value());
  CHECK(*f.degree == 1);
  CHECK(f.coefficients == std::vector<Rational>{1, 1});
}

TEST_CASE("counting budgets") {
  CHECK_THROWS_AS(count_classes(5, 1), BudgetExceeded);
  CHECK_THROWS_AS(count_classes(3, 9), BudgetExceeded);
  CHECK_THROWS_AS(count_classes(0, 1), DomainError);
  CHECK_THROWS_AS(degree_fit(3, 5), DomainError);
}
