#include "doctest.h"
#include "listsep/constructions.hpp"
#include "listsep/kernel.hpp"

#include <random>

using namespace listsep;
using namespace listsep::kernel;

namespace {

RationalVector vec(std::initializer_list<std::int64_t> xs) {
  RationalVector v;
  for (auto x : xs) v.entries.emplace_back(x);
  return v;
}

// Plain Gauss-Jordan over the rationals.
int rank_oracle(std::vector<RationalVector> rows) {
  int r = 0;
  const int cols = rows.empty() ? 0 : rows[0].size();
  for (int c = 1; c <= cols && r < static_cast<int>(rows.size()); ++c) {
    int p = r;
    while (p < static_cast<int>(rows.size()) && rows[p][c] == 0) ++p;
    if (p == static_cast<int>(rows.size())) continue;
    std::swap(rows[r], rows[p]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
      if (i != r && rows[i][c] != 0) rows[i] = rows[i] - (rows[i][c] / rows[r][c]) * rows[r];
    ++r;
  }
  return r;
}

std::vector<RationalVector> plain(const std::vector<NamedVector>& f) {
  std::vector<RationalVector> out;
  for (const auto& nv : f) out.push_back(nv.vec);
  return out;
}

}  // namespace

TEST_CASE("named vectors") {
  CHECK(vec_a(4) == vec({1, 3, 3, 1}));
  CHECK(vec_c(4) == vec({0, 1, 2, 1}));
  CHECK(vec_psi(3) == vec({3, 3, 1}));
  CHECK(as(4, 1) == vec({1, 0, 0, -1}));
  CHECK(tp(4, 3) == vec({-6, 1, 1, 0}));
  CHECK(bn(4) == vec({-7, 1, 1, 1}));
  CHECK(asc(4, 2) == Rational(-1) * as(4, 1) + as(4, 2));
  CHECK(bnc(5) == Rational(8) * as(5, 1) + bn(5));
  CHECK_THROWS_AS(as(4, 3), DomainError);
  CHECK_THROWS_AS(tp(4, 2), DomainError);
  CHECK_THROWS_AS(tp(4, 5), DomainError);
}

TEST_CASE("basis members lie in the kernels") {
  for (int n = 3; n <= 12; ++n) {
    auto ka = basis_ker_a(n);
    CHECK(ka.size() == static_cast<std::size_t>(n - 1));
    for (const auto& nv : ka) CHECK(dot(vec_a(n), nv.vec) == 0);
    if (n < 4) continue;
    auto kac = basis_ker_ac(n);
    CHECK(kac.size() == static_cast<std::size_t>(n - 2));
    for (const auto& nv : kac) {
      CHECK(dot(vec_a(n), nv.vec) == 0);
      CHECK(dot(vec_c(n), nv.vec) == 0);
    }
  }
}

TEST_CASE("fraction-free rank agrees with rational elimination") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-3, 3), den(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + trial % 6, cols = 1 + (trial / 6) % 6;
    std::vector<RationalVector> m;
    for (int i = 0; i < rows; ++i) {
      RationalVector v = RationalVector::zero(cols);
      for (int j = 1; j <= cols; ++j) v[j] = Rational(entry(rng), den(rng));
      if (i >= 2 && trial % 3 == 0) v = m[0] + Rational(2) * m[1];
      m.push_back(v);
    }
    CHECK(rank(m) == rank_oracle(m));
  }
  for (int n = 3; n <= 12; ++n) {
    CHECK(rank(plain(basis_ker_a(n))) == rank_oracle(plain(basis_ker_a(n))));
    if (n >= 4) CHECK(rank(plain(basis_ker_ac(n))) == rank_oracle(plain(basis_ker_ac(n))));
  }
}

TEST_CASE("the families are free except when n/2 is odd") {
  for (int n = 3; n <= 12; ++n) {
    bool deficient = n % 4 == 2;
    CAPTURE(n);
    CHECK(rank(plain(basis_ker_a(n))) == (deficient ? n - 2 : n - 1));
    if (n >= 4) CHECK(rank(plain(basis_ker_ac(n))) == (deficient ? n - 3 : n - 2));
  }
  // The explicit relation on six vertices.
  RationalVector rel = Rational(-1) * as(6, 1) - as(6, 2) - as(6, 3) + Rational(2) * tp(6, 3);
  CHECK(rel == bn(6));
}

TEST_CASE("extreme points satisfy both constraints") {
  for (int n = 3; n <= 8; ++n)
    for (int a = 0; a <= 15; ++a)
      for (int c = 0; c <= 15; ++c) {
        ExtremePoints xs = extreme_points(n, a, c);
        CHECK(xs.x1.has_value() == (a >= (n - 1) * c));
        CHECK(xs.x2.has_value() == ((n - 2) * a <= (n - 1) * c && c <= a));
        for (const auto& x : {xs.x1, xs.x2}) {
          if (!x) continue;
          CHECK(dot(vec_a(n), *x) == a);
          CHECK(dot(vec_c(n), *x) == c);
          for (const Rational& q : x->entries) CHECK(q >= 0);
        }
      }
  ExtremePoints p = extreme_points(3, 2, 2);
  REQUIRE(p.x2);
  CHECK(*p.x2 == vec({0, 0, 2}));
}

TEST_CASE("adding kernel combinations stays on the constraint set") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int n = 4; n <= 8; ++n) {
    auto kac = basis_ker_ac(n);
    for (int a = 0; a <= 20; ++a)
      for (int c = 0; (n - 1) * c <= a; ++c) {
        RationalVector x = *extreme_points(n, a, c).x1;
        for (const auto& nv : kac) x += Rational(coef(rng)) * nv.vec;
        CHECK(dot(vec_a(n), x) == a);
        CHECK(dot(vec_c(n), x) == c);
      }
  }
}

namespace {

PIVector expand(const RationalVector& x) {
  SymVector s{x.size(), {}};
  for (const Rational& q : x.entries) s.x.push_back(static_cast<std::int64_t>(numerator(q)));
  return expand_symmetric(s);
}

}  // namespace

TEST_CASE("extreme points expand to the range counter-examples") {
  CHECK(expand(*extreme_points(4, 7, 7).x2) == counterexample_high(4, 7, 2));
  for (int n = 3; n <= 6; ++n)
    for (int b = 1; b <= 5; ++b) {
      for (int a = (n - 1) * b; a < n * b; ++a) {
        int cp = 2 * a - n * b + 1;
        auto x2 = extreme_points(n, a, cp).x2;
        REQUIRE(x2);
        CHECK(expand(*x2) == counterexample_high(n, a, b));
      }
      for (int a = b; a < 2 * b; ++a) {
        int cp = 2 * (a - b) / (n - 1) + 1;
        if (a < (n - 1) * cp) continue;
        auto x1 = extreme_points(n, a, cp).x1;
        REQUIRE(x1);
        CHECK(expand(*x1) == counterexample_low(n, a, b));
      }
    }
}
