#include "doctest.h"
#include "listsep/choosability.hpp"
#include "listsep/search.hpp"

#include <random>

using namespace listsep;

namespace {

ListAssignment example() {
  return ListAssignment({ColorSet{1, 2, 3, 4, 5}, ColorSet{1, 2, 3, 6, 7}, ColorSet{3, 4, 6, 7, 8}, ColorSet{4, 6, 8, 9, 10}});
}

// Hall's condition checked directly on the lists, one subset at a time.
bool hall_oracle(const ListAssignment& lists, int b) {
  const int n = lists.n();
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    ColorSet uni;
    for (Vertex v : Subset(m).members()) uni = set_union(uni, lists.list(v));
    if (static_cast<int>(uni.size()) < b * std::popcount(m)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("example fails at b = 3 on {1,2,3}") {
  ChoosabilityVerdict v = amplitude_ok(pi_vector(example()), 3);
  CHECK_FALSE(v.colorable);
  REQUIRE(v.violating_subset);
  CHECK(*v.violating_subset == Subset::of({1, 2, 3}));
  CHECK(*v.violating_amplitude == 8);
  CHECK_FALSE(brute_force_color(example(), 3).colorable);
}

TEST_CASE("example is 2-colorable with a valid witness") {
  CHECK(amplitude_ok(pi_vector(example()), 2).colorable);
  ChoosabilityVerdict v = brute_force_color(example(), 2);
  REQUIRE(v.colorable);
  REQUIRE(v.witness);
  CHECK(is_valid_coloring(example(), *v.witness, 2));
}

TEST_CASE("amplitude test, Hall oracle and exhaustive search agree on random lists") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + trial % 4;
    std::vector<ColorSet> lists;
    std::uniform_int_distribution<int> color(1, 8), size(1, 5);
    for (int i = 0; i < n; ++i) {
      ColorSet s;
      for (int k = size(rng); k > 0; --k) s.insert(static_cast<Color>(color(rng)));
      lists.push_back(s);
    }
    ListAssignment l(lists);
    for (int b = 1; b <= 3; ++b) {
      bool fast = amplitude_ok(pi_vector(l), b).colorable;
      ChoosabilityVerdict slow = brute_force_color(l, b);
      CHECK(fast == hall_oracle(l, b));
      CHECK(fast == slow.colorable);
      if (slow.colorable) CHECK(is_valid_coloring(l, *slow.witness, b));
    }
  }
}

TEST_CASE("invalid colorings are rejected") {
  ListAssignment l({ColorSet{1, 2}, ColorSet{2, 3}});
  CHECK(is_valid_coloring(l, MultiColoring{{ColorSet{1}, ColorSet{2}}}, 1));
  CHECK_FALSE(is_valid_coloring(l, MultiColoring{{ColorSet{2}, ColorSet{2}}}, 1));
  CHECK_FALSE(is_valid_coloring(l, MultiColoring{{ColorSet{3}, ColorSet{2}}}, 1));
  CHECK_FALSE(is_valid_coloring(l, MultiColoring{{ColorSet{1, 2}, ColorSet{3}}}, 1));
}

TEST_CASE("exhaustive coloring respects its limits") {
  std::vector<ColorSet> lists(7, ColorSet{1, 2, 3});
  CHECK_THROWS_AS(brute_force_color(ListAssignment(lists), 1), BudgetExceeded);
  CHECK_THROWS_AS(amplitude_ok(pi_vector(example()), 0), DomainError);
}

TEST_CASE("(a,b,c)-choosability is monotone in c") {
  for (int a = 2; a <= 6; ++a)
    for (int b = 1; b <= a; ++b) {
      int s = sep({4, a, b}).value;
      for (int c = 0; c <= a; ++c) {
        AbcAnswer ans = is_abc_choosable(4, a, b, c);
        CHECK(ans.choosable == (c <= s));
        if (!ans.choosable) {
          REQUIRE(ans.counterexample);
          CHECK(is_uniform(*ans.counterexample, a));
          CHECK(max_pair_intersection(*ans.counterexample) <= c);
          CHECK_FALSE(amplitude_ok(*ans.counterexample, b).colorable);
        }
      }
    }
}
