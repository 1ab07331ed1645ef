#include "doctest.h"
#include "listsep/setsys.hpp"

#include <random>
#include <set>

using namespace listsep;

namespace {

ListAssignment example() {
  return ListAssignment({ColorSet{1, 2, 3, 4, 5}, ColorSet{1, 2, 3, 6, 7}, ColorSet{3, 4, 6, 7, 8}, ColorSet{4, 6, 8, 9, 10}});
}

ListAssignment random_lists(std::mt19937& rng, int n, int palette, int max_size) {
  std::vector<ColorSet> lists;
  std::uniform_int_distribution<int> size(0, max_size), color(1, palette);
  for (int i = 0; i < n; ++i) {
    ColorSet s;
    for (int k = size(rng); k > 0; --k) s.insert(static_cast<Color>(color(rng)));
    lists.push_back(s);
  }
  return ListAssignment(lists);
}

std::set<Color> to_set(const ColorSet& c) { return {c.begin(), c.end()}; }

}  // namespace

TEST_CASE("color set algebra") {
  ColorSet x{5, 1, 3, 3}, y{3, 4};
  CHECK(x.elements() == std::vector<Color>{1, 3, 5});
  CHECK(set_union(x, y) == ColorSet{1, 3, 4, 5});
  CHECK(set_intersection(x, y) == ColorSet{3});
  CHECK(set_difference(x, y) == ColorSet{1, 5});
  x.erase(3);
  CHECK_FALSE(x.contains(3));
}

TEST_CASE("proper intersections of the four-vertex example") {
  auto ip = proper_intersections(example());
  CHECK(ip.at(Subset::of({1}).mask()) == ColorSet{5});
  CHECK(ip.at(Subset::of({4}).mask()) == ColorSet{9, 10});
  CHECK(ip.at(Subset::of({1, 2}).mask()) == ColorSet{1, 2});
  CHECK(ip.at(Subset::of({2, 3, 4}).mask()) == ColorSet{6});
  CHECK(ip.count(Subset::full(4).mask()) == 0);
}

TEST_CASE("vector of the four-vertex example") {
  PIVector v = pi_vector(example());
  CHECK(v.canonical_values() == std::vector<std::int64_t>{1, 0, 0, 2, 2, 0, 0, 1, 0, 1, 1, 0, 1, 1, 0});
  CHECK(list_size(v, 1) == 5);
  CHECK(pair_intersection(v, 1, 2) == 3);
  CHECK(amplitude(v, Subset::of({1, 2, 3})) == 8);
  CHECK(amplitude(v, Subset::full(4)) == 10);
  CHECK(max_pair_intersection(v) == 3);
  CHECK(is_uniform(v, 5));
  CHECK(v.total() == 10);
}

TEST_CASE("intersections and unions agree with direct set operations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + trial % 5;
    ListAssignment lists = random_lists(rng, n, 9, 6);
    PIVector v = pi_vector(lists);
    for (Subset s : canonical_subsets(n)) {
      auto members = s.members();
      std::set<Color> inter = to_set(lists.list(members[0])), uni;
      for (Vertex i : members) {
        std::set<Color> li = to_set(lists.list(i)), keep;
        for (Color c : inter)
          if (li.count(c)) keep.insert(c);
        inter = keep;
        uni.insert(li.begin(), li.end());
      }
      CHECK(intersection_size(v, s) == static_cast<std::int64_t>(inter.size()));
      CHECK(amplitude(v, s) == static_cast<std::int64_t>(uni.size()));
    }
  }
}

TEST_CASE("realize inverts pi_vector") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 5;
    PIVector v = pi_vector(random_lists(rng, n, 12, 7));
    CHECK(pi_vector(realize(v)) == v);
    CHECK(pi_vector(realize(v, 100)) == v);
  }
  PIVector v(3, std::vector<std::int64_t>{1, 0, 2, 1, 0, 0, 3});
  ListAssignment l = realize(v);
  CHECK(l.list(1) == ColorSet{1, 4, 5, 6, 7});
  CHECK(l.palette().size() == 7);
}

TEST_CASE("assignment count matches brute force over a small palette") {
  // Two vertices, lists of size 2 from 4 colors: every ordered pair of lists
  // falls into exactly one class.
  const int palette = 4;
  std::vector<ColorSet> pairs;
  for (Color x = 1; x <= palette; ++x)
    for (Color y = x + 1; y <= palette; ++y) pairs.push_back(ColorSet{x, y});
  std::map<std::vector<std::int64_t>, std::int64_t> seen;
  for (const auto& l1 : pairs)
    for (const auto& l2 : pairs) ++seen[pi_vector(ListAssignment({l1, l2})).canonical_values()];
  for (const auto& [values, count] : seen) CHECK(assignment_count(PIVector(2, values), palette) == count);
  CHECK(seen.size() == 3);
}

TEST_CASE("full-set block alone gives C(na, a) assignments") {
  PIVector v(3);
  v.set(Subset::full(3), 4);
  CHECK(assignment_count(v) == binomial(12, 4));
}

TEST_CASE("padding adds private vertices") {
  PIVector v(2, std::vector<std::int64_t>{1, 1, 2});
  PIVector p = pad_with_private_vertices(v, 4, 3);
  CHECK(p.n() == 4);
  CHECK(is_uniform(p, 3));
  CHECK(p[Subset::of({3})] == 3);
  CHECK(amplitude(p, Subset::full(4)) == amplitude(v, Subset::full(2)) + 6);
}

TEST_CASE("vector entries stay nonnegative") {
  PIVector v(2);
  CHECK_THROWS_AS(v.add(Subset::of({1}), -1), DomainError);
  CHECK_THROWS_AS(v.set(Subset::of({3}), 1), DomainError);
}
