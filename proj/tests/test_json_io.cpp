#include "doctest.h"
#include "listsep/json_io.hpp"

#include <functional>

using namespace listsep;
using io::Json;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const DomainError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("list assignment round trip") {
  ListAssignment l({ColorSet{1, 2, 3}, ColorSet{3, 4}, ColorSet{}});
  Json j = io::to_json(l);
  CHECK(j.dump() == R"({"n":3,"lists":[[1,2,3],[3,4],[]]})");
  CHECK(io::list_assignment_from_json(j) == l);
}

TEST_CASE("vector records list nonzero blocks in canonical order") {
  PIVector v(3, std::vector<std::int64_t>{1, 0, 2, 1, 0, 0, 3});
  Json j = io::to_json(v);
  CHECK(j.dump() ==
        R"({"n":3,"counts":[{"subset":[1],"size":1},{"subset":[3],"size":2},{"subset":[1,2],"size":1},{"subset":[1,2,3],"size":3}]})");
  CHECK(io::pi_vector_from_json(j) == v);
  CHECK(io::is_pi_vector_record(j));
  CHECK_FALSE(io::is_pi_vector_record(io::to_json(realize(v))));
}

TEST_CASE("verdict record") {
  ChoosabilityVerdict v;
  v.violating_subset = Subset::of({1, 2, 3});
  v.violating_amplitude = 8;
  CHECK(io::to_json(v).dump() == R"({"colorable":false,"witness":null,"violating_subset":[1,2,3],"amplitude":8})");
}

TEST_CASE("rationals print exactly") {
  CHECK(io::to_json(Rational(3)).dump() == "3");
  CHECK(io::to_json(Rational(-1, 32)).dump() == "\"-1/32\"");
}

TEST_CASE("syntax errors carry line and column") {
  std::string msg = error_of([] { io::parse("{\"n\": 2,\n \"lists\": [[1,\n 2]", "in.json"); });
  CHECK(msg.rfind("in.json:3:", 0) == 0);
}

TEST_CASE("field errors name the offending path") {
  CHECK(error_of([] { io::list_assignment_from_json(io::parse(R"({"lists": []})")); }) == "n: missing field");
  CHECK(error_of([] { io::list_assignment_from_json(io::parse(R"({"n": 2, "lists": [[1], [2, "x"]]})")); }) ==
        "lists[1][1]: expected an integer");
  CHECK(error_of([] { io::list_assignment_from_json(io::parse(R"({"n": 2, "lists": [[1, 1], [2]]})")); }) ==
        "lists[0][1]: duplicate color 1");
  CHECK(error_of([] { io::pi_vector_from_json(io::parse(R"({"n": 2, "counts": [{"subset": [3], "size": 1}]})")); }) ==
        "counts[0].subset[0]: value 3 out of range [1, 2]");
  CHECK(error_of([] { io::pi_vector_from_json(io::parse(R"({"n": 2, "counts": [{"subset": [2, 1], "size": 1}]})")); }) ==
        "counts[0].subset[1]: subset must be strictly ascending");
  CHECK(error_of([] { io::pi_vector_from_json(io::parse(R"({"n": 2, "counts": [{"subset": [1], "size": -1}]})")); })
            .rfind("counts[0].size: value -1", 0) == 0);
  CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), DomainError);
}
