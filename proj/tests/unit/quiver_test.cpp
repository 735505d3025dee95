#include "doctest.h"
#include "torsionlab/error.hpp"
#include "torsionlab/fixtures.hpp"

using namespace torsionlab;

TEST_CASE("path algebra dimensions") {
  Field f = Field::prime(2);
  CHECK(PathAlgebra(fixtures::linear_quiver(2, f)).dimension() == 3);
  CHECK(PathAlgebra(fixtures::truncated_loop(2, f)).dimension() == 2);
  CHECK(PathAlgebra(fixtures::linear_quiver(3, f, {}, {{0, 1}})).dimension() == 5);
  CHECK(PathAlgebra(fixtures::linear_quiver(3, f)).dimension() == 6);
}

TEST_CASE("trivial paths come first and multiply as idempotents") {
  PathAlgebra a(fixtures::linear_quiver(3, Field::prime(2)));
  for (std::size_t v = 0; v < 3; ++v) {
    CHECK(a.path(v).length() == 0);
    CHECK(a.multiply(v, v) == v);
    for (std::size_t w = 0; w < 3; ++w) {
      if (v != w) CHECK_FALSE(a.multiply(v, w));
    }
  }
  auto ab = a.find(0, {0, 1});
  REQUIRE(ab);
  CHECK(a.multiply(*a.find(0, {0}), *a.find(1, {1})) == ab);
  CHECK(a.max_path_length() == 2);
}

TEST_CASE("unbounded loop is infinite dimensional") {
  BoundQuiverPresentation p;
  p.vertices = {"1"};
  p.arrows = {{"x", 0, 0}};
  try {
    PathAlgebra a(p);
    FAIL("expected InfiniteDimensional");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InfiniteDimensional);
  }
}

TEST_CASE("presentation validation") {
  BoundQuiverPresentation p = fixtures::linear_quiver(3, Field::prime(2));
  p.relations = {{1, 0}};
  try {
    p.validate();
    FAIL("expected NonComposablePath");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonComposablePath);
  }
  p.relations = {{0}};
  CHECK_THROWS_AS(p.validate(), Error);
}

TEST_CASE("opposite algebra") {
  Field f = Field::prime(2);
  auto op = opposite_algebra(fixtures::linear_quiver(2, f));
  CHECK(op.arrows[0].source == 1);
  CHECK(op.arrows[0].target == 0);
  auto loop = fixtures::truncated_loop(2, f);
  CHECK(opposite_algebra(loop) == loop);
  auto a3 = fixtures::linear_quiver(3, f, {}, {{0, 1}});
  auto a3op = opposite_algebra(a3);
  CHECK(a3op.relations == std::vector<std::vector<std::size_t>>{{1, 0}});
  CHECK(opposite_algebra(a3op) == a3);
  CHECK(PathAlgebra(a3op).dimension() == 5);
}
