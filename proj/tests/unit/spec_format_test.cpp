#include "doctest.h"
#include "torsionlab/error.hpp"
#include "torsionlab/spec_format.hpp"

using namespace torsionlab;

namespace {

ParseError parse_error(const std::string& text) {
  try {
    parse_algebra_spec(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError(ErrorCode::SyntaxError, 0, 0, "");
}

}  // namespace

TEST_CASE("loop algebra") {
  auto spec = parse_algebra_spec("field 2\nvertex 1\narrow x: 1 -> 1\nrelation x x");
  const auto& p = spec.presentation;
  CHECK(p.field.characteristic() == 2);
  REQUIRE(p.arrows.size() == 1);
  CHECK(p.arrows[0].source == 0);
  CHECK(p.relations == std::vector<std::vector<std::size_t>>{{0, 0}});
  CHECK(PathAlgebra(p).dimension() == 2);
}

TEST_CASE("defaults, comments and bounds") {
  auto spec = parse_algebra_spec(
      "# a comment\n\nvertex a b   # trailing\narrow f:a->b\nbound nodes 10\nbound dim 7\n");
  CHECK(spec.presentation.field.characteristic() == 2);
  CHECK(spec.presentation.arrows[0].target == 1);
  CHECK(spec.node_bound == 10u);
  CHECK(spec.dim_bound == 7u);
  CHECK(parse_algebra_spec("field 0\nvertex 1").presentation.field.characteristic() == 0);
}

TEST_CASE("diagnostics carry positions") {
  auto e = parse_error("field 2\nvertex 1 2\narrow a: 1 -> 3\n");
  CHECK(e.code() == ErrorCode::UnknownVertex);
  CHECK(e.line() == 3);
  CHECK(e.column() == 15);

  e = parse_error("vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrelation b a\n");
  CHECK(e.code() == ErrorCode::NonComposablePath);
  CHECK(e.line() == 4);
  CHECK(e.column() == 12);

  e = parse_error("field 4\nvertex 1\n");
  CHECK(e.code() == ErrorCode::NonPrimeCharacteristic);
  CHECK(e.column() == 7);

  CHECK(parse_error("vertex 1\nfoo\n").code() == ErrorCode::SyntaxError);
  CHECK(parse_error("vertex 1\narrow a 1 -> 1\n").code() == ErrorCode::SyntaxError);
  CHECK(parse_error("vertex 1 1\n").code() == ErrorCode::DuplicateName);
  CHECK(parse_error("vertex 1\narrow x: 1 -> 1\nrelation x y\n").code() == ErrorCode::UnknownArrow);
  CHECK(parse_error("vertex 1\narrow x: 1 -> 1\nrelation x\n").code() == ErrorCode::SyntaxError);
  CHECK(parse_error("# nothing\n").code() == ErrorCode::SyntaxError);
  CHECK(parse_error("vertex 1\nbound nodes 0\n").code() == ErrorCode::SyntaxError);
}

TEST_CASE("round trip") {
  const std::string text =
      "field 3\nvertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 3\n"
      "relation a b\nrelation c c c\nbound nodes 50\n";
  auto spec = parse_algebra_spec(text);
  CHECK(serialize(spec) == text);
  CHECK(parse_algebra_spec(serialize(spec)) == spec);
}
