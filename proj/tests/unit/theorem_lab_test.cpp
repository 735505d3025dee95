#include <algorithm>

#include "doctest.h"
#include "sample_lattices.hpp"
#include "torsionlab/error.hpp"
#include "torsionlab/fixtures.hpp"
#include "torsionlab/theorem_lab.hpp"

using namespace torsionlab;

namespace {

const Field F2 = Field::prime(2);

bool all_verdicts(const ConditionReport& r, Truth t) {
  return std::all_of(r.conditions.begin(), r.conditions.end(),
                     [t](const auto& c) { return c.second.value == t; });
}

BoundQuiverPresentation loop_with_two_vertices() {
  return fixtures::product({fixtures::truncated_loop(2, F2, "x"), fixtures::truncated_loop(2, F2, "y")});
}

}  // namespace

TEST_CASE("conditions on the standard examples") {
  auto locals = check_conditions(
      fixtures::product({fixtures::truncated_loop(2, F2, "x"), fixtures::truncated_loop(3, F2, "y")}));
  CHECK(locals.conditions.size() == kConditionCount);
  CHECK(all_verdicts(locals, Truth::True));
  CHECK_FALSE(locals.inconsistent_with_theorem);

  auto a2 = check_conditions(fixtures::linear_quiver(2, F2));
  CHECK(all_verdicts(a2, Truth::False));
  CHECK(a2.at("d").evidence.find("(1,1)") != std::string::npos);
  CHECK(all_verdicts(check_conditions(fixtures::linear_quiver(3, F2)), Truth::False));
}

TEST_CASE("structural check for products of local algebras") {
  CHECK(check_f_structural(fixtures::truncated_loop(3, F2)).value == Truth::True);
  auto a2 = check_f_structural(fixtures::linear_quiver(2, F2));
  CHECK(a2.value == Truth::False);
  CHECK(a2.evidence.find("arrow a") != std::string::npos);
  CHECK(check_f_structural(loop_with_two_vertices()).value == Truth::True);
}

TEST_CASE("simple-generated torsion classes") {
  CHECK(check_simple_generated(Analysis(loop_with_two_vertices(), {})).value == Truth::True);
  auto a2 = check_simple_generated(Analysis(fixtures::linear_quiver(2, F2), {}));
  CHECK(a2.value == Truth::False);
  auto kk = fixtures::product({fixtures::truncated_loop(1, F2, "x"), fixtures::truncated_loop(1, F2, "y")});
  CHECK(check_simple_generated(Analysis(kk, {})).value == Truth::True);
}

TEST_CASE("brute-force oracle") {
  for (auto method : {OracleMethod::Filtration, OracleMethod::Orthogonal}) {
    PathAlgebra a2(fixtures::linear_quiver(2, F2));
    auto r = bruteforce_torsion_classes(a2, *fixtures::known_indecomposables(a2), method);
    CHECK(r.poset.size() == 5);
    CHECK(lattice::find_isomorphism(r.poset, samples::pentagon()));

    PathAlgebra kk(fixtures::product({fixtures::truncated_loop(1, F2, "x"), fixtures::truncated_loop(1, F2, "y")}));
    auto b2 = bruteforce_torsion_classes(kk, *fixtures::known_indecomposables(kk), method);
    CHECK(lattice::find_isomorphism(b2.poset, samples::cube(2)));

    PathAlgebra k(fixtures::truncated_loop(1, F2));
    CHECK(bruteforce_torsion_classes(k, *fixtures::known_indecomposables(k), method).poset.size() == 2);
  }
}

TEST_CASE("oracle methods agree on every fixture algebra") {
  for (const auto& e : fixtures::corpus(F2)) {
    PathAlgebra a(e.presentation);
    auto known = fixtures::known_indecomposables(a);
    if (!known) continue;
    CAPTURE(e.name);
    auto f = bruteforce_torsion_classes(a, *known, OracleMethod::Filtration);
    auto o = bruteforce_torsion_classes(a, *known, OracleMethod::Orthogonal);
    CHECK(f.classes == o.classes);
    CHECK(f.poset.size() == e.torsion_classes);
  }
}

TEST_CASE("oracle size limit") {
  PathAlgebra a3(fixtures::linear_quiver(3, F2));
  OracleLimits tight;
  tight.max_modules = 3;
  try {
    bruteforce_torsion_classes(a3, *fixtures::known_indecomposables(a3), OracleMethod::Filtration, tight);
    FAIL("expected OracleTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OracleTooLarge);
  }
}

TEST_CASE("cross validation passes on the corpus") {
  for (const auto& e : fixtures::corpus(F2)) {
    CAPTURE(e.name);
    auto cv = cross_validate(e.presentation);
    CHECK(cv.all_passed());
    CHECK(cv.at("enumeration_complete").status == CheckStatus::Pass);
  }
}

TEST_CASE("incomplete enumeration propagates Inconclusive") {
  BoundQuiverPresentation kronecker;
  kronecker.field = F2;
  kronecker.vertices = {"1", "2"};
  kronecker.arrows = {{"a", 0, 1}, {"b", 0, 1}};
  EnumerationBounds b;
  b.node_bound = 6;
  auto cv = cross_validate(kronecker, b);
  CHECK(cv.report.at("a").value == Truth::Inconclusive);
  CHECK(cv.report.at("c").value == Truth::Inconclusive);
  CHECK(cv.report.at("f").value == Truth::False);
  CHECK_FALSE(cv.report.inconsistent_with_theorem);
  CHECK(cv.all_passed());
  CHECK(cv.at("hasse_regular").status == CheckStatus::Skipped);
}

TEST_CASE("negative control: mixed verdicts are flagged") {
  auto report = check_conditions(fixtures::linear_quiver(2, F2));
  CHECK_FALSE(report.inconsistent_with_theorem);
  report.conditions.back().second = {Truth::True, "injected"};
  flag_inconsistency(report);
  CHECK(report.inconsistent_with_theorem);
}

TEST_CASE("negative control: duplicated brick makes labels ambiguous") {
  TauTiltingContext ctx(fixtures::linear_quiver(2, F2));
  auto g = enumerate(ctx);
  auto bricks = enumerate_bricks(ctx, g);
  bricks.push_back(bricks.front());
  try {
    labeled_hasse_quiver(ctx, g, torsion_poset(ctx, g), bricks);
    FAIL("expected LabelNotUnique");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LabelNotUnique);
  }
}

TEST_CASE("algebra fingerprints") {
  auto a = algebra_fingerprint(fixtures::linear_quiver(2, F2));
  CHECK(a.size() == 16);
  CHECK(a == algebra_fingerprint(fixtures::linear_quiver(2, F2)));
  CHECK(a != algebra_fingerprint(fixtures::linear_quiver(2, Field::prime(3))));
}
