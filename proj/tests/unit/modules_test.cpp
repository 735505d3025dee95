#include "doctest.h"
#include "torsionlab/error.hpp"
#include "torsionlab/fixtures.hpp"
#include "torsionlab/modules.hpp"

using namespace torsionlab;

namespace {

struct Setup {
  PathAlgebra algebra;
  PathAlgebra opposite;
  explicit Setup(const BoundQuiverPresentation& p) : algebra(p), opposite(opposite_algebra(p)) {}
};

Setup a2() { return Setup(fixtures::linear_quiver(2, Field::prime(2))); }
Setup dual_numbers() { return Setup(fixtures::truncated_loop(2, Field::prime(2))); }

}  // namespace

TEST_CASE("simples, projectives and injectives of A2") {
  Setup s = a2();
  auto p = projectives(s.algebra);
  CHECK(p[0].dims == std::vector<std::size_t>{1, 1});
  CHECK(p[1].dims == std::vector<std::size_t>{0, 1});
  auto i = injectives(s.algebra, s.opposite);
  CHECK(i[0].dims == std::vector<std::size_t>{1, 0});
  CHECK(i[1].dims == std::vector<std::size_t>{1, 1});
  for (std::size_t v = 0; v < 2; ++v) {
    CHECK(is_isomorphic(s.algebra, i[v], injective_module(s.algebra, v)));
    CHECK_NOTHROW(validate(s.algebra, i[v]));
  }
  CHECK(is_isomorphic(s.algebra, p[1], simple_module(s.algebra, 1)));
}

TEST_CASE("dual numbers and semisimple algebras") {
  Setup s = dual_numbers();
  CHECK(projective_module(s.algebra, 0).total_dim() == 2);
  CHECK(simple_module(s.algebra, 0).total_dim() == 1);
  Setup kk(fixtures::product({fixtures::truncated_loop(1, Field::prime(2), "x"),
                              fixtures::truncated_loop(1, Field::prime(2), "y")}));
  for (std::size_t v = 0; v < 2; ++v) {
    CHECK(is_isomorphic(kk.algebra, projective_module(kk.algebra, v), simple_module(kk.algebra, v)));
  }
}

TEST_CASE("Hom spaces") {
  Setup s = a2();
  auto s1 = simple_module(s.algebra, 0), s2 = simple_module(s.algebra, 1);
  auto p1 = projective_module(s.algebra, 0);
  CHECK(hom_space(s.algebra, s1, s2).dim() == 0);
  CHECK(hom_space(s.algebra, s2, s1).dim() == 0);
  CHECK(hom_space(s.algebra, p1, p1).dim() == 1);
  CHECK(hom_space(s.algebra, p1, s1).dim() == 1);
  for (const auto& f : hom_space(s.algebra, p1, s1).maps) CHECK(is_homomorphism(s.algebra, p1, s1, f));
}

TEST_CASE("bricks") {
  Setup s = a2();
  CHECK(is_brick(s.algebra, simple_module(s.algebra, 0)));
  CHECK(is_brick(s.algebra, projective_module(s.algebra, 0)));
  auto ss = direct_sum(s.algebra, {simple_module(s.algebra, 0), simple_module(s.algebra, 0)}).module;
  CHECK_FALSE(is_brick(s.algebra, ss));
  Setup d = dual_numbers();
  CHECK_FALSE(is_brick(d.algebra, projective_module(d.algebra, 0)));
  try {
    is_brick(s.algebra, Representation::zero(s.algebra));
    FAIL("expected ZeroModule");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroModule);
  }
}

TEST_CASE("minimal projective presentations") {
  Setup s = a2();
  auto proj = minimal_projective_presentation(s.algebra, projective_module(s.algebra, 0));
  CHECK(proj.map.source.empty());
  auto s1 = minimal_projective_presentation(s.algebra, simple_module(s.algebra, 0));
  CHECK(s1.map.target == std::vector<std::size_t>{0});
  CHECK(s1.map.source == std::vector<std::size_t>{1});
  Setup d = dual_numbers();
  auto sd = minimal_projective_presentation(d.algebra, simple_module(d.algebra, 0));
  CHECK(sd.map.target == std::vector<std::size_t>{0});
  CHECK(sd.map.source == std::vector<std::size_t>{0});
  // the map P -> P is multiplication by x
  ModuleMap f = realize(d.algebra, sd.map);
  auto p = projective_module(d.algebra, 0);
  CHECK(is_homomorphism(d.algebra, p, p, f));
  CHECK(total_dim(image(f, p)) == 1);
}

TEST_CASE("Auslander-Reiten translate") {
  Setup s = a2();
  CHECK(tau(s.algebra, s.opposite, projective_module(s.algebra, 0)).is_zero());
  CHECK(tau(s.algebra, s.opposite, projective_module(s.algebra, 1)).is_zero());
  CHECK(is_isomorphic(s.algebra, tau(s.algebra, s.opposite, simple_module(s.algebra, 0)),
                      simple_module(s.algebra, 1)));
  Setup d = dual_numbers();
  auto sd = simple_module(d.algebra, 0);
  CHECK(is_isomorphic(d.algebra, tau(d.algebra, d.opposite, sd), sd));
}

TEST_CASE("tau-rigidity") {
  Setup s = a2();
  CHECK(is_tau_rigid(s.algebra, s.opposite, projective_module(s.algebra, 0)));
  CHECK(is_tau_rigid(s.algebra, s.opposite, simple_module(s.algebra, 0)));
  Setup d = dual_numbers();
  CHECK_FALSE(is_tau_rigid(d.algebra, d.opposite, simple_module(d.algebra, 0)));
  CHECK(is_tau_rigid(d.algebra, d.opposite, projective_module(d.algebra, 0)));
}

TEST_CASE("decomposition") {
  Setup s = a2();
  auto s1 = simple_module(s.algebra, 0);
  auto single = decompose(s.algebra, s1);
  REQUIRE(single.size() == 1);
  CHECK(single[0].multiplicity == 1);
  auto twice = decompose(s.algebra, direct_sum(s.algebra, {s1, s1}).module);
  REQUIRE(twice.size() == 1);
  CHECK(twice[0].multiplicity == 2);
  auto regular = decompose(s.algebra, direct_sum(s.algebra, projectives(s.algebra)).module);
  REQUIRE(regular.size() == 2);
  CHECK(regular[0].multiplicity == 1);
  CHECK(regular[1].multiplicity == 1);
  CHECK_FALSE(isomorphic_indecomposables(s.algebra, regular[0].module, regular[1].module));
}

TEST_CASE("Fac membership") {
  Setup s = a2();
  auto p1 = projective_module(s.algebra, 0);
  CHECK(in_fac(s.algebra, p1, p1));
  CHECK(in_fac(s.algebra, p1, simple_module(s.algebra, 0)));
  CHECK_FALSE(in_fac(s.algebra, p1, simple_module(s.algebra, 1)));
}

TEST_CASE("brick quotient") {
  Setup d = dual_numbers();
  auto b = brick_quotient(d.algebra, projective_module(d.algebra, 0));
  CHECK(is_isomorphic(d.algebra, b, simple_module(d.algebra, 0)));
  Setup s = a2();
  auto p1 = projective_module(s.algebra, 0);
  CHECK(is_isomorphic(s.algebra, brick_quotient(s.algebra, p1), p1));
}

TEST_CASE("two loops with square-zero radical") {
  BoundQuiverPresentation p;
  p.field = Field::prime(2);
  p.vertices = {"1"};
  p.arrows = {{"x", 0, 0}, {"y", 0, 0}};
  p.relations = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  Setup s(p);
  auto proj = projective_module(s.algebra, 0);
  CHECK(proj.total_dim() == 3);
  auto an = analyse_endomorphisms(s.algebra, proj);
  CHECK(an.local());
  CHECK(an.radical.size() == 2);
}
