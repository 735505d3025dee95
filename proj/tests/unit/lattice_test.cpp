#include <algorithm>
#include <variant>

#include "doctest.h"
#include "sample_lattices.hpp"
#include "torsionlab/error.hpp"

using namespace torsionlab;
using namespace torsionlab::lattice;

namespace {
FiniteLattice L(const FinitePoset& p) { return require_lattice(p); }
}  // namespace

TEST_CASE("poset validation") {
  CHECK_THROWS_AS(FinitePoset({{true, true}, {true, true}}), Error);  // not antisymmetric
  CHECK_THROWS_AS(FinitePoset(std::vector<std::vector<bool>>{{false}}), Error);                    // not reflexive
  std::vector<std::vector<bool>> intransitive = {
      {true, true, false}, {false, true, true}, {false, false, true}};
  CHECK_THROWS_AS(FinitePoset{intransitive}, Error);
}

TEST_CASE("covers") {
  auto c3 = covers(samples::chain(3));
  std::sort(c3.begin(), c3.end());
  CHECK(c3 == std::vector<CoverPair>{{1, 0}, {2, 1}});
  CHECK(covers(samples::cube(2)).size() == 4);
  CHECK(covers(samples::pentagon()).size() == 5);
}

TEST_CASE("as_lattice") {
  CHECK(std::holds_alternative<FiniteLattice>(as_lattice(samples::cube(2))));
  CHECK(std::holds_alternative<FiniteLattice>(as_lattice(samples::pentagon())));
  // two minimal elements below two maximal ones, no top
  FinitePoset bowtie = FinitePoset::from_covers(4, {{2, 0}, {2, 1}, {3, 0}, {3, 1}});
  auto r = as_lattice(bowtie);
  REQUIRE(std::holds_alternative<NotALattice>(r));
  try {
    require_lattice(bowtie);
    FAIL("expected NotALattice");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotALattice);
  }
}

TEST_CASE("semimodularity") {
  auto b3 = L(samples::cube(3));
  CHECK(is_upper_semimodular(b3).verdict);
  CHECK(is_lower_semimodular(b3).verdict);
  auto n5 = L(samples::pentagon());
  auto upper = is_upper_semimodular(n5);
  CHECK_FALSE(upper.verdict);
  REQUIRE(upper.witness.size() == 2);
  // witness covers the bottom on both sides but its join does not cover both
  const auto a = upper.witness[0], b = upper.witness[1];
  CHECK(n5.covers(a, n5.meet(a, b)));
  CHECK(n5.covers(b, n5.meet(a, b)));
  CHECK_FALSE((n5.covers(n5.join(a, b), a) && n5.covers(n5.join(a, b), b)));
  CHECK_FALSE(is_lower_semimodular(n5).verdict);
  auto m3 = L(samples::diamond());
  CHECK(is_upper_semimodular(m3).verdict);
  CHECK(is_lower_semimodular(m3).verdict);
}

TEST_CASE("distributivity") {
  CHECK(is_distributive(L(samples::chain(4))).verdict);
  auto n5 = is_distributive(L(samples::pentagon()));
  CHECK_FALSE(n5.verdict);
  CHECK(n5.witness.size() == 3);
  CHECK_FALSE(is_distributive(L(samples::diamond())).verdict);
}

TEST_CASE("Boolean lattices") {
  auto b2 = is_boolean(L(samples::cube(2)));
  REQUIRE(b2.report.verdict);
  CHECK(b2.complement[1] == 2);
  CHECK(b2.complement[2] == 1);
  CHECK_FALSE(is_boolean(L(samples::chain(3))).report.verdict);
  CHECK_FALSE(is_boolean(L(samples::pentagon())).report.verdict);
}

TEST_CASE("Boolean subset isomorphism") {
  // B3 with its elements listed in a scrambled order
  std::vector<Element> order = {5, 0, 7, 3, 1, 6, 2, 4};
  auto scrambled = L(samples::cube(3).permuted(order));
  auto iso = boolean_subset_isomorphism(scrambled);
  REQUIRE(iso);
  CHECK(iso->rank == 3);
  for (Element x = 0; x < 8; ++x) {
    for (Element y = 0; y < 8; ++y) {
      const bool subset = (iso->subset_of[x] & iso->subset_of[y]) == iso->subset_of[x];
      CHECK(scrambled.leq(x, y) == subset);
    }
  }
  CHECK_FALSE(boolean_subset_isomorphism(L(samples::pentagon())));
  auto c2 = boolean_subset_isomorphism(L(samples::chain(2)));
  REQUIRE(c2);
  CHECK(c2->rank == 1);
}

TEST_CASE("semidistributivity") {
  auto n5 = L(samples::pentagon());
  CHECK(is_join_semidistributive(n5).verdict);
  CHECK(is_meet_semidistributive(n5).verdict);
  auto m3 = L(samples::diamond());
  CHECK_FALSE(is_join_semidistributive(m3).verdict);
  CHECK_FALSE(is_meet_semidistributive(m3).verdict);
  auto b2 = L(samples::cube(2));
  CHECK(is_join_semidistributive(b2).verdict);
  CHECK(is_meet_semidistributive(b2).verdict);
}

TEST_CASE("join irreducibles") {
  CHECK(join_irreducibles(L(samples::chain(4))).size() == 3);
  auto n5 = join_irreducibles(L(samples::pentagon()));
  std::sort(n5.begin(), n5.end());
  CHECK(n5 == std::vector<Element>{1, 2, 3});
  auto b3 = join_irreducibles(L(samples::cube(3)));
  std::sort(b3.begin(), b3.end());
  CHECK(b3 == std::vector<Element>{1, 2, 4});
}

TEST_CASE("Hasse regularity") {
  CHECK_FALSE(is_hasse_regular(samples::chain(3), 2).verdict);
  CHECK(is_hasse_regular(samples::cube(2), 2).verdict);
  CHECK(is_hasse_regular(samples::pentagon(), 2).verdict);
}

TEST_CASE("anti-isomorphisms") {
  auto c4 = L(samples::chain(4));
  auto rev = is_antiisomorphic(c4, c4);
  REQUIRE(rev);
  CHECK(*rev == std::vector<Element>{3, 2, 1, 0});
  auto n5 = L(samples::pentagon());
  CHECK(is_antiisomorphic(n5, n5));
  CHECK_FALSE(is_antiisomorphic(L(samples::cube(2)), c4));
  try {
    is_antiisomorphic(c4, n5);
    FAIL("expected SizeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeMismatch);
  }
}
