// Randomised invariants with fixed seeds.
#include <algorithm>
#include <random>

#include "doctest.h"
#include "sample_lattices.hpp"
#include "torsionlab/fixtures.hpp"
#include "torsionlab/modules.hpp"
#include "torsionlab/spec_format.hpp"
#include "torsionlab/tau_tilting.hpp"

using namespace torsionlab;
using namespace torsionlab::lattice;

namespace {

// A random closure system on {0..k-1} (intersection-closed family with the
// full set) ordered by inclusion is a lattice.
FinitePoset random_lattice(std::mt19937& rng, std::size_t k, std::size_t sets) {
  std::uniform_int_distribution<unsigned> pick(0, (1u << k) - 1);
  std::vector<unsigned> family = {(1u << k) - 1};
  for (std::size_t i = 0; i < sets; ++i) family.push_back(pick(rng));
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = 0; j < family.size(); ++j) {
        unsigned m = family[i] & family[j];
        if (std::find(family.begin(), family.end(), m) == family.end()) {
          family.push_back(m);
          grew = true;
        }
      }
    }
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::shuffle(family.begin(), family.end(), rng);
  const std::size_t n = family.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = (family[i] & family[j]) == family[i];
  }
  return FinitePoset(leq);
}

Matrix random_invertible(std::mt19937& rng, const Field& f, std::size_t n) {
  std::uniform_int_distribution<int> d(0, static_cast<int>(f.characteristic()) - 1);
  for (;;) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = f.from_int(d(rng));
    }
    if (is_invertible(m)) return m;
  }
}

// Same module in a random basis at every vertex.
Representation base_change(std::mt19937& rng, const PathAlgebra& a, const Representation& m) {
  std::vector<Matrix> g, gi;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    g.push_back(random_invertible(rng, a.field(), m.dims[v]));
    gi.push_back(inverse(g.back()));
  }
  Representation out = m;
  for (std::size_t x = 0; x < a.arrow_count(); ++x) {
    const Arrow& arr = a.arrow(x);
    out.maps[x] = g[arr.source] * m.maps[x] * gi[arr.target];
  }
  return out;
}

std::vector<BoundQuiverPresentation> fixture_algebras(const Field& f) {
  std::vector<BoundQuiverPresentation> out;
  for (const auto& e : fixtures::corpus(f)) {
    PathAlgebra a(e.presentation);
    if (fixtures::known_indecomposables(a)) out.push_back(e.presentation);
  }
  return out;
}

}  // namespace

TEST_CASE("lattice invariants on random lattices") {
  std::mt19937 rng(20240501);
  for (int trial = 0; trial < 60; ++trial) {
    FinitePoset p = random_lattice(rng, 4, 1 + trial % 6);
    FiniteLattice l = require_lattice(p);
    const bool boolean = is_boolean(l).report.verdict;
    const bool distributive = is_distributive(l).verdict;
    if (boolean) CHECK(distributive);
    if (distributive) {
      CHECK(is_join_semidistributive(l).verdict);
      CHECK(is_meet_semidistributive(l).verdict);
    }
    CHECK(boolean == boolean_subset_isomorphism(l).has_value());
    CHECK(FinitePoset::from_covers(p.size(), covers(p)) == p);
    FiniteLattice d = require_lattice(p.dual());
    CHECK(is_upper_semimodular(l).verdict == is_lower_semimodular(d).verdict);
    for (Element a = 0; a < l.size(); ++a) {
      CHECK(l.leq(l.bottom(), a));
      CHECK(l.leq(a, l.top()));
      for (Element b = 0; b < l.size(); ++b) {
        CHECK(l.meet(a, b) == l.meet(b, a));
        CHECK(l.join(a, l.meet(a, b)) == a);
        CHECK(l.meet(a, l.join(a, b)) == a);
      }
    }
    auto witness = is_upper_semimodular(l);
    if (!witness.verdict) {
      const Element a = witness.witness[0], b = witness.witness[1], m = l.meet(a, b);
      CHECK(l.covers(a, m));
      CHECK(l.covers(b, m));
    }
  }
}

TEST_CASE("Boolean cubes") {
  for (std::size_t k = 1; k <= 5; ++k) {
    FiniteLattice l = require_lattice(samples::cube(k));
    CHECK(join_irreducibles(l).size() == k);
    CHECK(is_upper_semimodular(l).verdict);
    CHECK(is_lower_semimodular(l).verdict);
    CHECK(is_hasse_regular(samples::cube(k), k).verdict);
  }
}

TEST_CASE("matrix identities over random matrices") {
  std::mt19937 rng(7);
  for (std::int64_t p : {2, 3, 5}) {
    Field f = Field::prime(p);
    std::uniform_int_distribution<int> d(0, static_cast<int>(p) - 1);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 5;
      Matrix m(f, r, c);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(d(rng));
      }
      CHECK(rank(m) + left_kernel(m).rows() == r);
      CHECK(rank(m) + right_kernel(m).rows() == c);
      CHECK(rank(m) == rank(m.transpose()));
      CHECK(rref(rref(m).reduced).reduced == rref(m).reduced);
    }
  }
}

TEST_CASE("module invariants under base change") {
  std::mt19937 rng(11);
  for (std::int64_t p : {2, 3}) {
    for (const auto& pres : fixture_algebras(Field::prime(p))) {
      PathAlgebra a(pres);
      PathAlgebra op(opposite_algebra(pres));
      auto indec = *fixtures::known_indecomposables(a);
      for (const auto& proj : projectives(a)) CHECK_NOTHROW(validate(a, proj));
      for (const auto& inj : injectives(a, op)) CHECK_NOTHROW(validate(a, inj));
      for (const auto& s : simples(a)) CHECK(is_brick(a, s));
      for (const auto& m : indec) {
        Representation twisted = base_change(rng, a, m);
        CHECK_NOTHROW(validate(a, twisted));
        CHECK(is_indecomposable(a, twisted));
        CHECK(isomorphic_indecomposables(a, m, twisted));
        for (std::size_t v = 0; v < a.vertex_count(); ++v) {
          CHECK(hom_space(a, projective_module(a, v), m).dim() == m.dims[v]);
        }
        // tau does not depend on the chosen basis
        Representation t1 = tau(a, op, m), t2 = tau(a, op, twisted);
        CHECK(t1.dims == t2.dims);
        for (const auto& x : indec) {
          CHECK(hom_space(a, x, t1).dim() == hom_space(a, x, t2).dim());
        }
      }
      // distinct indecomposables: every composite M -> N -> M is singular
      for (std::size_t i = 0; i < indec.size(); ++i) {
        for (std::size_t j = 0; j < indec.size(); ++j) {
          if (i == j) continue;
          for (const auto& f : hom_space(a, indec[i], indec[j]).maps) {
            for (const auto& g : hom_space(a, indec[j], indec[i]).maps) {
              CHECK_FALSE(is_invertible(compose(f, g)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("decomposition recovers random direct sums") {
  std::mt19937 rng(3);
  for (const auto& pres : fixture_algebras(Field::prime(3))) {
    PathAlgebra a(pres);
    auto indec = *fixtures::known_indecomposables(a);
    std::uniform_int_distribution<std::size_t> pick(0, indec.size() - 1);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<std::size_t> chosen;
      std::vector<Representation> parts;
      for (int k = 0; k < 3; ++k) {
        chosen.push_back(pick(rng));
        parts.push_back(indec[chosen.back()]);
      }
      Representation sum = base_change(rng, a, direct_sum(a, parts).module);
      auto d = decompose(a, sum);
      std::size_t total = 0;
      std::vector<Representation> again;
      for (const auto& s : d) {
        total += s.multiplicity;
        for (std::size_t k = 0; k < s.multiplicity; ++k) again.push_back(s.module);
      }
      CHECK(total == 3);
      auto d2 = decompose(a, direct_sum(a, again).module);
      REQUIRE(d2.size() == d.size());
      for (std::size_t k = 0; k < d.size(); ++k) {
        CHECK(d2[k].multiplicity == d[k].multiplicity);
        CHECK(isomorphic_indecomposables(a, d2[k].module, d[k].module));
      }
      CHECK(is_isomorphic(a, sum, direct_sum(a, parts).module));
    }
  }
}

TEST_CASE("support tau-tilting pair invariants") {
  for (const auto& e : fixtures::corpus(Field::prime(2))) {
    CAPTURE(e.name);
    TauTiltingContext ctx(e.presentation);
    auto g = enumerate(ctx);
    REQUIRE(g.complete);
    const std::size_t n = ctx.algebra.vertex_count();
    std::vector<std::size_t> degree(g.nodes.size(), 0);
    for (const auto& edge : g.edges) {
      ++degree[edge.upper];
      ++degree[edge.lower];
      // left mutation shrinks Fac
      CHECK(in_fac(ctx.algebra, pair_module(ctx.algebra, g.nodes[edge.upper].pair),
                   pair_module(ctx.algebra, g.nodes[edge.lower].pair)));
    }
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      const auto& pair = g.nodes[i].pair;
      CHECK(degree[i] == n);
      CHECK(pair.size() == n);
      Representation m = pair_module(ctx.algebra, pair);
      if (!m.is_zero()) CHECK(is_tau_rigid(ctx.algebra, ctx.opposite, m));
      for (std::size_t v : pair.projective_vertices) {
        CHECK(hom_space(ctx.algebra, projective_module(ctx.algebra, v), m).dim() == 0);
      }
    }
  }
}

TEST_CASE("format round trip on random presentations") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    BoundQuiverPresentation p;
    p.field = Field::with_characteristic(std::vector<std::int64_t>{0, 2, 3, 5, 7}[trial % 5]);
    const std::size_t n = 1 + trial % 4;
    for (std::size_t v = 0; v < n; ++v) p.vertices.push_back("v" + std::to_string(v));
    std::uniform_int_distribution<std::size_t> vert(0, n - 1);
    const std::size_t arrows = trial % 5;
    for (std::size_t a = 0; a < arrows; ++a) {
      p.arrows.push_back({"x" + std::to_string(a), vert(rng), vert(rng)});
    }
    // relations: random composable walks of length 2-3
    for (std::size_t r = 0; r < arrows; ++r) {
      std::vector<std::size_t> path = {r};
      for (std::size_t step = 0; step < 2; ++step) {
        std::vector<std::size_t> next;
        for (std::size_t a = 0; a < arrows; ++a) {
          if (p.arrows[a].source == p.arrows[path.back()].target) next.push_back(a);
        }
        if (next.empty()) break;
        path.push_back(next[rng() % next.size()]);
      }
      if (path.size() >= 2) p.relations.push_back(path);
    }
    AlgebraSpec spec{p, std::nullopt, trial % 2 ? std::optional<std::size_t>(9) : std::nullopt};
    CHECK(parse_algebra_spec(serialize(spec)) == spec);
  }
}
