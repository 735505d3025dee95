#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "torsionlab/representation.hpp"

namespace torsionlab {

Representation simple_module(const PathAlgebra& algebra, std::size_t vertex);
// e_v A: spanned by the nonzero paths starting at v.
Representation projective_module(const PathAlgebra& algebra, std::size_t vertex);
// D(A e_v): dual of the span of the nonzero paths ending at v.
Representation injective_module(const PathAlgebra& algebra, std::size_t vertex);

std::vector<Representation> simples(const PathAlgebra& algebra);
std::vector<Representation> projectives(const PathAlgebra& algebra);
// Built as duals of the opposite algebra's projectives.
std::vector<Representation> injectives(const PathAlgebra& algebra,
                                       const PathAlgebra& opposite);

// A map between direct sums of indecomposable projectives, stored as a
// matrix of algebra elements: entry [k][l] holds the basis coefficients of
// the k-th target component of the image of the l-th source generator,
// an element of e_{target[k]} A e_{source[l]}.
struct ProjectiveMap {
  std::vector<std::size_t> source;
  std::vector<std::size_t> target;
  std::vector<std::vector<std::vector<Scalar>>> entries;
};

Representation projective_sum(const PathAlgebra& algebra,
                              const std::vector<std::size_t>& vertices);
ModuleMap realize(const PathAlgebra& algebra, const ProjectiveMap& map);

struct ProjectiveCover {
  std::vector<std::size_t> vertices;  // one e_v A summand per top basis vector
  Representation module;
  ModuleMap map;  // onto the covered module
};
ProjectiveCover projective_cover(const PathAlgebra& algebra, const Representation& m);
bool is_projective(const PathAlgebra& algebra, const Representation& m);

// P1 -> P0 -> M -> 0 with P0 -> M a projective cover and P1 a projective
// cover of its kernel.
struct ProjectivePresentation {
  ProjectiveMap map;  // P1 -> P0
  ProjectiveCover cover;
};
ProjectivePresentation minimal_projective_presentation(const PathAlgebra& algebra,
                                                       const Representation& m);

// Auslander-Bridger transpose: a module over the opposite algebra.
Representation transpose(const PathAlgebra& algebra, const PathAlgebra& opposite,
                         const Representation& m);
// Auslander-Reiten translate D Tr M; zero for projectives.
Representation tau(const PathAlgebra& algebra, const PathAlgebra& opposite,
                   const Representation& m);
bool is_tau_rigid(const PathAlgebra& algebra, const PathAlgebra& opposite,
                  const Representation& m);

// End(M) together with either an endomorphism that splits M (neither
// nilpotent nor invertible) or, when End(M) is local, a basis of its
// radical.
struct EndomorphismAnalysis {
  HomBasis endomorphisms;
  std::optional<ModuleMap> splitting;
  std::vector<ModuleMap> radical;

  bool local() const noexcept { return !splitting.has_value(); }
};
// Throws Error(ZeroModule) for M = 0 and Error(DecompositionFailure) when
// neither certificate is found within the search bound.
EndomorphismAnalysis analyse_endomorphisms(const PathAlgebra& algebra,
                                           const Representation& m);

bool is_indecomposable(const PathAlgebra& algebra, const Representation& m);

struct Summand {
  Representation module;
  std::size_t multiplicity = 1;
};
// Krull-Schmidt decomposition via Fitting splits; isomorphic summands are
// merged and the list is sorted by dimension vector, then fingerprint.
std::vector<Summand> decompose(const PathAlgebra& algebra, const Representation& m);

// Exact test for indecomposable modules: M ~ N iff Hom(N,M) o Hom(M,N)
// spans End(M).
bool isomorphic_indecomposables(const PathAlgebra& algebra, const Representation& m,
                                const Representation& n);
bool is_isomorphic(const PathAlgebra& algebra, const Representation& m,
                   const Representation& n);

// Trace of M in X: the sum of the images of all maps M -> X.
GradedSubspace trace(const PathAlgebra& algebra, const Representation& m,
                     const Representation& x);
// X in Fac(M).
bool in_fac(const PathAlgebra& algebra, const Representation& m,
            const Representation& x);
// Throws Error(ZeroModule) on M = 0.
bool is_brick(const PathAlgebra& algebra, const Representation& m);

// M / rad_{End(M)} M for indecomposable M.
Representation brick_quotient(const PathAlgebra& algebra, const Representation& m);

}  // namespace torsionlab
