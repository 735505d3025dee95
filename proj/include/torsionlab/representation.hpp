#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "torsionlab/matrix.hpp"
#include "torsionlab/quiver.hpp"

namespace torsionlab {

// A finite-dimensional right module given as a quiver representation.
// Arrow a: i -> j carries a dims[i] x dims[j] matrix and a path acts as the
// product of its arrows' matrices in traversal order.
struct Representation {
  Field field;
  std::vector<std::size_t> dims;
  std::vector<Matrix> maps;

  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  static Representation zero(const PathAlgebra& algebra);
};

// Throws Error(InvalidRepresentation) on shape mismatch or a relation that
// does not act as zero.
void validate(const PathAlgebra& algebra, const Representation& m);

Matrix path_action(const PathAlgebra& algebra, const Representation& m,
                   const Path& path);

std::string dimension_vector_string(const Representation& m);

// A module homomorphism: one block per vertex, dims_source[v] x dims_target[v].
struct ModuleMap {
  std::vector<Matrix> blocks;

  bool is_zero() const;
  static ModuleMap zero(const Representation& from, const Representation& to);
  static ModuleMap identity(const Representation& m);
};

// First f, then g.
ModuleMap compose(const ModuleMap& f, const ModuleMap& g);
ModuleMap add(const ModuleMap& f, const ModuleMap& g);
ModuleMap scale(const ModuleMap& f, const Scalar& s);
bool is_homomorphism(const PathAlgebra& algebra, const Representation& from,
                     const Representation& to, const ModuleMap& f);
bool is_invertible(const ModuleMap& f);
bool is_nilpotent(const ModuleMap& f);

struct HomBasis {
  std::vector<ModuleMap> maps;
  std::size_t dim() const noexcept { return maps.size(); }
};

HomBasis hom_space(const PathAlgebra& algebra, const Representation& from,
                   const Representation& to);

// Per-vertex subspaces of a representation.
using GradedSubspace = std::vector<Subspace>;

GradedSubspace zero_subspace(const Representation& m);
GradedSubspace whole_space(const Representation& m);
std::size_t total_dim(const GradedSubspace& s);
GradedSubspace sum(const GradedSubspace& a, const GradedSubspace& b);
bool contains(const GradedSubspace& big, const GradedSubspace& small);
GradedSubspace image(const ModuleMap& f, const Representation& to);
GradedSubspace kernel(const ModuleMap& f, const Representation& from);
// Smallest submodule containing the given per-vertex subspaces.
GradedSubspace submodule_closure(const PathAlgebra& algebra,
                                 const Representation& m, GradedSubspace gens);
bool is_submodule(const PathAlgebra& algebra, const Representation& m,
                  const GradedSubspace& s);
// Sum of the images of the arrows.
GradedSubspace radical(const PathAlgebra& algebra, const Representation& m);

struct SubmoduleInclusion {
  Representation module;
  ModuleMap inclusion;  // module -> ambient
};
SubmoduleInclusion restrict_to(const PathAlgebra& algebra,
                               const Representation& m, const GradedSubspace& s);

struct QuotientProjection {
  Representation module;
  ModuleMap projection;  // ambient -> module
};
QuotientProjection quotient(const PathAlgebra& algebra, const Representation& m,
                            const GradedSubspace& s);

struct DirectSum {
  Representation module;
  std::vector<ModuleMap> injections;   // summand k -> sum
  std::vector<ModuleMap> projections;  // sum -> summand k
};
DirectSum direct_sum(const PathAlgebra& algebra,
                     const std::vector<Representation>& summands);

// Vector-space dual: a module over the opposite algebra with transposed
// matrices (arrow indices unchanged).
Representation dual(const Representation& m);

// Isomorphism invariants cheap enough to prefilter isomorphism tests:
// dimension vector, top and socle dimensions, and the rank of every basis
// path's action.
struct ModuleFingerprint {
  std::vector<std::size_t> invariants;
  std::uint64_t hash = 0;

  friend bool operator==(const ModuleFingerprint& a, const ModuleFingerprint& b) {
    return a.invariants == b.invariants;
  }
  friend auto operator<=>(const ModuleFingerprint& a, const ModuleFingerprint& b) {
    return a.invariants <=> b.invariants;
  }
};
ModuleFingerprint fingerprint(const PathAlgebra& algebra, const Representation& m);

std::uint64_t fnv1a(const std::string& bytes);

}  // namespace torsionlab
