#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torsionlab/representation.hpp"

namespace torsionlab::fixtures {

// Path 1 - 2 - ... - n. Arrow i joins i+1 and i+2 and points left when
// reversed[i] is set; relations are arrow-index paths.
BoundQuiverPresentation linear_quiver(std::size_t n, const Field& field,
                                      std::vector<bool> reversed = {},
                                      std::vector<std::vector<std::size_t>> relations = {});

// K[x]/(x^m); m = 1 gives K itself.
BoundQuiverPresentation truncated_loop(std::size_t m, const Field& field,
                                       const std::string& arrow = "x");

// Disjoint union of quivers, i.e. the product of the algebras. Vertices are
// renamed 1..n in order; arrow names must already be distinct.
BoundQuiverPresentation product(const std::vector<BoundQuiverPresentation>& parts);

struct CorpusEntry {
  std::string name;
  BoundQuiverPresentation presentation;
  bool product_of_locals = false;
  std::size_t torsion_classes = 0;  // known count
};

std::vector<CorpusEntry> corpus(const Field& field);

// A complete list of indecomposables up to isomorphism when every
// connected component is a linear quiver (any orientation, monomial
// relations) or a single vertex with one loop; otherwise nothing.
std::optional<std::vector<Representation>> known_indecomposables(const PathAlgebra& algebra);

}  // namespace torsionlab::fixtures
