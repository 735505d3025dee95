#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "torsionlab/quiver.hpp"

namespace torsionlab {

// Line-oriented algebra description:
//
//   # comment
//   field 2                 (0 selects the rationals)
//   vertex 1 2 3
//   arrow a: 1 -> 2
//   relation a b            (first a, then b)
//   bound nodes 1000
//   bound dim 64
//
// Blank lines and text after '#' are ignored. Keywords may repeat except
// field; the field defaults to 2.
struct AlgebraSpec {
  BoundQuiverPresentation presentation;
  std::optional<std::size_t> node_bound;
  std::optional<std::size_t> dim_bound;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

// Throws ParseError carrying line and column.
AlgebraSpec parse_algebra_spec(std::string_view text);

// Canonical text form; parsing it gives back an equal spec.
std::string serialize(const AlgebraSpec& spec);
std::string serialize(const BoundQuiverPresentation& presentation);

}  // namespace torsionlab
