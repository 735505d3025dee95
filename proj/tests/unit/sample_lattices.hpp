#pragma once

#include <string>
#include <vector>

#include "torsionlab/lattice.hpp"

namespace samples {

using torsionlab::lattice::CoverPair;
using torsionlab::lattice::FinitePoset;

inline FinitePoset chain(std::size_t n) {
  std::vector<CoverPair> c;
  for (std::size_t i = 1; i < n; ++i) c.emplace_back(i, i - 1);
  return FinitePoset::from_covers(n, c);
}

// Subsets of {0..k-1}, element i is the subset with bitmask i.
inline FinitePoset cube(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = (a & b) == a;
  }
  return FinitePoset(leq);
}

// 0 < a < 1, 0 < b < c < 1 as 0, a, b, c, 1.
inline FinitePoset pentagon() {
  return FinitePoset::from_covers(5, {{1, 0}, {2, 0}, {3, 2}, {4, 1}, {4, 3}},
                                  {"0", "a", "b", "c", "1"});
}

// 0 < x, y, z < 1 as 0, x, y, z, 1.
inline FinitePoset diamond() {
  return FinitePoset::from_covers(5, {{1, 0}, {2, 0}, {3, 0}, {4, 1}, {4, 2}, {4, 3}},
                                  {"0", "x", "y", "z", "1"});
}

}  // namespace samples
