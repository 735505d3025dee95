#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torsionlab/field.hpp"

namespace torsionlab {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Quiver with monomial (zero) relations over an exact field. A relation is
// a path given as arrow indices in traversal order: {a, b} means first a,
// then b, so target(a) == source(b).
struct BoundQuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::size_t>> relations;
  Field field;

  std::size_t vertex_count() const noexcept { return vertices.size(); }
  // Throws Error(InvalidPresentation) or Error(NonComposablePath).
  void validate() const;

  friend bool operator==(const BoundQuiverPresentation&,
                         const BoundQuiverPresentation&) = default;
};

// Arrows reversed (names and order kept), relation paths reversed.
BoundQuiverPresentation opposite_algebra(const BoundQuiverPresentation& p);

struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;  // empty for the trivial path e_source

  std::size_t length() const noexcept { return arrows.size(); }
};

// The monomial algebra kQ/I with basis the nonzero paths. Basis index v is
// the trivial path e_v for every vertex v.
class PathAlgebra {
 public:
  static constexpr std::size_t kDefaultLengthFactor = 64;

  // Throws Error(InfiniteDimensional) when some nonzero path is longer
  // than arrow_count * length_factor.
  explicit PathAlgebra(BoundQuiverPresentation presentation,
                       std::size_t length_factor = kDefaultLengthFactor);

  const BoundQuiverPresentation& presentation() const noexcept { return pres_; }
  const Field& field() const noexcept { return pres_.field; }
  std::size_t vertex_count() const noexcept { return pres_.vertices.size(); }
  std::size_t arrow_count() const noexcept { return pres_.arrows.size(); }
  const Arrow& arrow(std::size_t a) const { return pres_.arrows[a]; }

  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<Path>& basis() const noexcept { return basis_; }
  const Path& path(std::size_t i) const { return basis_[i]; }
  std::optional<std::size_t> find(std::size_t source,
                                  const std::vector<std::size_t>& arrows) const;
  // Basis index of the product of two basis paths, or nullopt for zero.
  std::optional<std::size_t> multiply(std::size_t i, std::size_t j) const {
    long v = product_[i * basis_.size() + j];
    return v < 0 ? std::nullopt : std::optional<std::size_t>(v);
  }
  // Basis indices of the nonzero paths from `from` to `to`.
  const std::vector<std::size_t>& paths_between(std::size_t from,
                                                std::size_t to) const {
    return between_[from * vertex_count() + to];
  }
  // Length of the longest nonzero path.
  std::size_t max_path_length() const noexcept { return max_length_; }

 private:
  BoundQuiverPresentation pres_;
  std::vector<Path> basis_;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index_;
  std::vector<long> product_;
  std::vector<std::vector<std::size_t>> between_;
  std::size_t max_length_ = 0;
};

}  // namespace torsionlab
