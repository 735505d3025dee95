#include "torsionlab/quiver.hpp"

#include <algorithm>

#include "torsionlab/error.hpp"

namespace torsionlab {

void BoundQuiverPresentation::validate() const {
  const std::size_t n = vertices.size();
  if (n == 0) throw Error(ErrorCode::InvalidPresentation, "no vertices");
  for (const auto& a : arrows) {
    if (a.source >= n || a.target >= n) {
      throw Error(ErrorCode::InvalidPresentation,
                  "arrow " + a.name + " has an undeclared endpoint");
    }
  }
  for (const auto& rel : relations) {
    if (rel.size() < 2) {
      throw Error(ErrorCode::InvalidPresentation,
                  "relations must be paths of length at least 2");
    }
    for (std::size_t k = 0; k < rel.size(); ++k) {
      if (rel[k] >= arrows.size()) {
        throw Error(ErrorCode::InvalidPresentation, "relation uses unknown arrow");
      }
      if (k > 0 && arrows[rel[k - 1]].target != arrows[rel[k]].source) {
        throw Error(ErrorCode::NonComposablePath,
                    "relation step " + arrows[rel[k - 1]].name + " then " +
                        arrows[rel[k]].name + " does not compose");
      }
    }
  }
}

BoundQuiverPresentation opposite_algebra(const BoundQuiverPresentation& p) {
  BoundQuiverPresentation op = p;
  for (auto& a : op.arrows) std::swap(a.source, a.target);
  for (auto& rel : op.relations) std::reverse(rel.begin(), rel.end());
  return op;
}

PathAlgebra::PathAlgebra(BoundQuiverPresentation presentation,
                         std::size_t length_factor)
    : pres_(std::move(presentation)) {
  pres_.validate();
  const std::size_t n = pres_.vertices.size();
  const std::size_t bound = pres_.arrows.size() * length_factor;

  auto ends_with_relation = [&](const std::vector<std::size_t>& arrows) {
    for (const auto& rel : pres_.relations) {
      if (rel.size() <= arrows.size() &&
          std::equal(rel.begin(), rel.end(), arrows.end() - rel.size())) {
        return true;
      }
    }
    return false;
  };

  for (std::size_t v = 0; v < n; ++v) basis_.push_back(Path{v, v, {}});
  std::size_t layer_begin = 0, layer_end = basis_.size();
  while (layer_begin < layer_end) {
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (std::size_t a = 0; a < pres_.arrows.size(); ++a) {
        if (pres_.arrows[a].source != basis_[i].target) continue;
        Path next = basis_[i];
        next.arrows.push_back(a);
        next.target = pres_.arrows[a].target;
        if (ends_with_relation(next.arrows)) continue;
        if (next.length() > bound) {
          throw Error(ErrorCode::InfiniteDimensional,
                      "nonzero paths longer than " + std::to_string(bound) +
                          " exist; add relations to bound the algebra");
        }
        basis_.push_back(std::move(next));
      }
    }
    layer_begin = layer_end;
    layer_end = basis_.size();
  }

  for (std::size_t i = 0; i < basis_.size(); ++i) {
    index_.emplace(std::make_pair(basis_[i].source, basis_[i].arrows), i);
    max_length_ = std::max(max_length_, basis_[i].length());
  }
  between_.assign(n * n, {});
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    between_[basis_[i].source * n + basis_[i].target].push_back(i);
  }
  const std::size_t d = basis_.size();
  product_.assign(d * d, -1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (basis_[i].target != basis_[j].source) continue;
      std::vector<std::size_t> joined = basis_[i].arrows;
      joined.insert(joined.end(), basis_[j].arrows.begin(), basis_[j].arrows.end());
      if (auto k = find(basis_[i].source, joined)) product_[i * d + j] = static_cast<long>(*k);
    }
  }
}

std::optional<std::size_t> PathAlgebra::find(
    std::size_t source, const std::vector<std::size_t>& arrows) const {
  auto it = index_.find({source, arrows});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace torsionlab
