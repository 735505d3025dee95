#include "torsionlab/representation.hpp"

#include <numeric>

#include "torsionlab/error.hpp"

namespace torsionlab {

std::size_t Representation::total_dim() const {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{0});
}

Representation Representation::zero(const PathAlgebra& algebra) {
  Representation m;
  m.field = algebra.field();
  m.dims.assign(algebra.vertex_count(), 0);
  for (std::size_t a = 0; a < algebra.arrow_count(); ++a) {
    m.maps.emplace_back(algebra.field(), 0, 0);
  }
  return m;
}

void validate(const PathAlgebra& algebra, const Representation& m) {
  if (!(m.field == algebra.field())) {
    throw Error(ErrorCode::InvalidRepresentation, "field differs from the algebra's");
  }
  if (m.dims.size() != algebra.vertex_count() ||
      m.maps.size() != algebra.arrow_count()) {
    throw Error(ErrorCode::InvalidRepresentation, "vertex or arrow count mismatch");
  }
  for (std::size_t a = 0; a < algebra.arrow_count(); ++a) {
    const Arrow& arr = algebra.arrow(a);
    if (m.maps[a].rows() != m.dims[arr.source] ||
        m.maps[a].cols() != m.dims[arr.target]) {
      throw Error(ErrorCode::InvalidRepresentation,
                  "matrix of arrow " + arr.name + " has the wrong shape");
    }
  }
  for (const auto& rel : algebra.presentation().relations) {
    Path p{algebra.arrow(rel.front()).source, algebra.arrow(rel.back()).target, rel};
    if (!path_action(algebra, m, p).is_zero()) {
      throw Error(ErrorCode::InvalidRepresentation, "a relation acts nonzero");
    }
  }
}

Matrix path_action(const PathAlgebra& algebra, const Representation& m,
                   const Path& path) {
  Matrix acc = Matrix::identity(algebra.field(), m.dims[path.source]);
  for (std::size_t a : path.arrows) acc = acc * m.maps[a];
  return acc;
}

std::string dimension_vector_string(const Representation& m) {
  std::string s = "(";
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    if (v > 0) s += ",";
    s += std::to_string(m.dims[v]);
  }
  return s + ")";
}

bool ModuleMap::is_zero() const {
  for (const auto& b : blocks) {
    if (!b.is_zero()) return false;
  }
  return true;
}

ModuleMap ModuleMap::zero(const Representation& from, const Representation& to) {
  ModuleMap f;
  for (std::size_t v = 0; v < from.dims.size(); ++v) {
    f.blocks.emplace_back(from.field, from.dims[v], to.dims[v]);
  }
  return f;
}

ModuleMap ModuleMap::identity(const Representation& m) {
  ModuleMap f;
  for (std::size_t d : m.dims) f.blocks.push_back(Matrix::identity(m.field, d));
  return f;
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap h;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) {
    h.blocks.push_back(f.blocks[v] * g.blocks[v]);
  }
  return h;
}

ModuleMap add(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap h;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) {
    h.blocks.push_back(f.blocks[v] + g.blocks[v]);
  }
  return h;
}

ModuleMap scale(const ModuleMap& f, const Scalar& s) {
  ModuleMap h;
  for (const auto& b : f.blocks) h.blocks.push_back(b.scaled(s));
  return h;
}

bool is_homomorphism(const PathAlgebra& algebra, const Representation& from,
                     const Representation& to, const ModuleMap& f) {
  for (std::size_t a = 0; a < algebra.arrow_count(); ++a) {
    const Arrow& arr = algebra.arrow(a);
    if (!(from.maps[a] * f.blocks[arr.target] == f.blocks[arr.source] * to.maps[a])) {
      return false;
    }
  }
  return true;
}

bool is_invertible(const ModuleMap& f) {
  for (const auto& b : f.blocks) {
    if (!is_invertible(b)) return false;
  }
  return true;
}

bool is_nilpotent(const ModuleMap& f) {
  for (const auto& b : f.blocks) {
    if (!is_nilpotent(b)) return false;
  }
  return true;
}

HomBasis hom_space(const PathAlgebra& algebra, const Representation& from,
                   const Representation& to) {
  const Field& field = algebra.field();
  const std::size_t n = algebra.vertex_count();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    offset[v + 1] = offset[v] + from.dims[v] * to.dims[v];
  }
  const std::size_t unknowns = offset[n];
  HomBasis out;
  if (unknowns == 0) return out;

  std::size_t equations = 0;
  for (std::size_t a = 0; a < algebra.arrow_count(); ++a) {
    const Arrow& arr = algebra.arrow(a);
    equations += from.dims[arr.source] * to.dims[arr.target];
  }
  Matrix system(field, equations, unknowns);
  std::size_t row = 0;
  // For a: i -> j the condition is from_a * f_j - f_i * to_a = 0.
  for (std::size_t a = 0; a < algebra.arrow_count(); ++a) {
    const Arrow& arr = algebra.arrow(a);
    const std::size_t i = arr.source, j = arr.target;
    const Matrix& ma = from.maps[a];
    const Matrix& na = to.maps[a];
    for (std::size_t r = 0; r < from.dims[i]; ++r) {
      for (std::size_t c = 0; c < to.dims[j]; ++c, ++row) {
        for (std::size_t k = 0; k < from.dims[j]; ++k) {
          auto& cell = system(row, offset[j] + k * to.dims[j] + c);
          cell = field.add(cell, ma(r, k));
        }
        for (std::size_t k = 0; k < to.dims[i]; ++k) {
          auto& cell = system(row, offset[i] + r * to.dims[i] + k);
          cell = field.sub(cell, na(k, c));
        }
      }
    }
  }
  Matrix sol = right_kernel(system);
  for (std::size_t s = 0; s < sol.rows(); ++s) {
    ModuleMap f;
    for (std::size_t v = 0; v < n; ++v) {
      Matrix b(field, from.dims[v], to.dims[v]);
      for (std::size_t r = 0; r < from.dims[v]; ++r) {
        for (std::size_t c = 0; c < to.dims[v]; ++c) {
          b(r, c) = sol(s, offset[v] + r * to.dims[v] + c);
        }
      }
      f.blocks.push_back(std::move(b));
    }
    out.maps.push_back(std::move(f));
  }
  return out;
}

GradedSubspace zero_subspace(const Representation& m) {
  GradedSubspace s;
  for (std::size_t d : m.dims) s.emplace_back(m.field, d);
  return s;
}

GradedSubspace whole_space(const Representation& m) {
  GradedSubspace s;
  for (std::size_t d : m.dims) s.push_back(Subspace::whole(m.field, d));
  return s;
}

std::size_t total_dim(const GradedSubspace& s) {
  std::size_t t = 0;
  for (const auto& x : s) t += x.dim();
  return t;
}

GradedSubspace sum(const GradedSubspace& a, const GradedSubspace& b) {
  GradedSubspace s;
  for (std::size_t v = 0; v < a.size(); ++v) s.push_back(a[v].sum(b[v]));
  return s;
}

bool contains(const GradedSubspace& big, const GradedSubspace& small) {
  for (std::size_t v = 0; v < big.size(); ++v) {
    if (!big[v].contains(small[v])) return false;
  }
  return true;
}

GradedSubspace image(const ModuleMap& f, const Representation& to) {
  GradedSubspace s;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) {
    s.push_back(Subspace::span(f.blocks[v], to.dims[v]));
  }
  return s;
}

GradedSubspace kernel(const ModuleMap& f, const Representation& from) {
  GradedSubspace s;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) {
    s.push_back(Subspace::span(left_kernel(f.blocks[v]), from.dims[v]));
  }
  return s;
}

GradedSubspace submodule_closure(const PathAlgebra& algebra,
                                 const Representation& m, GradedSubspace gens) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < algebra.arrow_count(); ++a) {
      const Arrow& arr = algebra.arrow(a);
      const Subspace& src = gens[arr.source];
      if (src.dim() == 0) continue;
      Matrix moved = src.basis() * m.maps[a];
      if (gens[arr.target].contains(moved)) continue;
      gens[arr.target] = gens[arr.target].sum(Subspace::span(moved, m.dims[arr.target]));
      changed = true;
    }
  }
  return gens;
}

bool is_submodule(const PathAlgebra& algebra, const Representation& m,
                  const GradedSubspace& s) {
  for (std::size_t a = 0; a < algebra.arrow_count(); ++a) {
    const Arrow& arr = algebra.arrow(a);
    if (s[arr.source].dim() == 0) continue;
    if (!s[arr.target].contains(s[arr.source].basis() * m.maps[a])) return false;
  }
  return true;
}

GradedSubspace radical(const PathAlgebra& algebra, const Representation& m) {
  GradedSubspace s = zero_subspace(m);
  for (std::size_t a = 0; a < algebra.arrow_count(); ++a) {
    const Arrow& arr = algebra.arrow(a);
    if (m.maps[a].rows() == 0) continue;
    s[arr.target] = s[arr.target].sum(Subspace::span(m.maps[a], m.dims[arr.target]));
  }
  return s;
}

SubmoduleInclusion restrict_to(const PathAlgebra& algebra,
                               const Representation& m, const GradedSubspace& s) {
  SubmoduleInclusion out;
  out.module.field = m.field;
  for (const auto& sv : s) {
    out.module.dims.push_back(sv.dim());
    out.inclusion.blocks.push_back(sv.basis());
  }
  for (std::size_t a = 0; a < algebra.arrow_count(); ++a) {
    const Arrow& arr = algebra.arrow(a);
    const Subspace& src = s[arr.source];
    const Subspace& tgt = s[arr.target];
    Matrix moved = src.basis() * m.maps[a];
    if (!tgt.contains(moved)) {
      throw Error(ErrorCode::InvalidRepresentation, "subspace is not a submodule");
    }
    out.module.maps.push_back(tgt.coordinates(moved));
  }
  return out;
}

QuotientProjection quotient(const PathAlgebra& algebra, const Representation& m,
                            const GradedSubspace& s) {
  QuotientProjection out;
  out.module.field = m.field;
  std::vector<Matrix> complements;
  for (const auto& sv : s) {
    out.projection.blocks.push_back(sv.quotient_map());
    complements.push_back(sv.complement_basis());
    out.module.dims.push_back(sv.ambient() - sv.dim());
  }
  for (std::size_t a = 0; a < algebra.arrow_count(); ++a) {
    const Arrow& arr = algebra.arrow(a);
    out.module.maps.push_back(complements[arr.source] * m.maps[a] *
                              out.projection.blocks[arr.target]);
  }
  return out;
}

DirectSum direct_sum(const PathAlgebra& algebra,
                     const std::vector<Representation>& summands) {
  const Field& field = algebra.field();
  const std::size_t n = algebra.vertex_count();
  DirectSum out;
  out.module.field = field;
  out.module.dims.assign(n, 0);
  std::vector<std::vector<std::size_t>> offsets(summands.size(),
                                                std::vector<std::size_t>(n, 0));
  for (std::size_t k = 0; k < summands.size(); ++k) {
    for (std::size_t v = 0; v < n; ++v) {
      offsets[k][v] = out.module.dims[v];
      out.module.dims[v] += summands[k].dims[v];
    }
  }
  for (std::size_t a = 0; a < algebra.arrow_count(); ++a) {
    const Arrow& arr = algebra.arrow(a);
    Matrix big(field, out.module.dims[arr.source], out.module.dims[arr.target]);
    for (std::size_t k = 0; k < summands.size(); ++k) {
      big.set_block(offsets[k][arr.source], offsets[k][arr.target], summands[k].maps[a]);
    }
    out.module.maps.push_back(std::move(big));
  }
  for (std::size_t k = 0; k < summands.size(); ++k) {
    ModuleMap inj, proj;
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t d = summands[k].dims[v];
      Matrix i(field, d, out.module.dims[v]);
      i.set_block(0, offsets[k][v], Matrix::identity(field, d));
      proj.blocks.push_back(i.transpose());
      inj.blocks.push_back(std::move(i));
    }
    out.injections.push_back(std::move(inj));
    out.projections.push_back(std::move(proj));
  }
  return out;
}

Representation dual(const Representation& m) {
  Representation d;
  d.field = m.field;
  d.dims = m.dims;
  for (const auto& mat : m.maps) d.maps.push_back(mat.transpose());
  return d;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

ModuleFingerprint fingerprint(const PathAlgebra& algebra, const Representation& m) {
  ModuleFingerprint fp;
  auto& inv = fp.invariants;
  inv.insert(inv.end(), m.dims.begin(), m.dims.end());
  GradedSubspace rad = radical(algebra, m);
  for (std::size_t v = 0; v < m.dims.size(); ++v) inv.push_back(m.dims[v] - rad[v].dim());
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    Matrix outgoing(m.field, m.dims[v], 0);
    std::size_t width = 0;
    for (std::size_t a = 0; a < algebra.arrow_count(); ++a) {
      if (algebra.arrow(a).source == v) width += m.maps[a].cols();
    }
    outgoing = Matrix(m.field, m.dims[v], width);
    std::size_t col = 0;
    for (std::size_t a = 0; a < algebra.arrow_count(); ++a) {
      if (algebra.arrow(a).source != v) continue;
      outgoing.set_block(0, col, m.maps[a]);
      col += m.maps[a].cols();
    }
    inv.push_back(m.dims[v] - rank(outgoing));
  }
  for (const Path& p : algebra.basis()) {
    if (p.length() == 0) continue;
    inv.push_back(rank(path_action(algebra, m, p)));
  }
  std::string bytes;
  for (std::size_t x : inv) bytes += std::to_string(x) + ",";
  fp.hash = fnv1a(bytes);
  return fp;
}

}  // namespace torsionlab
