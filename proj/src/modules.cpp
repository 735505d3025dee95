#include "torsionlab/modules.hpp"

#include <algorithm>
#include <cstdint>

#include "torsionlab/error.hpp"

namespace torsionlab {

namespace {

std::size_t arrow_path(const PathAlgebra& algebra, std::size_t a) {
  return *algebra.find(algebra.arrow(a).source, {a});
}

// Position of each basis path inside paths_between(source, target).
std::vector<std::size_t> between_positions(const PathAlgebra& algebra) {
  std::vector<std::size_t> pos(algebra.dimension(), 0);
  for (std::size_t i = 0; i < algebra.vertex_count(); ++i) {
    for (std::size_t j = 0; j < algebra.vertex_count(); ++j) {
      const auto& list = algebra.paths_between(i, j);
      for (std::size_t k = 0; k < list.size(); ++k) pos[list[k]] = k;
    }
  }
  return pos;
}

Matrix flatten(const ModuleMap& f, const Field& field) {
  std::size_t width = 0;
  for (const auto& b : f.blocks) width += b.rows() * b.cols();
  Matrix row(field, 1, width);
  std::size_t c = 0;
  for (const auto& b : f.blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) row(0, c++) = b(i, j);
    }
  }
  return row;
}

Scalar trace_of(const ModuleMap& f, const Field& field) {
  Scalar t = field.zero();
  for (const auto& b : f.blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) t = field.add(t, b(i, i));
  }
  return t;
}

std::vector<Scalar> scalar_candidates(const Field& field, const ModuleMap& b,
                                      std::size_t dim) {
  if (field.is_finite() && field.characteristic() <= 64) return field.elements();
  std::vector<Scalar> out{field.zero(), field.one(), field.neg(field.one())};
  Scalar d = field.from_int(static_cast<std::int64_t>(dim));
  if (!field.is_zero(d)) out.push_back(field.div(trace_of(b, field), d));
  for (const auto& blk : b.blocks) {
    for (std::size_t i = 0; i < blk.rows(); ++i) out.push_back(blk(i, i));
  }
  std::vector<Scalar> unique;
  for (const auto& s : out) {
    if (std::find(unique.begin(), unique.end(), s) == unique.end()) unique.push_back(s);
  }
  return unique;
}

ModuleMap shifted(const ModuleMap& b, const Scalar& c, const Representation& m) {
  return add(b, scale(ModuleMap::identity(m), m.field.neg(c)));
}

bool splits(const ModuleMap& x) { return !is_nilpotent(x) && !is_invertible(x); }

ModuleMap combination(const HomBasis& e, const std::vector<Scalar>& coeffs,
                      const Representation& m) {
  ModuleMap acc = ModuleMap::zero(m, m);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!m.field.is_zero(coeffs[i])) acc = add(acc, scale(e.maps[i], coeffs[i]));
  }
  return acc;
}

// Basis of the subspace spanned by the given endomorphisms.
std::vector<ModuleMap> independent_subset(const std::vector<ModuleMap>& maps,
                                          const Field& field) {
  std::vector<ModuleMap> out;
  Matrix rows;
  std::size_t r = 0;
  for (const auto& f : maps) {
    Matrix candidate = rows.rows() == 0 ? flatten(f, field) : rows.stacked(flatten(f, field));
    std::size_t nr = rank(candidate);
    if (nr > r) {
      rows = std::move(candidate);
      r = nr;
      out.push_back(f);
    }
  }
  return out;
}

// True iff the span of `ideal` is closed under composition and nilpotent.
bool is_nilpotent_subalgebra(const std::vector<ModuleMap>& ideal, const Field& field) {
  if (ideal.empty()) return true;
  Matrix span_rows = flatten(ideal.front(), field);
  for (std::size_t i = 1; i < ideal.size(); ++i) span_rows = span_rows.stacked(flatten(ideal[i], field));
  Subspace span = Subspace::span(span_rows, span_rows.cols());
  for (const auto& u : ideal) {
    for (const auto& v : ideal) {
      if (!span.contains(flatten(compose(u, v), field))) return false;
    }
  }
  // J^k strictly decreases until it vanishes or stalls.
  std::vector<ModuleMap> power = ideal;
  std::size_t last_dim = power.size();
  while (!power.empty()) {
    std::vector<ModuleMap> next;
    for (const auto& u : power) {
      for (const auto& v : ideal) next.push_back(compose(u, v));
    }
    next.erase(std::remove_if(next.begin(), next.end(),
                              [](const ModuleMap& f) { return f.is_zero(); }),
               next.end());
    power = independent_subset(next, field);
    if (!power.empty() && power.size() >= last_dim) return false;
    last_dim = power.size();
  }
  return true;
}

void fitting_parts(const PathAlgebra& algebra, const Representation& m,
                   std::vector<Representation>& out);

}  // namespace

Representation simple_module(const PathAlgebra& algebra, std::size_t vertex) {
  Representation s = Representation::zero(algebra);
  s.dims[vertex] = 1;
  for (std::size_t a = 0; a < algebra.arrow_count(); ++a) {
    const Arrow& arr = algebra.arrow(a);
    s.maps[a] = Matrix(algebra.field(), s.dims[arr.source], s.dims[arr.target]);
  }
  return s;
}

Representation projective_module(const PathAlgebra& algebra, std::size_t vertex) {
  const Field& field = algebra.field();
  auto pos = between_positions(algebra);
  Representation p;
  p.field = field;
  for (std::size_t j = 0; j < algebra.vertex_count(); ++j) {
    p.dims.push_back(algebra.paths_between(vertex, j).size());
  }
  for (std::size_t a = 0; a < algebra.arrow_count(); ++a) {
    const Arrow& arr = algebra.arrow(a);
    Matrix m(field, p.dims[arr.source], p.dims[arr.target]);
    const auto& rows = algebra.paths_between(vertex, arr.source);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (auto q = algebra.multiply(rows[r], arrow_path(algebra, a))) {
        m(r, pos[*q]) = field.one();
      }
    }
    p.maps.push_back(std::move(m));
  }
  return p;
}

Representation injective_module(const PathAlgebra& algebra, std::size_t vertex) {
  const Field& field = algebra.field();
  auto pos = between_positions(algebra);
  Representation inj;
  inj.field = field;
  for (std::size_t j = 0; j < algebra.vertex_count(); ++j) {
    inj.dims.push_back(algebra.paths_between(j, vertex).size());
  }
  // phi_p . a = sum over q with a q = p of phi_q
  for (std::size_t a = 0; a < algebra.arrow_count(); ++a) {
    const Arrow& arr = algebra.arrow(a);
    Matrix m(field, inj.dims[arr.source], inj.dims[arr.target]);
    const auto& cols = algebra.paths_between(arr.target, vertex);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (auto p = algebra.multiply(arrow_path(algebra, a), cols[c])) {
        m(pos[*p], c) = field.one();
      }
    }
    inj.maps.push_back(std::move(m));
  }
  return inj;
}

std::vector<Representation> simples(const PathAlgebra& algebra) {
  std::vector<Representation> out;
  for (std::size_t v = 0; v < algebra.vertex_count(); ++v) out.push_back(simple_module(algebra, v));
  return out;
}

std::vector<Representation> projectives(const PathAlgebra& algebra) {
  std::vector<Representation> out;
  for (std::size_t v = 0; v < algebra.vertex_count(); ++v) out.push_back(projective_module(algebra, v));
  return out;
}

std::vector<Representation> injectives(const PathAlgebra& algebra,
                                       const PathAlgebra& opposite) {
  (void)algebra;
  std::vector<Representation> out;
  for (std::size_t v = 0; v < opposite.vertex_count(); ++v) {
    out.push_back(dual(projective_module(opposite, v)));
  }
  return out;
}

Representation projective_sum(const PathAlgebra& algebra,
                              const std::vector<std::size_t>& vertices) {
  std::vector<Representation> parts;
  for (std::size_t v : vertices) parts.push_back(projective_module(algebra, v));
  return direct_sum(algebra, parts).module;
}

ModuleMap realize(const PathAlgebra& algebra, const ProjectiveMap& map) {
  const Field& field = algebra.field();
  const std::size_t n = algebra.vertex_count();
  auto pos = between_positions(algebra);
  ModuleMap f;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> col_offset(map.target.size(), 0);
    std::size_t cols = 0;
    for (std::size_t k = 0; k < map.target.size(); ++k) {
      col_offset[k] = cols;
      cols += algebra.paths_between(map.target[k], j).size();
    }
    std::size_t rows = 0;
    for (std::size_t l = 0; l < map.source.size(); ++l) {
      rows += algebra.paths_between(map.source[l], j).size();
    }
    Matrix block(field, rows, cols);
    std::size_t r = 0;
    for (std::size_t l = 0; l < map.source.size(); ++l) {
      for (std::size_t q : algebra.paths_between(map.source[l], j)) {
        for (std::size_t k = 0; k < map.target.size(); ++k) {
          const auto& coeffs = map.entries[k][l];
          for (std::size_t p = 0; p < coeffs.size(); ++p) {
            if (field.is_zero(coeffs[p])) continue;
            auto pq = algebra.multiply(p, q);
            if (!pq) continue;
            auto& cell = block(r, col_offset[k] + pos[*pq]);
            cell = field.add(cell, coeffs[p]);
          }
        }
        ++r;
      }
    }
    f.blocks.push_back(std::move(block));
  }
  return f;
}

ProjectiveCover projective_cover(const PathAlgebra& algebra, const Representation& m) {
  const std::size_t n = algebra.vertex_count();
  GradedSubspace rad = radical(algebra, m);
  std::vector<Matrix> tops;
  ProjectiveCover cover;
  for (std::size_t v = 0; v < n; ++v) {
    tops.push_back(rad[v].complement_basis());
    for (std::size_t t = 0; t < tops[v].rows(); ++t) cover.vertices.push_back(v);
  }
  cover.module = projective_sum(algebra, cover.vertices);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix block(m.field, cover.module.dims[j], m.dims[j]);
    std::size_t r = 0;
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t t = 0; t < tops[v].rows(); ++t) {
        Matrix top = tops[v].row(t);
        for (std::size_t p : algebra.paths_between(v, j)) {
          block.set_block(r++, 0, top * path_action(algebra, m, algebra.path(p)));
        }
      }
    }
    cover.map.blocks.push_back(std::move(block));
  }
  return cover;
}

bool is_projective(const PathAlgebra& algebra, const Representation& m) {
  return projective_cover(algebra, m).module.total_dim() == m.total_dim();
}

ProjectivePresentation minimal_projective_presentation(const PathAlgebra& algebra,
                                                       const Representation& m) {
  const Field& field = algebra.field();
  ProjectivePresentation pres;
  pres.cover = projective_cover(algebra, m);
  const Representation& p0 = pres.cover.module;
  SubmoduleInclusion k = restrict_to(algebra, p0, kernel(pres.cover.map, p0));
  ProjectiveCover kc = projective_cover(algebra, k.module);
  ModuleMap into_p0 = compose(kc.map, k.inclusion);

  pres.map.source = kc.vertices;
  pres.map.target = pres.cover.vertices;
  pres.map.entries.assign(pres.map.target.size(),
                          std::vector<std::vector<Scalar>>(
                              pres.map.source.size(),
                              std::vector<Scalar>(algebra.dimension(), field.zero())));
  auto pos = between_positions(algebra);
  for (std::size_t l = 0; l < kc.vertices.size(); ++l) {
    const std::size_t w = kc.vertices[l];
    // Row of the l-th generator (trivial path e_w) inside the block at w.
    std::size_t row = 0;
    for (std::size_t l2 = 0; l2 < l; ++l2) row += algebra.paths_between(kc.vertices[l2], w).size();
    row += pos[w];
    std::size_t col = 0;
    for (std::size_t k0 = 0; k0 < pres.map.target.size(); ++k0) {
      for (std::size_t p : algebra.paths_between(pres.map.target[k0], w)) {
        pres.map.entries[k0][l][p] = into_p0.blocks[w](row, col++);
      }
    }
  }
  return pres;
}

Representation transpose(const PathAlgebra& algebra, const PathAlgebra& opposite,
                         const Representation& m) {
  ProjectivePresentation pres = minimal_projective_presentation(algebra, m);
  const Field& field = algebra.field();
  // Hom(-, A) turns the presentation around; each entry is read in the
  // opposite algebra by reversing its paths.
  std::vector<std::size_t> reversed(algebra.dimension());
  for (std::size_t i = 0; i < algebra.dimension(); ++i) {
    const Path& p = algebra.path(i);
    std::vector<std::size_t> arrows(p.arrows.rbegin(), p.arrows.rend());
    auto idx = opposite.find(p.target, arrows);
    if (!idx) throw Error(ErrorCode::InvalidPresentation, "opposite algebra mismatch");
    reversed[i] = *idx;
  }
  ProjectiveMap dual_map;
  dual_map.source = pres.map.target;
  dual_map.target = pres.map.source;
  dual_map.entries.assign(dual_map.target.size(),
                          std::vector<std::vector<Scalar>>(
                              dual_map.source.size(),
                              std::vector<Scalar>(opposite.dimension(), field.zero())));
  for (std::size_t k = 0; k < pres.map.target.size(); ++k) {
    for (std::size_t l = 0; l < pres.map.source.size(); ++l) {
      const auto& coeffs = pres.map.entries[k][l];
      for (std::size_t p = 0; p < coeffs.size(); ++p) {
        dual_map.entries[l][k][reversed[p]] = coeffs[p];
      }
    }
  }
  Representation target = projective_sum(opposite, dual_map.target);
  ModuleMap f = realize(opposite, dual_map);
  return quotient(opposite, target, image(f, target)).module;
}

Representation tau(const PathAlgebra& algebra, const PathAlgebra& opposite,
                   const Representation& m) {
  return dual(transpose(algebra, opposite, m));
}

bool is_tau_rigid(const PathAlgebra& algebra, const PathAlgebra& opposite,
                  const Representation& m) {
  Representation t = tau(algebra, opposite, m);
  if (t.is_zero()) return true;
  return hom_space(algebra, m, t).dim() == 0;
}

EndomorphismAnalysis analyse_endomorphisms(const PathAlgebra& algebra,
                                           const Representation& m) {
  if (m.is_zero()) throw Error(ErrorCode::ZeroModule, "End of the zero module");
  const Field& field = algebra.field();
  const std::size_t dim = m.total_dim();
  EndomorphismAnalysis out;
  out.endomorphisms = hom_space(algebra, m, m);
  const HomBasis& e = out.endomorphisms;

  // Each basis element either splits M after a scalar shift or is a scalar
  // plus a nilpotent; in the latter case remember the nilpotent part.
  std::vector<ModuleMap> nilpotent_parts;
  bool all_scalar_plus_nilpotent = true;
  for (const auto& b : e.maps) {
    bool found = false;
    for (const auto& c : scalar_candidates(field, b, dim)) {
      ModuleMap x = shifted(b, c, m);
      if (splits(x)) {
        out.splitting = std::move(x);
        return out;
      }
      if (!found && is_nilpotent(x)) {
        nilpotent_parts.push_back(std::move(x));
        found = true;
      }
    }
    all_scalar_plus_nilpotent = all_scalar_plus_nilpotent && found;
  }
  if (all_scalar_plus_nilpotent) {
    std::vector<ModuleMap> nonzero;
    for (auto& x : nilpotent_parts) {
      if (!x.is_zero()) nonzero.push_back(x);
    }
    std::vector<ModuleMap> j0 = independent_subset(nonzero, field);
    if (j0.size() + 1 == e.dim() && is_nilpotent_subalgebra(j0, field)) {
      out.radical = std::move(j0);
      return out;
    }
  }

  // Products and sums of basis elements, then a fixed pseudo-random walk.
  for (std::size_t i = 0; i < e.dim(); ++i) {
    for (std::size_t j = 0; j < e.dim(); ++j) {
      for (const ModuleMap& y : {compose(e.maps[i], e.maps[j]), add(e.maps[i], e.maps[j])}) {
        for (const auto& c : scalar_candidates(field, y, dim)) {
          ModuleMap x = shifted(y, c, m);
          if (splits(x)) {
            out.splitting = std::move(x);
            return out;
          }
        }
      }
    }
  }
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  auto next = [&state]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::int64_t>((state >> 33) % 1000003);
  };
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Scalar> coeffs;
    for (std::size_t i = 0; i < e.dim(); ++i) coeffs.push_back(field.from_int(next() % 7 - 3));
    ModuleMap y = combination(e, coeffs, m);
    for (const auto& c : scalar_candidates(field, y, dim)) {
      ModuleMap x = shifted(y, c, m);
      if (splits(x)) {
        out.splitting = std::move(x);
        return out;
      }
    }
  }

  // Small finite fields: End(M) is local iff every element is nilpotent or
  // invertible, and then its radical is spanned by the nilpotent elements.
  if (field.is_finite()) {
    const auto p = static_cast<std::uint64_t>(field.characteristic());
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < e.dim() && count <= (1u << 16); ++i) count *= p;
    if (count <= (1u << 16)) {
      std::vector<ModuleMap> nilpotents;
      for (std::uint64_t code = 1; code < count; ++code) {
        std::vector<Scalar> coeffs;
        std::uint64_t c = code;
        for (std::size_t i = 0; i < e.dim(); ++i, c /= p) {
          coeffs.push_back(field.from_int(static_cast<std::int64_t>(c % p)));
        }
        ModuleMap x = combination(e, coeffs, m);
        if (splits(x)) {
          out.splitting = std::move(x);
          return out;
        }
        if (is_nilpotent(x)) nilpotents.push_back(std::move(x));
      }
      out.radical = independent_subset(nilpotents, field);
      return out;
    }
  }
  throw Error(ErrorCode::DecompositionFailure,
              "could not certify End(M) local or find a splitting endomorphism");
}

bool is_indecomposable(const PathAlgebra& algebra, const Representation& m) {
  if (m.is_zero()) return false;
  return analyse_endomorphisms(algebra, m).local();
}

namespace {

void fitting_parts(const PathAlgebra& algebra, const Representation& m,
                   std::vector<Representation>& out) {
  if (m.is_zero()) return;
  EndomorphismAnalysis an = analyse_endomorphisms(algebra, m);
  if (an.local()) {
    out.push_back(m);
    return;
  }
  // Fitting: M = Im x^N (+) Ker x^N for N large.
  GradedSubspace im, ker;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    const Matrix& blk = an.splitting->blocks[v];
    if (blk.rows() == 0) {
      im.emplace_back(m.field, 0);
      ker.emplace_back(m.field, 0);
      continue;
    }
    Matrix stable = stable_power(blk);
    im.push_back(Subspace::span(stable, m.dims[v]));
    ker.push_back(Subspace::span(left_kernel(stable), m.dims[v]));
  }
  fitting_parts(algebra, restrict_to(algebra, m, im).module, out);
  fitting_parts(algebra, restrict_to(algebra, m, ker).module, out);
}

}  // namespace

std::vector<Summand> decompose(const PathAlgebra& algebra, const Representation& m) {
  std::vector<Representation> parts;
  fitting_parts(algebra, m, parts);
  struct Group {
    Summand summand;
    ModuleFingerprint fp;
  };
  std::vector<Group> groups;
  for (auto& part : parts) {
    ModuleFingerprint fp = fingerprint(algebra, part);
    bool merged = false;
    for (auto& g : groups) {
      if (g.fp == fp && isomorphic_indecomposables(algebra, g.summand.module, part)) {
        ++g.summand.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) groups.push_back(Group{Summand{std::move(part), 1}, std::move(fp)});
  }
  std::stable_sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
    if (a.summand.module.dims != b.summand.module.dims) {
      return a.summand.module.dims < b.summand.module.dims;
    }
    return a.fp < b.fp;
  });
  std::vector<Summand> out;
  for (auto& g : groups) out.push_back(std::move(g.summand));
  return out;
}

bool isomorphic_indecomposables(const PathAlgebra& algebra, const Representation& m,
                                const Representation& n) {
  if (m.dims != n.dims) return false;
  if (m.is_zero()) return true;
  HomBasis there = hom_space(algebra, m, n);
  if (there.dim() == 0) return false;
  HomBasis back = hom_space(algebra, n, m);
  if (back.dim() == 0) return false;
  const std::size_t end_dim = hom_space(algebra, m, m).dim();
  Matrix rows;
  for (const auto& f : there.maps) {
    for (const auto& g : back.maps) {
      Matrix r = flatten(compose(f, g), m.field);
      rows = rows.rows() == 0 ? r : rows.stacked(r);
      if (rows.rows() >= end_dim && rank(rows) == end_dim) return true;
    }
  }
  return false;
}

bool is_isomorphic(const PathAlgebra& algebra, const Representation& m,
                   const Representation& n) {
  if (m.dims != n.dims) return false;
  auto dm = decompose(algebra, m);
  auto dn = decompose(algebra, n);
  if (dm.size() != dn.size()) return false;
  std::vector<bool> used(dn.size(), false);
  for (const auto& s : dm) {
    bool matched = false;
    for (std::size_t j = 0; j < dn.size() && !matched; ++j) {
      if (used[j] || dn[j].multiplicity != s.multiplicity) continue;
      if (isomorphic_indecomposables(algebra, s.module, dn[j].module)) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

GradedSubspace trace(const PathAlgebra& algebra, const Representation& m,
                     const Representation& x) {
  GradedSubspace t = zero_subspace(x);
  if (m.is_zero() || x.is_zero()) return t;
  for (const auto& f : hom_space(algebra, m, x).maps) t = sum(t, image(f, x));
  return t;
}

bool in_fac(const PathAlgebra& algebra, const Representation& m,
            const Representation& x) {
  if (x.is_zero()) return true;
  return total_dim(trace(algebra, m, x)) == x.total_dim();
}

bool is_brick(const PathAlgebra& algebra, const Representation& m) {
  if (m.is_zero()) throw Error(ErrorCode::ZeroModule, "is_brick of the zero module");
  EndomorphismAnalysis an = analyse_endomorphisms(algebra, m);
  return an.local() && an.radical.empty();
}

Representation brick_quotient(const PathAlgebra& algebra, const Representation& m) {
  EndomorphismAnalysis an = analyse_endomorphisms(algebra, m);
  if (!an.local()) {
    throw Error(ErrorCode::DecompositionFailure, "brick_quotient needs an indecomposable");
  }
  GradedSubspace r = zero_subspace(m);
  for (const auto& f : an.radical) r = sum(r, image(f, m));
  return quotient(algebra, m, r).module;
}

}  // namespace torsionlab
