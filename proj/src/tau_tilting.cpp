#include "torsionlab/tau_tilting.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <set>
#include <thread>
#include <tuple>

#include "torsionlab/error.hpp"

namespace torsionlab {

namespace {

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

Representation sum_of(const PathAlgebra& algebra, const std::vector<Representation>& parts) {
  if (parts.empty()) return Representation::zero(algebra);
  return direct_sum(algebra, parts).module;
}

std::size_t projective_vertex(const PathAlgebra& algebra, const Representation& m) {
  return projective_cover(algebra, m).vertices.front();
}

// Left mutation at summand `index` of the pair, which must not lie in
// Fac of the remaining summands.
SupportTauTiltingPair left_mutation(const PathAlgebra& algebra,
                                    const SupportTauTiltingPair& pair, std::size_t index) {
  const Field& field = algebra.field();
  const Representation& x = pair.summands[index];
  std::vector<Representation> rest;
  for (std::size_t i = 0; i < pair.summands.size(); ++i) {
    if (i != index) rest.push_back(pair.summands[i]);
  }

  // Maps X -> U_i modulo those factoring through the radical of add(U);
  // representatives of the quotient give a minimal approximation whenever
  // every End(U_i) / rad is the ground field.
  std::vector<HomBasis> to_rest;
  for (const auto& u : rest) to_rest.push_back(hom_space(algebra, x, u));
  std::vector<std::vector<Representation>> target_parts;
  std::vector<ModuleMap> chosen;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (to_rest[i].dim() == 0) continue;
    std::vector<ModuleMap> radical_part;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (to_rest[j].dim() == 0) continue;
      std::vector<ModuleMap> through;
      if (j == i) {
        through = analyse_endomorphisms(algebra, rest[i]).radical;
      } else {
        through = hom_space(algebra, rest[j], rest[i]).maps;
      }
      for (const auto& h : to_rest[j].maps) {
        for (const auto& g : through) radical_part.push_back(compose(h, g));
      }
    }
    Matrix rows;
    for (const auto& f : radical_part) {
      Matrix r = flatten(f, field);
      rows = rows.rows() == 0 ? r : rows.stacked(r);
    }
    std::size_t r0 = rows.rows() == 0 ? 0 : rank(rows);
    for (const auto& h : to_rest[i].maps) {
      Matrix candidate = rows.rows() == 0 ? flatten(h, field) : rows.stacked(flatten(h, field));
      std::size_t r1 = rank(candidate);
      if (r1 > r0) {
        rows = std::move(candidate);
        r0 = r1;
        chosen.push_back(h);
        target_parts.push_back({rest[i]});
      }
    }
  }

  SupportTauTiltingPair out;
  out.summands = rest;
  out.projective_vertices = pair.projective_vertices;

  std::vector<Summand> cokernel_parts;
  if (!chosen.empty()) {
    std::vector<Representation> targets;
    for (const auto& t : target_parts) targets.push_back(t.front());
    Representation target = direct_sum(algebra, targets).module;
    ModuleMap f;
    for (std::size_t v = 0; v < algebra.vertex_count(); ++v) {
      Matrix block(field, x.dims[v], target.dims[v]);
      std::size_t col = 0;
      for (const auto& h : chosen) {
        block.set_block(0, col, h.blocks[v]);
        col += h.blocks[v].cols();
      }
      f.blocks.push_back(std::move(block));
    }
    Representation y = quotient(algebra, target, image(f, target)).module;
    for (auto& s : decompose(algebra, y)) {
      // Summands from add(U) only appear for a non-minimal approximation.
      bool in_rest = std::any_of(rest.begin(), rest.end(), [&](const Representation& u) {
        return isomorphic_indecomposables(algebra, u, s.module);
      });
      if (!in_rest) cokernel_parts.push_back(std::move(s));
    }
  }

  if (cokernel_parts.size() > 1) {
    throw Error(ErrorCode::ApproximationFailure,
                "cokernel of the approximation has non-isomorphic summands");
  }
  if (cokernel_parts.size() == 1) {
    out.summands.push_back(std::move(cokernel_parts.front().module));
    return out;
  }
  // The summand leaves the support: the new projective sits at the one
  // vertex outside supp(U) and P.
  std::vector<std::size_t> candidates;
  for (std::size_t v = 0; v < algebra.vertex_count(); ++v) {
    if (std::binary_search(pair.projective_vertices.begin(), pair.projective_vertices.end(), v)) {
      continue;
    }
    bool supported = std::any_of(rest.begin(), rest.end(),
                                 [v](const Representation& u) { return u.dims[v] != 0; });
    if (!supported) candidates.push_back(v);
  }
  if (candidates.size() != 1) {
    throw Error(ErrorCode::InconsistentMutation,
                "expected exactly one vertex outside the support, found " +
                    std::to_string(candidates.size()));
  }
  out.projective_vertices.push_back(candidates.front());
  std::sort(out.projective_vertices.begin(), out.projective_vertices.end());
  return out;
}

// (M, P) -> (Tr M_np + P*, M_pr*) over the opposite algebra.
SupportTauTiltingPair dagger(const PathAlgebra& algebra, const PathAlgebra& opposite,
                             const SupportTauTiltingPair& pair) {
  SupportTauTiltingPair out;
  for (const auto& m : pair.summands) {
    if (is_projective(algebra, m)) {
      out.projective_vertices.push_back(projective_vertex(algebra, m));
    } else {
      out.summands.push_back(transpose(algebra, opposite, m));
    }
  }
  for (std::size_t v : pair.projective_vertices) {
    out.summands.push_back(projective_module(opposite, v));
  }
  std::sort(out.projective_vertices.begin(), out.projective_vertices.end());
  return out;
}

bool fac_of_rest_contains(const PathAlgebra& algebra, const SupportTauTiltingPair& pair,
                          std::size_t index) {
  std::vector<Representation> rest;
  for (std::size_t i = 0; i < pair.summands.size(); ++i) {
    if (i != index) rest.push_back(pair.summands[i]);
  }
  return in_fac(algebra, sum_of(algebra, rest), pair.summands[index]);
}

std::string node_name(const PathAlgebra& algebra, const SupportTauTiltingPair& pair) {
  std::string s = "{";
  for (std::size_t i = 0; i < pair.summands.size(); ++i) {
    if (i) s += ",";
    s += dimension_vector_string(pair.summands[i]);
  }
  s += "}";
  if (!pair.projective_vertices.empty()) {
    s += " P{";
    for (std::size_t i = 0; i < pair.projective_vertices.size(); ++i) {
      if (i) s += ",";
      s += algebra.presentation().vertices[pair.projective_vertices[i]];
    }
    s += "}";
  }
  return s;
}

}  // namespace

TauTiltingContext::TauTiltingContext(const BoundQuiverPresentation& presentation)
    : algebra(presentation), opposite(opposite_algebra(presentation)) {}

Representation pair_module(const PathAlgebra& algebra, const SupportTauTiltingPair& pair) {
  return sum_of(algebra, pair.summands);
}

void canonicalize(const PathAlgebra& algebra, SupportTauTiltingPair& pair) {
  std::vector<std::pair<ModuleFingerprint, std::size_t>> keys;
  for (std::size_t i = 0; i < pair.summands.size(); ++i) {
    keys.emplace_back(fingerprint(algebra, pair.summands[i]), i);
  }
  std::stable_sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    const auto& da = pair.summands[a.second].dims;
    const auto& db = pair.summands[b.second].dims;
    if (da != db) return da < db;
    return a.first < b.first;
  });
  std::vector<Representation> sorted;
  for (const auto& k : keys) sorted.push_back(std::move(pair.summands[k.second]));
  pair.summands = std::move(sorted);
  std::sort(pair.projective_vertices.begin(), pair.projective_vertices.end());
}

SupportTauTiltingPair initial_pair(const PathAlgebra& algebra) {
  SupportTauTiltingPair pair;
  pair.summands = projectives(algebra);
  canonicalize(algebra, pair);
  return pair;
}

MutationResult mutate_oriented(const TauTiltingContext& ctx, const SupportTauTiltingPair& pair,
                               std::size_t index) {
  if (index >= pair.size()) {
    throw Error(ErrorCode::NotASummand, "mutation index " + std::to_string(index) +
                                            " out of range for a pair with " +
                                            std::to_string(pair.size()) + " summands");
  }
  const PathAlgebra& a = ctx.algebra;
  const PathAlgebra& op = ctx.opposite;
  MutationResult result;
  if (index < pair.summands.size() && !fac_of_rest_contains(a, pair, index)) {
    result.pair = left_mutation(a, pair, index);
    result.left = true;
    canonicalize(a, result.pair);
    if (!in_fac(a, pair_module(a, pair), pair_module(a, result.pair))) {
      throw Error(ErrorCode::InconsistentMutation, "left mutation did not shrink Fac");
    }
    return result;
  }

  // Right mutation: a left mutation on the other side of the duality.
  SupportTauTiltingPair d = dagger(a, op, pair);
  Representation image_of_x = index < pair.summands.size()
                                  ? transpose(a, op, pair.summands[index])
                                  : projective_module(op, pair.projective_vertices[index -
                                                                                   pair.summands.size()]);
  std::optional<std::size_t> d_index;
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    if (isomorphic_indecomposables(op, d.summands[i], image_of_x)) {
      d_index = i;
      break;
    }
  }
  if (!d_index || fac_of_rest_contains(op, d, *d_index)) {
    throw Error(ErrorCode::InconsistentMutation, "dual summand is not left-mutable");
  }
  SupportTauTiltingPair mutated = left_mutation(op, d, *d_index);
  result.pair = dagger(op, a, mutated);
  result.left = false;
  canonicalize(a, result.pair);
  if (!in_fac(a, pair_module(a, result.pair), pair_module(a, pair))) {
    throw Error(ErrorCode::InconsistentMutation, "right mutation did not grow Fac");
  }
  return result;
}

SupportTauTiltingPair mutate(const TauTiltingContext& ctx, const SupportTauTiltingPair& pair,
                             std::size_t index) {
  return mutate_oriented(ctx, pair, index).pair;
}

std::size_t ModuleRegistry::intern(const PathAlgebra& algebra, const Representation& m) {
  ModuleFingerprint fp = fingerprint(algebra, m);
  auto& bucket = by_fingerprint_[fp.invariants];
  for (std::size_t id : bucket) {
    if (isomorphic_indecomposables(algebra, modules_[id], m)) return id;
  }
  modules_.push_back(m);
  bucket.push_back(modules_.size() - 1);
  return modules_.size() - 1;
}

MutationGraph enumerate(const TauTiltingContext& ctx, const EnumerationBounds& bounds) {
  const PathAlgebra& a = ctx.algebra;
  MutationGraph g;
  std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, std::size_t> index_of;

  auto add_node = [&](SupportTauTiltingPair pair) -> std::size_t {
    std::vector<std::size_t> ids;
    for (const auto& s : pair.summands) ids.push_back(g.registry.intern(a, s));
    std::vector<std::size_t> key = ids;
    std::sort(key.begin(), key.end());
    auto k = std::make_pair(key, pair.projective_vertices);
    if (auto it = index_of.find(k); it != index_of.end()) return it->second;
    if (g.nodes.size() >= bounds.node_bound) return SIZE_MAX;
    MutationNode node{std::move(pair), std::move(ids), {}};
    node.name = node_name(a, node.pair);
    g.nodes.push_back(std::move(node));
    index_of.emplace(std::move(k), g.nodes.size() - 1);
    return g.nodes.size() - 1;
  };

  auto too_large = [&](const SupportTauTiltingPair& p) {
    return std::any_of(p.summands.begin(), p.summands.end(), [&](const Representation& m) {
      return m.total_dim() > bounds.dim_bound;
    });
  };

  SupportTauTiltingPair start = initial_pair(a);
  if (too_large(start)) {
    g.incomplete_reason = "dimension bound exceeded";
    return g;
  }
  add_node(std::move(start));

  std::map<std::pair<std::size_t, std::size_t>, MutationEdge> edges;
  bool complete = true;
  std::size_t level_begin = 0;
  while (level_begin < g.nodes.size()) {
    const std::size_t level_end = g.nodes.size();
    struct Task {
      std::size_t node;
      std::size_t index;
    };
    std::vector<Task> tasks;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t k = 0; k < g.nodes[i].pair.size(); ++k) tasks.push_back({i, k});
    }
    std::vector<std::optional<MutationResult>> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    auto work = [&](std::size_t t) {
      try {
        results[t] = mutate_oriented(ctx, g.nodes[tasks[t].node].pair, tasks[t].index);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    };
    const std::size_t threads = std::max<std::size_t>(1, std::min(bounds.threads, tasks.size()));
    if (threads == 1) {
      for (std::size_t t = 0; t < tasks.size(); ++t) work(t);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
          for (std::size_t t = next++; t < tasks.size(); t = next++) work(t);
        });
      }
      for (auto& th : pool) th.join();
    }

    for (std::size_t t = 0; t < tasks.size(); ++t) {
      if (errors[t]) std::rethrow_exception(errors[t]);
      MutationResult& r = *results[t];
      if (too_large(r.pair)) {
        complete = false;
        g.incomplete_reason = "dimension bound exceeded";
        continue;
      }
      const std::size_t from = tasks[t].node;
      const std::size_t to = add_node(std::move(r.pair));
      if (to == SIZE_MAX) {
        complete = false;
        g.incomplete_reason = "node bound exceeded";
        continue;
      }
      if (to == from) throw Error(ErrorCode::InconsistentMutation, "mutation returned the same pair");
      const std::size_t upper = r.left ? from : to;
      const std::size_t lower = r.left ? to : from;
      auto key = std::minmax(from, to);
      if (auto it = edges.find(key); it != edges.end()) {
        if (it->second.upper != upper) {
          throw Error(ErrorCode::InconsistentMutation, "edge orientation disagrees between ends");
        }
        continue;
      }
      // Exchanged summands: what each side has that the other lacks.
      auto refs = [&](std::size_t n) {
        std::set<SummandRef> s;
        for (std::size_t id : g.nodes[n].module_ids) s.insert({false, id});
        for (std::size_t v : g.nodes[n].pair.projective_vertices) s.insert({true, v});
        return s;
      };
      auto su = refs(upper), sl = refs(lower);
      std::vector<SummandRef> only_upper, only_lower;
      std::set_difference(su.begin(), su.end(), sl.begin(), sl.end(), std::back_inserter(only_upper));
      std::set_difference(sl.begin(), sl.end(), su.begin(), su.end(), std::back_inserter(only_lower));
      if (only_upper.size() != 1 || only_lower.size() != 1) {
        throw Error(ErrorCode::InconsistentMutation, "mutation exchanged more than one summand");
      }
      edges.emplace(key, MutationEdge{upper, lower, only_upper.front(), only_lower.front()});
    }
    level_begin = level_end;
  }

  for (auto& [key, e] : edges) g.edges.push_back(e);
  std::sort(g.edges.begin(), g.edges.end(), [](const MutationEdge& x, const MutationEdge& y) {
    return std::tie(x.upper, x.lower) < std::tie(y.upper, y.lower);
  });
  g.complete = complete;
  return g;
}

std::vector<std::vector<bool>> fac_membership(const TauTiltingContext& ctx,
                                              const MutationGraph& graph) {
  const PathAlgebra& a = ctx.algebra;
  std::vector<std::vector<bool>> member(graph.nodes.size(),
                                        std::vector<bool>(graph.registry.size(), false));
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    Representation m = pair_module(a, graph.nodes[i].pair);
    for (std::size_t id = 0; id < graph.registry.size(); ++id) {
      member[i][id] = in_fac(a, m, graph.registry.module(id));
    }
  }
  return member;
}

lattice::FinitePoset torsion_poset(const TauTiltingContext& ctx, const MutationGraph& graph) {
  if (!graph.complete) {
    throw Error(ErrorCode::IncompleteGraph, "torsion poset needs a complete mutation graph");
  }
  const std::size_t n = graph.nodes.size();
  auto member = fac_membership(ctx, graph);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(graph.nodes[i].name);
    for (std::size_t j = 0; j < n; ++j) {
      leq[j][i] = std::all_of(graph.nodes[j].module_ids.begin(), graph.nodes[j].module_ids.end(),
                              [&](std::size_t id) { return member[i][id]; });
    }
  }
  std::vector<lattice::CoverPair> edge_pairs;
  for (const auto& e : graph.edges) edge_pairs.emplace_back(e.upper, e.lower);
  lattice::FinitePoset from_edges = lattice::FinitePoset::from_covers(n, edge_pairs, names);
  if (from_edges.table() != leq) {
    throw Error(ErrorCode::InconsistentOrder,
                "Fac inclusion disagrees with the closure of the mutation edges");
  }
  return lattice::FinitePoset(std::move(leq), std::move(names));
}

std::vector<Brick> enumerate_bricks(const TauTiltingContext& ctx, const MutationGraph& graph) {
  const PathAlgebra& a = ctx.algebra;
  std::vector<Brick> bricks;
  for (std::size_t id = 0; id < graph.registry.size(); ++id) {
    Representation b = brick_quotient(a, graph.registry.module(id));
    if (b.is_zero() || !is_brick(a, b)) {
      throw Error(ErrorCode::NotABrick, "image of module " + std::to_string(id) + " is not a brick");
    }
    bool seen = std::any_of(bricks.begin(), bricks.end(), [&](const Brick& x) {
      return isomorphic_indecomposables(a, x.module, b);
    });
    if (!seen) bricks.push_back(Brick{std::move(b), id});
  }
  return bricks;
}

std::vector<std::vector<std::size_t>> enumerate_semibricks(const TauTiltingContext& ctx,
                                                           const std::vector<Brick>& bricks) {
  const PathAlgebra& a = ctx.algebra;
  const std::size_t k = bricks.size();
  std::vector<std::vector<bool>> orth(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      bool o = hom_space(a, bricks[i].module, bricks[j].module).dim() == 0 &&
               hom_space(a, bricks[j].module, bricks[i].module).dim() == 0;
      orth[i][j] = orth[j][i] = o;
    }
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    out.push_back(current);
    for (std::size_t i = from; i < k; ++i) {
      bool ok = std::all_of(current.begin(), current.end(), [&](std::size_t j) { return orth[i][j]; });
      if (!ok) continue;
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

std::vector<Representation> stau_to_semibrick(const TauTiltingContext& ctx,
                                              const SupportTauTiltingPair& pair) {
  const PathAlgebra& a = ctx.algebra;
  std::vector<Representation> out;
  for (std::size_t i = 0; i < pair.summands.size(); ++i) {
    const Representation& m = pair.summands[i];
    GradedSubspace r = zero_subspace(m);
    for (const auto& f : analyse_endomorphisms(a, m).radical) r = sum(r, image(f, m));
    for (std::size_t j = 0; j < pair.summands.size(); ++j) {
      if (j == i) continue;
      r = sum(r, trace(a, pair.summands[j], m));
    }
    Representation b = quotient(a, m, r).module;
    if (!b.is_zero()) out.push_back(std::move(b));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!is_brick(a, out[i])) throw Error(ErrorCode::NotASemibrick, "summand is not a brick");
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (i != j && hom_space(a, out[i], out[j]).dim() != 0) {
        throw Error(ErrorCode::NotASemibrick, "bricks are not Hom-orthogonal");
      }
    }
  }
  return out;
}

std::vector<std::size_t> brick_indices(const TauTiltingContext& ctx,
                                       const std::vector<Representation>& semibrick,
                                       const std::vector<Brick>& bricks) {
  std::vector<std::size_t> out;
  for (const auto& b : semibrick) {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < bricks.size() && !found; ++i) {
      if (isomorphic_indecomposables(ctx.algebra, bricks[i].module, b)) found = i;
    }
    if (!found) throw Error(ErrorCode::LabelMissing, "brick " + dimension_vector_string(b) + " not listed");
    out.push_back(*found);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t brick_label(const TauTiltingContext& ctx, const Representation& upper,
                        const Representation& lower, const std::vector<Brick>& bricks) {
  const PathAlgebra& a = ctx.algebra;
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < bricks.size(); ++i) {
    const Representation& b = bricks[i].module;
    if (!in_fac(a, upper, b)) continue;
    if (!lower.is_zero() && hom_space(a, lower, b).dim() != 0) continue;
    hits.push_back(i);
  }
  if (hits.empty()) throw Error(ErrorCode::LabelMissing, "no brick labels this cover");
  if (hits.size() > 1) {
    throw Error(ErrorCode::LabelNotUnique,
                std::to_string(hits.size()) + " bricks qualify as the label of one cover");
  }
  return hits.front();
}

LabeledHasseQuiver labeled_hasse_quiver(const TauTiltingContext& ctx, const MutationGraph& graph,
                                        const lattice::FinitePoset& poset,
                                        std::vector<Brick> bricks) {
  LabeledHasseQuiver q;
  q.poset = poset;
  std::vector<Representation> modules;
  for (const auto& node : graph.nodes) modules.push_back(pair_module(ctx.algebra, node.pair));
  for (const auto& [upper, lower] : lattice::covers(poset)) {
    q.covers.push_back({upper, lower, brick_label(ctx, modules[upper], modules[lower], bricks)});
  }
  q.bricks = std::move(bricks);
  return q;
}

}  // namespace torsionlab
