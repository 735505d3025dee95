#include "torsionlab/theorem_lab.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "torsionlab/error.hpp"
#include "torsionlab/fixtures.hpp"
#include "torsionlab/spec_format.hpp"

namespace torsionlab {

const char* to_string(Truth t) {
  switch (t) {
    case Truth::True: return "True";
    case Truth::False: return "False";
    case Truth::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

const Verdict& ConditionReport::at(const std::string& id) const {
  for (const auto& [name, v] : conditions) {
    if (name == id) return v;
  }
  throw std::out_of_range("no condition " + id);
}

void flag_inconsistency(ConditionReport& report) {
  bool any_true = false, any_false = false;
  for (const auto& [name, v] : report.conditions) {
    any_true = any_true || v.value == Truth::True;
    any_false = any_false || v.value == Truth::False;
  }
  report.inconsistent_with_theorem = any_true && any_false;
}

std::string algebra_fingerprint(const BoundQuiverPresentation& presentation) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(serialize(presentation))));
  return buf;
}

Analysis::Analysis(const BoundQuiverPresentation& presentation, const EnumerationBounds& b)
    : bounds(b), ctx(presentation), graph(enumerate(ctx, b)) {
  bricks = enumerate_bricks(ctx, graph);
  if (!graph.complete) return;
  poset = torsion_poset(ctx, graph);
  auto l = lattice::as_lattice(*poset);
  if (auto* ok = std::get_if<lattice::FiniteLattice>(&l)) {
    lattice = std::move(*ok);
  } else {
    not_a_lattice = std::get<lattice::NotALattice>(l);
  }
  semibricks = enumerate_semibricks(ctx, bricks);
  try {
    quiver = labeled_hasse_quiver(ctx, graph, *poset, bricks);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::LabelNotUnique && e.code() != ErrorCode::LabelMissing) throw;
    label_error = e.what();
  }
}

namespace {

std::string element_list(const lattice::FinitePoset& p, const std::vector<lattice::Element>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += p.name(xs[i]);
  }
  return s;
}

bool is_simple(const Representation& m) { return m.total_dim() == 1; }

// Smallest node whose class contains every module flagged in `wanted`,
// given per-node membership; nullopt when there is no least such node.
std::optional<std::size_t> smallest_containing(const lattice::FinitePoset& poset,
                                               const std::vector<std::vector<bool>>& member,
                                               const std::vector<bool>& wanted) {
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < member.size(); ++i) {
    bool ok = true;
    for (std::size_t k = 0; k < wanted.size() && ok; ++k) ok = !wanted[k] || member[i][k];
    if (ok) hits.push_back(i);
  }
  for (std::size_t i : hits) {
    if (std::all_of(hits.begin(), hits.end(), [&](std::size_t j) { return poset.leq(i, j); })) return i;
  }
  return std::nullopt;
}

// membership[node][k] of arbitrary modules in Fac(M_node).
std::vector<std::vector<bool>> membership_of(const Analysis& an,
                                             const std::vector<Representation>& modules) {
  std::vector<std::vector<bool>> out;
  for (const auto& node : an.graph.nodes) {
    Representation m = pair_module(an.ctx.algebra, node.pair);
    std::vector<bool> row;
    for (const auto& x : modules) row.push_back(in_fac(an.ctx.algebra, m, x));
    out.push_back(std::move(row));
  }
  return out;
}

Verdict semimodular_verdict(const Analysis& an, bool upper, bool primed) {
  const char* what = upper ? "upper semimodular" : "lower semimodular";
  std::string scope = primed ? "functorially finite torsion classes" : "torsion classes";
  if (!an.graph.complete) return {Truth::Inconclusive, "enumeration incomplete: " + an.graph.incomplete_reason};
  if (an.not_a_lattice) {
    return {Truth::False, "the " + scope + " do not form a lattice: " + an.not_a_lattice->describe()};
  }
  auto r = upper ? lattice::is_upper_semimodular(*an.lattice) : lattice::is_lower_semimodular(*an.lattice);
  if (r.verdict) return {Truth::True, "the lattice of " + scope + " is " + what};
  return {Truth::False, std::string("not ") + what + ", witness (" + element_list(*an.poset, r.witness) + ")"};
}

}  // namespace

Verdict check_f_structural(const BoundQuiverPresentation& p) {
  for (const auto& a : p.arrows) {
    if (a.source != a.target) {
      return {Truth::False, "arrow " + a.name + ": " + p.vertices[a.source] + " -> " +
                                p.vertices[a.target] + " joins distinct vertices"};
    }
  }
  return {Truth::True, "every arrow is a loop, so the algebra is a product of " +
                           std::to_string(p.vertex_count()) + " local algebras"};
}

Verdict check_simple_generated(const Analysis& an) {
  if (!an.graph.complete) return {Truth::Inconclusive, "enumeration incomplete: " + an.graph.incomplete_reason};
  const auto simple_list = simples(an.ctx.algebra);
  auto member = membership_of(an, simple_list);
  for (std::size_t i = 0; i < an.graph.nodes.size(); ++i) {
    auto generated = smallest_containing(*an.poset, member, member[i]);
    if (!generated || *generated != i) {
      std::string other = generated ? an.graph.nodes[*generated].name : std::string("none");
      return {Truth::False, "class " + an.graph.nodes[i].name +
                                " differs from the class generated by its simples, " + other};
    }
  }
  return {Truth::True, "every torsion class is generated by the simples it contains"};
}

ConditionReport check_conditions(const Analysis& an) {
  ConditionReport report;
  const auto& p = an.ctx.algebra.presentation();
  report.algebra_fingerprint = algebra_fingerprint(p);
  report.bounds = an.bounds;
  const std::size_t n = p.vertex_count();
  const bool complete = an.graph.complete;
  const std::string incomplete = "enumeration incomplete: " + an.graph.incomplete_reason;

  Verdict c;
  if (!complete) {
    c = {Truth::Inconclusive, incomplete};
  } else if (an.not_a_lattice) {
    c = {Truth::False, "not a lattice: " + an.not_a_lattice->describe()};
  } else if (auto iso = lattice::boolean_subset_isomorphism(*an.lattice)) {
    if (iso->rank == n) {
      c = {Truth::True, "Boolean lattice on " + std::to_string(n) + " atoms"};
    } else {
      c = {Truth::False, "Boolean of rank " + std::to_string(iso->rank) + ", not " + std::to_string(n)};
    }
  } else {
    c = {Truth::False, "not Boolean (" + std::to_string(an.poset->size()) + " elements)"};
  }

  // Non-simple bricks and extra tau-tilting modules certify False even when
  // the enumeration stopped early.
  Verdict d;
  auto non_simple = std::find_if(an.bricks.begin(), an.bricks.end(),
                                 [](const Brick& b) { return !is_simple(b.module); });
  if (non_simple != an.bricks.end()) {
    d = {Truth::False, "brick " + dimension_vector_string(non_simple->module) + " is not simple"};
  } else if (complete) {
    d = {Truth::True, "all " + std::to_string(an.bricks.size()) + " bricks are simple"};
  } else {
    d = {Truth::Inconclusive, incomplete};
  }

  Verdict e;
  std::vector<std::string> full;
  for (const auto& node : an.graph.nodes) {
    if (node.pair.projective_vertices.empty()) full.push_back(node.name);
  }
  if (full.size() >= 2) {
    e = {Truth::False, std::to_string(full.size()) + (complete ? "" : "+") +
                           " basic tau-tilting modules, e.g. " + full[0] + " and " + full[1]};
  } else if (complete) {
    e = {full.size() == 1 ? Truth::True : Truth::False,
         std::to_string(full.size()) + " basic tau-tilting module(s)"};
  } else {
    e = {Truth::Inconclusive, incomplete};
  }

  report.conditions = {
      {"a", semimodular_verdict(an, true, false)},  {"a'", semimodular_verdict(an, true, true)},
      {"b", semimodular_verdict(an, false, false)}, {"b'", semimodular_verdict(an, false, true)},
      {"c", c},
      {"d", d},
      {"e", e},
      {"f", check_f_structural(p)},
  };
  flag_inconsistency(report);
  return report;
}

ConditionReport check_conditions(const BoundQuiverPresentation& presentation,
                                 const EnumerationBounds& bounds) {
  return check_conditions(Analysis(presentation, bounds));
}

namespace {

bool in_torsion_class_by_filtration(const PathAlgebra& algebra, const Representation& generator,
                                    Representation x) {
  // X lies in T(C) iff repeatedly removing the trace of C ends at zero.
  while (!x.is_zero()) {
    GradedSubspace t = trace(algebra, generator, x);
    if (total_dim(t) == 0) return false;
    x = quotient(algebra, x, t).module;
  }
  return true;
}

}  // namespace

OracleResult bruteforce_torsion_classes(const PathAlgebra& algebra,
                                        const std::vector<Representation>& modules,
                                        OracleMethod method, const OracleLimits& limits) {
  const std::size_t k = modules.size();
  if (k > limits.max_modules) {
    throw Error(ErrorCode::OracleTooLarge, std::to_string(k) + " indecomposables exceed the limit of " +
                                               std::to_string(limits.max_modules));
  }
  for (const auto& m : modules) {
    if (m.total_dim() > limits.max_total_dim) {
      throw Error(ErrorCode::OracleTooLarge, "module of dimension " + std::to_string(m.total_dim()));
    }
  }
  std::vector<std::vector<bool>> hom_zero;
  if (method == OracleMethod::Orthogonal) {
    hom_zero.assign(k, std::vector<bool>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) hom_zero[i][j] = hom_space(algebra, modules[i], modules[j]).dim() == 0;
    }
  }
  std::set<std::vector<bool>> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<bool> cls(k, false);
    if (method == OracleMethod::Filtration) {
      std::vector<Representation> gens;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1) gens.push_back(modules[i]);
      }
      Representation g = gens.empty() ? Representation::zero(algebra) : direct_sum(algebra, gens).module;
      for (std::size_t i = 0; i < k; ++i) cls[i] = in_torsion_class_by_filtration(algebra, g, modules[i]);
    } else {
      std::vector<bool> torsion_free(k);
      for (std::size_t y = 0; y < k; ++y) {
        torsion_free[y] = true;
        for (std::size_t c = 0; c < k; ++c) {
          if ((mask >> c & 1) && !hom_zero[c][y]) torsion_free[y] = false;
        }
      }
      for (std::size_t x = 0; x < k; ++x) {
        cls[x] = true;
        for (std::size_t y = 0; y < k; ++y) {
          if (torsion_free[y] && !hom_zero[x][y]) cls[x] = false;
        }
      }
    }
    found.insert(std::move(cls));
  }
  std::vector<std::vector<bool>> classes(found.begin(), found.end());
  auto count = [](const std::vector<bool>& v) { return std::count(v.begin(), v.end(), true); };
  std::stable_sort(classes.begin(), classes.end(),
                   [&](const auto& a, const auto& b) { return count(a) < count(b); });
  const std::size_t n = classes.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    std::string name = "{";
    bool first = true;
    for (std::size_t x = 0; x < k; ++x) {
      if (!classes[i][x]) continue;
      name += (first ? "" : ",") + dimension_vector_string(modules[x]);
      first = false;
    }
    names.push_back(name + "}");
    for (std::size_t j = 0; j < n; ++j) {
      bool sub = true;
      for (std::size_t x = 0; x < k && sub; ++x) sub = !classes[i][x] || classes[j][x];
      leq[i][j] = sub;
    }
  }
  return {lattice::FinitePoset(std::move(leq), std::move(names)), std::move(classes)};
}

bool CrossValidation::all_passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

const CheckResult& CrossValidation::at(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check " + name);
}

CrossValidation cross_validate(const Analysis& an, const CrossValidationOptions& options) {
  CrossValidation out;
  out.report = check_conditions(an);
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    out.checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
  };
  auto skip = [&](std::string name, std::string why) {
    out.checks.push_back({std::move(name), CheckStatus::Skipped, std::move(why)});
  };
  static const char* kLatticeChecks[] = {
      "hasse_regular",          "covers_match_mutation_edges",  "join_semidistributive",
      "meet_semidistributive",  "bricks_match_join_irreducibles", "semibricks_match_nodes",
      "classes_determined_by_bricks", "meet_is_intersection", "brick_labels_unique",
      "simple_generated_matches_c", "opposite_anti_isomorphic", "oracle_isomorphic"};

  add("theorem_consistent", !out.report.inconsistent_with_theorem,
      out.report.inconsistent_with_theorem ? "verdicts mix True and False" : "");
  if (!an.graph.complete) {
    skip("enumeration_complete", an.graph.incomplete_reason);
    for (const char* c : kLatticeChecks) skip(c, "enumeration incomplete");
    return out;
  }
  add("enumeration_complete", true);
  if (!an.lattice) {
    add("is_lattice", false, an.not_a_lattice->describe());
    for (const char* c : kLatticeChecks) skip(c, "not a lattice");
    return out;
  }
  add("is_lattice", true);

  const PathAlgebra& alg = an.ctx.algebra;
  const auto& poset = *an.poset;
  const auto& lat = *an.lattice;
  const std::size_t n = alg.vertex_count();
  const std::size_t nodes = an.graph.nodes.size();

  auto regular = lattice::is_hasse_regular(poset, n);
  add("hasse_regular", regular.verdict,
      regular.verdict ? "" : "degree differs at " + element_list(poset, regular.witness));

  {
    auto cov = lattice::covers(poset);
    std::vector<lattice::CoverPair> edges;
    for (const auto& e : an.graph.edges) edges.emplace_back(e.upper, e.lower);
    std::sort(cov.begin(), cov.end());
    std::sort(edges.begin(), edges.end());
    add("covers_match_mutation_edges", cov == edges,
        std::to_string(cov.size()) + " covers, " + std::to_string(edges.size()) + " edges");
  }

  auto jsd = lattice::is_join_semidistributive(lat);
  add("join_semidistributive", jsd.verdict, element_list(poset, jsd.witness));
  auto msd = lattice::is_meet_semidistributive(lat);
  add("meet_semidistributive", msd.verdict, element_list(poset, msd.witness));

  std::vector<Representation> brick_modules;
  for (const auto& b : an.bricks) brick_modules.push_back(b.module);
  auto brick_member = membership_of(an, brick_modules);
  std::vector<std::optional<std::size_t>> brick_class;  // smallest class containing each brick
  {
    auto ji = lattice::join_irreducibles(lat);
    std::set<std::size_t> images;
    bool ok = ji.size() == an.bricks.size();
    for (std::size_t b = 0; b < an.bricks.size(); ++b) {
      std::vector<bool> wanted(an.bricks.size(), false);
      wanted[b] = true;
      brick_class.push_back(smallest_containing(poset, brick_member, wanted));
      if (brick_class.back()) images.insert(*brick_class.back());
    }
    ok = ok && images == std::set<std::size_t>(ji.begin(), ji.end());
    add("bricks_match_join_irreducibles", ok,
        std::to_string(an.bricks.size()) + " bricks, " + std::to_string(ji.size()) + " join-irreducibles");
  }

  {
    bool ok = an.semibricks.size() == nodes;
    std::string detail = std::to_string(an.semibricks.size()) + " semibricks, " + std::to_string(nodes) + " nodes";
    std::set<std::vector<std::size_t>> listed(an.semibricks.begin(), an.semibricks.end());
    std::set<std::vector<std::size_t>> images;
    try {
      for (const auto& node : an.graph.nodes) {
        auto idx = brick_indices(an.ctx, stau_to_semibrick(an.ctx, node.pair), an.bricks);
        if (!listed.count(idx)) ok = false;
        images.insert(idx);
      }
      if (images.size() != nodes) {
        ok = false;
        detail += ", map not injective";
      }
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
    add("semibricks_match_nodes", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < nodes && ok; ++i) {
      lattice::Element j = lat.bottom();
      for (std::size_t b = 0; b < an.bricks.size(); ++b) {
        if (brick_member[i][b] && brick_class[b]) j = lat.join(j, *brick_class[b]);
      }
      if (j != i) {
        ok = false;
        detail = "class " + poset.name(i) + " vs join of its bricks " + poset.name(j);
      }
    }
    add("classes_determined_by_bricks", ok, detail);
  }

  {
    std::vector<Representation> probes = an.graph.registry.modules();
    probes.insert(probes.end(), brick_modules.begin(), brick_modules.end());
    auto member = membership_of(an, probes);
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < nodes && ok; ++i) {
      for (std::size_t j = 0; j < nodes && ok; ++j) {
        const std::size_t m = lat.meet(i, j);
        for (std::size_t k = 0; k < probes.size(); ++k) {
          if (member[m][k] != (member[i][k] && member[j][k])) {
            ok = false;
            detail = "meet of " + poset.name(i) + " and " + poset.name(j);
            break;
          }
        }
      }
    }
    add("meet_is_intersection", ok, detail);
  }

  add("brick_labels_unique", an.quiver.has_value(), an.label_error.value_or(""));

  {
    Verdict s = check_simple_generated(an);
    add("simple_generated_matches_c", s.value == out.report.at("c").value,
        std::string(to_string(s.value)) + " vs " + to_string(out.report.at("c").value));
  }

  if (options.opposite) {
    Analysis op(opposite_algebra(alg.presentation()), an.bounds);
    if (!op.lattice) {
      add("opposite_anti_isomorphic", false, "opposite algebra gave no complete lattice");
    } else if (op.lattice->size() != lat.size()) {
      add("opposite_anti_isomorphic", false,
          std::to_string(lat.size()) + " vs " + std::to_string(op.lattice->size()) + " classes");
    } else {
      add("opposite_anti_isomorphic", lattice::is_antiisomorphic(lat, *op.lattice).has_value());
    }
  } else {
    skip("opposite_anti_isomorphic", "disabled");
  }

  auto known = fixtures::known_indecomposables(alg);
  if (!options.oracle) {
    skip("oracle_isomorphic", "disabled");
  } else if (!known) {
    skip("oracle_isomorphic", "no indecomposable generator for this algebra");
  } else {
    try {
      OracleResult oracle = bruteforce_torsion_classes(alg, *known);
      bool ok = oracle.poset.size() == poset.size() &&
                lattice::find_isomorphism(poset, oracle.poset).has_value();
      add("oracle_isomorphic", ok,
          std::to_string(oracle.poset.size()) + " classes by brute force");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::OracleTooLarge) throw;
      skip("oracle_isomorphic", e.what());
    }
  }
  return out;
}

CrossValidation cross_validate(const BoundQuiverPresentation& presentation,
                               const EnumerationBounds& bounds, const CrossValidationOptions& options) {
  return cross_validate(Analysis(presentation, bounds), options);
}

}  // namespace torsionlab
