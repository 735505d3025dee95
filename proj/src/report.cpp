#include "torsionlab/report.hpp"

#include <algorithm>
#include <sstream>

namespace torsionlab {

using Json = nlohmann::ordered_json;

RunResult run_pipeline(const BoundQuiverPresentation& presentation, const RunOptions& options) {
  Analysis analysis(presentation, options.bounds);
  CrossValidationOptions cv;
  cv.oracle = options.oracle;
  CrossValidation validation = cross_validate(analysis, cv);
  return RunResult{std::move(analysis), std::move(validation)};
}

namespace {

Json property(const lattice::FinitePoset& poset, const lattice::PropertyReport& r) {
  Json witness = Json::array();
  for (auto e : r.witness) witness.push_back(poset.name(e));
  return Json{{"verdict", r.verdict}, {"witness", witness}};
}

Json lattice_block(const Analysis& an) {
  if (!an.graph.complete) return nullptr;
  Json j;
  j["is_lattice"] = an.lattice.has_value();
  if (!an.lattice) {
    j["not_a_lattice"] = an.not_a_lattice->describe();
    return j;
  }
  const auto& l = *an.lattice;
  const auto& p = *an.poset;
  j["upper_semimodular"] = property(p, lattice::is_upper_semimodular(l));
  j["lower_semimodular"] = property(p, lattice::is_lower_semimodular(l));
  j["distributive"] = property(p, lattice::is_distributive(l));
  j["boolean"] = property(p, lattice::is_boolean(l).report);
  j["join_semidistributive"] = property(p, lattice::is_join_semidistributive(l));
  j["meet_semidistributive"] = property(p, lattice::is_meet_semidistributive(l));
  j["hasse_regular"] =
      property(p, lattice::is_hasse_regular(p, an.ctx.algebra.vertex_count()));
  auto iso = lattice::boolean_subset_isomorphism(l);
  j["boolean_rank"] = iso ? Json(iso->rank) : Json(nullptr);
  return j;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Json report_json(const RunResult& r) {
  const Analysis& an = r.analysis;
  const PathAlgebra& alg = an.ctx.algebra;
  const auto& p = alg.presentation();
  Json j;
  j["schema"] = "torsionlab-report";
  j["schema_version"] = kReportSchemaVersion;

  Json algebra;
  algebra["fingerprint"] = r.validation.report.algebra_fingerprint;
  algebra["characteristic"] = p.field.characteristic();
  algebra["vertices"] = p.vertices;
  algebra["arrows"] = Json::array();
  for (const auto& a : p.arrows) {
    algebra["arrows"].push_back({{"name", a.name}, {"source", p.vertices[a.source]},
                                 {"target", p.vertices[a.target]}});
  }
  algebra["relations"] = Json::array();
  for (const auto& rel : p.relations) {
    Json path = Json::array();
    for (auto a : rel) path.push_back(p.arrows[a].name);
    algebra["relations"].push_back(path);
  }
  algebra["dimension"] = alg.dimension();
  j["algebra"] = algebra;

  j["bounds"] = {{"nodes", an.bounds.node_bound}, {"dim", an.bounds.dim_bound}};
  j["enumeration"] = {{"complete", an.graph.complete},
                      {"incomplete_reason", an.graph.incomplete_reason},
                      {"indecomposable_summands", an.graph.registry.size()}};

  Json counts;
  counts["support_tau_tilting_pairs"] = an.graph.nodes.size();
  counts["mutation_edges"] = an.graph.edges.size();
  counts["tau_tilting_modules"] = std::count_if(
      an.graph.nodes.begin(), an.graph.nodes.end(),
      [](const MutationNode& n) { return n.pair.projective_vertices.empty(); });
  counts["bricks"] = an.bricks.size();
  if (an.graph.complete) {
    counts["torsion_classes"] = an.poset->size();
    counts["semibricks"] = an.semibricks.size();
    counts["join_irreducibles"] = an.lattice ? Json(lattice::join_irreducibles(*an.lattice).size())
                                             : Json(nullptr);
  } else {
    counts["torsion_classes"] = nullptr;
    counts["semibricks"] = nullptr;
    counts["join_irreducibles"] = nullptr;
  }
  j["counts"] = counts;
  j["lattice"] = lattice_block(an);

  Json conditions;
  for (const auto& [id, v] : r.validation.report.conditions) {
    conditions[id] = {{"verdict", to_string(v.value)}, {"evidence", v.evidence}};
  }
  j["conditions"] = conditions;
  j["inconsistent_with_theorem"] = r.validation.report.inconsistent_with_theorem;

  j["cross_validation"] = Json::array();
  for (const auto& c : r.validation.checks) {
    j["cross_validation"].push_back({{"check", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }

  j["nodes"] = Json::array();
  for (std::size_t i = 0; i < an.graph.nodes.size(); ++i) {
    const auto& node = an.graph.nodes[i];
    Json summands = Json::array();
    for (const auto& s : node.pair.summands) summands.push_back(dimension_vector_string(s));
    Json proj = Json::array();
    for (auto v : node.pair.projective_vertices) proj.push_back(p.vertices[v]);
    j["nodes"].push_back({{"id", i}, {"name", node.name}, {"summands", summands}, {"projective", proj}});
  }
  j["bricks"] = Json::array();
  for (std::size_t i = 0; i < an.bricks.size(); ++i) {
    j["bricks"].push_back({{"id", i}, {"dimension_vector", dimension_vector_string(an.bricks[i].module)}});
  }
  j["covers"] = Json::array();
  if (an.quiver) {
    for (const auto& c : an.quiver->covers) {
      j["covers"].push_back({{"upper", c.upper}, {"lower", c.lower}, {"brick", c.brick}});
    }
  }
  return j;
}

std::string render_dot(const LabeledHasseQuiver& q) {
  std::ostringstream out;
  out << "digraph torsion_classes {\n  rankdir=TB;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < q.poset.size(); ++i) {
    out << "  n" << i << " [label=\"" << escape(q.poset.name(i)) << "\"];\n";
  }
  for (const auto& c : q.covers) {
    out << "  n" << c.upper << " -> n" << c.lower << " [label=\""
        << escape(dimension_vector_string(q.bricks[c.brick].module)) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_text(const RunResult& r) {
  const Analysis& an = r.analysis;
  std::ostringstream out;
  out << "algebra " << r.validation.report.algebra_fingerprint << ": "
      << an.ctx.algebra.vertex_count() << " vertices, dimension " << an.ctx.algebra.dimension()
      << ", characteristic " << an.ctx.algebra.field().characteristic() << "\n";
  out << "support tau-tilting pairs: " << an.graph.nodes.size()
      << (an.graph.complete ? "" : " (incomplete: " + an.graph.incomplete_reason + ")") << "\n";
  out << "mutation edges: " << an.graph.edges.size() << "\n";
  out << "bricks: " << an.bricks.size() << "\n";
  if (an.graph.complete) out << "semibricks: " << an.semibricks.size() << "\n";
  out << "conditions:\n";
  for (const auto& [id, v] : r.validation.report.conditions) {
    out << "  (" << id << ") " << to_string(v.value) << ": " << v.evidence << "\n";
  }
  if (r.validation.report.inconsistent_with_theorem) out << "WARNING: verdicts are inconsistent\n";
  out << "checks:\n";
  for (const auto& c : r.validation.checks) {
    out << "  " << to_string(c.status) << " " << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace torsionlab
