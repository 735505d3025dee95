#include "torsionlab/fixtures.hpp"

#include <algorithm>
#include <set>

namespace torsionlab::fixtures {

BoundQuiverPresentation linear_quiver(std::size_t n, const Field& field,
                                      std::vector<bool> reversed,
                                      std::vector<std::vector<std::size_t>> relations) {
  BoundQuiverPresentation p;
  p.field = field;
  for (std::size_t i = 0; i < n; ++i) p.vertices.push_back(std::to_string(i + 1));
  reversed.resize(n == 0 ? 0 : n - 1, false);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::string name(1, static_cast<char>('a' + i));
    p.arrows.push_back(reversed[i] ? Arrow{name, i + 1, i} : Arrow{name, i, i + 1});
  }
  p.relations = std::move(relations);
  return p;
}

BoundQuiverPresentation truncated_loop(std::size_t m, const Field& field,
                                       const std::string& arrow) {
  BoundQuiverPresentation p;
  p.field = field;
  p.vertices = {"1"};
  if (m > 1) {
    p.arrows.push_back({arrow, 0, 0});
    p.relations.push_back(std::vector<std::size_t>(m, 0));
  }
  return p;
}

BoundQuiverPresentation product(const std::vector<BoundQuiverPresentation>& parts) {
  BoundQuiverPresentation out;
  if (!parts.empty()) out.field = parts.front().field;
  for (const auto& part : parts) {
    const std::size_t v0 = out.vertices.size();
    const std::size_t a0 = out.arrows.size();
    for (std::size_t v = 0; v < part.vertices.size(); ++v) {
      out.vertices.push_back(std::to_string(v0 + v + 1));
    }
    for (const auto& a : part.arrows) out.arrows.push_back({a.name, a.source + v0, a.target + v0});
    for (auto rel : part.relations) {
      for (auto& a : rel) a += a0;
      out.relations.push_back(std::move(rel));
    }
  }
  return out;
}

std::vector<CorpusEntry> corpus(const Field& f) {
  auto loop = [&](std::size_t m, const char* name) { return truncated_loop(m, f, name); };
  BoundQuiverPresentation two_loops;
  two_loops.field = f;
  two_loops.vertices = {"1"};
  two_loops.arrows = {{"x", 0, 0}, {"y", 0, 0}};
  two_loops.relations = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};

  BoundQuiverPresentation cyclic;
  cyclic.field = f;
  cyclic.vertices = {"1", "2"};
  cyclic.arrows = {{"a", 0, 1}, {"b", 1, 0}};
  cyclic.relations = {{0, 1}, {1, 0}};

  return {
      {"K", loop(1, "x"), true, 2},
      {"K[x]/(x^2)", loop(2, "x"), true, 2},
      {"K[x]/(x^3)", loop(3, "x"), true, 2},
      {"K[x]/(x^4)", loop(4, "x"), true, 2},
      {"K x K", product({loop(1, "x"), loop(1, "y")}), true, 4},
      {"K[x]/(x^2) x K", product({loop(2, "x"), loop(1, "y")}), true, 4},
      {"K[x]/(x^2) x K[y]/(y^3)", product({loop(2, "x"), loop(3, "y")}), true, 4},
      {"K x K x K", product({loop(1, "x"), loop(1, "y"), loop(1, "z")}), true, 8},
      {"K[x]/(x^2) x K[y]/(y^2) x K[z]/(z^2)",
       product({loop(2, "x"), loop(2, "y"), loop(2, "z")}), true, 8},
      {"K[x]/(x^2) x K[y]/(y^3) x K", product({loop(2, "x"), loop(3, "y"), loop(1, "z")}), true, 8},
      {"K<x,y>/(x,y)^2", two_loops, true, 2},
      {"A2", linear_quiver(2, f), false, 5},
      {"A3", linear_quiver(3, f), false, 14},
      {"A3 with ab = 0", linear_quiver(3, f, {}, {{0, 1}}), false, 12},
      {"A3 sink in the middle", linear_quiver(3, f, {false, true}), false, 14},
      {"cyclic Nakayama, radical square zero", cyclic, false, 6},
  };
}

namespace {

std::vector<std::vector<std::size_t>> components(const BoundQuiverPresentation& p) {
  const std::size_t n = p.vertex_count();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : p.arrows) parent[find(a.source)] = find(a.target);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(n, SIZE_MAX);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = find(v);
    if (slot[r] == SIZE_MAX) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

Representation blank(const PathAlgebra& algebra) { return Representation::zero(algebra); }

void fill_zero_maps(const PathAlgebra& algebra, Representation& m) {
  for (std::size_t a = 0; a < algebra.arrow_count(); ++a) {
    const Arrow& arr = algebra.arrow(a);
    if (m.maps[a].rows() != m.dims[arr.source] || m.maps[a].cols() != m.dims[arr.target]) {
      m.maps[a] = Matrix(m.field, m.dims[arr.source], m.dims[arr.target]);
    }
  }
}

}  // namespace

std::optional<std::vector<Representation>> known_indecomposables(const PathAlgebra& algebra) {
  const auto& p = algebra.presentation();
  const Field& field = algebra.field();
  std::vector<Representation> out;
  for (const auto& comp : components(p)) {
    std::set<std::size_t> verts(comp.begin(), comp.end());
    std::vector<std::size_t> arrows;
    for (std::size_t a = 0; a < p.arrows.size(); ++a) {
      if (verts.count(p.arrows[a].source)) arrows.push_back(a);
    }
    std::vector<std::vector<std::size_t>> rels;
    for (const auto& r : p.relations) {
      if (verts.count(p.arrows[r.front()].source)) rels.push_back(r);
    }

    if (comp.size() == 1) {
      const std::size_t v = comp.front();
      if (arrows.size() > 1) return std::nullopt;
      std::size_t m = 1;
      if (arrows.size() == 1) {
        if (rels.empty()) return std::nullopt;
        m = SIZE_MAX;
        for (const auto& r : rels) m = std::min(m, r.size());
      }
      for (std::size_t j = 1; j <= m; ++j) {
        Representation jordan = blank(algebra);
        jordan.dims[v] = j;
        fill_zero_maps(algebra, jordan);
        if (!arrows.empty()) {
          Matrix shift(field, j, j);
          for (std::size_t i = 0; i + 1 < j; ++i) shift(i, i + 1) = field.one();
          jordan.maps[arrows.front()] = shift;
        }
        out.push_back(std::move(jordan));
      }
      continue;
    }

    // A linear component: a tree in which every vertex has degree <= 2.
    if (arrows.size() + 1 != comp.size()) return std::nullopt;
    std::vector<std::vector<std::size_t>> adjacent(p.vertex_count());
    for (std::size_t a : arrows) {
      const Arrow& arr = p.arrows[a];
      if (arr.source == arr.target) return std::nullopt;
      adjacent[arr.source].push_back(arr.target);
      adjacent[arr.target].push_back(arr.source);
    }
    std::size_t end = SIZE_MAX;
    for (std::size_t v : comp) {
      if (adjacent[v].size() > 2) return std::nullopt;
      if (adjacent[v].size() == 1 && end == SIZE_MAX) end = v;
    }
    std::vector<std::size_t> order{end};
    std::vector<std::size_t> position(p.vertex_count(), SIZE_MAX);
    position[end] = 0;
    while (order.size() < comp.size()) {
      std::size_t next = SIZE_MAX;
      for (std::size_t w : adjacent[order.back()]) {
        if (position[w] == SIZE_MAX) next = w;
      }
      position[next] = order.size();
      order.push_back(next);
    }
    auto inside = [&](std::size_t a, std::size_t lo, std::size_t hi) {
      std::size_t s = position[p.arrows[a].source], t = position[p.arrows[a].target];
      return s >= lo && s <= hi && t >= lo && t <= hi;
    };
    for (std::size_t lo = 0; lo < order.size(); ++lo) {
      for (std::size_t hi = lo; hi < order.size(); ++hi) {
        bool killed = std::any_of(rels.begin(), rels.end(), [&](const auto& r) {
          return std::all_of(r.begin(), r.end(), [&](std::size_t a) { return inside(a, lo, hi); });
        });
        if (killed) continue;
        Representation interval = blank(algebra);
        for (std::size_t k = lo; k <= hi; ++k) interval.dims[order[k]] = 1;
        fill_zero_maps(algebra, interval);
        for (std::size_t a : arrows) {
          if (inside(a, lo, hi)) interval.maps[a](0, 0) = field.one();
        }
        out.push_back(std::move(interval));
      }
    }
  }
  return out;
}

}  // namespace torsionlab::fixtures
