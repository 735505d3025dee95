#include "torsionlab/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

#include "torsionlab/error.hpp"

namespace torsionlab::lattice {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
  return names;
}

PropertyReport holds(std::string name) {
  return PropertyReport{std::move(name), true, {}};
}

PropertyReport fails(std::string name, std::vector<Element> witness) {
  return PropertyReport{std::move(name), false, std::move(witness)};
}

}  // namespace

FinitePoset::FinitePoset(std::vector<std::vector<bool>> leq,
                         std::vector<std::string> names)
    : leq_(std::move(leq)), names_(std::move(names)) {
  const std::size_t n = leq_.size();
  if (names_.empty()) names_ = default_names(n);
  if (names_.size() != n) {
    throw Error(ErrorCode::InvalidPoset, "name count differs from size");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (leq_[i].size() != n) throw Error(ErrorCode::InvalidPoset, "table not square");
    if (!leq_[i][i]) {
      throw Error(ErrorCode::InvalidPoset, "not reflexive at " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq_[i][j] && leq_[j][i]) {
        throw Error(ErrorCode::InvalidPoset,
                    "not antisymmetric at " + std::to_string(i) + "," +
                        std::to_string(j));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!leq_[i][j] || i == j) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (leq_[j][k] && !leq_[i][k]) {
          throw Error(ErrorCode::InvalidPoset,
                      "not transitive at " + std::to_string(i) + "," +
                          std::to_string(j) + "," + std::to_string(k));
        }
      }
    }
  }
}

FinitePoset FinitePoset::from_covers(std::size_t n,
                                     const std::vector<CoverPair>& cover_pairs,
                                     std::vector<std::string> names) {
  std::vector<std::vector<Element>> uppers(n);
  for (const auto& [upper, lower] : cover_pairs) {
    if (upper >= n || lower >= n) {
      throw Error(ErrorCode::InvalidPoset, "cover pair out of range");
    }
    uppers[lower].push_back(upper);
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Element> stack{x};
    leq[x][x] = true;
    while (!stack.empty()) {
      Element y = stack.back();
      stack.pop_back();
      for (Element u : uppers[y]) {
        if (!leq[x][u]) {
          leq[x][u] = true;
          stack.push_back(u);
        }
      }
    }
  }
  return FinitePoset(std::move(leq), std::move(names));
}

FinitePoset FinitePoset::dual() const {
  const std::size_t n = size();
  std::vector<std::vector<bool>> t(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = leq_[j][i];
  }
  return FinitePoset(std::move(t), names_);
}

FinitePoset FinitePoset::permuted(const std::vector<Element>& order) const {
  const std::size_t n = size();
  if (order.size() != n) throw Error(ErrorCode::SizeMismatch, "permutation size");
  std::vector<std::vector<bool>> t(n, std::vector<bool>(n));
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = names_[order[i]];
    for (std::size_t j = 0; j < n; ++j) t[i][j] = leq_[order[i]][order[j]];
  }
  return FinitePoset(std::move(t), std::move(names));
}

std::vector<CoverPair> covers(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<CoverPair> out;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!p.less(b, a)) continue;
      bool between = false;
      for (Element c = 0; c < n && !between; ++c) {
        between = p.less(b, c) && p.less(c, a);
      }
      if (!between) out.emplace_back(a, b);
    }
  }
  return out;
}

std::string NotALattice::describe() const {
  return std::string(missing_join ? "join" : "meet") + " of " +
         std::to_string(a) + " and " + std::to_string(b) + " does not exist";
}

std::variant<FiniteLattice, NotALattice> as_lattice(const FinitePoset& p) {
  const std::size_t n = p.size();
  if (n == 0) return NotALattice{0, 0, true};
  std::vector<std::size_t> down_count(n, 0), up_count(n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (p.leq(b, a)) ++down_count[a];
      if (p.leq(a, b)) ++up_count[a];
    }
  }
  FiniteLattice l;
  l.poset_ = p;
  l.meet_.assign(n, std::vector<Element>(n, 0));
  l.join_.assign(n, std::vector<Element>(n, 0));
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      // Least upper bound: the common upper bound with the largest up-set,
      // verified to lie below every other common upper bound.
      std::optional<Element> best;
      for (Element c = 0; c < n; ++c) {
        if (p.leq(a, c) && p.leq(b, c) &&
            (!best || up_count[c] > up_count[*best])) {
          best = c;
        }
      }
      bool ok = best.has_value();
      for (Element c = 0; ok && c < n; ++c) {
        if (p.leq(a, c) && p.leq(b, c) && !p.leq(*best, c)) ok = false;
      }
      if (!ok) return NotALattice{a, b, true};
      l.join_[a][b] = l.join_[b][a] = *best;

      best.reset();
      for (Element c = 0; c < n; ++c) {
        if (p.leq(c, a) && p.leq(c, b) &&
            (!best || down_count[c] > down_count[*best])) {
          best = c;
        }
      }
      ok = best.has_value();
      for (Element c = 0; ok && c < n; ++c) {
        if (p.leq(c, a) && p.leq(c, b) && !p.leq(c, *best)) ok = false;
      }
      if (!ok) return NotALattice{a, b, false};
      l.meet_[a][b] = l.meet_[b][a] = *best;
    }
  }
  l.bottom_ = 0;
  l.top_ = 0;
  for (Element a = 1; a < n; ++a) {
    l.bottom_ = l.meet_[l.bottom_][a];
    l.top_ = l.join_[l.top_][a];
  }
  l.cover_.assign(n, std::vector<bool>(n, false));
  for (const auto& [upper, lower] : covers(p)) l.cover_[upper][lower] = true;
  return l;
}

FiniteLattice require_lattice(const FinitePoset& poset) {
  auto result = as_lattice(poset);
  if (auto* bad = std::get_if<NotALattice>(&result)) {
    throw Error(ErrorCode::NotALattice, bad->describe());
  }
  return std::get<FiniteLattice>(std::move(result));
}

FiniteLattice FiniteLattice::dual() const {
  FiniteLattice d;
  d.poset_ = poset_.dual();
  d.meet_ = join_;
  d.join_ = meet_;
  const std::size_t n = size();
  d.cover_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d.cover_[i][j] = cover_[j][i];
  }
  d.bottom_ = top_;
  d.top_ = bottom_;
  return d;
}

PropertyReport is_upper_semimodular(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (a == b) continue;
      Element m = l.meet(a, b);
      if (!l.covers(a, m) || !l.covers(b, m)) continue;
      Element j = l.join(a, b);
      if (!l.covers(j, a) || !l.covers(j, b)) {
        return fails("upper_semimodular", {a, b});
      }
    }
  }
  return holds("upper_semimodular");
}

PropertyReport is_lower_semimodular(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (a == b) continue;
      Element j = l.join(a, b);
      if (!l.covers(j, a) || !l.covers(j, b)) continue;
      Element m = l.meet(a, b);
      if (!l.covers(a, m) || !l.covers(b, m)) {
        return fails("lower_semimodular", {a, b});
      }
    }
  }
  return holds("lower_semimodular");
}

PropertyReport is_distributive(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (l.meet(l.join(a, b), c) != l.join(l.meet(a, c), l.meet(b, c))) {
          return fails("distributive", {a, b, c});
        }
      }
    }
  }
  return holds("distributive");
}

BooleanReport is_boolean(const FiniteLattice& l) {
  PropertyReport dist = is_distributive(l);
  if (!dist.verdict) return {fails("boolean", dist.witness), {}};
  const std::size_t n = l.size();
  std::vector<Element> complement(n);
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b) {
      if (l.join(a, b) == l.top() && l.meet(a, b) == l.bottom()) {
        complement[a] = b;
        found = true;
      }
    }
    if (!found) return {fails("boolean", {a}), {}};
  }
  return {holds("boolean"), std::move(complement)};
}

std::optional<BooleanIsomorphism> boolean_subset_isomorphism(
    const FiniteLattice& l) {
  const std::size_t n = l.size();
  BooleanIsomorphism iso;
  for (Element a = 0; a < n; ++a) {
    if (l.covers(a, l.bottom())) iso.atoms.push_back(a);
  }
  iso.rank = iso.atoms.size();
  if (iso.rank >= 63 || (std::uint64_t{1} << iso.rank) != n) return std::nullopt;
  iso.subset_of.assign(n, 0);
  std::vector<bool> seen(n, false);
  for (Element x = 0; x < n; ++x) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < iso.rank; ++i) {
      if (l.leq(iso.atoms[i], x)) mask |= std::uint64_t{1} << i;
    }
    if (seen[mask]) return std::nullopt;
    seen[mask] = true;
    iso.subset_of[x] = mask;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      bool subset = (iso.subset_of[x] & ~iso.subset_of[y]) == 0;
      if (subset != l.leq(x, y)) return std::nullopt;
    }
  }
  return iso;
}

PropertyReport is_join_semidistributive(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (Element x = 0; x < n; ++x) {
    // meet of every y sharing the same join with x, keyed by that join
    std::vector<std::optional<Element>> meet_of_class(n);
    for (Element y = 0; y < n; ++y) {
      Element z = l.join(x, y);
      auto& acc = meet_of_class[z];
      acc = acc ? l.meet(*acc, y) : y;
    }
    for (Element z = 0; z < n; ++z) {
      if (meet_of_class[z] && l.join(x, *meet_of_class[z]) != z) {
        return fails("join_semidistributive", {x, z});
      }
    }
  }
  return holds("join_semidistributive");
}

PropertyReport is_meet_semidistributive(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (Element x = 0; x < n; ++x) {
    std::vector<std::optional<Element>> join_of_class(n);
    for (Element y = 0; y < n; ++y) {
      Element z = l.meet(x, y);
      auto& acc = join_of_class[z];
      acc = acc ? l.join(*acc, y) : y;
    }
    for (Element z = 0; z < n; ++z) {
      if (join_of_class[z] && l.meet(x, *join_of_class[z]) != z) {
        return fails("meet_semidistributive", {x, z});
      }
    }
  }
  return holds("meet_semidistributive");
}

std::vector<Element> join_irreducibles(const FiniteLattice& l) {
  std::vector<Element> out;
  for (Element x = 0; x < l.size(); ++x) {
    std::size_t lower = 0;
    for (Element y = 0; y < l.size(); ++y) lower += l.covers(x, y) ? 1 : 0;
    if (lower == 1) out.push_back(x);
  }
  return out;
}

PropertyReport is_hasse_regular(const FinitePoset& p, std::size_t degree) {
  std::vector<std::size_t> deg(p.size(), 0);
  for (const auto& [upper, lower] : covers(p)) {
    ++deg[upper];
    ++deg[lower];
  }
  for (Element x = 0; x < p.size(); ++x) {
    if (deg[x] != degree) return fails("hasse_regular", {x});
  }
  return holds("hasse_regular");
}

namespace {

struct Profile {
  std::size_t below, above, lower_covers, upper_covers;
  friend bool operator==(const Profile&, const Profile&) = default;
};

std::vector<Profile> profiles(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<Profile> out(n, Profile{0, 0, 0, 0});
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (p.leq(b, a)) ++out[a].below;
      if (p.leq(a, b)) ++out[a].above;
    }
  }
  for (const auto& [upper, lower] : covers(p)) {
    ++out[upper].lower_covers;
    ++out[lower].upper_covers;
  }
  return out;
}

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const FinitePoset& a,
                                                     const FinitePoset& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  auto pa = profiles(a);
  auto pb = profiles(b);
  {
    auto key = [](const Profile& p) {
      return std::tuple(p.below, p.above, p.lower_covers, p.upper_covers);
    };
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> ka, kb;
    for (auto& p : pa) ka.push_back(key(p));
    for (auto& p : pb) kb.push_back(key(p));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb) return std::nullopt;
  }
  // Assign along a linear extension so that comparabilities with already
  // placed elements prune early.
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) {
    return pa[x].below < pa[y].below;
  });
  std::vector<Element> image(n, 0);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
    if (k == n) return true;
    Element x = order[k];
    for (Element y = 0; y < n; ++y) {
      if (used[y] || !(pa[x] == pb[y])) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        Element w = order[i];
        ok = a.leq(w, x) == b.leq(image[w], y) && a.leq(x, w) == b.leq(y, image[w]);
      }
      if (!ok) continue;
      used[y] = true;
      image[x] = y;
      if (place(k + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return image;
}

std::optional<std::vector<Element>> is_antiisomorphic(const FiniteLattice& a,
                                                      const FiniteLattice& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::SizeMismatch,
                "lattices of sizes " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
  return find_isomorphism(a.poset(), b.poset().dual());
}

}  // namespace torsionlab::lattice
