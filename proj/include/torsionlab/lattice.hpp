#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace torsionlab::lattice {

using Element = std::size_t;
using CoverPair = std::pair<Element, Element>;  // (upper, lower)

// A finite poset on elements 0..n-1 with a full order table. Element names
// are opaque display ids.
class FinitePoset {
 public:
  FinitePoset() = default;
  // Validates reflexivity, antisymmetry and transitivity; throws
  // Error(InvalidPoset) on failure.
  explicit FinitePoset(std::vector<std::vector<bool>> leq,
                       std::vector<std::string> names = {});

  // Reflexive-transitive closure of the given (upper, lower) pairs.
  static FinitePoset from_covers(std::size_t n,
                                 const std::vector<CoverPair>& covers,
                                 std::vector<std::string> names = {});

  std::size_t size() const noexcept { return leq_.size(); }
  bool leq(Element a, Element b) const { return leq_[a][b]; }
  bool less(Element a, Element b) const { return a != b && leq_[a][b]; }
  const std::string& name(Element a) const { return names_[a]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<std::vector<bool>>& table() const noexcept { return leq_; }

  FinitePoset dual() const;
  // Relabels so that element i of the result is element order[i] of this.
  FinitePoset permuted(const std::vector<Element>& order) const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.leq_ == b.leq_;
  }

 private:
  std::vector<std::vector<bool>> leq_;
  std::vector<std::string> names_;
};

std::vector<CoverPair> covers(const FinitePoset& poset);

struct NotALattice {
  Element a = 0;
  Element b = 0;
  bool missing_join = true;  // otherwise the meet is missing
  std::string describe() const;
};

class FiniteLattice;
std::variant<FiniteLattice, NotALattice> as_lattice(const FinitePoset& poset);

class FiniteLattice {
 public:
  const FinitePoset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  Element meet(Element a, Element b) const { return meet_[a][b]; }
  Element join(Element a, Element b) const { return join_[a][b]; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }
  bool leq(Element a, Element b) const { return poset_.leq(a, b); }
  // a covers b
  bool covers(Element a, Element b) const { return cover_[a][b]; }

  FiniteLattice dual() const;

 private:
  friend std::variant<FiniteLattice, NotALattice> as_lattice(
      const FinitePoset&);

  FinitePoset poset_;
  std::vector<std::vector<Element>> meet_;
  std::vector<std::vector<Element>> join_;
  std::vector<std::vector<bool>> cover_;
  Element bottom_ = 0;
  Element top_ = 0;
};

// Throws Error(NotALattice) naming the offending pair.
FiniteLattice require_lattice(const FinitePoset& poset);

struct PropertyReport {
  std::string property;
  bool verdict = false;
  std::vector<Element> witness;  // empty iff verdict is true
};

PropertyReport is_upper_semimodular(const FiniteLattice& l);
PropertyReport is_lower_semimodular(const FiniteLattice& l);
PropertyReport is_distributive(const FiniteLattice& l);
PropertyReport is_join_semidistributive(const FiniteLattice& l);
PropertyReport is_meet_semidistributive(const FiniteLattice& l);
PropertyReport is_hasse_regular(const FinitePoset& p, std::size_t degree);

struct BooleanReport {
  PropertyReport report;
  std::vector<Element> complement;  // filled iff report.verdict
};
BooleanReport is_boolean(const FiniteLattice& l);

struct BooleanIsomorphism {
  std::size_t rank = 0;
  std::vector<Element> atoms;            // atoms[i] is the i-th generator
  std::vector<std::uint64_t> subset_of;  // bit i set iff atoms[i] <= x
};
// Present iff l is isomorphic to the subset lattice of {1..rank}.
std::optional<BooleanIsomorphism> boolean_subset_isomorphism(
    const FiniteLattice& l);

std::vector<Element> join_irreducibles(const FiniteLattice& l);

// Order-preserving bijection f with a <= b  <=>  f(a) <= f(b).
std::optional<std::vector<Element>> find_isomorphism(const FinitePoset& a,
                                                     const FinitePoset& b);
// Order-reversing bijection; throws Error(SizeMismatch) on size mismatch.
std::optional<std::vector<Element>> is_antiisomorphic(const FiniteLattice& a,
                                                      const FiniteLattice& b);

}  // namespace torsionlab::lattice
