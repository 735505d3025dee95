#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "torsionlab/lattice.hpp"
#include "torsionlab/modules.hpp"

namespace torsionlab {

// An algebra together with its opposite, which the transpose needs.
struct TauTiltingContext {
  PathAlgebra algebra;
  PathAlgebra opposite;

  explicit TauTiltingContext(const BoundQuiverPresentation& presentation);
};

// (M, P): M basic tau-rigid, kept as its indecomposable summands in
// canonical order; P given by the vertices of its projective summands.
struct SupportTauTiltingPair {
  std::vector<Representation> summands;
  std::vector<std::size_t> projective_vertices;  // sorted

  // Mutation indices: [0, summands.size()) pick a summand of M, the rest
  // pick the entries of projective_vertices in order.
  std::size_t size() const noexcept { return summands.size() + projective_vertices.size(); }
};

Representation pair_module(const PathAlgebra& algebra, const SupportTauTiltingPair& pair);
// Sorts summands by dimension vector, then fingerprint; sorts P.
void canonicalize(const PathAlgebra& algebra, SupportTauTiltingPair& pair);

// (A, 0).
SupportTauTiltingPair initial_pair(const PathAlgebra& algebra);

struct MutationResult {
  SupportTauTiltingPair pair;
  bool left = true;  // true when Fac shrinks
};

// Throws Error(NotASummand) for an index >= pair.size(),
// Error(ApproximationFailure) or Error(InconsistentMutation) on internal
// inconsistencies.
MutationResult mutate_oriented(const TauTiltingContext& ctx,
                               const SupportTauTiltingPair& pair, std::size_t index);
SupportTauTiltingPair mutate(const TauTiltingContext& ctx,
                             const SupportTauTiltingPair& pair, std::size_t index);

// Indecomposable modules up to isomorphism, with stable ids.
class ModuleRegistry {
 public:
  // Id of the class of m, adding it if new.
  std::size_t intern(const PathAlgebra& algebra, const Representation& m);
  std::size_t size() const noexcept { return modules_.size(); }
  const Representation& module(std::size_t id) const { return modules_[id]; }
  const std::vector<Representation>& modules() const noexcept { return modules_; }

 private:
  std::vector<Representation> modules_;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_fingerprint_;
};

// A summand of a pair: either a registry module or a projective vertex.
struct SummandRef {
  bool projective = false;
  std::size_t id = 0;

  friend bool operator==(const SummandRef&, const SummandRef&) = default;
  friend auto operator<=>(const SummandRef&, const SummandRef&) = default;
};

struct MutationNode {
  SupportTauTiltingPair pair;
  std::vector<std::size_t> module_ids;  // parallel to pair.summands
  std::string name;
};

// Directed from the larger torsion class to the smaller one.
struct MutationEdge {
  std::size_t upper = 0;
  std::size_t lower = 0;
  SummandRef upper_summand;  // leaves when going down
  SummandRef lower_summand;  // enters when going down
};

struct EnumerationBounds {
  std::size_t node_bound = 100000;
  std::size_t dim_bound = 512;
  std::size_t threads = 1;
};

struct MutationGraph {
  std::vector<MutationNode> nodes;
  std::vector<MutationEdge> edges;  // sorted by (upper, lower)
  ModuleRegistry registry;
  bool complete = false;
  std::string incomplete_reason;
};

// Breadth-first closure under mutation starting at (A, 0). Node and edge
// order do not depend on the thread count.
MutationGraph enumerate(const TauTiltingContext& ctx, const EnumerationBounds& bounds = {});

// membership[node][module id]: whether the registry module lies in Fac(M_node).
std::vector<std::vector<bool>> fac_membership(const TauTiltingContext& ctx,
                                              const MutationGraph& graph);

// Fac-inclusion order on the nodes. Throws Error(IncompleteGraph) on an
// incomplete graph and Error(InconsistentOrder) when the order disagrees
// with the closure of the mutation edges.
lattice::FinitePoset torsion_poset(const TauTiltingContext& ctx, const MutationGraph& graph);

struct Brick {
  Representation module;
  std::size_t source_module = 0;  // registry id it came from
};

// M / rad_End(M) M over all registry modules, up to isomorphism. Throws
// Error(NotABrick) if an image is not a brick.
std::vector<Brick> enumerate_bricks(const TauTiltingContext& ctx, const MutationGraph& graph);

// All pairwise Hom-orthogonal subsets (as sorted index lists), the empty
// set first.
std::vector<std::vector<std::size_t>> enumerate_semibricks(const TauTiltingContext& ctx,
                                                           const std::vector<Brick>& bricks);

// Nonzero summands of M / rad_End(M) M. Throws Error(NotASemibrick) if
// they are not pairwise orthogonal bricks.
std::vector<Representation> stau_to_semibrick(const TauTiltingContext& ctx,
                                              const SupportTauTiltingPair& pair);

// Index of each module of a semibrick in `bricks`; Error(LabelMissing) if
// one is absent.
std::vector<std::size_t> brick_indices(const TauTiltingContext& ctx,
                                       const std::vector<Representation>& semibrick,
                                       const std::vector<Brick>& bricks);

// The unique brick in Fac(upper) with Hom(lower, B) = 0. Throws
// Error(LabelMissing) or Error(LabelNotUnique).
std::size_t brick_label(const TauTiltingContext& ctx, const Representation& upper,
                        const Representation& lower, const std::vector<Brick>& bricks);

struct LabeledCover {
  std::size_t upper = 0;
  std::size_t lower = 0;
  std::size_t brick = 0;
};

struct LabeledHasseQuiver {
  lattice::FinitePoset poset;
  std::vector<LabeledCover> covers;
  std::vector<Brick> bricks;
};

LabeledHasseQuiver labeled_hasse_quiver(const TauTiltingContext& ctx, const MutationGraph& graph,
                                        const lattice::FinitePoset& poset,
                                        std::vector<Brick> bricks);

}  // namespace torsionlab
