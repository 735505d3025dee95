#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "torsionlab/lattice.hpp"
#include "torsionlab/tau_tilting.hpp"

namespace torsionlab {

enum class Truth { True, False, Inconclusive };
const char* to_string(Truth t);

struct Verdict {
  Truth value = Truth::Inconclusive;
  std::string evidence;
};

// Condition ids in report order.
inline constexpr const char* kConditionIds[] = {"a", "a'", "b", "b'", "c", "d", "e", "f"};
inline constexpr std::size_t kConditionCount = 8;

struct ConditionReport {
  std::vector<std::pair<std::string, Verdict>> conditions;  // kConditionIds order
  std::string algebra_fingerprint;
  EnumerationBounds bounds;
  bool inconsistent_with_theorem = false;

  const Verdict& at(const std::string& id) const;
};

// Sets inconsistent_with_theorem when one verdict is True and another False.
void flag_inconsistency(ConditionReport& report);

// FNV-1a of the canonical serialization, as 16 hex digits.
std::string algebra_fingerprint(const BoundQuiverPresentation& presentation);

// Everything the pipeline derives from one algebra.
struct Analysis {
  EnumerationBounds bounds;
  TauTiltingContext ctx;
  MutationGraph graph;
  std::vector<Brick> bricks;  // from all discovered summands
  // Filled when the graph is complete:
  std::optional<lattice::FinitePoset> poset;
  std::optional<lattice::FiniteLattice> lattice;
  std::optional<lattice::NotALattice> not_a_lattice;
  std::vector<std::vector<std::size_t>> semibricks;
  std::optional<LabeledHasseQuiver> quiver;
  std::optional<std::string> label_error;  // set when labelling failed

  Analysis(const BoundQuiverPresentation& presentation, const EnumerationBounds& bounds);
};

Verdict check_f_structural(const BoundQuiverPresentation& presentation);
Verdict check_simple_generated(const Analysis& analysis);

ConditionReport check_conditions(const Analysis& analysis);
ConditionReport check_conditions(const BoundQuiverPresentation& presentation,
                                 const EnumerationBounds& bounds = {});

enum class OracleMethod {
  Filtration,  // iterate X -> X / trace_C(X) until it stops shrinking
  Orthogonal,  // left perpendicular of the right perpendicular of C
};

struct OracleLimits {
  std::size_t max_modules = 16;
  std::size_t max_total_dim = 64;
};

struct OracleResult {
  lattice::FinitePoset poset;
  std::vector<std::vector<bool>> classes;  // membership over the input list
};

// All torsion classes of an algebra whose indecomposables are exactly
// `indecomposables`, ordered by inclusion. Throws Error(OracleTooLarge)
// beyond the limits.
OracleResult bruteforce_torsion_classes(const PathAlgebra& algebra,
                                        const std::vector<Representation>& indecomposables,
                                        OracleMethod method = OracleMethod::Filtration,
                                        const OracleLimits& limits = {});

enum class CheckStatus { Pass, Fail, Skipped };
const char* to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct CrossValidation {
  ConditionReport report;
  std::vector<CheckResult> checks;

  bool all_passed() const;  // skipped checks count as passed
  const CheckResult& at(const std::string& name) const;
};

struct CrossValidationOptions {
  bool oracle = true;    // run the oracle when a fixture generator applies
  bool opposite = true;  // compare with the opposite algebra
};

CrossValidation cross_validate(const Analysis& analysis, const CrossValidationOptions& options = {});
CrossValidation cross_validate(const BoundQuiverPresentation& presentation,
                               const EnumerationBounds& bounds = {},
                               const CrossValidationOptions& options = {});

}  // namespace torsionlab
