#pragma once

#include <string>

#include "json.hpp"
#include "torsionlab/theorem_lab.hpp"

namespace torsionlab {

inline constexpr int kReportSchemaVersion = 1;

struct RunOptions {
  EnumerationBounds bounds;
  bool oracle = false;
};

struct RunResult {
  Analysis analysis;
  CrossValidation validation;
};

RunResult run_pipeline(const BoundQuiverPresentation& presentation, const RunOptions& options);

// Machine-readable report; contains no timings so equal inputs give equal
// bytes.
nlohmann::ordered_json report_json(const RunResult& result);

// Arrows point from the larger class to the smaller one and carry the
// dimension vector of the labelling brick.
std::string render_dot(const LabeledHasseQuiver& quiver);

std::string render_text(const RunResult& result);

}  // namespace torsionlab
