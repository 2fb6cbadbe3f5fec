#pragma once

#include <string>

#include "attractors/attractor_lab.hpp"
#include "attractors/process.hpp"

namespace attractors {

// One experiment per file: model + symbol space + sampling/tolerance/budget
// blocks.  Round-trips losslessly through JSON.
struct ExperimentConfig {
  ProcessSpec process;
  SymbolSpace symbols;
  AttractorPipelineConfig pipeline;
  double pullback_T = 20.0;       // initial pullback horizon
  double pullback_T_max = 160.0;  // doubling budget
  int attraction_balls = 3;       // m_balls for the dissipativity profile
  std::string output_dir = "out";

  static ExperimentConfig from_json_text(const std::string& text);
  static ExperimentConfig load(const std::string& path);
  std::string to_json_text() const;

  // FNV-1a of the canonical serialization; embedded in every artifact so
  // mismatched golden comparisons are rejected instead of fudged.
  std::string hash() const;
};

}  // namespace attractors
