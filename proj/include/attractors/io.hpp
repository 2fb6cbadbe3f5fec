#pragma once

#include <string>
#include <utility>
#include <vector>

#include "attractors/attractor_lab.hpp"
#include "attractors/metric_sets.hpp"

namespace attractors {

// Cloud CSV: header `dim,<d>` then one point per row.  Numbers are written
// with round-trip precision so reruns are byte-identical.
std::string cloud_to_csv(const PointCloud& cloud);
PointCloud cloud_from_csv(const std::string& text);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

std::string curve_to_csv(const AttractionCurve& curve);
std::string profile_to_csv(const std::vector<std::pair<double, double>>& profile);

// Run manifest: meta fields, tolerances, config hash.
std::string manifest_json(const AttractorMeta& meta, bool converged,
                          const std::string& config_hash,
                          const std::vector<std::pair<std::string, double>>& extras = {});

}  // namespace attractors
