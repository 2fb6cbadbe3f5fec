#include "attractors/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace attractors {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string cloud_to_csv(const PointCloud& cloud) {
  cloud.validate();
  std::ostringstream os;
  os << "dim," << cloud.dim() << "\n";
  for (const auto& p : cloud.points) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) os << ',';
      os << fmt(p[i]);
    }
    os << "\n";
  }
  return os.str();
}

PointCloud cloud_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty cloud CSV");
  std::size_t dim = 0;
  if (std::sscanf(line.c_str(), "dim,%zu", &dim) != 1 || dim == 0)
    throw std::invalid_argument("cloud CSV must start with 'dim,<d>'");
  PointCloud cloud;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    StateVector p;
    std::istringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) p.push_back(std::stod(cell));
    if (p.size() != dim) throw std::invalid_argument("ragged row in cloud CSV");
    cloud.points.push_back(std::move(p));
  }
  cloud.validate();
  return cloud;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string curve_to_csv(const AttractionCurve& curve) {
  std::ostringstream os;
  os << "lag,value\n";
  for (std::size_t i = 0; i < curve.lags.size(); ++i)
    os << fmt(curve.lags[i]) << ',' << fmt(curve.values[i]) << "\n";
  return os.str();
}

std::string profile_to_csv(const std::vector<std::pair<double, double>>& profile) {
  std::ostringstream os;
  os << "lag,covering_diameter\n";
  for (const auto& [lag, d] : profile) os << fmt(lag) << ',' << fmt(d) << "\n";
  return os.str();
}

std::string manifest_json(const AttractorMeta& meta, bool converged,
                          const std::string& config_hash,
                          const std::vector<std::pair<std::string, double>>& extras) {
  nlohmann::json j;
  j["sigma_samples"] = meta.sigma_samples;
  j["tau_samples"] = meta.tau_samples;
  j["lag"] = meta.lag;
  j["window"] = meta.window;
  j["net_eps"] = meta.net_eps;
  j["config_hash"] = config_hash;
  j["converged"] = converged;
  for (const auto& [k, v] : extras) j[k] = v;
  return j.dump(2) + "\n";
}

}  // namespace attractors
