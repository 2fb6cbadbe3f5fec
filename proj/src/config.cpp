#include "attractors/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace attractors {

namespace {

using nlohmann::json;

json symbol_to_json(const SymbolSpace& S) {
  json j;
  if (const auto* torus = std::get_if<TorusHull>(&S.hull)) {
    j["kind"] = "torus";
    j["frequencies"] = torus->frequencies;
    j["amplitudes"] = torus->amplitudes;
    j["modes"] = torus->modes;
  } else if (const auto* circle = std::get_if<CircleHull>(&S.hull)) {
    j["kind"] = "circle";
    j["period"] = circle->period;
    j["samples"] = circle->samples;
  } else {
    const auto& shift = std::get<FiniteShift>(S.hull);
    j["kind"] = "shift";
    j["alphabet"] = shift.alphabet;
    j["word"] = shift.word;
  }
  return j;
}

SymbolSpace symbol_from_json(const json& j) {
  SymbolSpace S;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "torus") {
    TorusHull t;
    t.frequencies = j.at("frequencies").get<std::vector<double>>();
    t.amplitudes = j.at("amplitudes").get<std::vector<double>>();
    t.modes = j.at("modes").get<std::vector<int>>();
    if (t.frequencies.size() != t.amplitudes.size() ||
        t.frequencies.size() != t.modes.size())
      throw std::invalid_argument("torus hull arrays must have equal length");
    for (double w : t.frequencies)
      if (!(w > 0.0)) throw std::invalid_argument("torus frequencies must be positive");
    S.hull = std::move(t);
  } else if (kind == "circle") {
    CircleHull c;
    c.period = j.at("period").get<double>();
    if (!(c.period > 0.0)) throw std::invalid_argument("circle period must be positive");
    if (j.contains("waveform")) {
      if (j.at("waveform").get<std::string>() != "cos")
        throw std::invalid_argument("unknown circle waveform");
      c = CircleHull::cosine(c.period, j.value("sample_count", 4096));
    } else {
      c.samples = j.at("samples").get<std::vector<double>>();
      if (c.samples.size() < 2) throw std::invalid_argument("circle hull needs samples");
    }
    S.hull = std::move(c);
  } else if (kind == "shift") {
    FiniteShift f;
    f.alphabet = j.at("alphabet").get<int>();
    f.word = j.at("word").get<std::vector<int>>();
    if (f.word.empty()) throw std::invalid_argument("shift word must be nonempty");
    S.hull = std::move(f);
  } else {
    throw std::invalid_argument("unknown symbol kind: " + kind);
  }
  return S;
}

json process_to_json(const ProcessSpec& P) {
  json j;
  if (const auto* lin = std::get_if<LinearModel>(&P.model)) {
    j["kind"] = "linear";
    j["lambda"] = lin->lambda;
    j["dim"] = lin->dim;
    j["dt"] = lin->dt;
  } else {
    const auto& wave = std::get<WaveModel>(P.model);
    j["kind"] = "wave1d";
    j["modes"] = wave.m;
    j["length"] = wave.length;
    j["dt"] = wave.dt;
  }
  j["guard"] = P.guard;
  return j;
}

ProcessSpec process_from_json(const json& j) {
  ProcessSpec P;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "linear") {
    LinearModel lin;
    lin.lambda = j.at("lambda").get<double>();
    lin.dim = j.value("dim", 1);
    lin.dt = j.at("dt").get<double>();
    if (!(lin.lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    if (lin.dim < 1) throw std::invalid_argument("dim must be >= 1");
    if (!(lin.dt > 0.0)) throw std::invalid_argument("dt must be positive");
    P.model = lin;
  } else if (kind == "wave1d") {
    WaveModel wave;
    wave.m = j.at("modes").get<int>();
    wave.length = j.value("length", 3.14159265358979323846);
    wave.dt = j.at("dt").get<double>();
    if (wave.m < 1) throw std::invalid_argument("modes must be >= 1");
    if (!(wave.length > 0.0)) throw std::invalid_argument("length must be positive");
    if (!(wave.dt > 0.0)) throw std::invalid_argument("dt must be positive");
    P.model = wave;
  } else {
    throw std::invalid_argument("unknown model kind: " + kind);
  }
  P.guard = j.value("guard", 1e8);
  if (!(P.guard > 0.0)) throw std::invalid_argument("guard must be positive");
  return P;
}

}  // namespace

namespace {
ExperimentConfig parse_config(const json& j);
}  // namespace

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  try {
    return parse_config(j);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config field error: ") + e.what());
  }
}

namespace {

ExperimentConfig parse_config(const json& j) {
  ExperimentConfig cfg;
  cfg.process = process_from_json(j.at("model"));
  cfg.symbols = symbol_from_json(j.at("symbol"));

  const json& samp = j.at("sampling");
  cfg.pipeline.sigma_samples = samp.at("sigma_samples").get<int>();
  cfg.pipeline.tau_samples = samp.at("tau_samples").get<int>();
  cfg.pipeline.cloud_points = samp.at("cloud_points").get<int>();
  cfg.pipeline.cloud_level = samp.at("cloud_level").get<double>();
  cfg.pipeline.target_level = samp.at("target_level").get<double>();

  const json& tol = j.at("tolerances");
  cfg.pipeline.net_eps = tol.at("net_eps").get<double>();
  cfg.pipeline.gap_threshold = tol.at("gap_threshold").get<double>();
  cfg.pipeline.attraction_tol = tol.at("attraction_tol").get<double>();
  if (!(cfg.pipeline.net_eps > 0.0 && cfg.pipeline.gap_threshold > 0.0 &&
        cfg.pipeline.attraction_tol > 0.0))
    throw std::invalid_argument("tolerances must be positive");

  const json& budget = j.at("budget");
  cfg.pipeline.h = budget.at("h").get<double>();
  cfg.pipeline.window = budget.at("window").get<double>();
  cfg.pipeline.lag_step = budget.at("lag_step").get<double>();
  cfg.pipeline.t_max = budget.at("t_max").get<double>();
  cfg.pipeline.seed = j.value("seed", std::uint64_t(1));
  cfg.pullback_T = budget.value("pullback_T", 20.0);
  cfg.pullback_T_max = budget.value("pullback_T_max", 8.0 * cfg.pullback_T);
  if (!(cfg.pipeline.t_max > 0.0 && cfg.pipeline.lag_step > 0.0 &&
        cfg.pipeline.window >= 0.0 && cfg.pullback_T > 0.0))
    throw std::invalid_argument("budgets must be positive");

  cfg.attraction_balls = j.value("dissipativity_balls", 3);
  cfg.output_dir = j.value("output_dir", std::string("out"));
  cfg.pipeline.model_hash = cfg.hash();
  return cfg;
}

}  // namespace

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

std::string ExperimentConfig::to_json_text() const {
  json j;
  j["model"] = process_to_json(process);
  j["symbol"] = symbol_to_json(symbols);
  j["sampling"] = {{"sigma_samples", pipeline.sigma_samples},
                   {"tau_samples", pipeline.tau_samples},
                   {"cloud_points", pipeline.cloud_points},
                   {"cloud_level", pipeline.cloud_level},
                   {"target_level", pipeline.target_level}};
  j["tolerances"] = {{"net_eps", pipeline.net_eps},
                     {"gap_threshold", pipeline.gap_threshold},
                     {"attraction_tol", pipeline.attraction_tol}};
  j["budget"] = {{"h", pipeline.h},
                 {"window", pipeline.window},
                 {"lag_step", pipeline.lag_step},
                 {"t_max", pipeline.t_max},
                 {"pullback_T", pullback_T},
                 {"pullback_T_max", pullback_T_max}};
  j["dissipativity_balls"] = attraction_balls;
  j["seed"] = pipeline.seed;
  j["output_dir"] = output_dir;
  return j.dump(2);
}

std::string ExperimentConfig::hash() const {
  // FNV-1a over the canonical serialization, minus the hash-bearing field
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : to_json_text()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace attractors
