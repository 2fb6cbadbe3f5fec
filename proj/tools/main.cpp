// Batch experiment runner: simulates process families over compact symbol
// spaces, approximates uniform attractors and kernel sections, and verifies
// the abstract theory exactly on finite systems.
//
// Exit codes: 0 ok, 1 config error, 2 tolerance/convergence failure,
// 3 numerical divergence.

#include <cstdio>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "attractors/attractor_lab.hpp"
#include "attractors/config.hpp"
#include "attractors/finite_oracle.hpp"
#include "attractors/io.hpp"
#include "attractors/process.hpp"

namespace fs = std::filesystem;
using namespace attractors;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitTolerance = 2;
constexpr int kExitDivergence = 3;

struct CommonOpts {
  std::string config_path;
  std::string out_override;
  std::uint64_t seed_override = 0;
  bool seed_set = false;
  int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "experiment config file")->required();
  cmd->add_option("--out", opts.out_override, "output directory override");
  cmd->add_option("--seed", opts.seed_override, "seed override")
      ->each([&](const std::string&) { opts.seed_set = true; });
  cmd->add_option("--threads", opts.threads, "ensemble worker threads");
}

ExperimentConfig load_config(const CommonOpts& opts) {
  ExperimentConfig cfg = ExperimentConfig::load(opts.config_path);
  if (!opts.out_override.empty()) cfg.output_dir = opts.out_override;
  if (opts.seed_set) cfg.pipeline.seed = opts.seed_override;
  cfg.pipeline.threads = opts.threads;
  cfg.pipeline.model_hash = cfg.hash();
  return cfg;
}

double residual_threshold(const ProcessSpec& P) {
  return std::holds_alternative<LinearModel>(P.model) ? 1e-12 : 1e-6;
}

// Cocycle/translation residual sweep over a small deterministic ensemble.
int run_axioms(const ExperimentConfig& cfg) {
  const ProcessSpec& P = cfg.process;
  const double dt = model_dt(P);
  const long n_h = std::lround(std::min(10.0, cfg.pipeline.t_max) / dt);
  const double horizon = double(n_h) * dt;

  auto sigmas = sample_symbols(cfg.symbols, std::min(cfg.pipeline.sigma_samples, 4));
  auto taus = tau_grid(P, cfg.symbols, std::min(cfg.pipeline.tau_samples, 3));
  PointCloud cloud = sample_state_cloud(P, cfg.pipeline.cloud_level,
                                        std::min(cfg.pipeline.cloud_points, 3),
                                        cfg.pipeline.seed);

  double max_cocycle = 0.0, max_translation = 0.0;
  for (const auto& sigma : sigmas)
    for (double tau : taus)
      for (const auto& x : cloud.points) {
        const double s = tau + double(n_h / 2) * dt;
        const double t = tau + horizon;
        max_cocycle = std::max(max_cocycle, cocycle_residual(P, cfg.symbols, sigma, tau, s, t, x));
        const double h = double(std::lround(1.0 / dt)) * dt;
        max_translation = std::max(
            max_translation, translation_residual(P, cfg.symbols, sigma, h, tau, t, x));
      }

  const double threshold = residual_threshold(P);
  nlohmann::json report;
  report["max_cocycle_residual"] = max_cocycle;
  report["max_translation_residual"] = max_translation;
  report["threshold"] = threshold;
  report["config_hash"] = cfg.hash();

  // integrator-order confirmation by step halving (wave model only; the
  // linear scheme is exact)
  if (const auto* wave = std::get_if<WaveModel>(&P.model)) {
    auto ref_run = [&](double step) {
      ProcessSpec Q = P;
      WaveModel W = *wave;
      W.dt = step;
      Q.model = W;
      return evolve(Q, cfg.symbols, sigmas.front(), 0.0, 4.0, cloud.points.front());
    };
    const MetricSpec metric = model_metric(P);
    const double e1 = metric.dist(ref_run(4e-3), ref_run(2e-3));
    const double e2 = metric.dist(ref_run(2e-3), ref_run(1e-3));
    report["halving_ratio"] = e1 / e2;
  }

  fs::create_directories(cfg.output_dir);
  write_text_file(cfg.output_dir + "/axioms.json", report.dump(2) + "\n");
  std::cout << report.dump(2) << "\n";
  return (max_cocycle <= threshold && max_translation <= threshold) ? kExitOk
                                                                    : kExitTolerance;
}

int run_attractor(const ExperimentConfig& cfg) {
  const AttractorApprox A = uniform_attractor(cfg.process, cfg.symbols, cfg.pipeline);

  EnsembleSpec ens;
  ens.sigmas = sample_symbols(cfg.symbols, cfg.pipeline.sigma_samples);
  ens.taus = tau_grid(cfg.process, cfg.symbols, cfg.pipeline.tau_samples);
  ens.threads = cfg.pipeline.threads;
  PointCloud C = sample_state_cloud(cfg.process, cfg.pipeline.cloud_level,
                                    cfg.pipeline.cloud_points, cfg.pipeline.seed);
  std::vector<double> lags;
  for (double lag = cfg.pipeline.lag_step; lag <= cfg.pipeline.t_max + 1e-12;
       lag += cfg.pipeline.lag_step)
    lags.push_back(lag);
  const AttractionCurve curve =
      attraction_curve(cfg.process, cfg.symbols, ens, C, A.cloud, lags);

  fs::create_directories(cfg.output_dir);
  write_text_file(cfg.output_dir + "/attractor.csv", cloud_to_csv(A.cloud));
  write_text_file(cfg.output_dir + "/attraction_curve.csv", curve_to_csv(curve));
  write_text_file(cfg.output_dir + "/manifest.json",
                  manifest_json(A.meta, A.converged, cfg.hash(),
                                {{"attractor_points", double(A.cloud.size())}}));
  std::cout << "attractor cloud: " << A.cloud.size() << " points\n";
  return A.converged ? kExitOk : kExitTolerance;
}

int run_kernel(const ExperimentConfig& cfg, int sigma_index) {
  auto sigmas = sample_symbols(cfg.symbols, cfg.pipeline.sigma_samples);
  if (sigma_index < 0 || sigma_index >= static_cast<int>(sigmas.size()))
    throw std::invalid_argument("sigma index out of range");
  PointCloud B = sample_state_cloud(cfg.process, cfg.pipeline.target_level,
                                    cfg.pipeline.cloud_points, cfg.pipeline.seed + 1);
  const KernelSectionApprox section = pullback_kernel_section(
      cfg.process, cfg.symbols, sigmas[sigma_index], B, 0.0, cfg.pullback_T,
      cfg.pipeline.gap_threshold, cfg.pipeline.net_eps, cfg.pullback_T_max,
      cfg.pipeline.threads);

  fs::create_directories(cfg.output_dir);
  write_text_file(cfg.output_dir + "/kernel_section.csv", cloud_to_csv(section.cloud));
  AttractorMeta meta;
  meta.sigma_samples = 1;
  meta.tau_samples = 1;
  meta.lag = section.horizon;
  meta.net_eps = cfg.pipeline.net_eps;
  write_text_file(cfg.output_dir + "/manifest.json",
                  manifest_json(meta, section.converged, cfg.hash(),
                                {{"gap", section.gap}, {"horizon", section.horizon}}));
  std::cout << "kernel section: " << section.cloud.size() << " points, gap "
            << section.gap << "\n";
  return section.converged ? kExitOk : kExitTolerance;
}

int run_compare(const ExperimentConfig& cfg) {
  const HullComparison cmp = compare_single_vs_hull(
      cfg.process, cfg.symbols, base_symbol(cfg.symbols), cfg.pipeline);
  nlohmann::json j;
  j["single_vs_hull"] = cmp.single_vs_hull;
  j["hull_vs_single"] = cmp.hull_vs_single;
  j["config_hash"] = cfg.hash();
  fs::create_directories(cfg.output_dir);
  write_text_file(cfg.output_dir + "/compare.json", j.dump(2) + "\n");
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int run_dissipativity(const ExperimentConfig& cfg) {
  EnsembleSpec ens;
  ens.sigmas = sample_symbols(cfg.symbols, cfg.pipeline.sigma_samples);
  ens.taus = tau_grid(cfg.process, cfg.symbols, cfg.pipeline.tau_samples);
  ens.threads = cfg.pipeline.threads;
  PointCloud B = sample_state_cloud(cfg.process, cfg.pipeline.cloud_level,
                                    cfg.pipeline.cloud_points, cfg.pipeline.seed);
  std::vector<double> lags;
  for (double lag = 0.0; lag <= cfg.pipeline.t_max + 1e-12; lag += cfg.pipeline.lag_step)
    lags.push_back(lag);
  const auto profile = dissipativity_profile(cfg.process, cfg.symbols, ens, B, lags,
                                             cfg.attraction_balls,
                                             0.1 * cfg.pipeline.net_eps);
  fs::create_directories(cfg.output_dir);
  write_text_file(cfg.output_dir + "/dissipativity.csv", profile_to_csv(profile));
  std::cout << "profile: " << profile.front().second << " -> " << profile.back().second
            << "\n";
  return kExitOk;
}

int run_finite_verify(int n, int k, int p, int seeds, const std::string& out_dir) {
  nlohmann::json all = nlohmann::json::array();
  int failures = 0;
  for (int seed = 0; seed < seeds; ++seed) {
    const FiniteSystem FS = make_finite_system(n, k, p, std::uint64_t(seed));
    const Certificate cert = verify_theory(FS);
    nlohmann::json jc;
    jc["seed"] = seed;
    for (const auto& claim : cert.claims)
      jc["claims"][claim.id] = {{"pass", claim.pass}, {"witness", claim.witness}};
    all.push_back(jc);
    if (!cert.all_pass()) {
      ++failures;
      std::cout << "FAIL seed " << seed << "\n";
    }
  }
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_text_file(out_dir + "/certificates.json", all.dump(2) + "\n");
  }
  std::cout << seeds << " systems verified, " << failures << " failures\n";
  return failures == 0 ? kExitOk : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uniform attractor laboratory"};
  app.require_subcommand(1);

  CommonOpts axioms_opts, attractor_opts, kernel_opts, compare_opts, dissip_opts;
  int sigma_index = 0;

  auto* cmd_axioms = app.add_subcommand("axioms", "process axiom residual sweep");
  add_common(cmd_axioms, axioms_opts);
  auto* cmd_attractor = app.add_subcommand("attractor", "uniform attractor pipeline");
  add_common(cmd_attractor, attractor_opts);
  auto* cmd_kernel = app.add_subcommand("kernel", "pullback kernel section");
  add_common(cmd_kernel, kernel_opts);
  cmd_kernel->add_option("--sigma-index", sigma_index, "index into the symbol sample");
  auto* cmd_compare = app.add_subcommand("compare", "single symbol vs full hull");
  add_common(cmd_compare, compare_opts);
  auto* cmd_dissip = app.add_subcommand("dissipativity", "covering diameter profile");
  add_common(cmd_dissip, dissip_opts);

  auto* cmd_finite = app.add_subcommand("finite-verify", "exact finite-system checklist");
  int fv_n = 6, fv_k = 2, fv_p = 3, fv_seeds = 100;
  std::string fv_out;
  cmd_finite->add_option("--n", fv_n, "state count");
  cmd_finite->add_option("--k", fv_k, "alphabet size");
  cmd_finite->add_option("--p", fv_p, "word period");
  cmd_finite->add_option("--seeds", fv_seeds, "number of random systems");
  cmd_finite->add_option("--out", fv_out, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_axioms->parsed()) return run_axioms(load_config(axioms_opts));
    if (cmd_attractor->parsed()) return run_attractor(load_config(attractor_opts));
    if (cmd_kernel->parsed()) return run_kernel(load_config(kernel_opts), sigma_index);
    if (cmd_compare->parsed()) return run_compare(load_config(compare_opts));
    if (cmd_dissip->parsed()) return run_dissipativity(load_config(dissip_opts));
    if (cmd_finite->parsed()) return run_finite_verify(fv_n, fv_k, fv_p, fv_seeds, fv_out);
  } catch (const DivergenceError& e) {
    std::cerr << "divergence at t = " << e.time;
    if (e.point_index >= 0) std::cerr << " (cloud point " << e.point_index << ")";
    std::cerr << "\n";
    return kExitDivergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "run failed: " << e.what() << "\n";
    return kExitTolerance;
  }
  return kExitConfig;
}
