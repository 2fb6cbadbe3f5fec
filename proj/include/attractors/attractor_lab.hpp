#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "attractors/process.hpp"

namespace attractors {

// Point cloud tagged with the sampling/tolerance budget that produced it.
struct AttractorMeta {
  int sigma_samples = 0;
  int tau_samples = 0;
  double lag = 0.0;  // pooling start h
  double window = 0.0;
  double net_eps = 0.0;
  std::string model_hash;
};

struct AttractorApprox {
  PointCloud cloud;
  AttractorMeta meta;
  bool converged = true;
};

struct KernelSectionApprox {
  PointCloud cloud;
  SymbolPoint sigma;
  double t0 = 0.0;
  double horizon = 0.0;  // pullback horizon T actually used
  double gap = 0.0;      // hausdorff between the T and T/2 runs
  bool converged = false;
};

struct AttractionCurve {
  std::vector<double> lags;  // strictly increasing
  std::vector<double> values;
};

// The (sigma, tau) sampling of the ensemble plus the thread budget.
struct EnsembleSpec {
  std::vector<SymbolPoint> sigmas;
  std::vector<double> taus;
  int threads = 1;
};

using InsidePredicate = std::function<bool(const StateVector&)>;

// Membership in the model's natural bounded sets: energy sublevel {E <= level}
// for the wave model, norm ball {|x| <= level} for the linear model.
InsidePredicate inside_level(const ProcessSpec& P, double level);

// Deterministic pseudorandom sampling of the corresponding bounded set.
PointCloud sample_state_cloud(const ProcessSpec& P, double level, int count,
                              std::uint64_t seed);

// tau grid over one forcing quasi-period (torus: 2pi/min omega, circle: p),
// snapped to the integrator grid.  Wider tau ranges are redundant up to
// symbol translation.
std::vector<double> tau_grid(const ProcessSpec& P, const SymbolSpace& S, int count);

// Smallest sampled lag after which every sampled trajectory stays inside the
// target set through t_max; nullopt if some trajectory is still outside.
std::optional<double> entering_time(const ProcessSpec& P, const SymbolSpace& S,
                                    const EnsembleSpec& ens, const PointCloud& C,
                                    const InsidePredicate& inside, double lag_step,
                                    double t_max);

// Finite stand-in for the uniform omega-limit: evolve every (x, sigma, tau) to
// all grid lags in [h, h+window], pool the endpoints, compress with eps_net.
AttractorApprox omega_limit(const ProcessSpec& P, const SymbolSpace& S,
                            const EnsembleSpec& ens, const PointCloud& C, double h,
                            double window, double lag_step, double net_eps);

// values[i] = max over sampled (sigma,tau) of semidist(U_sigma(tau+lag_i,tau)C, K).
AttractionCurve attraction_curve(const ProcessSpec& P, const SymbolSpace& S,
                                 const EnsembleSpec& ens, const PointCloud& C,
                                 const PointCloud& K, const std::vector<double>& lags);

// Covering diagnostic of the pooled evolved cloud per lag.
std::vector<std::pair<double, double>> dissipativity_profile(
    const ProcessSpec& P, const SymbolSpace& S, const EnsembleSpec& ens,
    const PointCloud& B, const std::vector<double>& lags, int m_balls, double tol);

// Pullback approximation of the kernel section at time t0: evolve B from
// t0 - T to t0, compress, and double T until the hausdorff gap against the
// T/2 run drops below the threshold (or the budget T_max is exhausted, in
// which case the result is flagged unconverged).
KernelSectionApprox pullback_kernel_section(const ProcessSpec& P, const SymbolSpace& S,
                                            const SymbolPoint& sigma, const PointCloud& B,
                                            double t0, double T, double gap_threshold,
                                            double net_eps, double T_max, int threads = 1);

// Union of pullback sections over the sampled symbols, net-compressed.
AttractorApprox kernel_union(const ProcessSpec& P, const SymbolSpace& S,
                             const std::vector<SymbolPoint>& sigmas, const PointCloud& B,
                             double T, double gap_threshold, double net_eps, double T_max,
                             int threads = 1);

struct AttractorPipelineConfig {
  int sigma_samples = 8;
  int tau_samples = 4;
  int cloud_points = 16;
  double cloud_level = 4.0;   // initial bounded set: E (wave) or radius (linear)
  double target_level = 2.0;  // absorbing set level, frozen from a pilot run
  std::uint64_t seed = 1;
  double h = 10.0;
  double window = 5.0;
  double lag_step = 0.5;
  double t_max = 30.0;
  double net_eps = 0.02;
  double gap_threshold = 0.01;
  double attraction_tol = 0.05;
  int threads = 1;
  std::string model_hash;
};

// The Thm-uac pipeline: check the absorbing level is entered from the initial
// cloud, then take the omega-limit of the absorbing set.  Throws if the
// target is never entered (an empty attractor is a failure, never a result).
AttractorApprox uniform_attractor(const ProcessSpec& P, const SymbolSpace& S,
                                  const AttractorPipelineConfig& cfg);

struct HullComparison {
  double single_vs_hull = 0.0;  // semidist(A_sigma0, A_Sigma)
  double hull_vs_single = 0.0;  // semidist(A_Sigma, A_sigma0)
};

// Single-symbol attractor (tau sweep of one fixed symbol, i.e. its orbit)
// against the full-hull attractor.
HullComparison compare_single_vs_hull(const ProcessSpec& P, const SymbolSpace& S,
                                      const SymbolPoint& sigma0,
                                      const AttractorPipelineConfig& cfg);

}  // namespace attractors
