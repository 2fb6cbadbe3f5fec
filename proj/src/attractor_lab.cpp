#include "attractors/attractor_lab.hpp"

#include <algorithm>
#include <cmath>

#include "attractors/parallel.hpp"

namespace attractors {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double uniform01(std::uint64_t& state) {
  return double(splitmix64(state) >> 11) * 0x1.0p-53;
}

double gaussian(std::uint64_t& state) {
  // Box-Muller; deterministic given the stream position
  double u1 = std::max(uniform01(state), 1e-300);
  double u2 = uniform01(state);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

// Evolve one ensemble member and record the state at tau + lag for each lag.
// Lags must be increasing and grid-commensurate; segments are chained, which
// reproduces the one-shot evolve bitwise.
std::vector<StateVector> record_at_lags(const ProcessSpec& P, const SymbolSpace& S,
                                        const SymbolPoint& sigma, double tau,
                                        const StateVector& x,
                                        const std::vector<double>& lags) {
  std::vector<StateVector> out;
  out.reserve(lags.size());
  StateVector state = x;
  double prev = 0.0;
  for (double lag : lags) {
    state = evolve(P, S, sigma, tau + prev, tau + lag, state);
    out.push_back(state);
    prev = lag;
  }
  return out;
}

struct Member {
  std::size_t sigma_idx, tau_idx, point_idx;
};

std::vector<Member> enumerate_members(const EnsembleSpec& ens, std::size_t npoints) {
  std::vector<Member> members;
  members.reserve(ens.sigmas.size() * ens.taus.size() * npoints);
  for (std::size_t si = 0; si < ens.sigmas.size(); ++si)
    for (std::size_t ti = 0; ti < ens.taus.size(); ++ti)
      for (std::size_t pi = 0; pi < npoints; ++pi) members.push_back({si, ti, pi});
  return members;
}

// recorded[member][lag] for all ensemble members, slot-ordered.
std::vector<std::vector<StateVector>> record_ensemble(const ProcessSpec& P,
                                                      const SymbolSpace& S,
                                                      const EnsembleSpec& ens,
                                                      const PointCloud& C,
                                                      const std::vector<double>& lags) {
  C.validate();
  if (ens.sigmas.empty() || ens.taus.empty())
    throw std::invalid_argument("ensemble needs at least one symbol and one tau");
  const auto members = enumerate_members(ens, C.size());
  std::vector<std::vector<StateVector>> recorded(members.size());
  parallel_for(members.size(), ens.threads, [&](std::size_t i) {
    const Member& mb = members[i];
    recorded[i] = record_at_lags(P, S, ens.sigmas[mb.sigma_idx], ens.taus[mb.tau_idx],
                                 C.points[mb.point_idx], lags);
  });
  return recorded;
}

std::vector<double> lag_range(double h, double window, double step) {
  if (!(window >= 0.0) || !(step > 0.0)) throw std::invalid_argument("bad lag window");
  std::vector<double> lags;
  const long nsteps = static_cast<long>(std::floor(window / step + 1e-9));
  for (long i = 0; i <= nsteps; ++i) lags.push_back(h + double(i) * step);
  return lags;
}

double quasi_period(const SymbolSpace& S) {
  if (const auto* torus = std::get_if<TorusHull>(&S.hull)) {
    double wmin = torus->frequencies.empty() ? 1.0 : torus->frequencies.front();
    for (double w : torus->frequencies) wmin = std::min(wmin, w);
    return kTwoPi / wmin;
  }
  if (const auto* circle = std::get_if<CircleHull>(&S.hull)) return circle->period;
  return double(std::get<FiniteShift>(S.hull).word.size());
}

}  // namespace

InsidePredicate inside_level(const ProcessSpec& P, double level) {
  if (const auto* wave = std::get_if<WaveModel>(&P.model)) {
    WaveModel W = *wave;
    return [W, level](const StateVector& x) { return wave_energy(W, x).total <= level; };
  }
  return [level](const StateVector& x) {
    double s = 0.0;
    for (double c : x) s += c * c;
    return std::sqrt(s) <= level;
  };
}

PointCloud sample_state_cloud(const ProcessSpec& P, double level, int count,
                              std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("cloud needs at least one point");
  std::uint64_t rng = seed ^ 0xa0761d6478bd642full;
  PointCloud cloud;
  const int dim = model_dim(P);

  if (const auto* wave = std::get_if<WaveModel>(&P.model)) {
    // random energy-normalized direction, scaled so the full (nonconvex)
    // energy hits a deterministic target level; E is monotone along rays
    for (int i = 0; i < count; ++i) {
      StateVector dir(dim);
      for (double& c : dir) c = gaussian(rng);
      double target = level * double(i + 1) / double(count);
      double lo = 0.0, hi = 1.0;
      while (wave_energy(*wave, [&] {
               StateVector y(dim);
               for (int j = 0; j < dim; ++j) y[j] = hi * dir[j];
               return y;
             }()).total < target)
        hi *= 2.0;
      for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        StateVector y(dim);
        for (int j = 0; j < dim; ++j) y[j] = mid * dir[j];
        (wave_energy(*wave, y).total < target ? lo : hi) = mid;
      }
      StateVector y(dim);
      for (int j = 0; j < dim; ++j) y[j] = hi * dir[j];
      cloud.points.push_back(y);
    }
  } else {
    // points on spheres of deterministic radii filling the ball
    for (int i = 0; i < count; ++i) {
      StateVector dir(dim);
      double norm = 0.0;
      for (double& c : dir) {
        c = gaussian(rng);
        norm += c * c;
      }
      norm = std::sqrt(std::max(norm, 1e-300));
      double radius = level * double(i + 1) / double(count);
      for (double& c : dir) c *= radius / norm;
      cloud.points.push_back(dir);
    }
  }
  cloud.label = "sampled_level_set";
  return cloud;
}

std::vector<double> tau_grid(const ProcessSpec& P, const SymbolSpace& S, int count) {
  if (count < 1) throw std::invalid_argument("need at least one tau sample");
  const double Q = quasi_period(S);
  const double dt = model_dt(P);
  std::vector<double> taus;
  for (int i = 0; i < count; ++i) {
    double raw = Q * double(i) / double(count);
    taus.push_back(double(std::lround(raw / dt)) * dt);
  }
  return taus;
}

std::optional<double> entering_time(const ProcessSpec& P, const SymbolSpace& S,
                                    const EnsembleSpec& ens, const PointCloud& C,
                                    const InsidePredicate& inside, double lag_step,
                                    double t_max) {
  if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be positive");
  const auto lags = lag_range(0.0, t_max, lag_step);
  const auto recorded = record_ensemble(P, S, ens, C, lags);

  // per trajectory: lag index after the last exit
  std::size_t worst = 0;
  for (const auto& traj : recorded) {
    std::size_t first_settled = lags.size();  // index from which it stays inside
    for (std::size_t li = lags.size(); li-- > 0;) {
      if (!inside(traj[li])) break;
      first_settled = li;
    }
    if (first_settled == lags.size()) return std::nullopt;  // outside at t_max
    worst = std::max(worst, first_settled);
  }
  return lags[worst];
}

AttractorApprox omega_limit(const ProcessSpec& P, const SymbolSpace& S,
                            const EnsembleSpec& ens, const PointCloud& C, double h,
                            double window, double lag_step, double net_eps) {
  const auto lags = lag_range(h, window, lag_step);
  const auto recorded = record_ensemble(P, S, ens, C, lags);
  PointCloud pooled;
  pooled.label = "omega_limit";
  for (const auto& traj : recorded)
    for (const auto& state : traj) pooled.points.push_back(state);
  AttractorApprox out;
  out.cloud = eps_net(pooled, net_eps, model_metric(P));
  out.meta.sigma_samples = static_cast<int>(ens.sigmas.size());
  out.meta.tau_samples = static_cast<int>(ens.taus.size());
  out.meta.lag = h;
  out.meta.window = window;
  out.meta.net_eps = net_eps;
  return out;
}

AttractionCurve attraction_curve(const ProcessSpec& P, const SymbolSpace& S,
                                 const EnsembleSpec& ens, const PointCloud& C,
                                 const PointCloud& K, const std::vector<double>& lags) {
  for (std::size_t i = 1; i < lags.size(); ++i)
    if (!(lags[i] > lags[i - 1])) throw std::invalid_argument("lags must increase");
  const auto recorded = record_ensemble(P, S, ens, C, lags);
  const MetricSpec metric = model_metric(P);

  AttractionCurve curve;
  curve.lags = lags;
  curve.values.assign(lags.size(), 0.0);
  const std::size_t per_pair = C.size();
  // group trajectories back into their (sigma,tau) clouds
  for (std::size_t g = 0; g < recorded.size(); g += per_pair) {
    for (std::size_t li = 0; li < lags.size(); ++li) {
      PointCloud evolved;
      for (std::size_t p = 0; p < per_pair; ++p)
        evolved.points.push_back(recorded[g + p][li]);
      curve.values[li] = std::max(curve.values[li], semidist(evolved, K, metric));
    }
  }
  return curve;
}

std::vector<std::pair<double, double>> dissipativity_profile(
    const ProcessSpec& P, const SymbolSpace& S, const EnsembleSpec& ens,
    const PointCloud& B, const std::vector<double>& lags, int m_balls, double tol) {
  const auto recorded = record_ensemble(P, S, ens, B, lags);
  const MetricSpec metric = model_metric(P);
  std::vector<std::pair<double, double>> profile;
  for (std::size_t li = 0; li < lags.size(); ++li) {
    PointCloud pooled;
    for (const auto& traj : recorded) pooled.points.push_back(traj[li]);
    profile.emplace_back(lags[li], covering_diameter(pooled, m_balls, metric, tol));
  }
  return profile;
}

KernelSectionApprox pullback_kernel_section(const ProcessSpec& P, const SymbolSpace& S,
                                            const SymbolPoint& sigma, const PointCloud& B,
                                            double t0, double T, double gap_threshold,
                                            double net_eps, double T_max, int threads) {
  if (!(T > 0.0)) throw std::invalid_argument("pullback horizon must be positive");
  const MetricSpec metric = model_metric(P);
  auto run = [&](double horizon) {
    return eps_net(evolve_cloud(P, S, sigma, t0 - horizon, t0, B, threads), net_eps, metric);
  };

  KernelSectionApprox out;
  out.sigma = sigma;
  out.t0 = t0;
  PointCloud half = run(0.5 * T);
  for (;;) {
    PointCloud current = run(T);
    out.gap = hausdorff(current, half, metric);
    out.cloud = current;
    out.horizon = T;
    if (out.gap < gap_threshold) {
      out.converged = true;
      return out;
    }
    if (2.0 * T > T_max) {
      out.converged = false;  // budget exhausted, flagged, never silent
      return out;
    }
    half = std::move(current);
    T *= 2.0;
  }
}

AttractorApprox kernel_union(const ProcessSpec& P, const SymbolSpace& S,
                             const std::vector<SymbolPoint>& sigmas, const PointCloud& B,
                             double T, double gap_threshold, double net_eps, double T_max,
                             int threads) {
  if (sigmas.empty()) throw std::invalid_argument("kernel union needs symbols");
  PointCloud pooled;
  pooled.label = "kernel_union";
  bool converged = true;
  for (const auto& sigma : sigmas) {
    KernelSectionApprox section = pullback_kernel_section(P, S, sigma, B, 0.0, T,
                                                          gap_threshold, net_eps, T_max,
                                                          threads);
    converged = converged && section.converged;
    for (auto& p : section.cloud.points) pooled.points.push_back(std::move(p));
  }
  AttractorApprox out;
  out.cloud = eps_net(pooled, net_eps, model_metric(P));
  out.meta.sigma_samples = static_cast<int>(sigmas.size());
  out.meta.tau_samples = 1;
  out.meta.lag = T;
  out.meta.net_eps = net_eps;
  out.converged = converged;
  return out;
}

AttractorApprox uniform_attractor(const ProcessSpec& P, const SymbolSpace& S,
                                  const AttractorPipelineConfig& cfg) {
  EnsembleSpec ens;
  ens.sigmas = sample_symbols(S, cfg.sigma_samples);
  ens.taus = tau_grid(P, S, cfg.tau_samples);
  ens.threads = cfg.threads;

  const PointCloud C = sample_state_cloud(P, cfg.cloud_level, cfg.cloud_points, cfg.seed);
  const auto t_e = entering_time(P, S, ens, C, inside_level(P, cfg.target_level),
                                 cfg.lag_step, cfg.t_max);
  if (!t_e)
    throw std::runtime_error(
        "absorbing level was not entered within t_max; refusing to report an attractor");

  const PointCloud B =
      sample_state_cloud(P, cfg.target_level, cfg.cloud_points, cfg.seed + 1);
  const double h = std::max(cfg.h, *t_e);
  AttractorApprox out = omega_limit(P, S, ens, B, h, cfg.window, cfg.lag_step, cfg.net_eps);
  out.meta.model_hash = cfg.model_hash;
  return out;
}

HullComparison compare_single_vs_hull(const ProcessSpec& P, const SymbolSpace& S,
                                      const SymbolPoint& sigma0,
                                      const AttractorPipelineConfig& cfg) {
  EnsembleSpec hull_ens;
  hull_ens.sigmas = sample_symbols(S, cfg.sigma_samples);
  hull_ens.taus = tau_grid(P, S, cfg.tau_samples);
  hull_ens.threads = cfg.threads;

  EnsembleSpec single_ens = hull_ens;
  single_ens.sigmas = {sigma0};

  const PointCloud B =
      sample_state_cloud(P, cfg.target_level, cfg.cloud_points, cfg.seed + 1);
  const AttractorApprox hull =
      omega_limit(P, S, hull_ens, B, cfg.h, cfg.window, cfg.lag_step, cfg.net_eps);
  const AttractorApprox single =
      omega_limit(P, S, single_ens, B, cfg.h, cfg.window, cfg.lag_step, cfg.net_eps);

  const MetricSpec metric = model_metric(P);
  HullComparison cmp;
  cmp.single_vs_hull = semidist(single.cloud, hull.cloud, metric);
  cmp.hull_vs_single = semidist(hull.cloud, single.cloud, metric);
  return cmp;
}

}  // namespace attractors
