#include <doctest.h>

#include <cmath>
#include <numbers>

#include "attractors/attractor_lab.hpp"

using namespace attractors;

namespace {

ProcessSpec linear_process() {
  LinearModel m;
  m.dt = 0.01;
  return ProcessSpec{m};
}

SymbolSpace torus_forcing(double amp) {
  TorusHull hull;
  hull.frequencies = {1.0};
  hull.amplitudes = {amp};
  hull.modes = {1};
  return SymbolSpace{hull};
}

AttractorPipelineConfig small_pipeline() {
  AttractorPipelineConfig cfg;
  cfg.sigma_samples = 6;
  cfg.tau_samples = 3;
  cfg.cloud_points = 8;
  cfg.cloud_level = 2.0;
  cfg.target_level = 1.0;
  cfg.h = 15.0;
  cfg.window = 6.5;  // one forcing period of lag phases
  cfg.lag_step = 0.05;
  cfg.t_max = 25.0;
  cfg.net_eps = 0.01;
  return cfg;
}

}  // namespace

TEST_CASE("sampled clouds respect the level sets") {
  ProcessSpec P = linear_process();
  PointCloud C = sample_state_cloud(P, 2.0, 12, 9);
  REQUIRE(C.size() == 12);
  InsidePredicate inside = inside_level(P, 2.0 + 1e-12);
  for (const auto& x : C.points) CHECK(inside(x));

  WaveModel W;
  ProcessSpec PW{W};
  PointCloud CW = sample_state_cloud(PW, 4.0, 6, 9);
  InsidePredicate insideW = inside_level(PW, 4.0 + 1e-9);
  for (const auto& x : CW.points) CHECK(insideW(x));
}

TEST_CASE("tau grid lies on the integrator grid and spans one period") {
  ProcessSpec P = linear_process();
  SymbolSpace S = torus_forcing(1.0);
  auto taus = tau_grid(P, S, 4);
  REQUIRE(taus.size() == 4);
  for (double tau : taus) {
    const double ratio = tau / 0.01;
    CHECK(std::abs(ratio - std::round(ratio)) < 1e-9);
    CHECK(tau <= 2.0 * std::numbers::pi + 1e-9);
  }
}

TEST_CASE("unforced linear attractor is the origin") {
  ProcessSpec P = linear_process();
  SymbolSpace S = torus_forcing(0.0);
  AttractorApprox A = uniform_attractor(P, S, small_pipeline());
  CHECK(A.converged);
  REQUIRE(A.cloud.size() >= 1);
  for (const auto& x : A.cloud.points) CHECK(std::abs(x[0]) < 1e-5);
}

TEST_CASE("entering time detects absorption into the unit ball") {
  ProcessSpec P = linear_process();
  SymbolSpace S = torus_forcing(0.0);
  EnsembleSpec ens;
  ens.sigmas = sample_symbols(S, 3);
  ens.taus = tau_grid(P, S, 2);
  PointCloud C = sample_state_cloud(P, 4.0, 6, 1);
  auto t_e = entering_time(P, S, ens, C, inside_level(P, 1.0), 0.5, 10.0);
  REQUIRE(t_e.has_value());
  // |x| <= 4 decays to 1 at t = ln 4, next sampled lag is 1.5
  CHECK(*t_e == doctest::Approx(1.5));
  auto never = entering_time(P, S, ens, C, inside_level(P, 1e-9), 0.5, 3.0);
  CHECK_FALSE(never.has_value());
}

TEST_CASE("pullback kernel section matches the convolution oracle") {
  ProcessSpec P = linear_process();
  SymbolSpace S = torus_forcing(1.0);
  SymbolPoint sigma = base_symbol(S);
  PointCloud B = sample_state_cloud(P, 1.0, 5, 2);
  KernelSectionApprox K =
      pullback_kernel_section(P, S, sigma, B, 0.0, 5.0, 1e-8, 1e-9, 80.0, 2);
  CHECK(K.converged);
  const LinearModel& model = std::get<LinearModel>(P.model);
  StateVector oracle = linear_kernel_oracle(model, S, sigma, 0.0);
  for (const auto& x : K.cloud.points)
    CHECK(std::abs(x[0] - oracle[0]) < 1e-6);
}

TEST_CASE("pullback flags an exhausted horizon budget") {
  ProcessSpec P = linear_process();
  SymbolSpace S = torus_forcing(1.0);
  PointCloud B = sample_state_cloud(P, 1.0, 4, 2);
  KernelSectionApprox K =
      pullback_kernel_section(P, S, base_symbol(S), B, 0.0, 0.5, 1e-15, 1e-12, 1.0, 1);
  CHECK_FALSE(K.converged);
  CHECK(K.gap > 1e-15);
}

TEST_CASE("attraction curve decays towards the attractor") {
  ProcessSpec P = linear_process();
  SymbolSpace S = torus_forcing(1.0);
  AttractorPipelineConfig cfg = small_pipeline();
  AttractorApprox A = uniform_attractor(P, S, cfg);
  EnsembleSpec ens;
  ens.sigmas = sample_symbols(S, cfg.sigma_samples);
  ens.taus = tau_grid(P, S, cfg.tau_samples);
  PointCloud C = sample_state_cloud(P, cfg.cloud_level, cfg.cloud_points, cfg.seed);
  AttractionCurve curve = attraction_curve(P, S, ens, C, A.cloud, {1.0, 5.0, 12.0});
  REQUIRE(curve.values.size() == 3);
  CHECK(curve.values[1] <= curve.values[0] + 1e-9);
  CHECK(curve.values[2] <= curve.values[1] + 1e-9);
  CHECK(curve.values[2] < 0.05);
}

TEST_CASE("kernel union approximates the uniform attractor (linear forced)") {
  ProcessSpec P = linear_process();
  SymbolSpace S = torus_forcing(1.0);
  AttractorPipelineConfig cfg = small_pipeline();
  AttractorApprox A = uniform_attractor(P, S, cfg);
  auto sigmas = sample_symbols(S, 64);  // dense enough in phase for a 0.05 match
  PointCloud B = sample_state_cloud(P, cfg.target_level, 4, 3);
  AttractorApprox KU = kernel_union(P, S, sigmas, B, 10.0, 1e-6, 0.005, 160.0, 2);
  CHECK(KU.converged);
  MetricSpec metric = model_metric(P);
  CHECK(hausdorff(KU.cloud, A.cloud, metric) < 0.05);
}

TEST_CASE("uniform attractor throws when the target level is never entered") {
  ProcessSpec P = linear_process();
  SymbolSpace S = torus_forcing(1.0);
  AttractorPipelineConfig cfg = small_pipeline();
  cfg.target_level = 1e-8;  // unreachable under unit forcing
  cfg.t_max = 5.0;
  CHECK_THROWS_AS(uniform_attractor(P, S, cfg), std::runtime_error);
}

TEST_CASE("single symbol vs hull comparison is tight for the cosine hull") {
  // The hull of cos t is its own orbit closure, so both semidistances are
  // small at matching resolution.
  ProcessSpec P = linear_process();
  SymbolSpace S = torus_forcing(1.0);
  AttractorPipelineConfig cfg = small_pipeline();
  HullComparison cmp = compare_single_vs_hull(P, S, base_symbol(S), cfg);
  CHECK(cmp.single_vs_hull < 0.05);
  CHECK(cmp.hull_vs_single < 0.05);
}
