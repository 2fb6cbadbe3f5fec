#include <doctest.h>

#include <cmath>
#include <numbers>

#include "attractors/process.hpp"

using namespace attractors;

namespace {

SymbolSpace zero_forcing() {
  TorusHull hull;
  hull.frequencies = {1.0};
  hull.amplitudes = {0.0};
  hull.modes = {1};
  return SymbolSpace{hull};
}

SymbolSpace cosine_forcing() {
  TorusHull hull;
  hull.frequencies = {1.0};
  hull.amplitudes = {1.0};
  hull.modes = {1};
  return SymbolSpace{hull};
}

ProcessSpec linear_process(double dt) {
  LinearModel m;
  m.dt = dt;
  return ProcessSpec{m};
}

ProcessSpec wave_process(double dt = 1e-3) {
  WaveModel W;
  W.dt = dt;
  return ProcessSpec{W};
}

SymbolSpace wave_forcing(double amp = 0.5) {
  TorusHull hull;
  hull.frequencies = {1.0, std::numbers::sqrt2};
  hull.amplitudes = {amp, 0.5 * amp};
  hull.modes = {1, 2};
  return SymbolSpace{hull};
}

}  // namespace

TEST_CASE("snap_to_grid accepts grid times and rejects off-grid times") {
  CHECK(snap_to_grid(0.0, 0.01) == 0);
  CHECK(snap_to_grid(0.25, 0.01) == 25);
  CHECK(snap_to_grid(-1.0, 0.01) == -100);
  CHECK(snap_to_grid(100 * 0.01, 0.01) == 100);  // accumulated representation
  CHECK_THROWS_AS(snap_to_grid(0.005, 0.01), std::invalid_argument);
}

TEST_CASE("evolve with t = tau is the bitwise identity") {
  ProcessSpec P = wave_process();
  SymbolSpace S = wave_forcing();
  StateVector x(model_dim(P), 0.125);
  StateVector y = evolve(P, S, base_symbol(S), 2.0, 2.0, x);
  CHECK(y == x);
}

TEST_CASE("evolve composes bitwise across adjacent intervals") {
  SUBCASE("linear") {
    ProcessSpec P = linear_process(0.01);
    SymbolSpace S = cosine_forcing();
    StateVector x{1.5};
    StateVector one_shot = evolve(P, S, base_symbol(S), 0.0, 3.0, x);
    StateVector mid = evolve(P, S, base_symbol(S), 0.0, 1.37, x);
    StateVector two_leg = evolve(P, S, base_symbol(S), 1.37, 3.0, mid);
    CHECK(one_shot == two_leg);
  }
  SUBCASE("wave") {
    ProcessSpec P = wave_process();
    SymbolSpace S = wave_forcing();
    StateVector x(model_dim(P), 0.0);
    x[0] = 0.4;
    x[16] = -0.2;
    StateVector one_shot = evolve(P, S, base_symbol(S), 0.0, 0.5, x);
    StateVector mid = evolve(P, S, base_symbol(S), 0.0, 0.211, x);
    StateVector two_leg = evolve(P, S, base_symbol(S), 0.211, 0.5, mid);
    CHECK(one_shot == two_leg);
  }
}

TEST_CASE("unforced linear decay matches exp(-lambda t) exactly") {
  const double dt = std::numbers::ln2 / 64.0;
  ProcessSpec P = linear_process(dt);
  SymbolSpace S = zero_forcing();
  StateVector x{2.0};
  StateVector y = evolve(P, S, base_symbol(S), 0.0, std::numbers::ln2, x);
  CHECK(y[0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("forced linear solution converges to (cos t + sin t)/2") {
  ProcessSpec P = linear_process(0.01);
  SymbolSpace S = cosine_forcing();
  const double t = 40.0;
  StateVector y = evolve(P, S, base_symbol(S), 0.0, t, StateVector{3.0});
  // the transient 3 e^{-40} is far below the target's double precision
  CHECK(y[0] == doctest::Approx((std::cos(t) + std::sin(t)) / 2.0).epsilon(1e-12));
}

TEST_CASE("cocycle and translation residuals vanish on the grid") {
  SUBCASE("linear") {
    ProcessSpec P = linear_process(0.01);
    SymbolSpace S = cosine_forcing();
    StateVector x{0.7};
    CHECK(cocycle_residual(P, S, base_symbol(S), 0.0, 1.25, 3.0, x) <= 1e-12);
    CHECK(translation_residual(P, S, base_symbol(S), 2.0, 0.0, 3.0, x) <= 1e-12);
    CHECK(translation_residual(P, S, TorusPhase{{0.9}}, 0.57, -1.0, 2.0, x) <= 1e-12);
  }
  SUBCASE("wave") {
    ProcessSpec P = wave_process();
    SymbolSpace S = wave_forcing();
    StateVector x(model_dim(P), 0.0);
    x[1] = 0.3;
    x[17] = 0.1;
    CHECK(cocycle_residual(P, S, base_symbol(S), 0.0, 0.4, 1.0, x) <= 1e-6);
    CHECK(translation_residual(P, S, base_symbol(S), 0.5, 0.0, 1.0, x) <= 1e-6);
  }
}

TEST_CASE("wave integrator self-convergence is fourth order") {
  SymbolSpace S = wave_forcing();
  StateVector x(32, 0.0);
  x[0] = 0.5;
  x[16] = 0.3;
  auto run = [&](double dt) {
    ProcessSpec P = wave_process(dt);
    return evolve(P, S, base_symbol(S), 0.0, 2.0, x);
  };
  MetricSpec metric = model_metric(wave_process());
  const double e1 = metric.dist(run(8e-3), run(4e-3));
  const double e2 = metric.dist(run(4e-3), run(2e-3));
  CHECK(e1 / e2 >= 12.0);  // 2^4 = 16 up to higher-order contamination
}

TEST_CASE("evolve_cloud keeps slot order and matches pointwise evolve") {
  ProcessSpec P = wave_process();
  SymbolSpace S = wave_forcing();
  PointCloud B;
  for (int i = 0; i < 6; ++i) {
    StateVector x(model_dim(P), 0.0);
    x[i] = 0.2 + 0.05 * i;
    B.points.push_back(x);
  }
  PointCloud serial = evolve_cloud(P, S, base_symbol(S), 0.0, 0.3, B, 1);
  PointCloud parallel = evolve_cloud(P, S, base_symbol(S), 0.0, 0.3, B, 4);
  REQUIRE(serial.size() == B.size());
  CHECK(serial.points == parallel.points);
  for (std::size_t i = 0; i < B.size(); ++i)
    CHECK(serial.points[i] == evolve(P, S, base_symbol(S), 0.0, 0.3, B.points[i]));
}

TEST_CASE("skew step pairs evolve with symbol translation") {
  ProcessSpec P = linear_process(0.01);
  SymbolSpace S = cosine_forcing();
  SkewState z{StateVector{1.0}, TorusPhase{{0.6}}};
  SkewState w = skew_step(P, S, z, 1.5);
  CHECK(w.x == evolve(P, S, z.sigma, 0.0, 1.5, z.x));
  CHECK(symbol_metric(S, w.sigma, translate(S, z.sigma, 1.5)) == doctest::Approx(0.0));
}

TEST_CASE("divergence guard raises instead of returning garbage") {
  ProcessSpec P = linear_process(0.01);
  P.guard = 1.0;
  SymbolSpace S = zero_forcing();
  CHECK_THROWS_AS(evolve(P, S, base_symbol(S), 0.0, 1.0, StateVector{50.0}),
                  DivergenceError);
}
