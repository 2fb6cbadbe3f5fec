#include "attractors/process.hpp"

#include <cmath>

#include "attractors/parallel.hpp"

namespace attractors {

namespace {

// 8-point Gauss-Legendre nodes/weights on [0,1] (variation-of-constants
// quadrature for the linear model).
constexpr double kGaussNode[8] = {
    0.019855071751231884, 0.10166676129318664, 0.2372337950418355, 0.40828267875217510,
    0.59171732124782490,  0.7627662049581645,  0.89833323870681336, 0.980144928248768116};
constexpr double kGaussWeight[8] = {
    0.050614268145188130, 0.111190517226687235, 0.156853322938943644, 0.181341891689180991,
    0.181341891689180991, 0.156853322938943644, 0.111190517226687235, 0.050614268145188130};

double forcing_component(const ForcingValue& f, std::size_t i) {
  return i < f.coefficients.size() ? f.coefficients[i] : 0.0;
}

void check_guard(const StateVector& x, double guard, double when) {
  for (double c : x)
    if (!std::isfinite(c) || std::abs(c) > guard) throw DivergenceError(when);
}

// Exact exponential step over [n dt, (n+1) dt]:
// u <- e^{-lambda dt} u + sum_q w_q dt e^{-lambda dt (1 - node_q)} f(t_q).
void linear_step(const LinearModel& model, const SymbolSpace& S, const SymbolPoint& sigma,
                 long n, StateVector& x) {
  const double dt = model.dt;
  const double decay = std::exp(-model.lambda * dt);
  for (double& c : x) c *= decay;
  const double t0 = double(n) * dt;
  for (int q = 0; q < 8; ++q) {
    const double w = kGaussWeight[q] * dt * std::exp(-model.lambda * dt * (1.0 - kGaussNode[q]));
    const ForcingValue f = eval_forcing(S, sigma, t0 + kGaussNode[q] * dt);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += w * forcing_component(f, i);
  }
}

// Classical RK4 step over [n dt, (n+1) dt] for the wave model.
void wave_step(const WaveModel& model, const SymbolSpace& S, const SymbolPoint& sigma,
               long n, StateVector& x) {
  const double dt = model.dt;
  const double t0 = double(n) * dt;
  const ForcingValue f0 = eval_forcing(S, sigma, t0);
  const ForcingValue fh = eval_forcing(S, sigma, t0 + 0.5 * dt);
  const ForcingValue f1 = eval_forcing(S, sigma, t0 + dt);

  const std::size_t d = x.size();
  StateVector k1 = wave_rhs(model, x, f0);
  StateVector y(d);
  for (std::size_t i = 0; i < d; ++i) y[i] = x[i] + 0.5 * dt * k1[i];
  StateVector k2 = wave_rhs(model, y, fh);
  for (std::size_t i = 0; i < d; ++i) y[i] = x[i] + 0.5 * dt * k2[i];
  StateVector k3 = wave_rhs(model, y, fh);
  for (std::size_t i = 0; i < d; ++i) y[i] = x[i] + dt * k3[i];
  StateVector k4 = wave_rhs(model, y, f1);
  for (std::size_t i = 0; i < d; ++i)
    x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

}  // namespace

double model_dt(const ProcessSpec& P) {
  return std::visit([](const auto& m) { return m.dt; }, P.model);
}

int model_dim(const ProcessSpec& P) {
  if (const auto* lin = std::get_if<LinearModel>(&P.model)) return lin->dim;
  return std::get<WaveModel>(P.model).state_dim();
}

MetricSpec model_metric(const ProcessSpec& P) {
  if (const auto* wave = std::get_if<WaveModel>(&P.model)) return wave_energy_metric(*wave);
  return MetricSpec::euclidean();
}

long snap_to_grid(double t, double dt) {
  const double k = t / dt;
  const long n = std::lround(k);
  if (std::abs(t - double(n) * dt) > 1e-9 * std::max(1.0, std::abs(t)))
    throw std::invalid_argument("time is not on the integrator grid");
  return n;
}

StateVector evolve(const ProcessSpec& P, const SymbolSpace& S, const SymbolPoint& sigma,
                   double tau, double t, const StateVector& x) {
  if (t < tau) throw std::invalid_argument("evolve requires t >= tau");
  if (static_cast<int>(x.size()) != model_dim(P))
    throw std::invalid_argument("state dimension does not match the model");
  if (!all_finite(x)) throw std::invalid_argument("non-finite initial state");
  if (S.is_discrete())
    throw std::invalid_argument("continuous-time evolve needs a continuous symbol space");

  const double dt = model_dt(P);
  const long n0 = snap_to_grid(tau, dt);
  const long n1 = snap_to_grid(t, dt);
  if (n1 == n0) return x;  // identity axiom, bitwise

  StateVector state = x;
  for (long n = n0; n < n1; ++n) {
    if (const auto* lin = std::get_if<LinearModel>(&P.model))
      linear_step(*lin, S, sigma, n, state);
    else
      wave_step(std::get<WaveModel>(P.model), S, sigma, n, state);
    check_guard(state, P.guard, double(n + 1) * dt);
  }
  return state;
}

PointCloud evolve_cloud(const ProcessSpec& P, const SymbolSpace& S,
                        const SymbolPoint& sigma, double tau, double t,
                        const PointCloud& B, int threads) {
  B.validate();
  PointCloud out;
  out.label = B.label;
  out.points.resize(B.size());
  parallel_for(B.size(), threads, [&](std::size_t i) {
    try {
      out.points[i] = evolve(P, S, sigma, tau, t, B.points[i]);
    } catch (const DivergenceError& e) {
      throw DivergenceError(e.time, static_cast<long>(i));
    }
  });
  return out;
}

SkewState skew_step(const ProcessSpec& P, const SymbolSpace& S, const SkewState& z,
                    double h) {
  if (h < 0.0) throw std::invalid_argument("skew_step requires h >= 0");
  return SkewState{evolve(P, S, z.sigma, 0.0, h, z.x), translate(S, z.sigma, h)};
}

double cocycle_residual(const ProcessSpec& P, const SymbolSpace& S,
                        const SymbolPoint& sigma, double tau, double s, double t,
                        const StateVector& x) {
  if (!(tau <= s && s <= t)) throw std::invalid_argument("need tau <= s <= t");
  const StateVector direct = evolve(P, S, sigma, tau, t, x);
  const StateVector thru = evolve(P, S, sigma, s, t, evolve(P, S, sigma, tau, s, x));
  return model_metric(P).dist(direct, thru);
}

double translation_residual(const ProcessSpec& P, const SymbolSpace& S,
                            const SymbolPoint& sigma, double h, double tau, double t,
                            const StateVector& x) {
  if (t < tau) throw std::invalid_argument("need t >= tau");
  const StateVector shifted = evolve(P, S, sigma, h + tau, h + t, x);
  const StateVector acted = evolve(P, S, translate(S, sigma, h), tau, t, x);
  return model_metric(P).dist(shifted, acted);
}

}  // namespace attractors
