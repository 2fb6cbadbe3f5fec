#include "attractors/models.hpp"

#include <cmath>
#include <stdexcept>

namespace attractors {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 8-point Gauss-Legendre nodes/weights on [0,1].
constexpr double kGaussNode[8] = {
    0.019855071751231884, 0.10166676129318664, 0.2372337950418355, 0.40828267875217510,
    0.59171732124782490,  0.7627662049581645,  0.89833323870681336, 0.980144928248768116};
constexpr double kGaussWeight[8] = {
    0.050614268145188130, 0.111190517226687235, 0.156853322938943644, 0.181341891689180991,
    0.181341891689180991, 0.156853322938943644, 0.111190517226687235, 0.050614268145188130};

double forcing_component(const ForcingValue& f, std::size_t i) {
  return i < f.coefficients.size() ? f.coefficients[i] : 0.0;
}

// sin(j pi x_i / L) at the interior collocation grid, cached per model shape
struct SineTable {
  int m = 0;
  double length = 0.0;
  std::vector<double> s;  // s[i*m + j], i < 4m, j < m
};

const std::vector<double>& sine_table(const WaveModel& W) {
  thread_local SineTable cache;
  if (cache.m != W.m || cache.length != W.length) {
    const int M = W.collocation();
    cache.m = W.m;
    cache.length = W.length;
    cache.s.assign(std::size_t(M) * W.m, 0.0);
    for (int i = 0; i < M; ++i)
      for (int j = 0; j < W.m; ++j)
        cache.s[std::size_t(i) * W.m + j] =
            std::sin(double(j + 1) * kPi * double(i + 1) / double(M + 1));
  }
  return cache.s;
}

}  // namespace

double WaveModel::mu(int j) const {
  double k = double(j) * kPi / length;
  return k * k;
}

StateVector linear_kernel_oracle(const LinearModel& model, const SymbolSpace& S,
                                 const SymbolPoint& sigma, double t) {
  if (!(model.lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  // truncate where e^{-lambda T} < 1e-12
  const double horizon = 28.0 / model.lambda;
  const long steps = std::max(1L, (long)std::ceil(horizon / model.dt));
  StateVector x(model.dim, 0.0);
  for (long k = 0; k < steps; ++k) {
    const double s0 = t - double(steps - k) * model.dt;
    for (int q = 0; q < 8; ++q) {
      const double s = s0 + kGaussNode[q] * model.dt;
      const double w = kGaussWeight[q] * model.dt * std::exp(-model.lambda * (t - s));
      const ForcingValue f = eval_forcing(S, sigma, s);
      for (int i = 0; i < model.dim; ++i) x[i] += w * forcing_component(f, i);
    }
  }
  return x;
}

StateVector wave_rhs(const WaveModel& W, const StateVector& state,
                     const ForcingValue& forcing) {
  const int m = W.m;
  if (static_cast<int>(state.size()) != 2 * m)
    throw std::invalid_argument("wave state must have dimension 2m");
  const int M = W.collocation();
  const double scale = std::sqrt(2.0 / W.length);
  const std::vector<double>& tab = sine_table(W);

  // physical values at interior collocation points x_i = (i+1) L / (M+1)
  std::vector<double> psi(M);
  for (int i = 0; i < M; ++i) {
    const double* row = &tab[std::size_t(i) * m];
    double u = 0.0, v = 0.0;
    for (int j = 0; j < m; ++j) {
      u += state[j] * row[j];
      v += state[m + j] * row[j];
    }
    u *= scale;
    v *= scale;
    psi[i] = (1.0 + u * u) * v + u * u * u - u;
  }

  StateVector rhs(2 * m, 0.0);
  const double quad = W.length / double(M + 1);
  for (int i = 0; i < M; ++i) {
    const double* row = &tab[std::size_t(i) * m];
    const double p = psi[i];
    for (int j = 0; j < m; ++j) rhs[m + j] += p * row[j];
  }
  for (int j = 0; j < m; ++j) {
    rhs[j] = state[m + j];
    rhs[m + j] = -W.mu(j + 1) * state[j] - rhs[m + j] * quad * scale +
                 forcing_component(forcing, j);
  }
  return rhs;
}

StateVector wave_rhs_undamped(const WaveModel& W, const StateVector& state,
                              const ForcingValue& forcing) {
  const int m = W.m;
  StateVector damped(state);
  for (int j = 0; j < m; ++j) damped[m + j] = 0.0;  // kill v inside the damping term
  StateVector rhs = wave_rhs(W, damped, forcing);
  for (int j = 0; j < m; ++j) rhs[j] = state[m + j];
  return rhs;
}

EnergyReport wave_energy(const WaveModel& W, const StateVector& state, int tail_cutoff) {
  const int m = W.m;
  if (static_cast<int>(state.size()) != 2 * m)
    throw std::invalid_argument("wave state must have dimension 2m");
  EnergyReport r;
  double elastic = 0.0;
  for (int j = 0; j < m; ++j) {
    r.kinetic += 0.5 * state[m + j] * state[m + j];
    elastic += 0.5 * W.mu(j + 1) * state[j] * state[j];
  }

  // double-well integral over the same collocation grid the rhs projection uses,
  // so that the undamped unforced system conserves this discrete energy exactly
  const int M = W.collocation();
  const double scale = std::sqrt(2.0 / W.length);
  const std::vector<double>& tab = sine_table(W);
  double well = 0.0;
  for (int i = 0; i < M; ++i) {
    const double* row = &tab[std::size_t(i) * m];
    double u = 0.0;
    for (int j = 0; j < m; ++j) u += state[j] * row[j];
    u *= scale;
    well += 0.25 * u * u * u * u - 0.5 * u * u;
  }
  well *= W.length / double(M + 1);

  r.potential = elastic + well;
  r.total = r.kinetic + r.potential;
  if (tail_cutoff > 0) r.tail = tail_energy(W, state, tail_cutoff);
  return r;
}

double weak_distance(const WaveModel& W, const StateVector& a, const StateVector& b) {
  const int m = W.m;
  if (a.size() != b.size() || static_cast<int>(a.size()) != 2 * m)
    throw std::invalid_argument("wave state dimension mismatch");
  double s = 0.0;
  for (int j = 0; j < m; ++j) {
    const double du = a[j] - b[j];
    const double dv = a[m + j] - b[m + j];
    s += du * du + dv * dv / W.mu(j + 1);
  }
  return std::sqrt(s);
}

double tail_energy(const WaveModel& W, const StateVector& state, int cutoff) {
  const int m = W.m;
  if (cutoff < 1 || cutoff > m) throw std::invalid_argument("cutoff must be in [1, m]");
  double s = 0.0;
  for (int j = cutoff; j < m; ++j)
    s += W.mu(j + 1) * state[j] * state[j] + state[m + j] * state[m + j];
  return std::sqrt(s);
}

MetricSpec wave_energy_metric(const WaveModel& W) {
  std::vector<double> w(2 * W.m, 1.0);
  for (int j = 0; j < W.m; ++j) w[j] = W.mu(j + 1);
  return MetricSpec::weighted(std::move(w));
}

}  // namespace attractors
