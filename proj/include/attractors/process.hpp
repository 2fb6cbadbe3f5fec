#pragma once

#include <stdexcept>
#include <variant>

#include "attractors/metric_sets.hpp"
#include "attractors/models.hpp"
#include "attractors/symbol_space.hpp"

namespace attractors {

// A concrete family of processes U_sigma(t,tau): model plus integrator settings.
struct ProcessSpec {
  std::variant<LinearModel, WaveModel> model;
  double guard = 1e8;  // abort with a blow-up report past this norm
};

// A point of the extended phase space X x Sigma.
struct SkewState {
  StateVector x;
  SymbolPoint sigma;
};

struct DivergenceError : std::runtime_error {
  DivergenceError(double when, long index = -1)
      : std::runtime_error("state norm exceeded the divergence guard"),
        time(when),
        point_index(index) {}
  double time;
  long point_index;  // offending cloud slot, if evolving a cloud
};

double model_dt(const ProcessSpec& P);
int model_dim(const ProcessSpec& P);
// Energy metric for the wave model, euclidean for the linear model.
MetricSpec model_metric(const ProcessSpec& P);

// Round t to the integrator grid; off-grid times are an error, never
// silently interpolated.
long snap_to_grid(double t, double dt);

// U_sigma(t,tau)x.  t = tau returns x unchanged bitwise.  Integration steps
// index the global time grid, so composing evolve calls over adjacent
// intervals reproduces the one-shot result bitwise.
StateVector evolve(const ProcessSpec& P, const SymbolSpace& S, const SymbolPoint& sigma,
                   double tau, double t, const StateVector& x);

// Elementwise evolve; preserves point order, results written to fixed slots.
PointCloud evolve_cloud(const ProcessSpec& P, const SymbolSpace& S,
                        const SymbolPoint& sigma, double tau, double t,
                        const PointCloud& B, int threads = 1);

// Skew-product step S(h)(x,sigma) = (U_sigma(h,0)x, T(h)sigma).
SkewState skew_step(const ProcessSpec& P, const SymbolSpace& S, const SkewState& z,
                    double h);

// Distance between U_sigma(t,s)U_sigma(s,tau)x and U_sigma(t,tau)x.
double cocycle_residual(const ProcessSpec& P, const SymbolSpace& S,
                        const SymbolPoint& sigma, double tau, double s, double t,
                        const StateVector& x);

// Distance between U_sigma(h+t,h+tau)x and U_{T(h)sigma}(t,tau)x.
double translation_residual(const ProcessSpec& P, const SymbolSpace& S,
                            const SymbolPoint& sigma, double h, double tau, double t,
                            const StateVector& x);

}  // namespace attractors
