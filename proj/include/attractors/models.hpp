#pragma once

#include <vector>

#include "attractors/metric_sets.hpp"
#include "attractors/symbol_space.hpp"

namespace attractors {

// Componentwise u' = -lambda*u + f(t).  Evolved by an exact exponential
// integrator (variation of constants with per-step Gauss quadrature of the
// forcing), so it serves as an oracle for the rest of the system.
struct LinearModel {
  double lambda = 1.0;
  int dim = 1;
  double dt = 0.01;  // quadrature step; the homogeneous part is exact
};

// Damped nonlinear wave equation u_tt + (1+u^2)u_t - u_xx + u^3 - u = f(t)
// on (0,L) with Dirichlet boundary, in sine-Galerkin form.  State is
// (u_1..u_m, v_1..v_m) in the L^2-orthonormal basis phi_j = sqrt(2/L) sin(j pi x/L).
// The nonlinearity is evaluated pseudo-spectrally at 4m collocation points,
// which dealiases the cubic terms exactly (sine content of u^3 stays <= 3m).
struct WaveModel {
  int m = 16;
  double length = 3.14159265358979323846;
  double dt = 1e-3;

  int collocation() const { return 4 * m; }
  int state_dim() const { return 2 * m; }
  double mu(int j) const;  // Dirichlet Laplacian eigenvalue of mode j (1-based)
};

struct EnergyReport {
  double total = 0.0;
  double kinetic = 0.0;
  double potential = 0.0;  // elastic part plus the double-well integral
  double tail = 0.0;       // energy norm of modes above the cutoff
};

// Unique complete bounded trajectory of the linear model:
// x(t) = integral_{-inf}^t e^{-lambda (t-s)} f_sigma(s) ds, truncated once the
// tail weight e^{-lambda T} drops below 1e-12, evaluated by composite Gauss
// quadrature.  Independent of the evolve() code path.
StateVector linear_kernel_oracle(const LinearModel& model, const SymbolSpace& S,
                                 const SymbolPoint& sigma, double t);

// Galerkin right-hand side: du = v, dv_j = -mu_j u_j - N_j(u,v) + f_j with N
// the sine coefficients of (1+u^2)v + u^3 - u.
StateVector wave_rhs(const WaveModel& W, const StateVector& state,
                     const ForcingValue& forcing);

// Test-only variant with the damping term (1+u^2)u_t removed; conserves the
// energy of the unforced system up to integrator error.
StateVector wave_rhs_undamped(const WaveModel& W, const StateVector& state,
                              const ForcingValue& forcing);

EnergyReport wave_energy(const WaveModel& W, const StateVector& state,
                         int tail_cutoff = 0);

// Norm of W = L^2 x H^-1 on coefficient differences:
// sqrt(sum (du_j)^2 + sum (dv_j)^2 / mu_j).
double weak_distance(const WaveModel& W, const StateVector& a, const StateVector& b);

// Energy norm of the projection onto modes j > cutoff.
double tail_energy(const WaveModel& W, const StateVector& state, int cutoff);

// Energy metric sqrt(sum mu_j du_j^2 + sum dv_j^2) as a weighted MetricSpec.
MetricSpec wave_energy_metric(const WaveModel& W);

}  // namespace attractors
