#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "attractors/metric_sets.hpp"

namespace attractors {

// sigma in Sigma.  Three compact representations are supported:
//  - TorusPhase: phase vector of a quasi-periodic forcing hull (angles mod 2pi)
//  - CirclePhase: phase of a periodic forcing hull (mod period p)
//  - ShiftWord: offset into a periodic word (finite shift spaces)
struct TorusPhase {
  std::vector<double> angles;  // reduced to [0, 2pi)
};
struct CirclePhase {
  double phase = 0.0;  // in [0, p)
};
struct ShiftWord {
  long index = 0;  // in [0, word period)
};
using SymbolPoint = std::variant<TorusPhase, CirclePhase, ShiftWord>;

// Time-dependent forcing read off a symbol: Galerkin sine-mode amplitudes of
// f(.,t), or a single scalar for ODE models.
struct ForcingValue {
  std::vector<double> coefficients;
};

// Hull of a quasi-periodic forcing, parametrized as a torus of phase vectors.
// Mode j of the forcing is amplitudes[i]*cos(frequencies[i]*t + theta_i) on
// spatial sine mode modes[i].
struct TorusHull {
  std::vector<double> frequencies;  // positive
  std::vector<double> amplitudes;
  std::vector<int> modes;  // 1-based spatial mode indices
};

// Hull of a periodic forcing with period p, stored as samples over one period
// and evaluated by periodic linear interpolation.
struct CircleHull {
  double period = 1.0;
  std::vector<double> samples;  // values at phases i*p/samples.size()

  static CircleHull cosine(double period, int sample_count);
};

// Finite shift space: all cyclic shifts of a periodic word.
struct FiniteShift {
  int alphabet = 1;
  std::vector<int> word;  // nonempty, entries in [0, alphabet)
};

struct SymbolSpace {
  std::variant<TorusHull, CircleHull, FiniteShift> hull;

  bool is_discrete() const { return std::holds_alternative<FiniteShift>(hull); }
};

// The translation group action T(h): torus rotation, circle rotation, or word
// shift (integer h only).  Defined for every real h.
SymbolPoint translate(const SymbolSpace& S, const SymbolPoint& sigma, double h);

// Metric on the symbol space: max angular distance per torus component,
// wraparound distance on the circle, 0/1 discrete metric on word offsets.
double symbol_metric(const SymbolSpace& S, const SymbolPoint& a, const SymbolPoint& b);

// Deterministic quasi-uniform grid of n symbols: a lattice of ceil(n^(1/k))
// points per torus angle, n equispaced circle phases, or all word offsets.
std::vector<SymbolPoint> sample_symbols(const SymbolSpace& S, int n);

// Forcing carried by the symbol at time t, with the shift covariance
// eval_forcing(S, translate(S,sigma,h), t) = eval_forcing(S, sigma, h+t).
// Errors out on FiniteShift (discrete systems read letters, not forcing).
ForcingValue eval_forcing(const SymbolSpace& S, const SymbolPoint& sigma, double t);

// Canonical base point: zero phases / offset 0.
SymbolPoint base_symbol(const SymbolSpace& S);

}  // namespace attractors
