#include "attractors/symbol_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace attractors {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  if (r >= period) r = 0.0;  // fmod can land exactly on the period after the add
  return r;
}

[[noreturn]] void variant_mismatch() {
  throw std::invalid_argument("symbol does not belong to this symbol space");
}

}  // namespace

CircleHull CircleHull::cosine(double period, int sample_count) {
  if (!(period > 0.0) || sample_count < 2)
    throw std::invalid_argument("bad circle hull parameters");
  CircleHull c;
  c.period = period;
  c.samples.resize(sample_count);
  for (int i = 0; i < sample_count; ++i)
    c.samples[i] = std::cos(kTwoPi * double(i) / double(sample_count));
  return c;
}

SymbolPoint translate(const SymbolSpace& S, const SymbolPoint& sigma, double h) {
  if (const auto* torus = std::get_if<TorusHull>(&S.hull)) {
    const auto* p = std::get_if<TorusPhase>(&sigma);
    if (!p || p->angles.size() != torus->frequencies.size()) variant_mismatch();
    TorusPhase out;
    out.angles.resize(p->angles.size());
    for (std::size_t i = 0; i < p->angles.size(); ++i)
      out.angles[i] = wrap(p->angles[i] + torus->frequencies[i] * h, kTwoPi);
    return out;
  }
  if (const auto* circle = std::get_if<CircleHull>(&S.hull)) {
    const auto* p = std::get_if<CirclePhase>(&sigma);
    if (!p) variant_mismatch();
    return CirclePhase{wrap(p->phase + h, circle->period)};
  }
  const auto& shift = std::get<FiniteShift>(S.hull);
  const auto* p = std::get_if<ShiftWord>(&sigma);
  if (!p) variant_mismatch();
  double hr = std::round(h);
  if (std::abs(h - hr) > 1e-9)
    throw std::invalid_argument("shift-word symbols require integer translation");
  long period = static_cast<long>(shift.word.size());
  long idx = (p->index + static_cast<long>(hr)) % period;
  if (idx < 0) idx += period;
  return ShiftWord{idx};
}

double symbol_metric(const SymbolSpace& S, const SymbolPoint& a, const SymbolPoint& b) {
  if (std::holds_alternative<TorusHull>(S.hull)) {
    const auto* pa = std::get_if<TorusPhase>(&a);
    const auto* pb = std::get_if<TorusPhase>(&b);
    if (!pa || !pb || pa->angles.size() != pb->angles.size()) variant_mismatch();
    double d = 0.0;
    for (std::size_t i = 0; i < pa->angles.size(); ++i) {
      double delta = std::abs(wrap(pa->angles[i], kTwoPi) - wrap(pb->angles[i], kTwoPi));
      d = std::max(d, std::min(delta, kTwoPi - delta));
    }
    return d;
  }
  if (const auto* circle = std::get_if<CircleHull>(&S.hull)) {
    const auto* pa = std::get_if<CirclePhase>(&a);
    const auto* pb = std::get_if<CirclePhase>(&b);
    if (!pa || !pb) variant_mismatch();
    double delta = std::abs(wrap(pa->phase, circle->period) - wrap(pb->phase, circle->period));
    return std::min(delta, circle->period - delta);
  }
  const auto* pa = std::get_if<ShiftWord>(&a);
  const auto* pb = std::get_if<ShiftWord>(&b);
  if (!pa || !pb) variant_mismatch();
  return pa->index == pb->index ? 0.0 : 1.0;
}

std::vector<SymbolPoint> sample_symbols(const SymbolSpace& S, int n) {
  if (n < 1) throw std::invalid_argument("sample count must be >= 1");
  std::vector<SymbolPoint> out;
  if (const auto* torus = std::get_if<TorusHull>(&S.hull)) {
    const std::size_t k = torus->frequencies.size();
    int per_angle = static_cast<int>(std::ceil(std::pow(double(n), 1.0 / double(k)) - 1e-9));
    per_angle = std::max(per_angle, 1);
    std::vector<int> idx(k, 0);
    for (;;) {
      TorusPhase p;
      p.angles.resize(k);
      for (std::size_t i = 0; i < k; ++i)
        p.angles[i] = kTwoPi * double(idx[i]) / double(per_angle);
      out.push_back(p);
      std::size_t pos = 0;
      while (pos < k && ++idx[pos] == per_angle) idx[pos++] = 0;
      if (pos == k) break;
    }
    return out;
  }
  if (const auto* circle = std::get_if<CircleHull>(&S.hull)) {
    for (int i = 0; i < n; ++i)
      out.push_back(CirclePhase{circle->period * double(i) / double(n)});
    return out;
  }
  const auto& shift = std::get<FiniteShift>(S.hull);
  long period = static_cast<long>(shift.word.size());
  for (long i = 0; i < period; ++i) out.push_back(ShiftWord{i});
  return out;
}

ForcingValue eval_forcing(const SymbolSpace& S, const SymbolPoint& sigma, double t) {
  if (const auto* torus = std::get_if<TorusHull>(&S.hull)) {
    const auto* p = std::get_if<TorusPhase>(&sigma);
    if (!p || p->angles.size() != torus->frequencies.size()) variant_mismatch();
    int max_mode = 0;
    for (int m : torus->modes) max_mode = std::max(max_mode, m);
    ForcingValue f;
    f.coefficients.assign(max_mode, 0.0);
    for (std::size_t i = 0; i < torus->modes.size(); ++i)
      f.coefficients[torus->modes[i] - 1] +=
          torus->amplitudes[i] * std::cos(torus->frequencies[i] * t + p->angles[i]);
    return f;
  }
  if (const auto* circle = std::get_if<CircleHull>(&S.hull)) {
    const auto* p = std::get_if<CirclePhase>(&sigma);
    if (!p) variant_mismatch();
    const std::size_t n = circle->samples.size();
    double u = wrap(p->phase + t, circle->period) / circle->period * double(n);
    std::size_t i = static_cast<std::size_t>(u) % n;
    double frac = u - std::floor(u);
    double v = (1.0 - frac) * circle->samples[i] + frac * circle->samples[(i + 1) % n];
    return ForcingValue{{v}};
  }
  throw std::invalid_argument("finite shift spaces carry letters, not forcing values");
}

SymbolPoint base_symbol(const SymbolSpace& S) {
  if (const auto* torus = std::get_if<TorusHull>(&S.hull))
    return TorusPhase{std::vector<double>(torus->frequencies.size(), 0.0)};
  if (std::holds_alternative<CircleHull>(S.hull)) return CirclePhase{0.0};
  return ShiftWord{0};
}

}  // namespace attractors
