#include "attractors/finite_oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace attractors {

void FiniteSystem::validate() const {
  if (n < 1 || alphabet < 1) throw std::invalid_argument("need n >= 1 and alphabet >= 1");
  if (n > 20) throw std::invalid_argument("state count capped at 20 (bitmask sets)");
  if (word.empty()) throw std::invalid_argument("word must be nonempty");
  for (int a : word)
    if (a < 0 || a >= alphabet) throw std::invalid_argument("word letter out of range");
  if (static_cast<int>(maps.size()) != alphabet)
    throw std::invalid_argument("one map table per letter required");
  for (const auto& f : maps) {
    if (static_cast<int>(f.size()) != n) throw std::invalid_argument("map table size != n");
    for (int y : f)
      if (y < 0 || y >= n) throw std::invalid_argument("map table entry out of range");
  }
}

StateSet full_set(int n) { return n >= 32 ? ~StateSet(0) : ((StateSet(1) << n) - 1); }

std::vector<int> set_to_list(StateSet s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1)
    if (s & 1) out.push_back(i);
  return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

StateSet apply_map(const std::vector<int>& f, StateSet s) {
  StateSet out = 0;
  for (int x = 0; s; ++x, s >>= 1)
    if (s & 1) out |= StateSet(1) << f[x];
  return out;
}

std::string set_string(StateSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int x : set_to_list(s)) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << '}';
  return os.str();
}

// Per-offset image layers I_s(d) = U_{shift^s word}(d,0) C with eventual-cycle
// detection on the pair (layer vector, d mod p).
struct LayerCycle {
  std::vector<std::vector<StateSet>> layers;  // layers[d][offset]
  int cycle_start = 0;                        // first d of the cycle
  int cycle_end = 0;                          // one past the last distinct d
};

LayerCycle layer_cycle(const FiniteSystem& FS, const std::vector<int>& offsets,
                       StateSet C) {
  const int p = FS.period();
  LayerCycle out;
  std::map<std::pair<std::vector<StateSet>, int>, int> seen;
  std::vector<StateSet> cur(offsets.size(), C);
  int d = 0;
  for (;;) {
    auto key = std::make_pair(cur, d % p);
    auto it = seen.find(key);
    if (it != seen.end()) {
      out.cycle_start = it->second;
      out.cycle_end = d;
      return out;
    }
    seen.emplace(key, d);
    out.layers.push_back(cur);
    for (std::size_t i = 0; i < offsets.size(); ++i)
      cur[i] = apply_map(FS.maps[FS.letter(offsets[i], d)], cur[i]);
    ++d;
  }
}

StateSet cycle_union(const LayerCycle& lc) {
  StateSet u = 0;
  for (int d = lc.cycle_start; d < lc.cycle_end; ++d)
    for (StateSet s : lc.layers[d]) u |= s;
  return u;
}

std::vector<int> all_offsets(const FiniteSystem& FS) {
  std::vector<int> v(FS.period());
  for (int i = 0; i < FS.period(); ++i) v[i] = i;
  return v;
}

}  // namespace

FiniteSystem make_finite_system(int n, int k, int p, std::uint64_t seed) {
  if (n < 1 || k < 1 || p < 1) throw std::invalid_argument("need n, k, p >= 1");
  FiniteSystem FS;
  FS.n = n;
  FS.alphabet = k;
  std::uint64_t s = seed * 0x2545f4914f6cdd1dull + 0x9e3779b97f4a7c15ull;
  FS.word.resize(p);
  for (int i = 0; i < p; ++i) FS.word[i] = static_cast<int>(splitmix64(s) % k);
  FS.maps.assign(k, std::vector<int>(n));
  for (int a = 0; a < k; ++a)
    for (int x = 0; x < n; ++x) FS.maps[a][x] = static_cast<int>(splitmix64(s) % n);
  FS.validate();
  return FS;
}

StateSet apply_process(const FiniteSystem& FS, int offset, int d, StateSet C) {
  if (d < 0) throw std::invalid_argument("need d >= 0");
  StateSet s = C;
  for (int i = 0; i < d; ++i) s = apply_map(FS.maps[FS.letter(offset, i)], s);
  return s;
}

StateSet exact_omega(const FiniteSystem& FS, StateSet C) {
  FS.validate();
  if (C == 0) throw std::invalid_argument("omega-limit needs a nonempty set");
  return cycle_union(layer_cycle(FS, all_offsets(FS), C));
}

StateSet exact_Astar(const FiniteSystem& FS) { return exact_omega(FS, full_set(FS.n)); }

StateSet exact_Astar_subfamily(const FiniteSystem& FS, const std::vector<int>& offsets) {
  FS.validate();
  if (offsets.empty()) throw std::invalid_argument("subfamily must be nonempty");
  // tau ranges over all integers, which sweeps the shift orbit of each symbol
  std::vector<int> closed;
  std::vector<bool> present(FS.period(), false);
  for (int off : offsets)
    for (int s = 0; s < FS.period(); ++s) present[(off + s) % FS.period()] = true;
  for (int s = 0; s < FS.period(); ++s)
    if (present[s]) closed.push_back(s);
  return cycle_union(layer_cycle(FS, closed, full_set(FS.n)));
}

StateSet exact_kernel_section(const FiniteSystem& FS, int offset, int t) {
  FS.validate();
  const int p = FS.period();
  // full-period map ending at phase t: F_{sigma(t-1)} o ... o F_{sigma(t-p)},
  // built by forward composition starting from the identity at time t-p
  std::vector<int> h(FS.n);
  for (int x = 0; x < FS.n; ++x) h[x] = x;
  for (int s = t - p; s < t; ++s) {
    const auto& f = FS.maps[FS.letter(offset, s)];
    for (int x = 0; x < FS.n; ++x) h[x] = f[h[x]];
  }
  StateSet range = full_set(FS.n);
  for (;;) {
    StateSet next = apply_map(h, range);
    if (next == range) return range;
    range = next;
  }
}

std::vector<StateSet> exact_skew_attractor(const FiniteSystem& FS) {
  FS.validate();
  const int p = FS.period();
  std::vector<StateSet> cur(p, full_set(FS.n));
  for (;;) {
    std::vector<StateSet> next(p, 0);
    for (int s = 0; s < p; ++s) next[(s + 1) % p] |= apply_map(FS.maps[FS.word[s]], cur[s]);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

bool Certificate::all_pass() const {
  for (const auto& c : claims)
    if (!c.pass) return false;
  return true;
}

Certificate verify_theory(const FiniteSystem& FS, int subset_search_max_n) {
  FS.validate();
  if (FS.n > subset_search_max_n || FS.period() > 6 || FS.alphabet > 3)
    throw std::invalid_argument("verify_theory bounds exceeded (subset enumeration guard)");

  Certificate cert;
  const StateSet X = full_set(FS.n);
  const auto offsets = all_offsets(FS);
  const LayerCycle lc = layer_cycle(FS, offsets, X);
  const StateSet A = cycle_union(lc);

  // entering lag: smallest d0 with R_d subset of A for all d >= d0
  int t_e = 0;
  for (int d = 0; d < lc.cycle_end; ++d) {
    StateSet Rd = 0;
    for (StateSet s : lc.layers[d]) Rd |= s;
    if ((Rd & ~A) != 0) t_e = d + 1;
  }
  {
    // attraction of A*: every layer beyond t_e stays inside A (Lemma AP form)
    bool ok = true;
    for (int d = t_e; d < lc.cycle_end; ++d)
      for (StateSet s : lc.layers[d]) ok = ok && ((s & ~A) == 0);
    std::ostringstream w;
    w << "A*=" << set_string(A) << " entering lag " << t_e;
    cert.claims.push_back({"AP_attracting", ok, w.str()});
  }

  {
    // Direct search over all subsets: a subset is attracting iff the image
    // layers stay inside it from some lag on (the eventual cycle decides).
    // Every attracting set must contain A*, and A* itself must be attracting,
    // making it the unique minimal compact attracting set (Lemma DP(i) +
    // Thm uac).
    bool minimal = true;
    bool A_attracting = false;
    int attracting_count = 0;
    for (StateSet Sset = 0; Sset <= X; ++Sset) {
      bool attracting = true;
      for (int d = lc.cycle_start; d < lc.cycle_end && attracting; ++d)
        for (StateSet layer : lc.layers[d]) attracting = attracting && ((layer & ~Sset) == 0);
      if (!attracting) continue;
      ++attracting_count;
      minimal = minimal && ((A & ~Sset) == 0);
      if (Sset == A) A_attracting = true;
    }
    std::ostringstream w;
    w << attracting_count << " attracting subsets, all contain A*";
    cert.claims.push_back({"DPi_uac_minimality", minimal && A_attracting, w.str()});
  }

  {
    // Lemma DP(ii): A* equals the union of omega(C) over all nonempty C,
    // and each omega(C) is contained in A* = omega(X) (DP(iii) with B = X).
    bool ok = true;
    StateSet uni = 0;
    for (StateSet C = 1; C <= X; ++C) {
      StateSet w = cycle_union(layer_cycle(FS, offsets, C));
      ok = ok && ((w & ~A) == 0);
      uni |= w;
    }
    ok = ok && (uni == A);
    cert.claims.push_back({"DPii_iii_omega_union", ok, "union over all C = " + set_string(uni)});
  }

  {
    // Prop CPT on sampled admissible sequences y_n = U_{sigma_n}(d_n,0)x_n,
    // d_n -> infinity: past the entering lag every y_n lies in A*, and the
    // tail visits a nonempty set (the limit set, exactly, since layers cycle).
    std::uint64_t rng = 0x5bd1e9955bd1e995ull ^ (std::uint64_t(FS.n) << 32) ^
                        std::uint64_t(FS.period());
    bool ok = true;
    StateSet tail_values = 0;
    const int N = 4 * (lc.cycle_end + 1);
    for (int i = 0; i < N; ++i) {
      const int d = t_e + static_cast<int>(splitmix64(rng) % std::uint64_t(2 * FS.period() * FS.n + 1));
      const int off = static_cast<int>(splitmix64(rng) % std::uint64_t(FS.period()));
      const int x = static_cast<int>(splitmix64(rng) % std::uint64_t(FS.n));
      StateSet y = apply_process(FS, off, d, StateSet(1) << x);
      ok = ok && ((y & ~A) == 0);
      tail_values |= y;
    }
    ok = ok && (tail_values != 0);
    cert.claims.push_back({"CPT_limit_sets", ok, "tail values " + set_string(tail_values)});
  }

  {
    // Thm theo3: A* equals the union of kernel sections at time 0, and the
    // sections are invariant under the stepwise maps.
    StateSet kernels = 0;
    bool invariant = true;
    for (int off : offsets) {
      kernels |= exact_kernel_section(FS, off, 0);
      for (int t = 0; t < FS.period(); ++t) {
        StateSet now = exact_kernel_section(FS, off, t);
        StateSet next = exact_kernel_section(FS, off, t + 1);
        invariant = invariant && (apply_map(FS.maps[FS.letter(off, t)], now) == next);
      }
    }
    const bool ok = (kernels == A) && invariant;
    cert.claims.push_back({"theo3_kernel_union", ok, "kernel union " + set_string(kernels)});
  }

  {
    // Thm MAIN: Pi_1(skew attractor) = A*, Pi_2 = Sigma; fiberwise the skew
    // attractor is exactly the kernel section at time 0 of each shift.
    const auto skew = exact_skew_attractor(FS);
    StateSet pi1 = 0;
    bool pi2 = true, fibers = true;
    for (int off = 0; off < FS.period(); ++off) {
      pi1 |= skew[off];
      pi2 = pi2 && (skew[off] != 0);
      fibers = fibers && (skew[off] == exact_kernel_section(FS, off, 0));
    }
    const bool ok = (pi1 == A) && pi2 && fibers;
    cert.claims.push_back({"MAIN_projections", ok, "Pi1 = " + set_string(pi1)});
  }

  {
    // Subfamily monotonicity: A over any nonempty symbol subset is contained
    // in A over the full shift orbit.
    bool ok = true;
    const int p = FS.period();
    for (int mask = 1; mask < (1 << p); ++mask) {
      std::vector<int> subset;
      for (int s = 0; s < p; ++s)
        if (mask & (1 << s)) subset.push_back(s);
      ok = ok && ((exact_Astar_subfamily(FS, subset) & ~A) == 0);
    }
    cert.claims.push_back({"subfamily_monotonicity", ok, "all symbol subsets checked"});
  }

  return cert;
}

}  // namespace attractors
