#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace attractors {

// Integer-time process on a finite state set [0,n) driven by a periodic word
// over a finite alphabet.  The symbol space is the set of cyclic shifts of the
// word, so T(1) Sigma = Sigma holds by construction and the translation
// property is an identity of table compositions.  Every object of the
// abstract theory (omega-limits, A*, kernel sections, skew attractor) is
// computable exactly here.
struct FiniteSystem {
  int n = 1;                           // state count
  int alphabet = 1;                    // letter count
  std::vector<int> word;               // periodic word, entries in [0, alphabet)
  std::vector<std::vector<int>> maps;  // maps[a][x] in [0, n)

  int period() const { return static_cast<int>(word.size()); }
  int letter(int offset, int step) const {
    int p = period();
    int i = (offset + step) % p;
    if (i < 0) i += p;
    return word[i];
  }
  void validate() const;
};

// Subsets of the state space as bitmasks (n <= 20).
using StateSet = std::uint32_t;

StateSet full_set(int n);
std::vector<int> set_to_list(StateSet s);

// Deterministic pseudorandom system from a seed (splitmix64-based tables).
FiniteSystem make_finite_system(int n, int k, int p, std::uint64_t seed);

// U_sigma(d, 0) applied to a set, where sigma is the shift with given offset.
StateSet apply_process(const FiniteSystem& FS, int offset, int d, StateSet C);

// Uniform omega-limit of C over the full shift orbit of the word: the
// stabilized union of per-symbol image layers (the nested-intersection
// formula collapses to the eventual cycle on a finite space).
StateSet exact_omega(const FiniteSystem& FS, StateSet C);

// A* = omega of the full space (the full space is trivially absorbing).
StateSet exact_Astar(const FiniteSystem& FS);

// Same, restricted to a subset of symbol offsets.  The tau-uniform definition
// sweeps the shift orbit, so this equals A* of the shift closure of the subset.
StateSet exact_Astar_subfamily(const FiniteSystem& FS, const std::vector<int>& offsets);

// Kernel section K_sigma(t): states lying on a bi-infinite orbit through time
// t, computed as the stabilized range of the iterated full-period map ending
// at phase t.
StateSet exact_kernel_section(const FiniteSystem& FS, int offset, int t);

// Global attractor of the skew map S(1)(x, s) = (F_{word[s]} x, s+1 mod p) on
// [n] x Sigma: the eventual image of the full product.  Encoded as one
// StateSet per symbol offset.
std::vector<StateSet> exact_skew_attractor(const FiniteSystem& FS);

struct ClaimResult {
  std::string id;
  bool pass = false;
  std::string witness;
};

struct Certificate {
  std::vector<ClaimResult> claims;
  bool all_pass() const;
};

// Exhaustive checklist of the abstract results on this system: attraction of
// A*, exact minimality by subset search, limit sets of admissible sequences,
// omega-union identity, kernel-union and skew-projection equalities, kernel
// invariance, and subfamily monotonicity.  Guarded against combinatorial
// blow-up (n <= 10 for the subset searches by default).
Certificate verify_theory(const FiniteSystem& FS, int subset_search_max_n = 10);

}  // namespace attractors
