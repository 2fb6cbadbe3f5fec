#include <doctest.h>

#include <stdexcept>

#include "attractors/finite_oracle.hpp"

using namespace attractors;

namespace {

// One letter, everything funnels into state 1.
FiniteSystem funnel() {
  FiniteSystem FS;
  FS.n = 3;
  FS.alphabet = 1;
  FS.word = {0};
  FS.maps = {{1, 1, 1}};
  return FS;
}

// Alternating identity / swap on two states.
FiniteSystem swap_id() {
  FiniteSystem FS;
  FS.n = 2;
  FS.alphabet = 2;
  FS.word = {0, 1};
  FS.maps = {{0, 1}, {1, 0}};
  return FS;
}

// A 3-cycle permutation: every state is recurrent.
FiniteSystem three_cycle() {
  FiniteSystem FS;
  FS.n = 3;
  FS.alphabet = 1;
  FS.word = {0};
  FS.maps = {{1, 2, 0}};
  return FS;
}

StateSet mask(std::initializer_list<int> xs) {
  StateSet s = 0;
  for (int x : xs) s |= StateSet(1) << x;
  return s;
}

}  // namespace

TEST_CASE("set helpers") {
  CHECK(full_set(3) == 0b111u);
  CHECK(set_to_list(mask({0, 2})) == std::vector<int>{0, 2});
}

TEST_CASE("validate rejects malformed tables") {
  FiniteSystem FS = funnel();
  FS.maps[0][1] = 5;
  CHECK_THROWS_AS(FS.validate(), std::invalid_argument);
  FS = funnel();
  FS.word = {1};  // letter outside alphabet
  CHECK_THROWS_AS(FS.validate(), std::invalid_argument);
}

TEST_CASE("funnel system collapses to its fixed point") {
  FiniteSystem FS = funnel();
  CHECK(apply_process(FS, 0, 1, full_set(3)) == mask({1}));
  CHECK(exact_omega(FS, full_set(3)) == mask({1}));
  CHECK(exact_Astar(FS) == mask({1}));
  CHECK(exact_kernel_section(FS, 0, 0) == mask({1}));
  auto skew = exact_skew_attractor(FS);
  REQUIRE(skew.size() == 1);
  CHECK(skew[0] == mask({1}));
}

TEST_CASE("swap/id word keeps both states recurrent") {
  FiniteSystem FS = swap_id();
  CHECK(exact_Astar(FS) == full_set(2));
  CHECK(exact_kernel_section(FS, 0, 0) == full_set(2));
  CHECK(exact_kernel_section(FS, 1, 1) == full_set(2));
}

TEST_CASE("permutation dynamics has full attractor") {
  FiniteSystem FS = three_cycle();
  CHECK(exact_Astar(FS) == full_set(3));
  CHECK(exact_omega(FS, mask({0})) == full_set(3));
}

TEST_CASE("kernel sections are invariant under a full period") {
  FiniteSystem FS = make_finite_system(6, 2, 3, 42);
  for (int offset = 0; offset < FS.period(); ++offset) {
    StateSet K0 = exact_kernel_section(FS, offset, 0);
    StateSet Kp = exact_kernel_section(FS, offset, FS.period());
    CHECK(apply_process(FS, offset, FS.period(), K0) == Kp);
    CHECK(K0 == Kp);  // periodic word: t and t+p sections agree
  }
}

TEST_CASE("A* equals the union of kernel sections at time zero") {
  for (std::uint64_t seed : {1, 7, 19}) {
    FiniteSystem FS = make_finite_system(7, 3, 4, seed);
    StateSet u = 0;
    for (int offset = 0; offset < FS.period(); ++offset)
      u |= exact_kernel_section(FS, offset, 0);
    CHECK(u == exact_Astar(FS));
  }
}

TEST_CASE("subfamily attractors are monotone and capped by A*") {
  FiniteSystem FS = make_finite_system(8, 2, 4, 3);
  const StateSet A = exact_Astar(FS);
  StateSet prev = 0;
  std::vector<int> offsets;
  for (int o = 0; o < FS.period(); ++o) {
    offsets.push_back(o);
    StateSet sub = exact_Astar_subfamily(FS, offsets);
    CHECK((prev & ~sub) == 0u);
    CHECK((sub & ~A) == 0u);
    prev = sub;
  }
  CHECK(prev == A);
}

TEST_CASE("verify_theory passes on hand-built and random systems") {
  for (const FiniteSystem& FS : {funnel(), swap_id(), three_cycle()}) {
    Certificate cert = verify_theory(FS);
    for (const auto& claim : cert.claims) {
      INFO(claim.id, ": ", claim.witness);
      CHECK(claim.pass);
    }
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    FiniteSystem FS = make_finite_system(6, 2, 3, seed);
    Certificate cert = verify_theory(FS);
    INFO("seed ", seed);
    CHECK(cert.all_pass());
  }
}

TEST_CASE("verify_theory refuses oversized subset searches") {
  FiniteSystem FS = make_finite_system(12, 2, 3, 1);
  CHECK_THROWS_AS(verify_theory(FS, 10), std::invalid_argument);
}
