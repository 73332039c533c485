// Copyright 2026 The czgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "czgate/level_space.hpp"

#include <set>
#include <stdexcept>

#include "czgate/metrics.hpp"
#include "czgate/rng.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace czgate;

TEST_CASE("level ordering is a bijection over all component triples") {
  const auto& levels = level_ordering();
  std::set<int> seen;
  for (int c = 0; c <= 1; ++c) {
    for (int t = 0; t <= 2; ++t) {
      for (int n = 0; n <= 1; ++n) {
        const int idx = level_index(c, t, n);
        CHECK(idx >= 0);
        CHECK(idx < kNumLevels);
        seen.insert(idx);
        CHECK(levels[static_cast<std::size_t>(idx)] == Level{c, t, n});
        CHECK(level_at(idx) == Level{c, t, n});
      }
    }
  }
  CHECK(seen.size() == kNumLevels);
}

TEST_CASE("computational basis occupies the first four indices") {
  CHECK(level_index(0, 0, 0) == 0);
  CHECK(level_index(0, 1, 0) == 1);
  CHECK(level_index(1, 0, 0) == 2);
  CHECK(level_index(1, 1, 0) == 3);
  // auxiliary levels close each phonon sector
  CHECK(level_index(0, 2, 0) == 4);
  CHECK(level_index(1, 2, 0) == 5);
  CHECK(level_index(0, 0, 1) == 6);
  CHECK(level_index(1, 2, 1) == 11);
}

TEST_CASE("level component range checks") {
  CHECK_THROWS_AS(level_index(2, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(level_index(0, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(level_index(0, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(level_index(-1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(level_at(-1), std::invalid_argument);
  CHECK_THROWS_AS(level_at(12), std::invalid_argument);
}

TEST_CASE("pulse embedding places the block on the coupled pairs") {
  // marker entries make the placement unambiguous
  TwoLevelUnitary marker;
  marker << Complex{2.0, 0.0}, Complex{3.0, 0.0}, Complex{5.0, 0.0},
      Complex{7.0, 0.0};

  SUBCASE("pulses 1 and 3 couple (2,6) and (3,7)") {
    for (const int pulse : {1, 3}) {
      const GateMatrix m = embed_pulse(pulse, marker);
      GateMatrix expected = GateMatrix::Identity();
      for (const auto [a, b] : {std::pair{2, 6}, std::pair{3, 7}}) {
        expected(a, a) = marker(0, 0);
        expected(a, b) = marker(0, 1);
        expected(b, a) = marker(1, 0);
        expected(b, b) = marker(1, 1);
      }
      CHECK(max_abs_diff(m, expected) == 0.0);
    }
  }

  SUBCASE("pulse 2 couples (6,10)") {
    const GateMatrix m = embed_pulse(2, marker);
    GateMatrix expected = GateMatrix::Identity();
    expected(6, 6) = marker(0, 0);
    expected(6, 10) = marker(0, 1);
    expected(10, 6) = marker(1, 0);
    expected(10, 10) = marker(1, 1);
    CHECK(max_abs_diff(m, expected) == 0.0);
  }

  CHECK_THROWS_AS(embed_pulse(0, marker), std::invalid_argument);
  CHECK_THROWS_AS(embed_pulse(4, marker), std::invalid_argument);
}

TEST_CASE("hadamard embedding modes") {
  const GateMatrix paper = embed_hadamard(HadamardMode::kPaper);
  const GateMatrix physical = embed_hadamard(HadamardMode::kPhysical);

  CHECK(is_unitary(paper));
  CHECK(is_unitary(physical));
  CHECK(max_abs_diff(paper * paper, GateMatrix::Identity()) <= 1e-15);
  CHECK(max_abs_diff(physical * physical, GateMatrix::Identity()) <= 1e-15);

  // kPaper leaves the phonon-excited sector alone
  CHECK(max_abs_diff(paper.block<6, 6>(6, 6), Mat6::Identity()) == 0.0);
  // kPhysical adds the same 2x2 blocks on pairs (6,7) and (8,9)
  CHECK(physical(6, 7) == paper(0, 1));
  CHECK(physical(8, 9) == paper(0, 1));
  CHECK(physical(9, 9) == paper(1, 1));
  // both modes leave the auxiliary levels untouched
  for (const int aux : {4, 5, 10, 11}) {
    CHECK(paper(aux, aux) == Complex{1.0, 0.0});
    CHECK(physical(aux, aux) == Complex{1.0, 0.0});
  }
}

TEST_CASE("zero-noise composition is the controlled-not on the main block") {
  const GateMatrix gate = compose_gate({});
  CHECK(is_unitary(gate));
  CHECK(max_abs_diff(gate.block<4, 4>(0, 0), cnot_matrix()) <= 1e-12);

  // no amplitude leaves the computational subspace
  for (int r = 4; r < kNumLevels; ++r) {
    for (int c = 0; c < 4; ++c) {
      CHECK(std::abs(gate(r, c)) <= 1e-12);
    }
  }
}

TEST_CASE("hadamard modes agree at zero noise") {
  const GateMatrix paper = compose_gate({}, HadamardMode::kPaper);
  const GateMatrix physical = compose_gate({}, HadamardMode::kPhysical);
  CHECK(max_abs_diff(paper, physical) <= 1e-12);
}

TEST_CASE("hadamard mode difference is confined to the phonon-excited pairs") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto noises = czgate::testing::random_noises(rng, 0.5);
    const GateMatrix paper = compose_gate(noises, HadamardMode::kPaper);
    const GateMatrix physical = compose_gate(noises, HadamardMode::kPhysical);

    for (int r = 0; r < kNumLevels; ++r) {
      for (int c = 0; c < kNumLevels; ++c) {
        const bool touched = (r >= 6 && r <= 9) || (c >= 6 && c <= 9);
        if (!touched) {
          CHECK(paper(r, c) == physical(r, c));
        }
      }
    }
  }
}

TEST_CASE("noisy compositions stay unitary") {
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const auto noises = czgate::testing::random_noises(rng, 0.5);
    CHECK(is_unitary(compose_gate(noises, HadamardMode::kPaper)));
    CHECK(is_unitary(compose_gate(noises, HadamardMode::kPhysical)));
  }
}

TEST_CASE("composition is deterministic") {
  Rng rng(5);
  const auto noises = czgate::testing::random_noises(rng, 0.3);
  const GateMatrix a = compose_gate(noises);
  const GateMatrix b = compose_gate(noises);
  CHECK(max_abs_diff(a, b) == 0.0);
}
