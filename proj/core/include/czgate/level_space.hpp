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

#ifndef CZGATE_LEVEL_SPACE_HPP
#define CZGATE_LEVEL_SPACE_HPP

#include <array>

#include "czgate/pulse.hpp"
#include "czgate/types.hpp"

namespace czgate {

inline constexpr int kNumLevels = 12;

/// One level of the twelve-level space: control qubit (0 or 1, most
/// significant), target (0, 1, or 2, where 2 is the auxiliary level), phonon
/// occupation (0 or 1, least significant).
struct Level {
  int control;
  int target;
  int phonon;

  friend bool operator==(const Level&, const Level&) = default;
};

/// The frozen level ordering. Indices 0-5 carry phonon=0 and 6-11 phonon=1;
/// within each half the four computational pairs come first and the two
/// auxiliary levels (target=2) last. Indices 0-3 are exactly the
/// computational basis |control target> with the phonon in its ground state.
const std::array<Level, kNumLevels>& level_ordering();

/// Position of (control, target, phonon) in level_ordering(); bijective.
/// Throws std::invalid_argument for out-of-range components.
int level_index(int control, int target, int phonon);

/// Inverse of level_index. Throws std::invalid_argument on a bad index.
Level level_at(int index);

/// 12x12 complex matrix over the ordered level space.
using GateMatrix = Mat12;

/// How the target-qubit Hadamard is embedded in the twelve-level space.
///
/// kPaper places the 2x2 Hadamard block on index pairs (0,1) and (2,3) only.
/// kPhysical models a carrier pulse that addresses the target ion
/// irrespective of the phonon state and therefore also acts on pairs (6,7)
/// and (8,9). The two modes compose to the same gate for ideal pulses; under
/// noise they differ only in rows/columns 6-9.
enum class HadamardMode { kPaper, kPhysical };

/// Identity everywhere except the 2x2 block u placed on the coupled index
/// pairs: pulses 1 and 3 couple (2,6) and (3,7); pulse 2 couples (6,10).
/// Throws std::invalid_argument for pulse_id outside {1,2,3}.
GateMatrix embed_pulse(int pulse_id, const TwoLevelUnitary& u);

/// Hadamard blocks [[1,1],[1,-1]]/sqrt(2) on the pairs selected by mode;
/// self-inverse.
GateMatrix embed_hadamard(HadamardMode mode);

/// The composed noisy gate: hadamard * pulse3 * pulse2 * pulse1 * hadamard,
/// applied right to left. Deterministic: identical inputs give bit-identical
/// outputs.
GateMatrix compose_gate(const std::array<PulseNoise, 3>& noises,
                        HadamardMode mode = HadamardMode::kPaper);

}  // namespace czgate

#endif  // CZGATE_LEVEL_SPACE_HPP
