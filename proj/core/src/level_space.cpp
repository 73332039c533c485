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

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace czgate {

namespace {

// Phonon-0 levels first, phonon-1 levels second.  Within each phonon
// sector the computational pairs |c t> come first and the auxiliary
// target states |c 2> last, which keeps the CNOT action confined to the
// leading 4x4 block of any gate matrix.
constexpr std::array<Level, kNumLevels> kLevelTable = {{
    {0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 2, 0},
    {0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}, {0, 2, 1}, {1, 2, 1},
}};

GateMatrix embed_two_level(const TwoLevelUnitary& u,
                           const std::pair<int, int>& levels) {
  GateMatrix m = GateMatrix::Identity();
  const auto [a, b] = levels;
  m(a, a) = u(0, 0);
  m(a, b) = u(0, 1);
  m(b, a) = u(1, 0);
  m(b, b) = u(1, 1);
  return m;
}

}  // namespace

const std::array<Level, kNumLevels>& level_ordering() { return kLevelTable; }

int level_index(int control, int target, int phonon) {
  if (control < 0 || control > 1) {
    throw std::invalid_argument("control must be 0 or 1 (got " +
                                std::to_string(control) + ")");
  }
  if (target < 0 || target > 2) {
    throw std::invalid_argument("target must be 0, 1, or 2 (got " +
                                std::to_string(target) + ")");
  }
  if (phonon < 0 || phonon > 1) {
    throw std::invalid_argument("phonon must be 0 or 1 (got " +
                                std::to_string(phonon) + ")");
  }
  const int sector = (target == 2) ? 4 + control : 2 * control + target;
  return 6 * phonon + sector;
}

Level level_at(int index) {
  if (index < 0 || index >= kNumLevels) {
    throw std::invalid_argument("level index must be in [0, 12) (got " +
                                std::to_string(index) + ")");
  }
  return kLevelTable[static_cast<std::size_t>(index)];
}

GateMatrix embed_pulse(int pulse_id, const TwoLevelUnitary& u) {
  switch (pulse_id) {
    case 1:
    case 3: {
      // The control-ion pulse swaps amplitude between |g>_c|n=0> and
      // |e>_c|n=1> for both computational target states.  The pair
      // (|1 0 0>, |0 0 1>) maps to indices (2, 6) and (|1 1 0>, |0 1 1>)
      // to (3, 7); "e" on the control is encoded by the phonon flag after
      // the sideband transfer.
      GateMatrix m = embed_two_level(u, {2, 6});
      m(3, 3) = u(0, 0);
      m(3, 7) = u(0, 1);
      m(7, 3) = u(1, 0);
      m(7, 7) = u(1, 1);
      return m;
    }
    case 2:
      // The target-ion 2pi pulse cycles |g>_t|n=1> through the auxiliary
      // level: indices 6 (|0 0 1>) and 10 (|0 2 1>).
      return embed_two_level(u, {6, 10});
    default:
      throw std::invalid_argument("pulse_id must be 1, 2, or 3 (got " +
                                  std::to_string(pulse_id) + ")");
  }
}

GateMatrix embed_hadamard(HadamardMode mode) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  TwoLevelUnitary w;
  w << inv_sqrt2, inv_sqrt2,
       inv_sqrt2, -inv_sqrt2;

  GateMatrix m = embed_two_level(w, {0, 1});
  m(2, 2) = w(0, 0);
  m(2, 3) = w(0, 1);
  m(3, 2) = w(1, 0);
  m(3, 3) = w(1, 1);
  if (mode == HadamardMode::kPhysical) {
    // A laser addressed at the target ion acts on the phonon-1 sector as
    // well; the two modes coincide exactly when the inner pulses are
    // ideal because the composed inner block is then +/- identity on each
    // target pair.
    m(6, 6) = w(0, 0);
    m(6, 7) = w(0, 1);
    m(7, 6) = w(1, 0);
    m(7, 7) = w(1, 1);
    m(8, 8) = w(0, 0);
    m(8, 9) = w(0, 1);
    m(9, 8) = w(1, 0);
    m(9, 9) = w(1, 1);
  }
  return m;
}

GateMatrix compose_gate(const std::array<PulseNoise, 3>& noises,
                        HadamardMode mode) {
  const GateMatrix h = embed_hadamard(mode);
  const GateMatrix v1 = embed_pulse(1, noisy_unitary(1, noises[0]));
  const GateMatrix v2 = embed_pulse(2, noisy_unitary(2, noises[1]));
  const GateMatrix v3 = embed_pulse(3, noisy_unitary(3, noises[2]));
  return h * v3 * v2 * v1 * h;
}

}  // namespace czgate
