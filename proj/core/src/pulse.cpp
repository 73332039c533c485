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

#include "czgate/pulse.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace czgate {

namespace {
constexpr double kPi = std::numbers::pi;
}

PulseParams ideal_pulse_params(int pulse_id) {
  switch (pulse_id) {
    case 1:
    case 3:
      return {kPi, kPi, 0.0};
    case 2:
      return {2.0 * kPi, 0.0, 0.0};
    default:
      throw std::invalid_argument("pulse_id must be 1, 2, or 3 (got " +
                                  std::to_string(pulse_id) + ")");
  }
}

TwoLevelUnitary build_unitary(const PulseParams& params) {
  const double c = std::cos(0.5 * params.theta);
  const double s = std::sin(0.5 * params.theta);
  const Complex e_psi = std::polar(1.0, params.psi);
  const Complex e_phi = std::polar(1.0, params.phi);
  const Complex i{0.0, 1.0};

  TwoLevelUnitary u;
  u << c * e_psi, i * s * e_phi,
       i * s * std::conj(e_phi), c * std::conj(e_psi);
  return u;
}

PulseParams apply_noise(const PulseParams& params, const PulseNoise& noise) {
  return {params.theta + noise.d_theta, params.psi + noise.d_psi,
          params.phi + noise.d_phi};
}

TwoLevelUnitary noisy_unitary(int pulse_id, const PulseNoise& noise) {
  return build_unitary(apply_noise(ideal_pulse_params(pulse_id), noise));
}

}  // namespace czgate
