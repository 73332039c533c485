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

#ifndef CZGATE_PULSE_HPP
#define CZGATE_PULSE_HPP

#include "czgate/types.hpp"

namespace czgate {

/// Physical parameters of one laser pulse, all in radians.
///
/// theta is the impulse area (Rabi intensity times pulse duration), psi the
/// detuning-related phase, phi the laser phase. Angles are kept as plain
/// doubles with no range normalization; the trigonometry is total.
struct PulseParams {
  double theta = 0.0;
  double psi = 0.0;
  double phi = 0.0;
};

/// Additive perturbations of the three pulse parameters, in radians.
/// All-zero noise is the ideal pulse.
struct PulseNoise {
  double d_theta = 0.0;
  double d_psi = 0.0;
  double d_phi = 0.0;
};

/// 2x2 unitary of a single pulse.
using TwoLevelUnitary = Mat2;

/// Ideal parameters of pulse 1, 2, or 3 of the three-pulse controlled-phase
/// protocol. Pulses 1 and 3 are the sideband pi-pulses (pi, pi, 0); pulse 2
/// is the 2*pi circuit through the auxiliary transition (2*pi, 0, 0), whose
/// unitary is diag(-1,-1).
///
/// Throws std::invalid_argument for pulse_id outside {1,2,3}.
PulseParams ideal_pulse_params(int pulse_id);

/// The pulse unitary
///
///     [ cos(theta/2) e^{+i psi}    i sin(theta/2) e^{+i phi} ]
///     [ i sin(theta/2) e^{-i phi}  cos(theta/2) e^{-i psi}   ]
///
/// Unitary for any finite parameters.
TwoLevelUnitary build_unitary(const PulseParams& params);

/// Component-wise sum of parameters and perturbations.
PulseParams apply_noise(const PulseParams& params, const PulseNoise& noise);

/// build_unitary(apply_noise(ideal_pulse_params(pulse_id), noise)).
TwoLevelUnitary noisy_unitary(int pulse_id, const PulseNoise& noise);

}  // namespace czgate

#endif  // CZGATE_PULSE_HPP
