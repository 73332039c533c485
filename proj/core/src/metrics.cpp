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

#include "czgate/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "czgate/rng.hpp"

namespace czgate {

namespace {

double checked_probability(double value, const char* label) {
  if (value < -kAlgebraTol || value > 1.0 + kAlgebraTol) {
    std::ostringstream msg;
    msg << label << " outside [0, 1]: " << value;
    throw ValidationError(msg.str());
  }
  return std::clamp(value, 0.0, 1.0);
}

void check_unit_vector(const Vec4& v) {
  if (std::abs(v.norm() - 1.0) > kAlgebraTol) {
    std::ostringstream msg;
    msg << "input state vector not normalized: |v| = " << v.norm();
    throw ValidationError(msg.str());
  }
}

}  // namespace

Mat4 cnot_matrix() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = 1.0;
  return m;
}

LeakageProbabilities leakage_probabilities(const ReducedState& state) {
  LeakageProbabilities p;
  p.p_main = checked_probability(state.rho1.trace().real(), "p_main");
  p.p_anc = checked_probability(state.rho4.trace().real(), "p_anc");
  return p;
}

double state_fidelity(const ReducedState& state, const Vec4& input) {
  check_unit_vector(input);
  const Vec4 target = cnot_matrix() * input;
  const double overlap = (target.adjoint() * state.rho1 * target)(0, 0).real();
  return checked_probability(overlap, "state fidelity");
}

double conditional_state_fidelity(const ReducedState& state,
                                  const Vec4& input) {
  check_unit_vector(input);
  const double weight = state.rho1.trace().real();
  if (weight <= kAlgebraTol) {
    throw ValidationError(
        "cannot condition on the computational block: trace(rho1) is zero");
  }
  const Vec4 target = cnot_matrix() * input;
  const double overlap = (target.adjoint() * state.rho1 * target)(0, 0).real();
  return checked_probability(overlap / weight, "conditional state fidelity");
}

double average_fidelity(const KrausSet& kraus, int samples,
                        std::uint64_t seed) {
  if (samples < 1) {
    throw std::invalid_argument("fidelity sample count must be >= 1 (got " +
                                std::to_string(samples) + ")");
  }

  // For a pure input |phi> the main-block overlap reduces to
  // |<psi|A1|phi>|^2 + |<psi|C1|phi>|^2 with |psi> = CNOT|phi>, which
  // avoids forming any density matrix in the sampling loop.
  const Mat4 a1t = cnot_matrix().adjoint() * kraus.a1;
  const Mat4 c1t = cnot_matrix().adjoint() * kraus.c1;

  Rng rng(seed);
  double sum = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Vec4 phi = rng.haar_state();
    const Complex a = (phi.adjoint() * (a1t * phi))(0, 0);
    const Complex c = (phi.adjoint() * (c1t * phi))(0, 0);
    sum += std::norm(a) + std::norm(c);
  }
  return checked_probability(sum / static_cast<double>(samples),
                             "average fidelity");
}

}  // namespace czgate
