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

#ifndef CZGATE_METRICS_HPP
#define CZGATE_METRICS_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "czgate/channel.hpp"

namespace czgate {

/// The controlled-not permutation on the computational basis
/// |control target>.
Mat4 cnot_matrix();

struct LeakageProbabilities {
  double p_main;  // trace of the computational block rho1
  double p_anc;   // trace of the auxiliary block rho4
};

/// Traces of rho1 and rho4 of a state obtained from a normalized input.
/// Each value is sanity-checked against [-1e-12, 1 + 1e-12] (ValidationError
/// outside that window) and then clamped to [0, 1].
LeakageProbabilities leakage_probabilities(const ReducedState& state);

/// Overlap of the evolved state with the ideal controlled-not output:
/// F = <phi| rho1 |phi> with |phi> = cnot_matrix() * input. rho1 enters
/// unnormalized, so leakage out of the computational block depresses F.
/// Throws ValidationError if input is not unit-norm within 1e-12.
double state_fidelity(const ReducedState& state, const Vec4& input);

/// Renormalized variant: overlap with rho1 / trace(rho1), i.e. the fidelity
/// conditioned on the state not having leaked. Equals state_fidelity when
/// trace(rho1) = 1.
double conditional_state_fidelity(const ReducedState& state, const Vec4& input);

/// Mean of state_fidelity over `samples` Haar-random pure inputs drawn from
/// Rng(seed), accumulated in draw order. Deterministic for a fixed seed.
/// Throws std::invalid_argument if samples < 1.
double average_fidelity(const KrausSet& kraus, int samples, std::uint64_t seed);

/// One full evaluation of the noisy channel.
struct ChannelReport {
  std::array<PulseNoise, 3> noises{};
  HadamardMode mode = HadamardMode::kPaper;
  double p_main = 1.0;
  double p_anc = 0.0;
  double avg_fidelity = 1.0;
  /// Present for pure (basis) inputs only.
  std::optional<double> state_fidelity;
  /// Max entrywise deviation between the closed-form Kraus operators and the
  /// ones extracted from the composed gate (kPaper embedding).
  double kraus_cross_residual = 0.0;
  std::uint64_t seed = 0;
  int fidelity_samples = 0;
};

}  // namespace czgate

#endif  // CZGATE_METRICS_HPP
