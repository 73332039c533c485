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

#ifndef CZGATE_SWEEP_HPP
#define CZGATE_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "czgate/metrics.hpp"

namespace czgate {

/// Input state selector for a run.
struct InputSpec {
  enum class Kind { kMixed, kBasis, kMatrix };

  Kind kind = Kind::kMixed;
  int basis_index = 0;
  Mat4 matrix = Mat4::Zero();

  /// Maximally mixed I/4.
  static InputSpec mixed();
  /// Pure computational basis state; index in 0..3.
  static InputSpec basis(int index);
  /// Explicit 4x4 state, validated on resolve().
  static InputSpec matrix_input(const Mat4& rho);

  /// The 4x4 density matrix this spec denotes, validated.
  Mat4 resolve() const;

  /// The pure state vector, when the input is a basis state.
  std::optional<Vec4> pure_state() const;
};

struct RunConfig {
  std::array<PulseNoise, 3> noises{};
  HadamardMode mode = HadamardMode::kPaper;
  InputSpec input;
  int fidelity_samples = 512;
  std::uint64_t seed = 0;
};

/// The nine sweepable noise parameters, in emission column order.
enum class NoiseParam {
  kDTheta1, kDPsi1, kDPhi1,
  kDTheta2, kDPsi2, kDPhi2,
  kDTheta3, kDPsi3, kDPhi3,
};

inline constexpr int kNumNoiseParams = 9;

/// Canonical names: "dtheta1", "dpsi1", "dphi1", ..., "dphi3".
const std::array<std::string, kNumNoiseParams>& noise_param_names();

/// Parses "dtheta1" or "d_theta1" style names. Throws std::invalid_argument
/// listing the nine valid names on failure.
NoiseParam parse_noise_param(const std::string& name);

void set_noise_param(RunConfig& config, NoiseParam param, double value);
double get_noise_param(const RunConfig& config, NoiseParam param);

/// Full pipeline for one configuration: compose the gate, lift and evolve
/// the input, trace out the phonon, split blocks, compute leakage and
/// fidelity, and cross-check the two Kraus derivations (closed form vs the
/// matrix pipeline in the kPaper embedding), recording the max residual.
ChannelReport run_single(const RunConfig& config);

struct SweepAxis {
  NoiseParam param;
  double from = 0.0;
  double to = 0.0;
  int steps = 2;  // >= 2; grid is from + k*(to-from)/(steps-1), both endpoints
};

struct SweepSpec {
  RunConfig base;
  std::vector<SweepAxis> axes;  // one or two distinct parameters
};

/// One report per grid point in row-major axis order (first axis outermost).
/// Output is identical for any thread count; threads <= 1 runs serially.
std::vector<ChannelReport> run_sweep(const SweepSpec& spec, int threads = 1);

struct MonteCarloSpec {
  double sigma_theta = 0.0;  // per-class std deviations, radians,
  double sigma_psi = 0.0;    // applied independently to all three pulses
  double sigma_phi = 0.0;
  int samples = 1;
  std::uint64_t seed = 0;
  HadamardMode mode = HadamardMode::kPaper;
  InputSpec input;
  int fidelity_samples = 512;
};

struct SummaryStats {
  double mean, min, max, p05, p50, p95;
};

struct MonteCarloResult {
  SummaryStats p_anc;
  SummaryStats avg_fidelity;
  std::vector<ChannelReport> rows;  // filled iff keep_rows
};

/// Draws nine independent Gaussian perturbations per sample (mean 0, class
/// sigma, in column order dtheta1..dphi3) and evaluates run_single on each.
/// Sample i uses the derived seeds derive_seed(seed, 2i) for the noise draw
/// and derive_seed(seed, 2i+1) for its fidelity samples, so output is
/// bit-identical for a fixed spec regardless of thread count.
/// Percentiles use linear interpolation at rank q*(n-1) on sorted values.
/// Throws std::invalid_argument for negative sigma or samples < 1.
MonteCarloResult run_montecarlo(const MonteCarloSpec& spec,
                                bool keep_rows = false, int threads = 1);

}  // namespace czgate

#endif  // CZGATE_SWEEP_HPP
