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

#include "czgate/sweep.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "czgate/rng.hpp"

namespace czgate {

namespace {

// Runs fn(i) for i in [0, n) on up to `threads` workers with fixed
// contiguous chunks. Each index owns its output slot, so results do not
// depend on the worker count. The first exception wins and is rethrown
// on the calling thread.
void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  const int workers = std::min(std::max(threads, 1), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }

  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));

  const int chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int begin = w * chunk;
    const int end = std::min(begin + chunk, n);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      try {
        for (int i = begin; i < end; ++i) fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

double percentile(const std::vector<double>& sorted, double q) {
  const auto n = sorted.size();
  if (n == 1) return sorted.front();
  const double rank = q * static_cast<double>(n - 1);
  const auto lo = static_cast<std::size_t>(rank);
  const std::size_t hi = std::min(lo + 1, n - 1);
  const double frac = rank - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

SummaryStats summarize(std::vector<double> values) {
  double sum = 0.0;
  for (const double v : values) sum += v;
  std::sort(values.begin(), values.end());

  SummaryStats stats;
  stats.mean = sum / static_cast<double>(values.size());
  stats.min = values.front();
  stats.max = values.back();
  stats.p05 = percentile(values, 0.05);
  stats.p50 = percentile(values, 0.50);
  stats.p95 = percentile(values, 0.95);
  return stats;
}

double kraus_residual(const KrausSet& lhs, const KrausSet& rhs) {
  return std::max({max_abs_diff(lhs.a1, rhs.a1), max_abs_diff(lhs.a3, rhs.a3),
                   max_abs_diff(lhs.c1, rhs.c1), max_abs_diff(lhs.c3, rhs.c3)});
}

}  // namespace

InputSpec InputSpec::mixed() {
  InputSpec spec;
  spec.kind = Kind::kMixed;
  return spec;
}

InputSpec InputSpec::basis(int index) {
  if (index < 0 || index > 3) {
    throw std::invalid_argument("basis index must be in [0, 3] (got " +
                                std::to_string(index) + ")");
  }
  InputSpec spec;
  spec.kind = Kind::kBasis;
  spec.basis_index = index;
  return spec;
}

InputSpec InputSpec::matrix_input(const Mat4& rho) {
  InputSpec spec;
  spec.kind = Kind::kMatrix;
  spec.matrix = rho;
  return spec;
}

Mat4 InputSpec::resolve() const {
  switch (kind) {
    case Kind::kMixed:
      return Mat4::Identity() / 4.0;
    case Kind::kBasis: {
      Mat4 rho = Mat4::Zero();
      rho(basis_index, basis_index) = 1.0;
      return rho;
    }
    case Kind::kMatrix:
      validate_density(matrix);
      return matrix;
  }
  throw std::invalid_argument("unknown input kind");
}

std::optional<Vec4> InputSpec::pure_state() const {
  if (kind != Kind::kBasis) return std::nullopt;
  return Vec4::Unit(basis_index);
}

const std::array<std::string, kNumNoiseParams>& noise_param_names() {
  static const std::array<std::string, kNumNoiseParams> names = {
      "dtheta1", "dpsi1", "dphi1", "dtheta2", "dpsi2",
      "dphi2",   "dtheta3", "dpsi3", "dphi3"};
  return names;
}

NoiseParam parse_noise_param(const std::string& name) {
  std::string canon;
  canon.reserve(name.size());
  for (const char c : name) {
    if (c == '_') continue;
    canon.push_back(static_cast<char>(
        std::tolower(static_cast<unsigned char>(c))));
  }

  const auto& names = noise_param_names();
  for (int i = 0; i < kNumNoiseParams; ++i) {
    if (canon == names[static_cast<std::size_t>(i)]) {
      return static_cast<NoiseParam>(i);
    }
  }

  std::ostringstream msg;
  msg << "unknown noise parameter '" << name << "'; valid names:";
  for (const auto& n : names) msg << " " << n;
  throw std::invalid_argument(msg.str());
}

void set_noise_param(RunConfig& config, NoiseParam param, double value) {
  const int idx = static_cast<int>(param);
  PulseNoise& noise = config.noises[static_cast<std::size_t>(idx / 3)];
  switch (idx % 3) {
    case 0: noise.d_theta = value; break;
    case 1: noise.d_psi = value; break;
    default: noise.d_phi = value; break;
  }
}

double get_noise_param(const RunConfig& config, NoiseParam param) {
  const int idx = static_cast<int>(param);
  const PulseNoise& noise = config.noises[static_cast<std::size_t>(idx / 3)];
  switch (idx % 3) {
    case 0: return noise.d_theta;
    case 1: return noise.d_psi;
    default: return noise.d_phi;
  }
}

ChannelReport run_single(const RunConfig& config) {
  const Mat4 rho = config.input.resolve();
  const GateMatrix gate = compose_gate(config.noises, config.mode);

  const ReducedState state =
      split_blocks(trace_out_phonon(evolve(lift_input(rho), gate)));
  const LeakageProbabilities leakage = leakage_probabilities(state);

  // Cross-check the two Kraus derivations. The closed form is defined for
  // the kPaper embedding, so the extraction side always uses that mode.
  const GateMatrix paper_gate = (config.mode == HadamardMode::kPaper)
                                    ? gate
                                    : compose_gate(config.noises,
                                                   HadamardMode::kPaper);
  const KrausSet extracted = kraus_from_gate(paper_gate);
  const KrausSet closed =
      kraus_closed_form(noisy_unitary(1, config.noises[0]),
                        noisy_unitary(2, config.noises[1]),
                        noisy_unitary(3, config.noises[2]));

  ChannelReport report;
  report.noises = config.noises;
  report.mode = config.mode;
  report.p_main = leakage.p_main;
  report.p_anc = leakage.p_anc;
  report.kraus_cross_residual = kraus_residual(extracted, closed);
  report.seed = config.seed;
  report.fidelity_samples = config.fidelity_samples;

  const KrausSet mode_kraus = (config.mode == HadamardMode::kPaper)
                                  ? extracted
                                  : kraus_from_gate(gate);
  report.avg_fidelity =
      average_fidelity(mode_kraus, config.fidelity_samples, config.seed);

  if (const auto pure = config.input.pure_state()) {
    report.state_fidelity = state_fidelity(state, *pure);
  }
  return report;
}

std::vector<ChannelReport> run_sweep(const SweepSpec& spec, int threads) {
  if (spec.axes.empty() || spec.axes.size() > 2) {
    throw std::invalid_argument("sweep takes one or two axes (got " +
                                std::to_string(spec.axes.size()) + ")");
  }
  if (spec.axes.size() == 2 && spec.axes[0].param == spec.axes[1].param) {
    throw std::invalid_argument("sweep axes must name distinct parameters");
  }
  for (const SweepAxis& axis : spec.axes) {
    if (axis.steps < 2) {
      throw std::invalid_argument("sweep axis needs at least 2 steps (got " +
                                  std::to_string(axis.steps) + ")");
    }
    if (axis.from > axis.to) {
      throw std::invalid_argument("sweep axis range must satisfy from <= to");
    }
  }

  const auto axis_value = [](const SweepAxis& axis, int k) {
    return axis.from + (axis.to - axis.from) * static_cast<double>(k) /
                           static_cast<double>(axis.steps - 1);
  };

  const int inner_steps = (spec.axes.size() == 2) ? spec.axes[1].steps : 1;
  const int total = spec.axes[0].steps * inner_steps;

  std::vector<ChannelReport> reports(static_cast<std::size_t>(total));
  parallel_for(total, threads, [&](int i) {
    RunConfig config = spec.base;
    set_noise_param(config, spec.axes[0].param,
                    axis_value(spec.axes[0], i / inner_steps));
    if (spec.axes.size() == 2) {
      set_noise_param(config, spec.axes[1].param,
                      axis_value(spec.axes[1], i % inner_steps));
    }
    reports[static_cast<std::size_t>(i)] = run_single(config);
  });
  return reports;
}

MonteCarloResult run_montecarlo(const MonteCarloSpec& spec, bool keep_rows,
                                int threads) {
  if (spec.sigma_theta < 0.0 || spec.sigma_psi < 0.0 || spec.sigma_phi < 0.0) {
    throw std::invalid_argument("noise standard deviations must be >= 0");
  }
  if (spec.samples < 1) {
    throw std::invalid_argument("sample count must be >= 1 (got " +
                                std::to_string(spec.samples) + ")");
  }

  std::vector<ChannelReport> rows(static_cast<std::size_t>(spec.samples));
  parallel_for(spec.samples, threads, [&](int i) {
    const auto stream = static_cast<std::uint64_t>(i);
    Rng noise_rng(derive_seed(spec.seed, 2 * stream));

    RunConfig config;
    config.mode = spec.mode;
    config.input = spec.input;
    config.fidelity_samples = spec.fidelity_samples;
    config.seed = derive_seed(spec.seed, 2 * stream + 1);

    // All nine deviates are drawn even when a class sigma is zero, so the
    // noise pattern for a given (seed, sample) pair does not shift when
    // another class is switched on.
    for (std::size_t pulse = 0; pulse < 3; ++pulse) {
      config.noises[pulse].d_theta = spec.sigma_theta * noise_rng.gaussian();
      config.noises[pulse].d_psi = spec.sigma_psi * noise_rng.gaussian();
      config.noises[pulse].d_phi = spec.sigma_phi * noise_rng.gaussian();
    }
    rows[static_cast<std::size_t>(i)] = run_single(config);
  });

  std::vector<double> p_anc_values;
  std::vector<double> fidelity_values;
  p_anc_values.reserve(rows.size());
  fidelity_values.reserve(rows.size());
  for (const ChannelReport& row : rows) {
    p_anc_values.push_back(row.p_anc);
    fidelity_values.push_back(row.avg_fidelity);
  }

  MonteCarloResult result;
  result.p_anc = summarize(std::move(p_anc_values));
  result.avg_fidelity = summarize(std::move(fidelity_values));
  if (keep_rows) result.rows = std::move(rows);
  return result;
}

}  // namespace czgate
