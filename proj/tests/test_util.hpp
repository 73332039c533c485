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

#ifndef CZGATE_TESTS_TEST_UTIL_HPP
#define CZGATE_TESTS_TEST_UTIL_HPP

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>

#include "czgate/rng.hpp"
#include "czgate/sweep.hpp"

namespace czgate::testing {

/// One noise triple with every component uniform in [-magnitude, magnitude],
/// drawn in column order (theta, psi, phi per pulse).
inline std::array<PulseNoise, 3> random_noises(Rng& rng, double magnitude) {
  std::array<PulseNoise, 3> noises;
  for (auto& noise : noises) {
    noise.d_theta = rng.uniform(-magnitude, magnitude);
    noise.d_psi = rng.uniform(-magnitude, magnitude);
    noise.d_phi = rng.uniform(-magnitude, magnitude);
  }
  return noises;
}

inline double kraus_max_diff(const KrausSet& lhs, const KrausSet& rhs) {
  return std::max({max_abs_diff(lhs.a1, rhs.a1), max_abs_diff(lhs.a3, rhs.a3),
                   max_abs_diff(lhs.c1, rhs.c1), max_abs_diff(lhs.c3, rhs.c3)});
}

/// Full pipeline without metrics: gate application, phonon trace, block
/// split. Used as the independent oracle against the Kraus routes.
inline ReducedState pipeline_state(const std::array<PulseNoise, 3>& noises,
                                   const Mat4& rho,
                                   HadamardMode mode = HadamardMode::kPaper) {
  const GateMatrix gate = compose_gate(noises, mode);
  return split_blocks(trace_out_phonon(evolve(lift_input(rho), gate)));
}

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout only; stderr is left on the test's stderr
};

/// Runs a shell command and captures its standard output.
inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"),
                                             pclose);
  if (!pipe) return result;

  std::array<char, 4096> buffer;
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe.get())) > 0) {
    result.output.append(buffer.data(), n);
  }
  const int status = pclose(pipe.release());
  result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status)
                                                        : status;
  return result;
}

}  // namespace czgate::testing

#endif  // CZGATE_TESTS_TEST_UTIL_HPP
