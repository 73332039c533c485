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

#include "czgate/rng.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace czgate;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("ideal pulse parameters") {
  const PulseParams p1 = ideal_pulse_params(1);
  CHECK(p1.theta == kPi);
  CHECK(p1.psi == kPi);
  CHECK(p1.phi == 0.0);

  const PulseParams p2 = ideal_pulse_params(2);
  CHECK(p2.theta == 2.0 * kPi);
  CHECK(p2.psi == 0.0);
  CHECK(p2.phi == 0.0);

  const PulseParams p3 = ideal_pulse_params(3);
  CHECK(p3.theta == p1.theta);
  CHECK(p3.psi == p1.psi);
  CHECK(p3.phi == p1.phi);

  CHECK_THROWS_AS(ideal_pulse_params(0), std::invalid_argument);
  CHECK_THROWS_AS(ideal_pulse_params(4), std::invalid_argument);
  CHECK_THROWS_AS(ideal_pulse_params(-1), std::invalid_argument);
}

TEST_CASE("pulse unitary structure") {
  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const PulseParams params{rng.uniform(-8.0, 8.0), rng.uniform(-8.0, 8.0),
                             rng.uniform(-8.0, 8.0)};
    const TwoLevelUnitary u = build_unitary(params);

    CHECK(is_unitary(u));
    // determinant 1 and the conjugation pattern of the printed matrix
    CHECK(std::abs(u.determinant() - Complex{1.0, 0.0}) <= kAlgebraTol);
    CHECK(std::abs(u(1, 1) - std::conj(u(0, 0))) == 0.0);
    CHECK(std::abs(u(1, 0) + std::conj(u(0, 1))) == 0.0);

    // entry magnitudes and phases against the parameters
    CHECK(std::abs(u(0, 0)) ==
          doctest::Approx(std::abs(std::cos(params.theta / 2))).epsilon(1e-12));
    CHECK(std::abs(u(0, 1)) ==
          doctest::Approx(std::abs(std::sin(params.theta / 2))).epsilon(1e-12));
  }
}

TEST_CASE("pulse unitary at specific angles") {
  // theta = pi/3 at zero phases: real rotation-like matrix.
  const TwoLevelUnitary u = build_unitary({kPi / 3.0, 0.0, 0.0});
  CHECK(std::abs(u(0, 0) - std::cos(kPi / 6.0)) <= 1e-15);
  CHECK(std::abs(u(0, 1) - Complex{0.0, std::sin(kPi / 6.0)}) <= 1e-15);

  // phases rotate the entries without changing magnitudes
  const TwoLevelUnitary v = build_unitary({kPi / 3.0, 0.7, -0.4});
  CHECK(std::arg(v(0, 0)) == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(std::arg(v(1, 1)) == doctest::Approx(-0.7).epsilon(1e-12));
  CHECK(std::arg(v(0, 1)) == doctest::Approx(-0.4 + kPi / 2).epsilon(1e-12));
}

TEST_CASE("ideal sideband pulse swaps with phase i") {
  const TwoLevelUnitary u = build_unitary(ideal_pulse_params(1));
  TwoLevelUnitary expected;
  expected << 0.0, Complex{0.0, 1.0}, Complex{0.0, 1.0}, 0.0;
  CHECK(max_abs_diff(u, expected) <= 1e-15);
  // sin(pi/2) is exactly 1, so the swap amplitudes are exact
  CHECK(u(0, 1) == Complex{0.0, 1.0});
  CHECK(u(1, 0) == Complex{0.0, 1.0});
}

TEST_CASE("ideal auxiliary-loop pulse is minus identity") {
  const TwoLevelUnitary u = build_unitary(ideal_pulse_params(2));
  // cos(pi) == -1 in double precision, so the diagonal is exact
  CHECK(u(0, 0) == Complex{-1.0, 0.0});
  CHECK(u(1, 1) == Complex{-1.0, 0.0});
  CHECK(std::abs(u(0, 1)) <= 1e-15);
  CHECK(std::abs(u(1, 0)) <= 1e-15);
}

TEST_CASE("impulse-area offset on the auxiliary-loop pulse") {
  // With theta = 2*pi + d the matrix becomes
  // [[-cos(d/2), ...], [-i sin(d/2) ...]]; these entries feed the leakage
  // amplitude downstream.
  for (const double d : {0.05, 0.2, -0.3}) {
    const TwoLevelUnitary u = noisy_unitary(2, {d, 0.0, 0.0});
    CHECK(std::abs(u(0, 0) + std::cos(d / 2)) <= 1e-14);
    CHECK(std::abs(u(1, 0) + Complex{0.0, std::sin(d / 2)}) <= 1e-14);
  }
}

TEST_CASE("noise application is componentwise") {
  const PulseParams base{1.0, 2.0, 3.0};
  const PulseNoise noise{0.25, -0.5, 0.125};
  const PulseParams shifted = apply_noise(base, noise);
  CHECK(shifted.theta == 1.25);
  CHECK(shifted.psi == 1.5);
  CHECK(shifted.phi == 3.125);

  Rng rng(17);
  const auto noises = czgate::testing::random_noises(rng, 0.5);
  for (int pulse = 1; pulse <= 3; ++pulse) {
    const auto& n = noises[static_cast<std::size_t>(pulse - 1)];
    const TwoLevelUnitary direct = noisy_unitary(pulse, n);
    const TwoLevelUnitary composed =
        build_unitary(apply_noise(ideal_pulse_params(pulse), n));
    CHECK(max_abs_diff(direct, composed) == 0.0);
  }
}

TEST_CASE("noisy pulses stay unitary") {
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    const auto noises = czgate::testing::random_noises(rng, 0.5);
    for (int pulse = 1; pulse <= 3; ++pulse) {
      CHECK(is_unitary(
          noisy_unitary(pulse, noises[static_cast<std::size_t>(pulse - 1)])));
    }
  }
}
