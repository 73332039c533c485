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

#include "czgate/rng.hpp"

#include <cmath>
#include <numbers>

namespace czgate {

double Rng::uniform() {
  // 53 high bits of the engine output, scaled to [0, 1). Avoids
  // std::uniform_real_distribution, whose output is not specified
  // bit-for-bit across standard library implementations.
  const std::uint64_t bits = engine_() >> 11;
  return static_cast<double>(bits) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  // Box-Muller. The log argument is flipped to (0, 1] so it never sees zero.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

Vec4 Rng::haar_state() {
  Vec4 v;
  for (int i = 0; i < 4; ++i) {
    const double re = gaussian();
    const double im = gaussian();
    v(i) = Complex{re, im};
  }
  return v / v.norm();
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  // splitmix64 finalizer over golden-ratio stream offsets; full avalanche,
  // so adjacent (base, stream) pairs give unrelated seeds.
  std::uint64_t z = base + (stream + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace czgate
