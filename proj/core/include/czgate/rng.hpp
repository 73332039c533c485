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

#ifndef CZGATE_RNG_HPP
#define CZGATE_RNG_HPP

#include <cstdint>
#include <random>

#include "czgate/types.hpp"

namespace czgate {

/// Deterministic random source. The algorithm is frozen so that results
/// reproduce for a fixed seed:
///   - engine: std::mt19937_64 (bit-stable across platforms),
///   - uniform doubles: (x >> 11) * 2^-53, giving [0, 1),
///   - standard normals: Box-Muller on consecutive uniform pairs, with the
///     second value of each pair cached for the next call,
///   - Haar-random states: four complex components drawn as standard normals
///     in re,im order, then normalized to unit length.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double uniform();

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);

  /// Standard normal deviate.
  double gaussian();

  /// Haar-random pure state on the 4-dim computational subspace.
  Vec4 haar_state();

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

/// Stable per-stream seed derivation (splitmix64 finalizer over
/// base + (stream+1) * golden ratio). Used to give Monte Carlo samples
/// independent, index-addressed substreams whose values do not depend on
/// evaluation order or thread count.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace czgate

#endif  // CZGATE_RNG_HPP
