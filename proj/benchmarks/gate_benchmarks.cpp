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

#include <benchmark/benchmark.h>

#include <array>

#include "czgate/channel.hpp"
#include "czgate/level_space.hpp"
#include "czgate/metrics.hpp"
#include "czgate/pulse.hpp"
#include "czgate/sweep.hpp"

using namespace czgate;

namespace {

std::array<PulseNoise, 3> bench_noises() {
  std::array<PulseNoise, 3> noises{};
  noises[0] = PulseNoise{0.03, -0.02, 0.01};
  noises[1] = PulseNoise{-0.05, 0.02, 0.04};
  noises[2] = PulseNoise{0.02, 0.01, -0.03};
  return noises;
}

}  // namespace

static void BM_BuildUnitary(benchmark::State& state) {
  const PulseNoise noise{0.03, -0.02, 0.01};
  for (auto _ : state) {
    TwoLevelUnitary u = noisy_unitary(1, noise);
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(BM_BuildUnitary);

static void BM_ComposeGate(benchmark::State& state) {
  const auto noises = bench_noises();
  for (auto _ : state) {
    GateMatrix gate = compose_gate(noises);
    benchmark::DoNotOptimize(gate);
  }
}
BENCHMARK(BM_ComposeGate);

static void BM_KrausFromGate(benchmark::State& state) {
  const GateMatrix gate = compose_gate(bench_noises());
  for (auto _ : state) {
    KrausSet kraus = kraus_from_gate(gate);
    benchmark::DoNotOptimize(kraus);
  }
}
BENCHMARK(BM_KrausFromGate);

static void BM_KrausClosedForm(benchmark::State& state) {
  const auto noises = bench_noises();
  const TwoLevelUnitary u1 = noisy_unitary(1, noises[0]);
  const TwoLevelUnitary u2 = noisy_unitary(2, noises[1]);
  const TwoLevelUnitary u3 = noisy_unitary(3, noises[2]);
  for (auto _ : state) {
    KrausSet kraus = kraus_closed_form(u1, u2, u3);
    benchmark::DoNotOptimize(kraus);
  }
}
BENCHMARK(BM_KrausClosedForm);

static void BM_FullPipeline(benchmark::State& state) {
  const GateMatrix gate = compose_gate(bench_noises());
  const Mat4 rho4 = Mat4::Identity() / 4.0;
  for (auto _ : state) {
    ReducedState out =
        split_blocks(trace_out_phonon(evolve(lift_input(rho4), gate)));
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_FullPipeline);

static void BM_ApplyChannel(benchmark::State& state) {
  const KrausSet kraus = kraus_from_gate(compose_gate(bench_noises()));
  const Mat4 rho4 = Mat4::Identity() / 4.0;
  for (auto _ : state) {
    ReducedState out = apply_channel(kraus, rho4);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_ApplyChannel);

static void BM_AverageFidelity(benchmark::State& state) {
  const KrausSet kraus = kraus_from_gate(compose_gate(bench_noises()));
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    double fidelity = average_fidelity(kraus, samples, 42);
    benchmark::DoNotOptimize(fidelity);
  }
  state.SetItemsProcessed(state.iterations() * samples);
}
BENCHMARK(BM_AverageFidelity)->Arg(64)->Arg(512)->Arg(4096);

static void BM_RunSingle(benchmark::State& state) {
  RunConfig config;
  config.noises = bench_noises();
  config.fidelity_samples = 512;
  for (auto _ : state) {
    ChannelReport report = run_single(config);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_RunSingle);

static void BM_MonteCarlo(benchmark::State& state) {
  MonteCarloSpec spec;
  spec.sigma_theta = 0.05;
  spec.samples = 64;
  spec.fidelity_samples = 32;
  spec.seed = 42;
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    MonteCarloResult result = run_montecarlo(spec, false, threads);
    benchmark::DoNotOptimize(result);
  }
  state.SetItemsProcessed(state.iterations() * spec.samples);
}
BENCHMARK(BM_MonteCarlo)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
