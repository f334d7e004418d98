// Copyright 2026 The usynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "usynth/bounds.hpp"
#include "usynth/channels.hpp"
#include "usynth/qubit1.hpp"
#include "usynth/random.hpp"
#include "usynth/synth.hpp"

namespace {

using namespace usynth;

void BM_DiamondDistance(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    Rng rng(7);
    const ChoiOperator a = choi(haar_unitary(d, rng));
    const ChoiOperator b = choi(haar_unitary(d, rng));
    for (auto _ : state) benchmark::DoNotOptimize(diamond_distance(a, b).value);
}
BENCHMARK(BM_DiamondDistance)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_OptimalMix(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(11);
    const ChoiOperator target = choi(haar_unitary(2, rng));
    std::vector<ChoiOperator> cands;
    for (std::size_t i = 0; i < n; ++i) cands.push_back(choi(haar_unitary(2, rng)));
    for (auto _ : state) benchmark::DoNotOptimize(optimal_mix(target, cands).value);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OptimalMix)->RangeMultiplier(4)->Range(4, 256)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State &state) {
    const GateSet gs = GateSet::clifford_t();
    const auto len = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_sequences(gs, len).size());
}
BENCHMARK(BM_Enumerate)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_SphereCovering(benchmark::State &state) {
    const double mesh = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sphere_covering(mesh).size());
}
BENCHMARK(BM_SphereCovering)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ProbSynth(benchmark::State &state) {
    static const std::vector<GateSequence> pool = enumerate_sequences(GateSet::clifford_t(), 12);
    const double theta = 0.3;
    const std::vector<Complex> phases{std::polar(1.0, -theta / 2), std::polar(1.0, theta / 2)};
    const Unitary target(ComplexMatrix::diagonal(phases));
    for (auto _ : state) benchmark::DoNotOptimize(prob_synth(target, 0.35, 1e-6, pool, 42).prob_error);
}
BENCHMARK(BM_ProbSynth)->Unit(benchmark::kMillisecond);

void BM_BoundsCurve(benchmark::State &state) {
    for (auto _ : state) {
        double acc = 0.0;
        for (int i = 0; i <= 100; ++i) acc += theorem1_bounds(i / 100.0, 4).upper;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_BoundsCurve);

}  // namespace

BENCHMARK_MAIN();
