// Copyright 2026 The chanspec Authors
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

#include "chanspec/channel.h"
#include "chanspec/linalg.h"
#include "chanspec/nonneg.h"
#include "chanspec/qubit.h"
#include "chanspec/synthesis.h"
#include "chanspec/timeseries.h"

namespace {

using namespace chanspec;

void BM_EigMultiset(benchmark::State &state) {
    const int d = static_cast<int>(state.range(0));
    const ComplexMatrix superop = random_channel(d, 3, 1).superop();
    for (auto _ : state) {
        benchmark::DoNotOptimize(eig_multiset(superop));
    }
}
BENCHMARK(BM_EigMultiset)->Arg(2)->Arg(3)->Arg(4)->Arg(6);

void BM_MultisetMatch(benchmark::State &state) {
    const auto a = eig_multiset(random_channel(6, 2, 2).superop());
    const auto b = eig_multiset(random_channel(6, 2, 2).superop());
    for (auto _ : state) {
        benchmark::DoNotOptimize(multiset_match(a, b, 1e-8));
    }
}
BENCHMARK(BM_MultisetMatch);

void BM_Moments(benchmark::State &state) {
    const Channel c = random_channel(3, 3, 3);
    const auto method = state.range(0) == 0 ? MomentMethod::superop : MomentMethod::kraus;
    for (auto _ : state) {
        benchmark::DoNotOptimize(moments(c, 4, method));
    }
}
BENCHMARK(BM_Moments)->Arg(0)->Arg(1);

void BM_MomentReport(benchmark::State &state) {
    const SpectrumMultiset s{1.0, -0.5, -0.3, Complex(0.2, 0.4), Complex(0.2, -0.4)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(moment_report(s, 64, {5}));
    }
}
BENCHMARK(BM_MomentReport);

void BM_QubitCheck(benchmark::State &state) {
    const auto s = eig_multiset(random_channel(2, 3, 4).superop());
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_qubit_cp_spectrum(s));
    }
}
BENCHMARK(BM_QubitCheck);

void BM_NniepOptimize(benchmark::State &state) {
    const SpectrumMultiset target{1.0, 1.0, 1.0, -1.0};
    OptimizerOptions o;
    o.jobs = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(nniep_optimize(target, 4, o));
    }
}
BENCHMARK(BM_NniepOptimize)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SynthNonzero(benchmark::State &state) {
    const SpectrumMultiset target{1.0, 0.3, -0.4, 0.1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(synth_nonzero_spectrum(target));
    }
}
BENCHMARK(BM_SynthNonzero)->Unit(benchmark::kMillisecond);

void BM_FitRecurrence(benchmark::State &state) {
    const auto sys = damped_rotation_system(0.58, 2.0 / 3.0);
    const auto s = generate_series(sys.transfer, sys.observable, sys.state, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_recurrence(s));
    }
}
BENCHMARK(BM_FitRecurrence)->Arg(16)->Arg(64)->Arg(256);

void BM_SeriesVerdict(benchmark::State &state) {
    const auto sys = damped_rotation_system(0.58, 2.0 / 3.0);
    const auto s = generate_series(sys.transfer, sys.observable, sys.state, 64);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qubit_series_verdict(s));
    }
}
BENCHMARK(BM_SeriesVerdict);

}  // namespace

BENCHMARK_MAIN();
