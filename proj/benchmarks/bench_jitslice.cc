// Copyright 2026 The jitslice Authors
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

#include <random>
#include <set>

#include "jitslice/harness.h"

namespace jitslice {
namespace {

CodeLabel code_arg(std::int64_t i) { return kAllCodes.at(static_cast<std::size_t>(i)); }

void BM_BuildSlice(benchmark::State &state) {
    auto code = code_arg(state.range(0));
    int L = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_slice(code, L, 1));
    }
}
BENCHMARK(BM_BuildSlice)->ArgsProduct({{0, 1, 2}, {3, 5, 7}})->Unit(benchmark::kMillisecond);

void BM_SliceCache(benchmark::State &state) {
    auto code = code_arg(state.range(0));
    int L = static_cast<int>(state.range(1));
    for (auto _ : state) {
        SliceCache cache(code, L, (L + 1) / 2);
        benchmark::DoNotOptimize(cache.timesteps());
    }
}
BENCHMARK(BM_SliceCache)->ArgsProduct({{0, 1, 2}, {3, 5, 7}})->Unit(benchmark::kMillisecond);

void BM_Mwpm(benchmark::State &state) {
    auto slice = build_slice(CodeLabel::C, 7, 1);
    int k = static_cast<int>(state.range(0));
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> pick(0, slice->dual.num_real - 1);
    std::vector<std::vector<int>> inputs;
    for (int i = 0; i < 64; i++) {
        std::set<int> s;
        while (static_cast<int>(s.size()) < k) {
            s.insert(pick(rng));
        }
        inputs.emplace_back(s.begin(), s.end());
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mwpm(inputs[i++ % inputs.size()], *slice));
    }
}
BENCHMARK(BM_Mwpm)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_RunTrial(benchmark::State &state) {
    TrialConfig cfg;
    cfg.code = code_arg(state.range(0));
    cfg.L = static_cast<int>(state.range(1));
    cfg.p = 1e-3;
    SliceCache cache(cfg.code, cfg.L, cfg.effective_timesteps());
    std::int64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trial(cfg, i++, cache));
    }
    state.SetItemsProcessed(i);
}
BENCHMARK(BM_RunTrial)->ArgsProduct({{0, 1, 2}, {3, 5, 7}})->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace jitslice

BENCHMARK_MAIN();
