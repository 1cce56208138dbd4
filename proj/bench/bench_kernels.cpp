// Copyright 2026 The tradeoff-capacity Authors
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

#include <vector>

#include <benchmark/benchmark.h>

#include "tradeoff/oracle.hpp"
#include "tradeoff/serial.hpp"

namespace {

using namespace tradeoff;

const CurveEvaluator& unruh_evaluator() {
  static const CurveEvaluator eval(Unruh{0.8, 1e-10});
  return eval;
}

SampleStream cloning_stream(int samples) {
  SearchOptions options;
  options.n_samples = samples;
  options.seed = 11;
  SampleStream s{cloning_channel(3), 2, {}, options};
  return s;
}

std::vector<ChannelFamily> dephasing_sweep() {
  std::vector<ChannelFamily> f;
  for (int i = 0; i <= 20; ++i) f.push_back(Dephasing{i / 20.0});
  return f;
}

void BM_GridSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::evaluate_grid(unruh_evaluator(), CurveKind::CQ, 512));
  }
}
BENCHMARK(BM_GridSerial)->Unit(benchmark::kMillisecond);

void BM_GridParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_grid(unruh_evaluator(), CurveKind::CQ, 512));
  }
}
BENCHMARK(BM_GridParallel)->Unit(benchmark::kMillisecond);

void BM_StreamSerial(benchmark::State& state) {
  const SampleStream s = cloning_stream(static_cast<int>(state.range(0)));
  const std::vector<double> lambdas{1.0, 2.0, 4.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::evaluate_stream(s, CurveKind::CQ, lambdas));
  }
}
BENCHMARK(BM_StreamSerial)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_StreamParallel(benchmark::State& state) {
  const SampleStream s = cloning_stream(static_cast<int>(state.range(0)));
  const std::vector<double> lambdas{1.0, 2.0, 4.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_stream(s, CurveKind::CQ, lambdas));
  }
}
BENCHMARK(BM_StreamParallel)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_GainSweepSerial(benchmark::State& state) {
  const auto families = dephasing_sweep();
  for (auto _ : state) benchmark::DoNotOptimize(serial::gain_sweep(families, 512));
}
BENCHMARK(BM_GainSweepSerial)->Unit(benchmark::kMillisecond);

void BM_GainSweepParallel(benchmark::State& state) {
  const auto families = dephasing_sweep();
  for (auto _ : state) benchmark::DoNotOptimize(gain_sweep(families, 512));
}
BENCHMARK(BM_GainSweepParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
