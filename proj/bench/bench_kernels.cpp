// Copyright 2026 The fwmsq Authors
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


// Serial reference vs OpenMP for each parallel kernel. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fwmsq/fock_oracle.hpp"
#include "fwmsq/gaussian_state.hpp"
#include "fwmsq/noise_fit.hpp"
#include "fwmsq/probe_gen.hpp"

namespace {

using fwmsq::Exec;

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_EngineGrid(benchmark::State& state) {
  std::vector<double> gains;
  std::vector<double> etas;
  for (int i = 0; i < 200; ++i) gains.push_back(1.0 + 0.25 * i);
  for (int j = 0; j < 200; ++j) etas.push_back(0.005 * j);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fwmsq::gaussian::engine_squeezing_grid(gains, etas, 1e4, mode(state)));
  }
  label(state);
}
BENCHMARK(BM_EngineGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

fwmsq::noise::NoiseTrace trace(std::mt19937_64& rng, double level) {
  std::normal_distribution<double> jitter(0.0, 0.3);
  fwmsq::noise::NoiseTrace t;
  t.rbw_hz = 30000;
  t.vbw_hz = 300;
  for (int i = 0; i < 200000; ++i) {
    t.freq_hz.push_back(1e4 + 10.0 * i);
    t.power.push_back(level + jitter(rng));
  }
  return t;
}

void BM_SqueezingSpectrum(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto sq = trace(rng, -88);
  const auto sql = trace(rng, -80);
  const auto el = trace(rng, -95);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fwmsq::noise::squeezing_spectrum(sq, sql, el, mode(state)));
  }
  label(state);
}
BENCHMARK(BM_SqueezingSpectrum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Matmul(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  fwmsq::fock::DenseMatrix a(256);
  fwmsq::fock::DenseMatrix b(256);
  for (auto& x : a.data) x = u(rng);
  for (auto& x : b.data) x = u(rng);
  for (auto _ : state) benchmark::DoNotOptimize(fwmsq::fock::matmul(a, b, mode(state)));
  label(state);
}
BENCHMARK(BM_Matmul)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_FockOracle(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(fwmsq::fock::fock_oracle(2.0, {2.0, 0.0}, 0.8, 0.8, 90, mode(state)));
  }
  label(state);
}
BENCHMARK(BM_FockOracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_EfficiencyScan(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(fwmsq::probe::efficiency_scan(1, 0.0, 10.0, 100001, mode(state)));
  }
  label(state);
}
BENCHMARK(BM_EfficiencyScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
