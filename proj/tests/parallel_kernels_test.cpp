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


#include <gtest/gtest.h>

#include <cstring>
#include <random>
#include <vector>

#include "fwmsq/fock_oracle.hpp"
#include "fwmsq/gaussian_state.hpp"
#include "fwmsq/noise_fit.hpp"
#include "fwmsq/probe_gen.hpp"

namespace fwmsq {
namespace {

// Bitwise equality, so that NaN bins compare equal to themselves.
bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

TEST(Parallel, EngineGridMatchesSerial) {
  std::vector<double> gains;
  std::vector<double> etas;
  for (int i = 0; i < 37; ++i) gains.push_back(1.0 + 0.5 * i);
  for (int j = 0; j < 29; ++j) etas.push_back(0.3 + 0.025 * j);
  const auto serial = gaussian::engine_squeezing_grid(gains, etas, 1e4, Exec::serial);
  const auto parallel = gaussian::engine_squeezing_grid(gains, etas, 1e4, Exec::parallel);
  EXPECT_EQ(serial.size(), gains.size() * etas.size());
  EXPECT_TRUE(same_bits(serial, parallel));
}

noise::NoiseTrace random_trace(std::mt19937_64& rng, double level, std::size_t n) {
  std::normal_distribution<double> jitter(0.0, 1.5);
  noise::NoiseTrace t;
  t.rbw_hz = 30000;
  t.vbw_hz = 300;
  for (std::size_t i = 0; i < n; ++i) {
    t.freq_hz.push_back(1e4 + 1e3 * static_cast<double>(i));
    t.power.push_back(level + jitter(rng));
  }
  return t;
}

TEST(Parallel, SqueezingSpectrumMatchesSerial) {
  std::mt19937_64 rng(7);
  const auto sq = random_trace(rng, -88, 5000);
  const auto sql = random_trace(rng, -80, 5000);
  // Close to the SQL so a fraction of bins turns invalid.
  const auto el = random_trace(rng, -82, 5000);
  const auto serial = noise::squeezing_spectrum(sq, sql, el, Exec::serial);
  const auto parallel = noise::squeezing_spectrum(sq, sql, el, Exec::parallel);
  EXPECT_FALSE(serial.invalid_bins.empty());
  EXPECT_EQ(serial.invalid_bins, parallel.invalid_bins);
  EXPECT_TRUE(same_bits(serial.trace.power, parallel.trace.power));
}

TEST(Parallel, MatmulAndExpmMatchSerial) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  fock::DenseMatrix a(70);
  fock::DenseMatrix b(70);
  for (auto& x : a.data) x = u(rng);
  for (auto& x : b.data) x = u(rng);
  EXPECT_TRUE(same_bits(fock::matmul(a, b, Exec::serial).data, fock::matmul(a, b, Exec::parallel).data));
  EXPECT_TRUE(same_bits(fock::expm(a, Exec::serial).data, fock::expm(a, Exec::parallel).data));
}

TEST(Parallel, FockOracleMatchesSerial) {
  const auto s = fock::fock_oracle(1.5, {1.0, 0.5}, 0.8, 0.7, 40, Exec::serial);
  const auto p = fock::fock_oracle(1.5, {1.0, 0.5}, 0.8, 0.7, 40, Exec::parallel);
  EXPECT_EQ(std::memcmp(&s, &p, sizeof(s)), 0);
}

TEST(Parallel, EfficiencyScanMatchesSerial) {
  for (int order : {1, 2, 5}) {
    EXPECT_TRUE(same_bits(probe::efficiency_scan(order, 0.0, 10.0, 4001, Exec::serial),
                          probe::efficiency_scan(order, 0.0, 10.0, 4001, Exec::parallel)));
  }
}

}  // namespace
}  // namespace fwmsq
