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

#include "fwmsq/fock_oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "fwmsq/gaussian_state.hpp"

namespace fwmsq::fock {
namespace {

namespace g = ::fwmsq::gaussian;

g::GaussianTwoModeState engine(double gain, double seed_photons, double eta_a, double eta_b) {
  auto s = g::displace(g::vacuum_state(), {std::sqrt(seed_photons), 0.0}, g::Mode::probe);
  s = g::apply_two_mode_squeeze(s, gain);
  s = g::apply_loss(s, eta_a, g::Mode::probe);
  return g::apply_loss(s, eta_b, g::Mode::conjugate);
}

TEST(Expm, ZeroMatrixIsIdentity) {
  const DenseMatrix e = expm(DenseMatrix(5));
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 5; ++c) EXPECT_EQ(e(r, c), r == c ? 1.0 : 0.0);
  }
}

TEST(Expm, RotationGenerator) {
  for (double theta : {0.1, 1.0, 3.0, 40.0}) {
    DenseMatrix a(2);
    a(0, 1) = theta;
    a(1, 0) = -theta;
    const DenseMatrix e = expm(a);
    EXPECT_NEAR(e(0, 0), std::cos(theta), 1e-11);
    EXPECT_NEAR(e(0, 1), std::sin(theta), 1e-11);
    EXPECT_NEAR(e(1, 0), -std::sin(theta), 1e-11);
    EXPECT_NEAR(e(1, 1), std::cos(theta), 1e-11);
  }
}

TEST(Expm, DiagonalMatchesScalarExponential) {
  DenseMatrix a(3);
  a(0, 0) = -2.0;
  a(1, 1) = 0.5;
  a(2, 2) = 3.0;
  const DenseMatrix e = expm(a);
  EXPECT_NEAR(e(0, 0), std::exp(-2.0), 1e-12);
  EXPECT_NEAR(e(1, 1), std::exp(0.5), 1e-12);
  EXPECT_NEAR(e(2, 2) / std::exp(3.0), 1.0, 1e-12);
}

TEST(Oracle, UnitGainVacuumIsEmpty) {
  const auto m = fock_oracle(1.0, 0.0, 1.0, 1.0, 10);
  EXPECT_EQ(m.mean_a, 0.0);
  EXPECT_EQ(m.mean_b, 0.0);
  EXPECT_EQ(m.nd_variance, 0.0);
}

TEST(Oracle, SpontaneousEmissionAtGainTwo) {
  // Thermal with ratio 1/2: P(n > 40) ~ 5e-13.
  const auto m = fock_oracle(2.0, 0.0, 1.0, 1.0, 40);
  EXPECT_NEAR(m.mean_a, 1.0, 1e-9);
  EXPECT_NEAR(m.mean_b, 1.0, 1e-9);
  EXPECT_NEAR(m.nd_variance, 0.0, 1e-12);
}

// The vacuum-seeded conjugate at G = 15 is thermal with mean 14; its
// occupation decays as (14/15)^n, so the cutoff has to reach a few hundred.
TEST(Oracle, SqueezedVacuumAtOperatingGain) {
  const auto m = fock_oracle(15.0, 0.0, 1.0, 1.0, 400);
  EXPECT_NEAR(m.mean_b, 14.0, 1e-6);
  EXPECT_NEAR(g::mean_photon(g::apply_two_mode_squeeze(g::vacuum_state(), 15.0), g::Mode::conjugate), m.mean_b,
              1e-6);
}

TEST(Oracle, ReportsTruncationLeak) {
  EXPECT_THROW(fock_oracle(15.0, 0.0, 1.0, 1.0, 60), TruncationError);
  try {
    fock_oracle(15.0, 0.0, 1.0, 1.0, 60);
  } catch (const TruncationError& e) {
    EXPECT_GT(e.tail(), kTailTolerance);
  }
}

TEST(Oracle, RejectsBadArguments) {
  EXPECT_THROW(fock_oracle(2.0, 1.0, 1.0, 1.0, 9), ValidationError);
  EXPECT_THROW(fock_oracle(0.5, 1.0, 1.0, 1.0, 20), ValidationError);
  EXPECT_THROW(fock_oracle(2.0, 1.0, 1.2, 1.0, 20), ValidationError);
  EXPECT_THROW(fock_oracle(2.0, {NAN, 0.0}, 1.0, 1.0, 20), ValidationError);
}

TEST(Oracle, LossyModerateGainMatchesEngine) {
  const auto m = fock_oracle(1.5, 1.0, 0.8, 0.8, 40);
  const auto s = engine(1.5, 1.0, 0.8, 0.8);
  EXPECT_NEAR(m.nd_variance, g::nd_variance(s), 1e-6);
  EXPECT_NEAR(m.mean_a, g::mean_photon(s, g::Mode::probe), 1e-6);
  EXPECT_NEAR(m.mean_b, g::mean_photon(s, g::Mode::conjugate), 1e-6);
}

TEST(Oracle, AsymmetricLossMatchesEngine) {
  const auto m = fock_oracle(1.3, {0.6, 0.8}, 0.9, 0.55, 40);
  const auto s = engine(1.3, 1.0, 0.9, 0.55);
  EXPECT_NEAR(m.nd_variance, g::nd_variance(s), 1e-6);
  EXPECT_NEAR(m.mean_a, g::mean_photon(s, g::Mode::probe), 1e-6);
  EXPECT_NEAR(m.mean_b, g::mean_photon(s, g::Mode::conjugate), 1e-6);
}

// Brighter seeds need a larger cutoff: the occupation of the probe is a
// Poisson mixture of negative binomials whose tail is heavier than the mean
// suggests.
TEST(Oracle, BrightSeedAtHigherCutoffMatchesEngine) {
  for (double eta : {0.8, 1.0}) {
    const auto m = fock_oracle(2.0, 2.0, eta, eta, 90);
    const auto s = engine(2.0, 4.0, eta, eta);
    EXPECT_NEAR(m.nd_variance, g::nd_variance(s), 1e-6);
    EXPECT_NEAR(m.mean_a, g::mean_photon(s, g::Mode::probe), 1e-6);
    EXPECT_NEAR(m.mean_b, g::mean_photon(s, g::Mode::conjugate), 1e-6);
  }
}

TEST(Oracle, BrightSeedNormalizedVariance) {
  // |alpha|^2 = 25 at G = 3 already reaches well past 100 photons in the probe.
  const auto m = fock_oracle(3.0, 5.0, 1.0, 1.0, 260);
  EXPECT_NEAR(m.nd_variance, 25.0, 1e-6);
  EXPECT_NEAR(m.nd_variance / (m.mean_a + m.mean_b), 25.0 / (5.0 * 25.0 + 4.0), 1e-9);
}

}  // namespace
}  // namespace fwmsq::fock
