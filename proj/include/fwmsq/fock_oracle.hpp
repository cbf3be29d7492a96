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

// Brute-force photon-number verifier for the Gaussian engine. It shares no
// code with gaussian_state.cpp: the amplifier is the matrix exponential of
// xi (ab - a^dag b^dag) on a truncated two-mode Fock space, and loss is the
// binomial Kraus channel. Slow by construction; for tests and benchmarks.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "fwmsq/errors.hpp"
#include "fwmsq/exec.hpp"

namespace fwmsq::fock {

inline constexpr double kTailTolerance = 1e-8;

/// Thrown when the truncated space cannot hold the state: more than
/// kTailTolerance of the population sits in the top levels of either mode.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, double tail) : std::runtime_error(what), tail_(tail) {}
  double tail() const noexcept { return tail_; }

 private:
  double tail_;
};

/// Dense row-major square matrix.
struct DenseMatrix {
  std::size_t n = 0;
  std::vector<double> data;

  explicit DenseMatrix(std::size_t dim = 0) : n(dim), data(dim * dim, 0.0) {}
  double& operator()(std::size_t r, std::size_t c) { return data[r * n + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * n + c]; }
};

DenseMatrix matmul(const DenseMatrix& lhs, const DenseMatrix& rhs, Exec exec = Exec::serial);

/// exp(a) by scaling and squaring: a is scaled by 2^-s until its 1-norm is at
/// most 1/2, then a Taylor polynomial is summed until the remainder bound
/// drops below 1e-12 * 2^-s.
DenseMatrix expm(const DenseMatrix& a, Exec exec = Exec::serial);

struct FockMoments {
  double mean_a = 0.0;
  double mean_b = 0.0;
  double nd_variance = 0.0;
  double tail_population = 0.0;
};

/// Coherent seed alpha in mode a, vacuum in b, amplifier exp[xi(ab - a^dag b^dag)]
/// with cosh^2 xi = gain, then loss eta_a / eta_b. Each mode is truncated to
/// photon numbers 0..cutoff.
FockMoments fock_oracle(double gain, std::complex<double> alpha, double eta_a, double eta_b, int cutoff,
                        Exec exec = Exec::parallel);

}  // namespace fwmsq::fock
