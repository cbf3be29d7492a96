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

// Two-mode Gaussian state engine for the probe (a) and conjugate (b) beams of
// a four-wave-mixing amplifier.
//
// Quadrature ordering is (x_a, p_a, x_b, p_b) with [x, p] = 2i, so the vacuum
// covariance is the identity and a coherent amplitude alpha displaces the mode
// by (2 Re alpha, 2 Im alpha).

#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "fwmsq/exec.hpp"

namespace fwmsq::gaussian {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;

enum class Mode { probe = 0, conjugate = 1 };

namespace detail {
struct UncheckedAccess;
}

inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kPhysicalityTolerance = 1e-9;

Mat4 identity4();
Mat4 symplectic_form();
Mat4 multiply(const Mat4& lhs, const Mat4& rhs);
Mat4 transpose(const Mat4& m);
double determinant(const Mat4& m);

/// Symplectic eigenvalues (nu_minus, nu_plus) of a two-mode covariance matrix.
/// Returns {0, 0} if sigma is not positive definite.
std::array<double, 2> symplectic_eigenvalues(const Mat4& sigma);

/// How far nu_minus may fall below 1 and still count as physical:
/// kPhysicalityTolerance plus 4 eps m^2, m the largest entry of sigma. Past
/// m ~ 1e6 double precision no longer resolves physicality.
double physicality_tolerance(const Mat4& sigma);

/// The amplifier transform for intensity gain `gain`:
///   a -> sqrt(G) a - sqrt(G-1) b^dagger,  b^dagger -> -sqrt(G-1) a + sqrt(G) b^dagger.
/// Throws ValidationError for gain < 1.
Mat4 two_mode_squeeze_matrix(double gain);

class GaussianTwoModeState {
 public:
  /// Vacuum in both modes.
  GaussianTwoModeState();

  /// Builds a state from raw moments. Symmetrizes `sigma` and throws
  /// ValidationError if the result is not a physical covariance matrix.
  static GaussianTwoModeState from_moments(const Vec4& displacement, const Mat4& sigma);

  const Vec4& displacement() const noexcept { return d_; }
  const Mat4& covariance() const noexcept { return sigma_; }

  bool is_physical() const;

 private:
  friend struct detail::UncheckedAccess;
  GaussianTwoModeState(const Vec4& d, const Mat4& sigma);

  Vec4 d_;
  Mat4 sigma_;
};

GaussianTwoModeState vacuum_state();

GaussianTwoModeState displace(const GaussianTwoModeState& state, std::complex<double> alpha, Mode mode);

/// Sets the amplitude-quadrature variance of `mode` to 1 + epsilon. The mode's
/// mean field must lie along +x; rotate the state first otherwise.
GaussianTwoModeState thermalize_seed(const GaussianTwoModeState& state, double epsilon, Mode mode);

GaussianTwoModeState apply_two_mode_squeeze(const GaussianTwoModeState& state, double gain);

/// Pure-loss channel of transmissivity `eta` on one mode (beam splitter with a
/// vacuum ancilla).
GaussianTwoModeState apply_loss(const GaussianTwoModeState& state, double eta, Mode mode);

double mean_photon(const GaussianTwoModeState& state, Mode mode);

/// Cov(n_i, n_j) for the photon-number operators of modes i and j.
double photon_covariance(const GaussianTwoModeState& state, Mode i, Mode j);

/// Var(N_a - N_b).
double nd_variance(const GaussianTwoModeState& state);

/// Coherent seed |alpha|^2 = seed_photons in the probe (optionally with
/// amplitude excess noise), vacuum conjugate, amplifier of gain `gain`, then
/// per-arm losses. Returns Var(N_a - N_b) / (<N_a> + <N_b>).
double engine_squeezing_ratio(double gain, double eta_probe, double eta_conjugate, double seed_photons,
                              double epsilon = 0.0);

/// engine_squeezing_ratio over the gains x etas grid (symmetric arm loss),
/// row-major with gains as rows.
std::vector<double> engine_squeezing_grid(std::span<const double> gains, std::span<const double> etas,
                                          double seed_photons, Exec exec = Exec::parallel);

}  // namespace fwmsq::gaussian
