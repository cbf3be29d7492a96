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

#include "fwmsq/gaussian_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fwmsq/errors.hpp"
#include "fwmsq/format.hpp"

namespace fwmsq::gaussian {

namespace detail {
struct UncheckedAccess {
  static GaussianTwoModeState make(const Vec4& d, const Mat4& sigma) { return GaussianTwoModeState(d, sigma); }
};
}  // namespace detail

namespace {

using detail::UncheckedAccess;

constexpr std::size_t offset(Mode m) { return m == Mode::probe ? 0 : 2; }

Mat4 symmetrized(const Mat4& m) {
  Mat4 out = m;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const double avg = 0.5 * (m[i][j] + m[j][i]);
      out[i][j] = avg;
      out[j][i] = avg;
    }
  }
  return out;
}

double det2(double a, double b, double c, double d) { return a * d - b * c; }

// Cov(n_i, n_j) = tr(s s^T)/8 + d_i^T s d_j / 4 - delta_ij / 4, with s the
// 2x2 block of sigma coupling modes i and j.
double number_covariance(const Vec4& d, const Mat4& sigma, Mode mi, Mode mj) {
  const std::size_t i = offset(mi);
  const std::size_t j = offset(mj);
  double trace_sst = 0.0;
  double quad = 0.0;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      const double s = sigma[i + r][j + c];
      trace_sst += s * s;
      quad += d[i + r] * s * d[j + c];
    }
  }
  return trace_sst / 8.0 + quad / 4.0 - (mi == mj ? 0.25 : 0.0);
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw ValidationError(std::string(what) + " must be finite");
  }
}

}  // namespace

Mat4 identity4() {
  Mat4 m{};
  for (std::size_t i = 0; i < 4; ++i) m[i][i] = 1.0;
  return m;
}

Mat4 symplectic_form() {
  Mat4 omega{};
  omega[0][1] = 1.0;
  omega[1][0] = -1.0;
  omega[2][3] = 1.0;
  omega[3][2] = -1.0;
  return omega;
}

Mat4 multiply(const Mat4& lhs, const Mat4& rhs) {
  Mat4 out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t j = 0; j < 4; ++j) out[i][j] += lhs[i][k] * rhs[k][j];
  return out;
}

Mat4 transpose(const Mat4& m) {
  Mat4 out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i][j] = m[j][i];
  return out;
}

double determinant(const Mat4& m) {
  // Laplace expansion along 2x2 minors of the first two rows.
  const auto minor_top = [&](std::size_t c0, std::size_t c1) { return det2(m[0][c0], m[0][c1], m[1][c0], m[1][c1]); };
  const auto minor_bot = [&](std::size_t c0, std::size_t c1) { return det2(m[2][c0], m[2][c1], m[3][c0], m[3][c1]); };
  return minor_top(0, 1) * minor_bot(2, 3) - minor_top(0, 2) * minor_bot(1, 3) + minor_top(0, 3) * minor_bot(1, 2) +
         minor_top(1, 2) * minor_bot(0, 3) - minor_top(1, 3) * minor_bot(0, 2) + minor_top(2, 3) * minor_bot(0, 1);
}

namespace {

// Lower Cholesky factor; false if `m` is not positive definite.
bool cholesky(const Mat4& m, Mat4& l) {
  l = Mat4{};
  for (std::size_t j = 0; j < 4; ++j) {
    double d = m[j][j];
    for (std::size_t k = 0; k < j; ++k) d -= l[j][k] * l[j][k];
    if (!(d > 0.0)) return false;
    l[j][j] = std::sqrt(d);
    for (std::size_t i = j + 1; i < 4; ++i) {
      double v = m[i][j];
      for (std::size_t k = 0; k < j; ++k) v -= l[i][k] * l[j][k];
      l[i][j] = v / l[j][j];
    }
  }
  return true;
}

// Cyclic Jacobi on a symmetric 4x4 matrix; returns the eigenvalues ascending.
std::array<double, 4> symmetric_eigenvalues(Mat4 a) {
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < 4; ++p)
      for (std::size_t q = p + 1; q < 4; ++q) off += a[p][q] * a[p][q];
    if (off == 0.0) break;
    for (std::size_t p = 0; p < 4; ++p) {
      for (std::size_t q = p + 1; q < 4; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < 4; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < 4; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::array<double, 4> ev{a[0][0], a[1][1], a[2][2], a[3][3]};
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace

std::array<double, 2> symplectic_eigenvalues(const Mat4& sigma) {
  // With sigma = L L^T, K = L^T Omega L is antisymmetric with eigenvalues
  // +-i nu, so nu^2 are the eigenvalues of K^T K. Unlike the closed form in
  // the invariants this keeps full accuracy when nu_minus ~ nu_plus.
  Mat4 l;
  if (!cholesky(sigma, l)) return {0.0, 0.0};
  const Mat4 k = multiply(multiply(transpose(l), symplectic_form()), l);
  const auto ev = symmetric_eigenvalues(multiply(transpose(k), k));
  // ev holds each nu^2 twice.
  return {std::sqrt(std::max(0.0, 0.5 * (ev[0] + ev[1]))), std::sqrt(std::max(0.0, 0.5 * (ev[2] + ev[3])))};
}

double physicality_tolerance(const Mat4& sigma) {
  double scale = 0.0;
  for (const auto& row : sigma)
    for (double v : row) scale = std::max(scale, std::abs(v));
  // Entries carry ~eps * scale of rounding and nu^2 is a difference of
  // products of entries, so nu_minus is only resolved to ~eps * scale^2.
  return kPhysicalityTolerance + 4.0 * std::numeric_limits<double>::epsilon() * scale * scale;
}

Mat4 two_mode_squeeze_matrix(double gain) {
  if (!(gain >= 1.0) || !std::isfinite(gain)) {
    throw ValidationError("gain must be finite and >= 1, got " + fmt::sig(gain, 6));
  }
  const double c = std::sqrt(gain);
  const double s = std::sqrt(gain - 1.0);
  Mat4 m{};
  m[0] = {c, 0.0, -s, 0.0};
  m[1] = {0.0, c, 0.0, s};
  m[2] = {-s, 0.0, c, 0.0};
  m[3] = {0.0, s, 0.0, c};
  return m;
}

GaussianTwoModeState::GaussianTwoModeState() : d_{}, sigma_(identity4()) {}

GaussianTwoModeState::GaussianTwoModeState(const Vec4& d, const Mat4& sigma) : d_(d), sigma_(symmetrized(sigma)) {}

GaussianTwoModeState GaussianTwoModeState::from_moments(const Vec4& displacement, const Mat4& sigma) {
  for (double v : displacement) require_finite(v, "displacement");
  for (const auto& row : sigma)
    for (double v : row) require_finite(v, "covariance entry");
  GaussianTwoModeState state(displacement, sigma);
  if (!state.is_physical()) {
    const auto nu = symplectic_eigenvalues(state.sigma_);
    throw ValidationError("covariance matrix is unphysical: smallest symplectic eigenvalue " + fmt::sig(nu[0], 6) +
                          " < 1");
  }
  return state;
}

bool GaussianTwoModeState::is_physical() const {
  return symplectic_eigenvalues(sigma_)[0] >= 1.0 - physicality_tolerance(sigma_);
}

GaussianTwoModeState vacuum_state() { return GaussianTwoModeState(); }

GaussianTwoModeState displace(const GaussianTwoModeState& state, std::complex<double> alpha, Mode mode) {
  require_finite(alpha.real(), "alpha");
  require_finite(alpha.imag(), "alpha");
  Vec4 d = state.displacement();
  const std::size_t i = offset(mode);
  d[i] += 2.0 * alpha.real();
  d[i + 1] += 2.0 * alpha.imag();
  return UncheckedAccess::make(d, state.covariance());
}

GaussianTwoModeState thermalize_seed(const GaussianTwoModeState& state, double epsilon, Mode mode) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw ValidationError("epsilon must be finite and >= 0, got " + fmt::sig(epsilon, 6));
  }
  const std::size_t i = offset(mode);
  const Vec4& d = state.displacement();
  if (d[i] < 0.0 || std::abs(d[i + 1]) > 1e-12 * std::max(1.0, std::abs(d[i]))) {
    throw ValidationError("thermalize_seed: mean field must lie along +x");
  }
  Mat4 sigma = state.covariance();
  sigma[i][i] = 1.0 + epsilon;
  GaussianTwoModeState out = UncheckedAccess::make(d, sigma);
  if (!out.is_physical()) {
    throw ValidationError("thermalize_seed: result is unphysical; apply to the seed before amplification");
  }
  return out;
}

GaussianTwoModeState apply_two_mode_squeeze(const GaussianTwoModeState& state, double gain) {
  const Mat4 s = two_mode_squeeze_matrix(gain);
  Vec4 d{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) d[i] += s[i][j] * state.displacement()[j];
  const Mat4 sigma = multiply(multiply(s, state.covariance()), transpose(s));
  return UncheckedAccess::make(d, sigma);
}

GaussianTwoModeState apply_loss(const GaussianTwoModeState& state, double eta, Mode mode) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw ValidationError("transmissivity eta must lie in [0, 1], got " + fmt::sig(eta, 6));
  }
  const std::size_t i = offset(mode);
  const double t = std::sqrt(eta);
  Vec4 d = state.displacement();
  Mat4 sigma = state.covariance();
  d[i] *= t;
  d[i + 1] *= t;
  for (std::size_t r = i; r < i + 2; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      const bool in_block = c >= i && c < i + 2;
      if (in_block) {
        sigma[r][c] = eta * sigma[r][c] + (r == c ? 1.0 - eta : 0.0);
      } else {
        sigma[r][c] *= t;
        sigma[c][r] *= t;
      }
    }
  }
  return UncheckedAccess::make(d, sigma);
}

double mean_photon(const GaussianTwoModeState& state, Mode mode) {
  const std::size_t i = offset(mode);
  const auto& s = state.covariance();
  const auto& d = state.displacement();
  return (s[i][i] + s[i + 1][i + 1] + d[i] * d[i] + d[i + 1] * d[i + 1] - 2.0) / 4.0;
}

double photon_covariance(const GaussianTwoModeState& state, Mode i, Mode j) {
  return number_covariance(state.displacement(), state.covariance(), i, j);
}

double nd_variance(const GaussianTwoModeState& state) {
  return photon_covariance(state, Mode::probe, Mode::probe) +
         photon_covariance(state, Mode::conjugate, Mode::conjugate) -
         2.0 * photon_covariance(state, Mode::probe, Mode::conjugate);
}

double engine_squeezing_ratio(double gain, double eta_probe, double eta_conjugate, double seed_photons,
                              double epsilon) {
  if (!(seed_photons > 0.0) || !std::isfinite(seed_photons)) {
    throw ValidationError("seed photon number must be finite and > 0");
  }
  auto state = displace(vacuum_state(), std::sqrt(seed_photons), Mode::probe);
  state = thermalize_seed(state, epsilon, Mode::probe);
  state = apply_two_mode_squeeze(state, gain);
  state = apply_loss(state, eta_probe, Mode::probe);
  state = apply_loss(state, eta_conjugate, Mode::conjugate);
  const double sql = mean_photon(state, Mode::probe) + mean_photon(state, Mode::conjugate);
  // Nothing detected (eta = 0): return the eta -> 0 limit, where binomial
  // thinning leaves Poissonian statistics.
  if (sql == 0.0) return 1.0;
  return nd_variance(state) / sql;
}

std::vector<double> engine_squeezing_grid(std::span<const double> gains, std::span<const double> etas,
                                          double seed_photons, Exec exec) {
  const std::size_t rows = gains.size();
  const std::size_t cols = etas.size();
  std::vector<double> out(rows * cols);
  const auto cell = [&](std::size_t k) {
    const double g = gains[k / cols];
    const double e = etas[k % cols];
    out[k] = engine_squeezing_ratio(g, e, e, seed_photons);
  };
  const auto n = static_cast<std::ptrdiff_t>(out.size());
  if (exec == Exec::serial) {
    for (std::ptrdiff_t k = 0; k < n; ++k) cell(static_cast<std::size_t>(k));
    return out;
  }
  // Exceptions must not escape an OpenMP region; validate up front.
  for (double g : gains) two_mode_squeeze_matrix(g);
  for (double e : etas) apply_loss(vacuum_state(), e, Mode::probe);
  engine_squeezing_ratio(1.0, 1.0, 1.0, seed_photons);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) cell(static_cast<std::size_t>(k));
  return out;
}

}  // namespace fwmsq::gaussian
