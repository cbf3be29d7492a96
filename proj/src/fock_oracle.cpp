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

#include <algorithm>
#include <cmath>
#include <string>

#include "fwmsq/format.hpp"

namespace fwmsq::fock {

namespace {

// Blocks whose input weight is below this are not evolved; their weight is
// counted as tail population instead.
constexpr double kNegligibleWeight = 1e-30;

void matmul_rows(const DenseMatrix& lhs, const DenseMatrix& rhs, DenseMatrix& out, std::size_t row) {
  const std::size_t n = lhs.n;
  double* dst = &out.data[row * n];
  for (std::size_t k = 0; k < n; ++k) {
    const double l = lhs(row, k);
    if (l == 0.0) continue;
    const double* src = &rhs.data[k * n];
    for (std::size_t j = 0; j < n; ++j) dst[j] += l * src[j];
  }
}

double norm1(const DenseMatrix& a) {
  double best = 0.0;
  for (std::size_t c = 0; c < a.n; ++c) {
    double col = 0.0;
    for (std::size_t r = 0; r < a.n; ++r) col += std::abs(a(r, c));
    best = std::max(best, col);
  }
  return best;
}

// Binomial thinning table: kept[n][m] = C(n, m) eta^m (1 - eta)^(n - m).
std::vector<double> binomial_table(double eta, std::size_t dim) {
  std::vector<double> table(dim * dim, 0.0);
  for (std::size_t n = 0; n < dim; ++n) {
    for (std::size_t m = 0; m <= n; ++m) {
      double value;
      if (eta == 1.0) {
        value = m == n ? 1.0 : 0.0;
      } else if (eta == 0.0) {
        value = m == 0 ? 1.0 : 0.0;
      } else {
        const double log_c = std::lgamma(double(n) + 1.0) - std::lgamma(double(m) + 1.0) -
                             std::lgamma(double(n - m) + 1.0);
        value = std::exp(log_c + double(m) * std::log(eta) + double(n - m) * std::log1p(-eta));
      }
      table[n * dim + m] = value;
    }
  }
  return table;
}

// Applies the Kraus operators E_j = sum_n sqrt(C(n,j) eta^(n-j) (1-eta)^j) |n-j><n|
// of a pure-loss channel to a diagonal density matrix. Coherences never feed
// back into the diagonal, so photon-number statistics only need populations.
std::vector<double> lose_photons(const std::vector<double>& pops, std::size_t dim, double eta, bool along_a) {
  const auto table = binomial_table(eta, dim);
  std::vector<double> out(dim * dim, 0.0);
  for (std::size_t na = 0; na < dim; ++na) {
    for (std::size_t nb = 0; nb < dim; ++nb) {
      const double p = pops[na * dim + nb];
      if (p == 0.0) continue;
      const std::size_t n = along_a ? na : nb;
      for (std::size_t m = 0; m <= n; ++m) {
        const double w = table[n * dim + m];
        if (along_a) {
          out[m * dim + nb] += p * w;
        } else {
          out[na * dim + m] += p * w;
        }
      }
    }
  }
  return out;
}

// Generator xi (ab - a^dag b^dag) restricted to the block n_a - n_b = k,
// basis |k + j, j>, j = 0..size-1.
DenseMatrix block_generator(double xi, std::size_t k, std::size_t size) {
  DenseMatrix h(size);
  for (std::size_t j = 0; j + 1 < size; ++j) {
    const double amp = xi * std::sqrt(double(k + j + 1) * double(j + 1));
    h(j, j + 1) = amp;   // ab |k+j+1, j+1>
    h(j + 1, j) = -amp;  // -a^dag b^dag |k+j, j>
  }
  return h;
}

}  // namespace

DenseMatrix matmul(const DenseMatrix& lhs, const DenseMatrix& rhs, Exec exec) {
  DenseMatrix out(lhs.n);
  const auto n = static_cast<std::ptrdiff_t>(lhs.n);
  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) matmul_rows(lhs, rhs, out, static_cast<std::size_t>(i));
    return out;
  }
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) matmul_rows(lhs, rhs, out, static_cast<std::size_t>(i));
  return out;
}

DenseMatrix expm(const DenseMatrix& a, Exec exec) {
  const std::size_t n = a.n;
  const double norm = norm1(a);
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  DenseMatrix scaled = a;
  for (double& v : scaled.data) v *= scale;
  const double theta = norm * scale;
  const double tolerance = 1e-12 * scale;

  DenseMatrix result(n);
  DenseMatrix term(n);
  for (std::size_t i = 0; i < n; ++i) {
    result(i, i) = 1.0;
    term(i, i) = 1.0;
  }
  // Remainder after the order-k term is at most theta^(k+1)/(k+1)! / (1 - theta/(k+2)) <= 2 theta^(k+1)/(k+1)!.
  double remainder = theta;
  for (int k = 1; k < 64; ++k) {
    term = matmul(term, scaled, exec);
    for (double& v : term.data) v /= double(k);
    for (std::size_t i = 0; i < result.data.size(); ++i) result.data[i] += term.data[i];
    remainder *= theta / double(k + 1);
    if (2.0 * remainder < tolerance) break;
  }
  for (int s = 0; s < squarings; ++s) result = matmul(result, result, exec);
  return result;
}

FockMoments fock_oracle(double gain, std::complex<double> alpha, double eta_a, double eta_b, int cutoff,
                        Exec exec) {
  if (cutoff < 10) throw ValidationError("fock_oracle: cutoff must be >= 10");
  if (!(gain >= 1.0) || !std::isfinite(gain)) throw ValidationError("fock_oracle: gain must be >= 1");
  if (!(eta_a >= 0.0 && eta_a <= 1.0) || !(eta_b >= 0.0 && eta_b <= 1.0)) {
    throw ValidationError("fock_oracle: transmissivities must lie in [0, 1]");
  }
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw ValidationError("fock_oracle: alpha must be finite");
  }

  const auto dim = static_cast<std::size_t>(cutoff) + 1;
  const double xi = std::acosh(std::sqrt(gain));
  const double n_seed = std::norm(alpha);

  // Coherent seed populations |<k|alpha>|^2, Poisson in k. Every block
  // n_a - n_b = k is fed by exactly one input state, |k, 0>.
  std::vector<double> weight(dim);
  double captured = 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    weight[k] = n_seed == 0.0 ? (k == 0 ? 1.0 : 0.0)
                              : std::exp(double(k) * std::log(n_seed) - n_seed - std::lgamma(double(k) + 1.0));
    captured += weight[k];
  }
  double tail = std::max(0.0, 1.0 - captured);

  std::vector<std::size_t> active;
  for (std::size_t k = 0; k < dim; ++k) {
    if (weight[k] >= kNegligibleWeight) {
      active.push_back(k);
    } else {
      tail += weight[k];
    }
  }

  std::vector<double> pops(dim * dim, 0.0);
  const auto evolve_block = [&](std::size_t k, Exec inner) {
    const std::size_t size = dim - k;
    const DenseMatrix u = expm(block_generator(xi, k, size), inner);
    for (std::size_t j = 0; j < size; ++j) {
      const double amp = u(j, 0);
      pops[(k + j) * dim + j] = weight[k] * amp * amp;
    }
  };
  const auto blocks = static_cast<std::ptrdiff_t>(active.size());
  if (exec == Exec::serial) {
    for (std::ptrdiff_t b = 0; b < blocks; ++b) evolve_block(active[static_cast<std::size_t>(b)], Exec::serial);
  } else if (blocks == 1) {
    evolve_block(active.front(), Exec::parallel);
  } else {
    // Blocks write disjoint entries of pops.
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t b = 0; b < blocks; ++b) evolve_block(active[static_cast<std::size_t>(b)], Exec::serial);
  }

  const std::size_t band = std::max<std::size_t>(1, dim / 10);
  for (std::size_t na = 0; na < dim; ++na) {
    for (std::size_t nb = 0; nb < dim; ++nb) {
      if (na + band >= dim || nb + band >= dim) tail += pops[na * dim + nb];
    }
  }
  if (tail > kTailTolerance) {
    throw TruncationError("fock_oracle: population " + fmt::sig(tail, 6) + " in the top " + std::to_string(band) +
                              " levels exceeds tolerance; raise the cutoff above " + std::to_string(cutoff),
                          tail);
  }

  pops = lose_photons(pops, dim, eta_a, true);
  pops = lose_photons(pops, dim, eta_b, false);

  FockMoments m;
  m.tail_population = tail;
  double mean_d = 0.0;
  double mean_d2 = 0.0;
  for (std::size_t na = 0; na < dim; ++na) {
    for (std::size_t nb = 0; nb < dim; ++nb) {
      const double p = pops[na * dim + nb];
      const double diff = double(na) - double(nb);
      m.mean_a += p * double(na);
      m.mean_b += p * double(nb);
      mean_d += p * diff;
      mean_d2 += p * diff * diff;
    }
  }
  m.nd_variance = mean_d2 - mean_d * mean_d;
  return m;
}

}  // namespace fwmsq::fock
