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

#include <algorithm>
#include <cmath>
#include <string>

#include "fwmsq/errors.hpp"
#include "fwmsq/format.hpp"
#include "fwmsq/probe_gen.hpp"

namespace fwmsq::probe {

namespace {

constexpr double kRescaleAbove = 1e250;

// Starting order for the downward sweep. Miller's recurrence converges to the
// minimal solution J_n once the start lies well past max(n, x).
int start_order(int max_order, double x) {
  const int base = std::max(max_order, static_cast<int>(std::ceil(x)));
  const int start = base + 40 + static_cast<int>(std::sqrt(80.0 * base));
  return start + (start % 2);
}

}  // namespace

std::vector<double> bessel_j_orders(int max_order, double x) {
  if (max_order < 0 || max_order > kMaxBesselOrder) {
    throw ValidationError("Bessel order must lie in [0, " + std::to_string(kMaxBesselOrder) + "], got " +
                          std::to_string(max_order));
  }
  if (!(x >= 0.0 && x <= kMaxBesselArgument)) {
    throw ValidationError("Bessel argument must lie in [0, 30], got " + fmt::sig(x, 6));
  }
  std::vector<double> out(static_cast<std::size_t>(max_order) + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }

  const int top = start_order(max_order, x);
  double above = 0.0;  // j_{k+1}
  double here = 1e-300;  // j_k
  double norm = 0.0;   // J_0 + 2 sum J_2k, accumulated in the same scale
  for (int k = top; k >= 1; --k) {
    const double below = (2.0 * k / x) * here - above;  // j_{k-1}
    above = here;
    here = below;
    if (k - 1 <= max_order) out[static_cast<std::size_t>(k - 1)] = here;
    if ((k - 1) % 2 == 0) norm += (k - 1 == 0 ? 1.0 : 2.0) * here;
    if (std::abs(here) > kRescaleAbove) {
      here /= kRescaleAbove;
      above /= kRescaleAbove;
      norm /= kRescaleAbove;
      for (int i = k - 1; i <= max_order; ++i) out[static_cast<std::size_t>(i)] /= kRescaleAbove;
    }
  }
  for (double& v : out) v /= norm;
  return out;
}

double bessel_j(int n, double x) { return bessel_j_orders(n, x)[static_cast<std::size_t>(n)]; }

}  // namespace fwmsq::probe
