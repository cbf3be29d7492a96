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

#include "fwmsq/pia_model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fwmsq/errors.hpp"
#include "fwmsq/format.hpp"

namespace fwmsq::pia {

namespace {

void check_gain(double gain) {
  if (!std::isfinite(gain) || gain < 1.0) throw ValidationError("gain must be finite and >= 1, got " + fmt::sig(gain, 6));
}

void check_eta(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw ValidationError("eta must lie in [0, 1], got " + fmt::sig(eta, 6));
}

void check_epsilon(double epsilon) {
  if (!std::isfinite(epsilon) || epsilon < 0.0) {
    throw ValidationError("epsilon must be finite and >= 0, got " + fmt::sig(epsilon, 6));
  }
}

}  // namespace

void PiaParams::validate() const {
  check_gain(gain);
  check_eta(eta);
  if (!std::isfinite(seed_power_w) || seed_power_w < 0.0) {
    throw ValidationError("seed_power_w must be finite and >= 0, got " + fmt::sig(seed_power_w, 6));
  }
  check_epsilon(epsilon);
}

double squeezing_ratio(double gain, double eta) {
  return squeezing_ratio_with_seed_noise(gain, eta, 0.0);
}

double squeezing_ratio_with_seed_noise(double gain, double eta, double epsilon) {
  check_gain(gain);
  check_eta(eta);
  check_epsilon(epsilon);
  return eta * (1.0 + epsilon) / (2.0 * gain - 1.0) + 1.0 - eta;
}

double max_squeezing(double eta) {
  check_eta(eta);
  return 1.0 - eta;
}

double infer_eta(double gain, double ds_measured) {
  check_gain(gain);
  if (gain == 1.0) throw ValidationError("infer_eta needs gain > 1; at unity gain DS = 1 for every eta");
  if (!std::isfinite(ds_measured)) throw ValidationError("measured DS must be finite");
  const double floor = 1.0 / (2.0 * gain - 1.0);
  if (ds_measured < floor || ds_measured > 1.0) {
    throw InfeasibleError("measured DS " + fmt::sig(ds_measured, 6) + " outside the feasible band [" +
                          fmt::sig(floor, 6) + ", 1] for gain " + fmt::sig(gain, 6));
  }
  return (1.0 - ds_measured) / (1.0 - floor);
}

double required_gain(double ds_target, double eta) {
  check_eta(eta);
  if (!std::isfinite(ds_target)) throw ValidationError("target DS must be finite");
  const double floor = 1.0 - eta;
  // 1 - eta carries rounding error (1 - 0.9 < 0.1), so targets within 1e-12 of
  // the floor count as on it; they would need a gain above 1e11 anyway.
  if (ds_target - floor <= 1e-12) {
    throw InfeasibleError("target DS " + fmt::sig(ds_target, 6) + " is at or below the loss floor " +
                          fmt::sig(floor, 6));
  }
  if (ds_target > 1.0) throw InfeasibleError("target DS above 1 is not reachable with gain >= 1");
  return (eta / (ds_target - floor) + 1.0) / 2.0;
}

OutputPowers output_powers(double gain, double seed_power_w, double eta) {
  PiaParams{gain, eta, seed_power_w, 0.0}.validate();
  OutputPowers p;
  p.probe_w = eta * gain * seed_power_w;
  p.conjugate_w = eta * (gain - 1.0) * seed_power_w;
  p.total_w = p.probe_w + p.conjugate_w;
  return p;
}

double to_db(double ratio) {
  if (ratio < 0.0 || std::isnan(ratio)) throw ValidationError("cannot express a negative ratio in dB");
  if (ratio == 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(ratio);
}

double from_db(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace fwmsq::pia
