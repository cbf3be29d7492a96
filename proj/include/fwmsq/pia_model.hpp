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

// Closed-form intensity-difference squeezing of a lossy phase-insensitive
// amplifier, DS = eta / (2G - 1) + 1 - eta, and its inversions.
//
// DS is the linear ratio Var(N_a - N_b) / SQL; squeezing in dB is
// 10 log10(DS), negative below the shot-noise limit. Spontaneous (vacuum
// seeded) photons are neglected throughout, which is exact in the bright-seed
// limit.

#pragma once

namespace fwmsq::pia {

struct PiaParams {
  double gain = 1.0;
  double eta = 1.0;
  double seed_power_w = 0.0;
  double epsilon = 0.0;

  /// Throws ValidationError naming the first violated field.
  void validate() const;
};

double squeezing_ratio(double gain, double eta);

/// Seed carrying amplitude excess noise epsilon (in units of shot noise).
double squeezing_ratio_with_seed_noise(double gain, double eta, double epsilon);

/// G -> infinity limit, 1 - eta.
double max_squeezing(double eta);

/// Transmissivity that explains a measured DS at gain G. Throws
/// InfeasibleError when DS lies outside [1/(2G-1), 1].
double infer_eta(double gain, double ds_measured);

/// Gain that reaches DS_target at transmissivity eta. Throws InfeasibleError
/// when the target is at or below the loss floor 1 - eta, or above 1.
double required_gain(double ds_target, double eta);

struct OutputPowers {
  double probe_w = 0.0;
  double conjugate_w = 0.0;
  double total_w = 0.0;
};

OutputPowers output_powers(double gain, double seed_power_w, double eta);

double to_db(double ratio);
double from_db(double db);

}  // namespace fwmsq::pia
