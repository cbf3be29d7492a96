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

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fwmsq/noise_fit.hpp"
#include "fwmsq/probe_gen.hpp"
#include "fwmsq/run_config.hpp"

namespace fwmsq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInfeasible = 2;

/// Runs one command line (without the program name). Output is byte-identical
/// for identical inputs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Seed excess noise, in units of shot noise, of a beam of power `power_w`
/// carrying technical relative intensity noise `rin_db` (dBc/Hz, single-sided):
/// epsilon = RIN * P / (2 h nu).
double rin_to_epsilon(double rin_db, double power_w, double wavelength_m);

struct SchemeRow {
  std::string scheme;
  int etalons = 0;
  std::optional<double> alpha;
  probe::ProbeMetrics metrics;
  double input_power_w = 0.0;
  double epsilon = 0.0;
  double ds = 0.0;
  double ds_with_noise = 0.0;
};

struct DesignReport {
  config::RunConfig config;
  double probe_power_w = 0.0;
  double conjugate_power_w = 0.0;
  double total_power_w = 0.0;
  double ds_floor = 0.0;
  std::vector<SchemeRow> schemes;
  std::optional<noise::SlopeRatio> slope;
  std::optional<double> degradation_db;
};

/// Probe metrics -> seed excess noise -> predicted squeezing with and without
/// that noise, for the EOPM, null-biased MZM and double-pass AOM shifters.
DesignReport design(const config::RunConfig& cfg);

}  // namespace fwmsq::cli
