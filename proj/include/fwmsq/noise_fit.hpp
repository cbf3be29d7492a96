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

// Intensity-difference noise analysis: shot-noise calibration by slope fits
// over optical power, per-frequency squeezing spectra, and the system-noise
// budget. All arithmetic on noise powers is done in linear units.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fwmsq/exec.hpp"

namespace fwmsq::noise {

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);
double ratio_to_db(double ratio);
double db_to_ratio(double db);

/// Spectrum-analyzer trace. `power` is in dBm for measured traces and in dB
/// relative to the SQL for squeezing spectra (units == "db_rel_sql").
struct NoiseTrace {
  std::vector<double> freq_hz;
  std::vector<double> power;
  double rbw_hz = 0.0;
  double vbw_hz = 0.0;
  std::string label;
  std::string units = "dbm";
  /// Metadata keys other than rbw_hz / vbw_hz / label / units, preserved verbatim.
  std::map<std::string, std::string> extra;

  std::size_t size() const { return freq_hz.size(); }
  /// Throws ValidationError on length mismatch, < 2 points, non-ascending
  /// frequencies or non-positive bandwidths.
  void validate() const;
};

struct ScanPoint {
  double optical_power_w = 0.0;
  double noise = 0.0;
};

/// Noise power (linear units) against total optical power on the detector.
struct PowerScan {
  std::vector<ScanPoint> points;
  std::string label;

  void validate() const;
};

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;
  /// Standard error of the slope from the residual variance; 0 for two points.
  double slope_stderr = 0.0;
};

/// Ordinary least squares with intercept.
FitResult linear_fit(const PowerScan& scan);

struct SlopeRatio {
  FitResult sql;
  FitResult squeezed;
  double ratio = 0.0;
  /// Empty when the squeezed slope is <= 0 (saturated: no finite dB value).
  std::optional<double> squeezing_db;
  bool saturated() const { return !squeezing_db.has_value(); }
};

/// Ratio of fitted slopes, squeezed over SQL. Intercepts (electronic floors)
/// drop out. Throws InfeasibleError if the SQL slope is not positive.
SlopeRatio slope_ratio_squeezing(const PowerScan& sql_scan, const PowerScan& squeezed_scan);

struct SqueezingSpectrum {
  /// units == "db_rel_sql"; invalid bins hold NaN.
  NoiseTrace trace;
  std::vector<std::size_t> invalid_bins;
};

/// Per-bin 10 log10((L_sq - L_el) / (L_sql - L_el)) in linear power. Bins where
/// the SQL (or the squeezed trace) does not exceed the electronic floor are
/// flagged invalid. Traces must share the frequency grid and RBW exactly.
SqueezingSpectrum squeezing_spectrum(const NoiseTrace& squeezed, const NoiseTrace& sql,
                                     const std::optional<NoiseTrace>& electronic = std::nullopt,
                                     Exec exec = Exec::parallel);

/// direct_db - slope_db. Positive: the direct measurement is degraded by
/// system noise; negative flags an inconsistent pair of measurements.
double system_noise_budget(double slope_db, double direct_db);

}  // namespace fwmsq::noise
