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

#include "fwmsq/noise_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "fwmsq/errors.hpp"
#include "fwmsq/format.hpp"

namespace fwmsq::noise {

double dbm_to_watts(double dbm) {
  if (!std::isfinite(dbm)) throw ValidationError("dBm value must be finite");
  return 1e-3 * std::pow(10.0, dbm / 10.0);
}

double watts_to_dbm(double watts) {
  if (!(watts > 0.0) || !std::isfinite(watts)) throw ValidationError("power must be > 0 to express in dBm");
  return 10.0 * std::log10(watts / 1e-3);
}

double ratio_to_db(double ratio) {
  if (!(ratio > 0.0) || !std::isfinite(ratio)) throw ValidationError("ratio must be > 0 to express in dB");
  return 10.0 * std::log10(ratio);
}

double db_to_ratio(double db) {
  if (!std::isfinite(db)) throw ValidationError("dB value must be finite");
  return std::pow(10.0, db / 10.0);
}

void NoiseTrace::validate() const {
  if (freq_hz.size() != power.size()) throw ValidationError("trace frequency and power columns differ in length");
  if (freq_hz.size() < 2) throw ValidationError("trace needs at least 2 points");
  if (!(rbw_hz > 0.0) || !std::isfinite(rbw_hz)) throw ValidationError("rbw_hz must be > 0");
  if (!(vbw_hz > 0.0) || !std::isfinite(vbw_hz)) throw ValidationError("vbw_hz must be > 0");
  for (std::size_t i = 1; i < freq_hz.size(); ++i) {
    if (!(freq_hz[i] > freq_hz[i - 1])) {
      throw ValidationError("trace frequencies not strictly ascending at point " + std::to_string(i));
    }
  }
}

void PowerScan::validate() const {
  std::set<double> distinct;
  for (const auto& p : points) {
    if (!(p.optical_power_w > 0.0) || !std::isfinite(p.optical_power_w)) {
      throw ValidationError("scan optical power must be > 0");
    }
    if (!(p.noise >= 0.0) || !std::isfinite(p.noise)) throw ValidationError("scan noise must be >= 0");
    distinct.insert(p.optical_power_w);
  }
  if (distinct.size() < 2) throw ValidationError("scan needs at least 2 distinct optical powers");
}

FitResult linear_fit(const PowerScan& scan) {
  scan.validate();
  const double n = double(scan.points.size());
  // Shift by the first point so constant data gives exactly zero deviations.
  const double x0 = scan.points.front().optical_power_w;
  const double y0 = scan.points.front().noise;
  double shift_x = 0.0;
  double shift_y = 0.0;
  for (const auto& p : scan.points) {
    shift_x += p.optical_power_w - x0;
    shift_y += p.noise - y0;
  }
  shift_x /= n;
  shift_y /= n;
  const double mean_x = x0 + shift_x;
  const double mean_y = y0 + shift_y;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const auto& p : scan.points) {
    const double dx = (p.optical_power_w - x0) - shift_x;
    const double dy = (p.noise - y0) - shift_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  double ss_res = 0.0;
  for (const auto& p : scan.points) {
    const double r = p.noise - (fit.intercept + fit.slope * p.optical_power_w);
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  fit.slope_stderr = scan.points.size() > 2 ? std::sqrt(ss_res / (n - 2.0) / sxx) : 0.0;
  return fit;
}

SlopeRatio slope_ratio_squeezing(const PowerScan& sql_scan, const PowerScan& squeezed_scan) {
  SlopeRatio out;
  out.sql = linear_fit(sql_scan);
  out.squeezed = linear_fit(squeezed_scan);
  if (!(out.sql.slope > 0.0)) {
    throw InfeasibleError("SQL slope must be positive, got " + fmt::sig(out.sql.slope, 6));
  }
  out.ratio = out.squeezed.slope / out.sql.slope;
  if (out.ratio > 0.0) out.squeezing_db = 10.0 * std::log10(out.ratio);
  return out;
}

namespace {

void require_same_grid(const NoiseTrace& ref, const NoiseTrace& other, const char* name) {
  if (other.freq_hz != ref.freq_hz) {
    throw ValidationError(std::string(name) + " trace frequency grid differs from the squeezed trace");
  }
  if (other.rbw_hz != ref.rbw_hz) {
    throw ValidationError(std::string(name) + " trace RBW differs from the squeezed trace");
  }
}

// NaN marks an invalid bin.
double bin_ratio_db(double sq_dbm, double sql_dbm, const double* el_dbm) {
  const double floor = el_dbm ? std::pow(10.0, *el_dbm / 10.0) : 0.0;
  const double sq = std::pow(10.0, sq_dbm / 10.0) - floor;
  const double sql = std::pow(10.0, sql_dbm / 10.0) - floor;
  if (!(sql > 0.0) || !(sq > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return 10.0 * std::log10(sq / sql);
}

}  // namespace

SqueezingSpectrum squeezing_spectrum(const NoiseTrace& squeezed, const NoiseTrace& sql,
                                     const std::optional<NoiseTrace>& electronic, Exec exec) {
  squeezed.validate();
  sql.validate();
  require_same_grid(squeezed, sql, "SQL");
  if (electronic) {
    electronic->validate();
    require_same_grid(squeezed, *electronic, "electronic");
  }

  SqueezingSpectrum out;
  out.trace.freq_hz = squeezed.freq_hz;
  out.trace.power.assign(squeezed.size(), 0.0);
  out.trace.rbw_hz = squeezed.rbw_hz;
  out.trace.vbw_hz = squeezed.vbw_hz;
  out.trace.label = squeezed.label.empty() ? "squeezing" : squeezed.label;
  out.trace.units = "db_rel_sql";

  const double* el = electronic ? electronic->power.data() : nullptr;
  const double* sq = squeezed.power.data();
  const double* ref = sql.power.data();
  double* dst = out.trace.power.data();
  const auto n = static_cast<std::ptrdiff_t>(squeezed.size());
  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) dst[i] = bin_ratio_db(sq[i], ref[i], el ? el + i : nullptr);
  } else {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) dst[i] = bin_ratio_db(sq[i], ref[i], el ? el + i : nullptr);
  }

  for (std::size_t i = 0; i < out.trace.power.size(); ++i) {
    if (std::isnan(out.trace.power[i])) out.invalid_bins.push_back(i);
  }
  return out;
}

double system_noise_budget(double slope_db, double direct_db) {
  if (!std::isfinite(slope_db) || !std::isfinite(direct_db)) {
    throw ValidationError("noise budget inputs must be finite");
  }
  return direct_db - slope_db;
}

}  // namespace fwmsq::noise
