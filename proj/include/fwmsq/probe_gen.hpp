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

// Probe-beam generation: modulator sideband spectra, Fabry-Perot filtering and
// the figures of merit of the frequency-shifted probe.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fwmsq/exec.hpp"

namespace fwmsq::probe {

inline constexpr int kMaxBesselOrder = 60;
inline constexpr double kMaxBesselArgument = 30.0;
inline constexpr double kSidebandTail = 1e-14;

/// First-kind Bessel function J_n(x) for 0 <= n <= 60, 0 <= x <= 30, by
/// Miller's downward recurrence normalized with J_0 + 2 sum J_2k = 1.
double bessel_j(int n, double x);

/// J_0(x) .. J_max_order(x) from a single recurrence sweep.
std::vector<double> bessel_j_orders(int max_order, double x);

enum class ModulatorKind { phase_modulator, mz_null_bias };

const char* to_string(ModulatorKind kind);
/// Accepts "eopm" and "mzm". Throws ValidationError otherwise.
ModulatorKind parse_modulator_kind(const std::string& text);

struct SpectralLine {
  int order = 0;
  double offset_hz = 0.0;
  double power_fraction = 0.0;
};

struct ModSpectrum {
  std::vector<SpectralLine> lines;
  double omega_rf_hz = 0.0;
  ModulatorKind kind = ModulatorKind::phase_modulator;

  double total_power() const;
  /// Power fraction at `order`, 0 if the line is absent.
  double fraction_at(int order) const;
  const SpectralLine* find(int order) const;
};

/// Smallest N such that J_k(alpha)^2 < kSidebandTail for every k > N.
int auto_order_cutoff(double alpha);

/// Jacobi-Anger expansion of a phase-modulated carrier; line n carries J_n(alpha)^2.
/// Orders -N..N; N defaults to auto_order_cutoff(alpha). An explicit N below
/// the automatic one is rejected rather than silently truncating.
ModSpectrum eopm_spectrum(double alpha, double omega_rf_hz, std::optional<int> max_order = std::nullopt);

/// Null-biased Mach-Zehnder: odd orders only, line n carries J_n(alpha)^2.
ModSpectrum mzm_spectrum(double alpha, double omega_rf_hz, std::optional<int> max_order = std::nullopt);

ModSpectrum modulator_spectrum(ModulatorKind kind, double alpha, double omega_rf_hz,
                               std::optional<int> max_order = std::nullopt);

struct EtalonParams {
  double fsr_hz = 15e9;
  double finesse = 30.0;
  double peak_transmission = 1.0;
  /// Frequency of the selected transmission peak relative to the carrier.
  double tuning_offset_hz = 0.0;

  double fwhm_hz() const { return fsr_hz / finesse; }
  void validate() const;
};

/// Airy transmission T_peak / (1 + (2F/pi)^2 sin^2(pi dnu / FSR)) at detuning
/// `delta_nu_hz` from a transmission peak.
double etalon_transmission(double delta_nu_hz, const EtalonParams& etalon);

/// Multiplies every line by the transmission of each etalon in the cascade.
ModSpectrum filter_spectrum(const ModSpectrum& spectrum, std::span<const EtalonParams> etalons);

struct ProbeMetrics {
  double efficiency = 0.0;
  double purity = 0.0;
  /// 10 log10(carrier / target); -inf when no carrier is transmitted.
  double carrier_suppression_db = 0.0;
};

ProbeMetrics probe_metrics(const ModSpectrum& filtered, int target_order);

/// Double-pass acousto-optic shifter: a single shifted order at the typical
/// diffraction-efficiency bound, with the carrier spatially separated.
inline constexpr double kDoublePassAomEfficiency = 0.10;
ProbeMetrics double_pass_aom_metrics(double efficiency = kDoublePassAomEfficiency);

struct AlphaOptimum {
  double alpha = 0.0;
  double efficiency = 0.0;
  /// Set when the search range was degenerate and no search was done.
  bool flat_warning = false;
};

/// Golden-section maximization of J_m(alpha)^2 over [lo, hi] within [0, 10].
/// The range must bracket a single maximum: the derivative has to be >= 0 at
/// lo and <= 0 at hi, and not zero at both, otherwise ValidationError is thrown.
AlphaOptimum optimize_alpha(int target_order, ModulatorKind kind, double lo, double hi);

/// J_m(alpha)^2 on `count` evenly spaced points of [lo, hi].
std::vector<double> efficiency_scan(int target_order, double lo, double hi, std::size_t count,
                                    Exec exec = Exec::parallel);

}  // namespace fwmsq::probe
