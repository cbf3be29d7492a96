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

#include "fwmsq/probe_gen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fwmsq/errors.hpp"
#include "fwmsq/format.hpp"

namespace fwmsq::probe {

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= kMaxBesselArgument)) {
    throw ValidationError("modulation index alpha must lie in [0, 30], got " + fmt::sig(alpha, 6));
  }
}

int resolve_order(double alpha, std::optional<int> max_order) {
  const int needed = auto_order_cutoff(alpha);
  if (!max_order) return needed;
  if (*max_order < needed || *max_order > kMaxBesselOrder) {
    throw ValidationError("order cutoff " + std::to_string(*max_order) + " truncates sidebands above 1e-14 (need >= " +
                          std::to_string(needed) + ")");
  }
  return *max_order;
}

ModSpectrum build(ModulatorKind kind, double alpha, double omega_rf_hz, std::optional<int> max_order) {
  check_alpha(alpha);
  if (!std::isfinite(omega_rf_hz)) throw ValidationError("RF frequency must be finite");
  const int n_max = resolve_order(alpha, max_order);
  const auto j = bessel_j_orders(n_max, alpha);
  ModSpectrum s;
  s.omega_rf_hz = omega_rf_hz;
  s.kind = kind;
  for (int n = -n_max; n <= n_max; ++n) {
    const bool odd = (n % 2) != 0;
    if (kind == ModulatorKind::mz_null_bias && !odd) continue;
    const double amp = j[static_cast<std::size_t>(std::abs(n))];
    s.lines.push_back({n, n * omega_rf_hz, amp * amp});
  }
  return s;
}

// d/dalpha J_m(alpha)^2 = J_m (J_{m-1} - J_{m+1}), with J_{-1} = -J_1.
double efficiency_slope(int m, double alpha) {
  const auto j = bessel_j_orders(m + 1, alpha);
  const double prev = m == 0 ? -j[1] : j[static_cast<std::size_t>(m - 1)];
  return j[static_cast<std::size_t>(m)] * (prev - j[static_cast<std::size_t>(m + 1)]);
}

double efficiency_at(int m, double alpha) {
  const double v = bessel_j(m, alpha);
  return v * v;
}

}  // namespace

const char* to_string(ModulatorKind kind) {
  return kind == ModulatorKind::phase_modulator ? "eopm" : "mzm";
}

ModulatorKind parse_modulator_kind(const std::string& text) {
  if (text == "eopm") return ModulatorKind::phase_modulator;
  if (text == "mzm") return ModulatorKind::mz_null_bias;
  throw ValidationError("unknown modulator kind '" + text + "' (expected eopm or mzm)");
}

double ModSpectrum::total_power() const {
  double sum = 0.0;
  for (const auto& line : lines) sum += line.power_fraction;
  return sum;
}

const SpectralLine* ModSpectrum::find(int order) const {
  const auto it = std::find_if(lines.begin(), lines.end(), [&](const SpectralLine& l) { return l.order == order; });
  return it == lines.end() ? nullptr : &*it;
}

double ModSpectrum::fraction_at(int order) const {
  const SpectralLine* line = find(order);
  return line ? line->power_fraction : 0.0;
}

int auto_order_cutoff(double alpha) {
  check_alpha(alpha);
  const auto j = bessel_j_orders(kMaxBesselOrder, alpha);
  for (int k = kMaxBesselOrder; k >= 0; --k) {
    if (j[static_cast<std::size_t>(k)] * j[static_cast<std::size_t>(k)] >= kSidebandTail) return k;
  }
  return 0;
}

ModSpectrum eopm_spectrum(double alpha, double omega_rf_hz, std::optional<int> max_order) {
  return build(ModulatorKind::phase_modulator, alpha, omega_rf_hz, max_order);
}

ModSpectrum mzm_spectrum(double alpha, double omega_rf_hz, std::optional<int> max_order) {
  return build(ModulatorKind::mz_null_bias, alpha, omega_rf_hz, max_order);
}

ModSpectrum modulator_spectrum(ModulatorKind kind, double alpha, double omega_rf_hz, std::optional<int> max_order) {
  return build(kind, alpha, omega_rf_hz, max_order);
}

void EtalonParams::validate() const {
  if (!(fsr_hz > 0.0) || !std::isfinite(fsr_hz)) throw ValidationError("etalon FSR must be > 0");
  if (!(finesse > 1.0)) throw ValidationError("etalon finesse must be > 1, got " + fmt::sig(finesse, 6));
  if (!(peak_transmission > 0.0 && peak_transmission <= 1.0)) {
    throw ValidationError("etalon peak transmission must lie in (0, 1], got " + fmt::sig(peak_transmission, 6));
  }
  if (!std::isfinite(tuning_offset_hz)) throw ValidationError("etalon tuning offset must be finite");
}

double etalon_transmission(double delta_nu_hz, const EtalonParams& etalon) {
  etalon.validate();
  if (!std::isfinite(delta_nu_hz)) throw ValidationError("detuning must be finite");
  // Reduce to the nearest peak first so the phase stays accurate far out.
  const double reduced = delta_nu_hz - etalon.fsr_hz * std::round(delta_nu_hz / etalon.fsr_hz);
  const double coeff = 2.0 * etalon.finesse / std::numbers::pi;
  const double s = std::sin(std::numbers::pi * reduced / etalon.fsr_hz);
  return etalon.peak_transmission / (1.0 + coeff * coeff * s * s);
}

ModSpectrum filter_spectrum(const ModSpectrum& spectrum, std::span<const EtalonParams> etalons) {
  if (etalons.empty()) throw ValidationError("filter_spectrum needs at least one etalon");
  for (const auto& e : etalons) e.validate();
  ModSpectrum out = spectrum;
  for (auto& line : out.lines) {
    for (const auto& e : etalons) line.power_fraction *= etalon_transmission(line.offset_hz - e.tuning_offset_hz, e);
  }
  return out;
}

ProbeMetrics probe_metrics(const ModSpectrum& filtered, int target_order) {
  const SpectralLine* target = filtered.find(target_order);
  if (!target) throw ValidationError("target order " + std::to_string(target_order) + " not present in spectrum");
  const double total = filtered.total_power();
  if (!(total > 0.0)) throw ValidationError("spectrum transmits no power");
  ProbeMetrics m;
  m.efficiency = target->power_fraction;
  m.purity = target->power_fraction / total;
  const double carrier = filtered.fraction_at(0);
  if (carrier == 0.0) {
    m.carrier_suppression_db = -std::numeric_limits<double>::infinity();
  } else if (target->power_fraction == 0.0) {
    m.carrier_suppression_db = std::numeric_limits<double>::infinity();
  } else {
    m.carrier_suppression_db = 10.0 * std::log10(carrier / target->power_fraction);
  }
  return m;
}

ProbeMetrics double_pass_aom_metrics(double efficiency) {
  if (!(efficiency > 0.0 && efficiency <= kDoublePassAomEfficiency)) {
    throw ValidationError("double-pass AOM efficiency must lie in (0, 0.10], got " + fmt::sig(efficiency, 6));
  }
  return {efficiency, 1.0, -std::numeric_limits<double>::infinity()};
}

AlphaOptimum optimize_alpha(int target_order, ModulatorKind kind, double lo, double hi) {
  const int m = std::abs(target_order);
  if (m + 1 > kMaxBesselOrder) throw ValidationError("target order out of range");
  if (!(lo >= 0.0 && hi <= 10.0 && lo <= hi)) {
    throw ValidationError("alpha range must satisfy 0 <= lo <= hi <= 10");
  }
  if (kind == ModulatorKind::mz_null_bias && m % 2 == 0) {
    throw ValidationError("null-biased MZ modulator emits no even order " + std::to_string(target_order));
  }
  if (lo == hi) return {lo, efficiency_at(m, lo), true};

  // J_m^2 has zero slope at alpha = 0 and at its zeros, so the check is weak
  // at the ends; a range flat at both ends holds no interior maximum.
  const double slope_lo = efficiency_slope(m, lo);
  const double slope_hi = efficiency_slope(m, hi);
  if (!(slope_lo >= 0.0) || !(slope_hi <= 0.0) || (slope_lo == 0.0 && slope_hi == 0.0)) {
    throw ValidationError("alpha range [" + fmt::sig(lo, 6) + ", " + fmt::sig(hi, 6) +
                          "] does not bracket a maximum of J_" + std::to_string(m) + "^2");
  }

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = efficiency_at(m, c);
  double fd = efficiency_at(m, d);
  while (b - a >= 1e-9) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = efficiency_at(m, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = efficiency_at(m, d);
    }
  }
  const double best = 0.5 * (a + b);
  return {best, efficiency_at(m, best), false};
}

std::vector<double> efficiency_scan(int target_order, double lo, double hi, std::size_t count, Exec exec) {
  const int m = std::abs(target_order);
  if (count < 2) throw ValidationError("efficiency_scan needs at least two points");
  if (!(lo >= 0.0 && hi <= kMaxBesselArgument && lo < hi)) throw ValidationError("scan range must satisfy 0 <= lo < hi <= 30");
  if (m > kMaxBesselOrder) throw ValidationError("target order out of range");
  std::vector<double> out(count);
  const double step = (hi - lo) / double(count - 1);
  const auto n = static_cast<std::ptrdiff_t>(count);
  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = efficiency_at(m, std::min(hi, lo + double(i) * step));
    return out;
  }
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = efficiency_at(m, std::min(hi, lo + double(i) * step));
  return out;
}

}  // namespace fwmsq::probe
