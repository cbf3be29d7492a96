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

// Run configuration for `fwmsq design`: flat INI sections, physical quantities
// carry their unit in the key name. Unknown sections and keys are errors, and
// referenced data files must exist when the config is read.
//
//   [amplifier]  gain, eta, seed_power_w, wavelength_m,
//                pump_power_w, one_photon_detuning_hz, two_photon_detuning_hz (metadata)
//   [modulator]  rf_hz, alpha (number or "auto"), target_order, drive_note (metadata)
//   [etalon]     fsr_hz, finesse, peak_transmission, tuning_offset_hz
//   [schemes]    eopm_etalons, mzm_etalons, aom_efficiency,
//                eopm_rin_db, mzm_rin_db, aom_rin_db   (dBc/Hz)
//   [measurement] sql_scan, squeezed_scan, direct_db   (optional section)

#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>

#include "fwmsq/pia_model.hpp"
#include "fwmsq/probe_gen.hpp"

namespace fwmsq::config {

struct IniEntry {
  std::string value;
  std::size_t line = 0;
};

using IniSection = std::map<std::string, IniEntry>;

struct IniDocument {
  std::map<std::string, IniSection> sections;
  std::map<std::string, std::size_t> section_lines;
};

/// Plain INI: `[section]`, `key = value`, `#` or `;` comments. Keys outside a
/// section, duplicate keys and duplicate sections are ParseErrors.
IniDocument parse_ini(std::istream& in);

struct Measurement {
  std::filesystem::path sql_scan;
  std::filesystem::path squeezed_scan;
  std::optional<double> direct_db;
};

struct RunConfig {
  pia::PiaParams amplifier;
  double wavelength_m = 795e-9;
  std::optional<double> pump_power_w;
  std::optional<double> one_photon_detuning_hz;
  std::optional<double> two_photon_detuning_hz;

  double rf_hz = 0.0;
  /// Empty means "auto": maximize the target sideband.
  std::optional<double> alpha;
  int target_order = -1;
  std::string drive_note;

  probe::EtalonParams etalon;
  int eopm_etalons = 1;
  int mzm_etalons = 1;
  double aom_efficiency = probe::kDoublePassAomEfficiency;
  double eopm_rin_db = 0.0;
  double mzm_rin_db = 0.0;
  double aom_rin_db = 0.0;

  std::optional<Measurement> measurement;
};

/// Relative paths in [measurement] resolve against `base_dir`.
RunConfig parse_run_config(std::istream& in, const std::filesystem::path& base_dir);
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace fwmsq::config
