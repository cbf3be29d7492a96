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

#include "fwmsq/run_config.hpp"

#include <fstream>
#include <initializer_list>
#include <set>

#include "fwmsq/errors.hpp"
#include "fwmsq/format.hpp"

namespace fwmsq::config {

IniDocument parse_ini(std::istream& in) {
  IniDocument doc;
  std::string raw;
  std::size_t line_no = 0;
  std::string current;
  bool in_section = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = fmt::trim(raw);
    if (line_no == 1 && line.substr(0, 3) == "\xEF\xBB\xBF") line = fmt::trim(line.substr(3));
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, "unterminated section header");
      current = std::string(fmt::trim(line.substr(1, line.size() - 2)));
      if (current.empty()) throw ParseError(line_no, "empty section name");
      if (doc.sections.count(current)) throw ParseError(line_no, "duplicate section [" + current + "]");
      doc.sections[current];
      doc.section_lines[current] = line_no;
      in_section = true;
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    if (!in_section) throw ParseError(line_no, "key outside of any [section]");
    const std::string key(fmt::trim(line.substr(0, eq)));
    if (key.empty()) throw ParseError(line_no, "empty key");
    auto& section = doc.sections[current];
    if (section.count(key)) throw ParseError(line_no, "duplicate key '" + key + "' in [" + current + "]");
    section[key] = {std::string(fmt::trim(line.substr(eq + 1))), line_no};
  }
  return doc;
}

namespace {

// Typed access to one section. Keys outside `known` are rejected up front so
// a misspelt key is reported on its own line, not as a missing one.
class SectionReader {
 public:
  SectionReader(const IniDocument& doc, std::string name, std::initializer_list<const char*> known)
      : name_(std::move(name)) {
    const auto it = doc.sections.find(name_);
    if (it == doc.sections.end()) return;
    section_ = &it->second;
    line_ = doc.section_lines.at(name_);
    const std::set<std::string> allowed(known.begin(), known.end());
    for (const auto& [key, e] : *section_) {
      if (!allowed.count(key)) throw ParseError(e.line, "[" + name_ + "] unknown key '" + key + "'");
    }
  }

  bool present() const { return section_ != nullptr; }

  const IniEntry* entry(const std::string& key) const {
    if (!section_) return nullptr;
    const auto it = section_->find(key);
    return it == section_->end() ? nullptr : &it->second;
  }

  std::optional<double> number(const std::string& key) {
    const IniEntry* e = entry(key);
    if (!e) return std::nullopt;
    const auto v = fmt::parse_double(e->value);
    if (!v) throw ParseError(e->line, "[" + name_ + "] " + key + ": expected a number, got '" + e->value + "'");
    return v;
  }

  double required_number(const std::string& key) {
    const auto v = number(key);
    if (!v) throw ParseError(line_, "[" + name_ + "] missing required key '" + key + "'");
    return *v;
  }

  std::optional<int> integer(const std::string& key) {
    const IniEntry* e = entry(key);
    if (!e) return std::nullopt;
    const auto v = fmt::parse_long(e->value);
    if (!v) throw ParseError(e->line, "[" + name_ + "] " + key + ": expected an integer, got '" + e->value + "'");
    return static_cast<int>(*v);
  }

  std::optional<std::string> text(const std::string& key) {
    const IniEntry* e = entry(key);
    if (!e) return std::nullopt;
    return e->value;
  }

  std::size_t line_of(const std::string& key) const {
    if (!section_) return line_;
    const auto it = section_->find(key);
    return it == section_->end() ? line_ : it->second.line;
  }

 private:
  std::string name_;
  const IniSection* section_ = nullptr;
  std::size_t line_ = 0;
};

template <typename Fn>
void checked(std::size_t line, Fn&& fn) {
  try {
    fn();
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

RunConfig parse_run_config(std::istream& in, const std::filesystem::path& base_dir) {
  const IniDocument doc = parse_ini(in);
  static const std::set<std::string> known = {"amplifier", "modulator", "etalon", "schemes", "measurement"};
  for (const auto& [name, line] : doc.section_lines) {
    if (!known.count(name)) throw ParseError(line, "unknown section [" + name + "]");
  }
  for (const char* required : {"amplifier", "modulator", "etalon", "schemes"}) {
    if (!doc.sections.count(required)) throw ParseError(0, std::string("missing section [") + required + "]");
  }

  RunConfig cfg;

  SectionReader amp(doc, "amplifier",
                    {"gain", "eta", "seed_power_w", "wavelength_m", "pump_power_w", "one_photon_detuning_hz",
                     "two_photon_detuning_hz"});
  cfg.amplifier.gain = amp.required_number("gain");
  cfg.amplifier.eta = amp.required_number("eta");
  cfg.amplifier.seed_power_w = amp.required_number("seed_power_w");
  cfg.wavelength_m = amp.number("wavelength_m").value_or(cfg.wavelength_m);
  cfg.pump_power_w = amp.number("pump_power_w");
  cfg.one_photon_detuning_hz = amp.number("one_photon_detuning_hz");
  cfg.two_photon_detuning_hz = amp.number("two_photon_detuning_hz");
  checked(amp.line_of("gain"), [&] { cfg.amplifier.validate(); });
  if (!(cfg.amplifier.seed_power_w > 0.0)) throw ParseError(amp.line_of("seed_power_w"), "seed_power_w must be > 0");
  if (!(cfg.wavelength_m > 0.0)) throw ParseError(amp.line_of("wavelength_m"), "wavelength_m must be > 0");

  SectionReader mod(doc, "modulator", {"rf_hz", "alpha", "target_order", "drive_note"});
  cfg.rf_hz = mod.required_number("rf_hz");
  if (!(cfg.rf_hz > 0.0)) throw ParseError(mod.line_of("rf_hz"), "rf_hz must be > 0");
  const auto alpha_text = mod.text("alpha");
  if (!alpha_text) throw ParseError(mod.line_of("alpha"), "[modulator] missing required key 'alpha'");
  if (*alpha_text != "auto") {
    const auto a = fmt::parse_double(*alpha_text);
    if (!a || *a < 0.0 || *a > 10.0) {
      throw ParseError(mod.line_of("alpha"), "alpha must be 'auto' or a number in [0, 10]");
    }
    cfg.alpha = *a;
  }
  cfg.target_order = mod.integer("target_order").value_or(cfg.target_order);
  if (cfg.target_order == 0) throw ParseError(mod.line_of("target_order"), "target_order must be a nonzero sideband");
  cfg.drive_note = mod.text("drive_note").value_or("");

  SectionReader et(doc, "etalon", {"fsr_hz", "finesse", "peak_transmission", "tuning_offset_hz"});
  cfg.etalon.fsr_hz = et.required_number("fsr_hz");
  cfg.etalon.finesse = et.required_number("finesse");
  cfg.etalon.peak_transmission = et.number("peak_transmission").value_or(1.0);
  cfg.etalon.tuning_offset_hz = et.number("tuning_offset_hz").value_or(cfg.target_order * cfg.rf_hz);
  checked(et.line_of("fsr_hz"), [&] { cfg.etalon.validate(); });

  SectionReader sch(doc, "schemes",
                    {"eopm_etalons", "mzm_etalons", "aom_efficiency", "eopm_rin_db", "mzm_rin_db", "aom_rin_db"});
  cfg.eopm_etalons = sch.integer("eopm_etalons").value_or(1);
  cfg.mzm_etalons = sch.integer("mzm_etalons").value_or(1);
  cfg.aom_efficiency = sch.number("aom_efficiency").value_or(probe::kDoublePassAomEfficiency);
  cfg.eopm_rin_db = sch.required_number("eopm_rin_db");
  cfg.mzm_rin_db = sch.required_number("mzm_rin_db");
  cfg.aom_rin_db = sch.required_number("aom_rin_db");
  if (cfg.eopm_etalons < 1 || cfg.eopm_etalons > 8) throw ParseError(sch.line_of("eopm_etalons"), "eopm_etalons must lie in [1, 8]");
  if (cfg.mzm_etalons < 1 || cfg.mzm_etalons > 8) throw ParseError(sch.line_of("mzm_etalons"), "mzm_etalons must lie in [1, 8]");
  checked(sch.line_of("aom_efficiency"), [&] { probe::double_pass_aom_metrics(cfg.aom_efficiency); });

  SectionReader meas(doc, "measurement", {"sql_scan", "squeezed_scan", "direct_db"});
  if (meas.present()) {
    Measurement m;
    const auto sql = meas.text("sql_scan");
    const auto sq = meas.text("squeezed_scan");
    if (!sql || !sq) throw ParseError(meas.line_of("sql_scan"), "[measurement] needs both sql_scan and squeezed_scan");
    m.sql_scan = base_dir / *sql;
    m.squeezed_scan = base_dir / *sq;
    m.direct_db = meas.number("direct_db");
    if (!std::filesystem::exists(m.sql_scan)) throw ParseError(meas.line_of("sql_scan"), "file not found: " + m.sql_scan.string());
    if (!std::filesystem::exists(m.squeezed_scan)) {
      throw ParseError(meas.line_of("squeezed_scan"), "file not found: " + m.squeezed_scan.string());
    }
    cfg.measurement = m;
  }
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path.string() + ": cannot open file");
  try {
    return parse_run_config(in, path.parent_path());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

}  // namespace fwmsq::config
