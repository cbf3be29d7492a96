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

#include "fwmsq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "CLI11.hpp"
#include "json.hpp"

#include "fwmsq/errors.hpp"
#include "fwmsq/format.hpp"
#include "fwmsq/pia_model.hpp"
#include "fwmsq/trace_io.hpp"

namespace fwmsq::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kPlanck = 6.62607015e-34;
constexpr double kSpeedOfLight = 299792458.0;

// Output formatting: linear ratios with 6 decimals, dB with 2 decimals,
// everything else with 6 significant digits.
enum class Style { sig, ratio, db, integer };

struct Field {
  std::string key;
  std::string text;
  Json json;
};

Field num(std::string key, double value, Style style = Style::sig) {
  std::string text;
  switch (style) {
    case Style::sig: text = fmt::sig(value, 6); break;
    case Style::ratio: text = fmt::fixed(value, 6); break;
    case Style::db: text = fmt::fixed(value, 2); break;
    case Style::integer: text = std::to_string(static_cast<long>(value)); break;
  }
  Json j;
  if (style == Style::integer) {
    j = static_cast<long>(value);
  } else if (std::isfinite(value)) {
    j = *fmt::parse_double(text);
  }
  return {std::move(key), std::move(text), std::move(j)};
}

Field none(std::string key) { return {std::move(key), "-", Json()}; }

Field str(std::string key, const std::string& value) { return {std::move(key), value, Json(value)}; }

using Record = std::vector<Field>;

std::string record_line(const Record& r) {
  std::string line;
  for (const auto& f : r) {
    if (!line.empty()) line += ' ';
    line += f.key + '=' + f.text;
  }
  return line;
}

Json record_json(const Record& r) {
  Json j = Json::object();
  for (const auto& f : r) j[f.key] = f.json;
  return j;
}

struct Table {
  std::vector<Record> rows;

  std::string csv() const {
    std::string s;
    if (rows.empty()) return s;
    for (std::size_t i = 0; i < rows.front().size(); ++i) s += (i ? "," : "") + rows.front()[i].key;
    s += '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + row[i].text;
      s += '\n';
    }
    return s;
  }

  Json json() const {
    Json a = Json::array();
    for (const auto& row : rows) a.push_back(record_json(row));
    return a;
  }
};

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::pair<double, double> parse_range(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ValidationError("--range: expected LO,HI, got '" + text + "'");
  const auto lo = fmt::parse_double(text.substr(0, comma));
  const auto hi = fmt::parse_double(text.substr(comma + 1));
  if (!lo || !hi) throw ValidationError("--range: expected two numbers, got '" + text + "'");
  return {*lo, *hi};
}

probe::EtalonParams parse_etalon(const std::string& text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto cell = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto v = fmt::parse_double(cell);
    if (!v) throw ValidationError("--etalon: non-numeric field '" + cell + "' in '" + text + "'");
    values.push_back(*v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.size() != 4) throw ValidationError("--etalon: expected fsr,finesse,tpeak,offset, got '" + text + "'");
  probe::EtalonParams e{values[0], values[1], values[2], values[3]};
  try {
    e.validate();
  } catch (const ValidationError& ex) {
    throw ValidationError(std::string("--etalon ") + text + ": " + ex.what());
  }
  return e;
}

Record metrics_record(const probe::ProbeMetrics& m) {
  return {num("efficiency", m.efficiency), num("purity", m.purity),
          num("carrier_suppression_db", m.carrier_suppression_db, Style::db)};
}

// ---- subcommand bodies ----------------------------------------------------

struct PiaArgs {
  double gain = 0.0;
  double eta = 0.0;
  double epsilon = 0.0;
  double squeezing_db = 0.0;
  bool json = false;
};

// Library messages name the offending parameter; map it onto the flag.
template <typename Fn>
auto flagged(const std::string& flag, Fn&& fn) {
  try {
    return fn();
  } catch (const ValidationError& e) {
    throw ValidationError(flag + ": " + e.what());
  } catch (const InfeasibleError& e) {
    throw InfeasibleError(flag + ": " + e.what());
  }
}

void cmd_pia(const PiaArgs& a, bool have_gain, bool have_eta, std::ostream& out) {
  if (!have_gain) throw ValidationError("pia: --gain is required");
  if (!have_eta) throw ValidationError("pia: --eta is required");
  flagged("--gain", [&] { pia::PiaParams{a.gain, 1.0, 0.0, 0.0}.validate(); });
  flagged("--eta", [&] { pia::max_squeezing(a.eta); });
  flagged("--epsilon", [&] { pia::PiaParams{1.0, 1.0, 0.0, a.epsilon}.validate(); });
  const double ds = pia::squeezing_ratio_with_seed_noise(a.gain, a.eta, a.epsilon);
  const Record r{num("ds_linear", ds, Style::ratio), num("ds_db", pia::to_db(ds), Style::db)};
  if (a.json) {
    emit_json(out, record_json(r));
  } else {
    out << record_line(r) << '\n';
  }
}

void cmd_pia_invert(const PiaArgs& a, std::ostream& out) {
  flagged("--gain", [&] { pia::PiaParams{a.gain, 1.0, 0.0, 0.0}.validate(); });
  const double ds = pia::from_db(a.squeezing_db);
  const double eta = flagged("--squeezing-db", [&] { return pia::infer_eta(a.gain, ds); });
  const Record r{num("eta", eta, Style::ratio), num("ds_linear", ds, Style::ratio),
                 num("ds_floor_db", pia::to_db(pia::max_squeezing(eta)), Style::db)};
  if (a.json) {
    emit_json(out, record_json(r));
  } else {
    out << record_line(r) << '\n';
  }
}

struct SidebandArgs {
  std::string kind;
  double alpha = 0.0;
  double rf_hz = 0.0;
  int target_order = -1;
  std::vector<std::string> etalons;
  bool json = false;
};

void cmd_sidebands(const SidebandArgs& a, std::ostream& out) {
  const auto kind = flagged("--kind", [&] { return probe::parse_modulator_kind(a.kind); });
  if (!(a.rf_hz > 0.0) || !std::isfinite(a.rf_hz)) throw ValidationError("--rf-hz: must be finite and > 0");
  const auto raw = flagged("--alpha", [&] { return probe::modulator_spectrum(kind, a.alpha, a.rf_hz); });
  std::vector<probe::EtalonParams> etalons;
  for (const auto& e : a.etalons) etalons.push_back(parse_etalon(e));
  const auto filtered = etalons.empty() ? raw : probe::filter_spectrum(raw, etalons);

  Table table;
  for (std::size_t i = 0; i < filtered.lines.size(); ++i) {
    const auto& line = filtered.lines[i];
    table.rows.push_back({num("order", line.order, Style::integer), num("offset_hz", line.offset_hz),
                          num("modulator_fraction", raw.lines[i].power_fraction),
                          num("power_fraction", line.power_fraction)});
  }
  Record summary{str("kind", a.kind), num("alpha", a.alpha), num("target_order", a.target_order, Style::integer),
                 num("etalons", double(etalons.size()), Style::integer), num("total_power", filtered.total_power())};
  const Record metrics =
      metrics_record(flagged("--target-order", [&] { return probe::probe_metrics(filtered, a.target_order); }));
  if (a.json) {
    Json j = record_json(summary);
    j["lines"] = table.json();
    j["metrics"] = record_json(metrics);
    emit_json(out, j);
  } else {
    out << table.csv() << record_line(summary) << '\n' << record_line(metrics) << '\n';
  }
}

struct OptimizeArgs {
  int order = 1;
  std::string kind;
  std::string range;
  bool json = false;
};

void cmd_optimize(const OptimizeArgs& a, std::ostream& out, std::ostream& err) {
  const auto kind = flagged("--kind", [&] { return probe::parse_modulator_kind(a.kind); });
  const auto [lo, hi] = parse_range(a.range);
  if (a.order == 0) throw ValidationError("--order: must be a nonzero sideband order");
  const auto best = flagged("--order/--range", [&] { return probe::optimize_alpha(a.order, kind, lo, hi); });
  if (best.flat_warning) err << "warning: --range is a single point; returning it without search\n";
  const Record r{num("alpha_star", best.alpha), num("efficiency", best.efficiency),
                 num("flat_range", best.flat_warning ? 1 : 0, Style::integer)};
  if (a.json) {
    emit_json(out, record_json(r));
  } else {
    out << record_line(r) << '\n';
  }
}

Record fit_record(const std::string& which, const noise::FitResult& f) {
  return {str("fit", which), num("slope", f.slope), num("slope_stderr", f.slope_stderr), num("intercept", f.intercept),
          num("r_squared", f.r_squared, Style::ratio)};
}

Record ratio_record(const noise::SlopeRatio& s) {
  Record r{num("ratio", s.ratio, Style::ratio)};
  if (s.saturated()) {
    r.push_back(str("squeezing_db", "-inf"));
    r.back().json = Json();
    r.push_back(num("saturated", 1, Style::integer));
  } else {
    r.push_back(num("squeezing_db", *s.squeezing_db, Style::db));
    r.push_back(num("saturated", 0, Style::integer));
  }
  return r;
}

struct FitArgs {
  std::string sql;
  std::string squeezed;
  bool json = false;
};

void cmd_fit(const FitArgs& a, std::ostream& out) {
  const auto sql = noise::load_scan(a.sql);
  const auto sq = noise::load_scan(a.squeezed);
  const auto s = flagged("--sql", [&] { return noise::slope_ratio_squeezing(sql, sq); });
  const Record sql_r = fit_record("sql", s.sql);
  const Record sq_r = fit_record("squeezed", s.squeezed);
  const Record ratio = ratio_record(s);
  if (a.json) {
    Json j = Json::object();
    j["sql"] = record_json(sql_r);
    j["squeezed"] = record_json(sq_r);
    j["result"] = record_json(ratio);
    emit_json(out, j);
  } else {
    out << record_line(sql_r) << '\n' << record_line(sq_r) << '\n' << record_line(ratio) << '\n';
  }
}

struct SpectrumArgs {
  std::string squeezed;
  std::string sql;
  std::string electronic;
  std::string output;
  bool json = false;
};

void cmd_spectrum(const SpectrumArgs& a, std::ostream& out) {
  const auto sq = noise::load_trace(a.squeezed);
  const auto sql = noise::load_trace(a.sql);
  std::optional<noise::NoiseTrace> el;
  if (!a.electronic.empty()) el = noise::load_trace(a.electronic);
  const auto spec = flagged("--squeezed/--sql/--electronic", [&] { return noise::squeezing_spectrum(sq, sql, el); });

  // Invalid bins are left out of the file; the count is recorded in its header.
  noise::NoiseTrace written = spec.trace;
  written.freq_hz.clear();
  written.power.clear();
  for (std::size_t i = 0; i < spec.trace.size(); ++i) {
    if (std::isnan(spec.trace.power[i])) continue;
    written.freq_hz.push_back(spec.trace.freq_hz[i]);
    written.power.push_back(spec.trace.power[i]);
  }
  written.extra["invalid_bins"] = std::to_string(spec.invalid_bins.size());
  written.extra["electronic_corrected"] = el ? "1" : "0";
  if (written.size() < 2) throw InfeasibleError("fewer than 2 valid bins: SQL does not exceed the electronic floor");

  std::ofstream file(a.output);
  if (!file) throw ValidationError(a.output + ": cannot open output file");
  noise::write_trace(file, written);
  file.close();
  if (!file) throw ValidationError(a.output + ": write failed");

  const auto [lo, hi] = std::minmax_element(written.power.begin(), written.power.end());
  const double mean = std::accumulate(written.power.begin(), written.power.end(), 0.0) / double(written.size());
  const Record r{num("bins", double(spec.trace.size()), Style::integer),
                 num("valid_bins", double(written.size()), Style::integer),
                 num("invalid_bins", double(spec.invalid_bins.size()), Style::integer),
                 num("electronic_corrected", el ? 1 : 0, Style::integer),
                 num("mean_db", mean, Style::db),
                 num("min_db", *lo, Style::db),
                 num("max_db", *hi, Style::db)};
  if (a.json) {
    emit_json(out, record_json(r));
  } else {
    out << record_line(r) << '\n';
  }
}

struct DesignArgs {
  std::string config;
  bool json = false;
};

Record scheme_record(const SchemeRow& s) {
  return {str("scheme", s.scheme),
          num("etalons", s.etalons, Style::integer),
          s.alpha ? num("alpha", *s.alpha) : none("alpha"),
          num("efficiency", s.metrics.efficiency),
          num("purity", s.metrics.purity),
          num("carrier_suppression_db", s.metrics.carrier_suppression_db, Style::db),
          num("input_power_w", s.input_power_w),
          num("epsilon", s.epsilon),
          num("ds_linear", s.ds, Style::ratio),
          num("ds_db", pia::to_db(s.ds), Style::db),
          num("ds_noisy_linear", s.ds_with_noise, Style::ratio),
          num("ds_noisy_db", pia::to_db(s.ds_with_noise), Style::db)};
}

void cmd_design(const DesignArgs& a, std::ostream& out) {
  const auto cfg = config::load_run_config(a.config);
  const auto rep = flagged(a.config, [&] { return design(cfg); });
  const auto& amp = rep.config.amplifier;

  Record amplifier{num("gain", amp.gain),
                   num("eta", amp.eta, Style::ratio),
                   num("seed_power_w", amp.seed_power_w),
                   num("probe_power_w", rep.probe_power_w),
                   num("conjugate_power_w", rep.conjugate_power_w),
                   num("total_power_w", rep.total_power_w),
                   num("ds_floor_linear", rep.ds_floor, Style::ratio),
                   num("ds_floor_db", pia::to_db(rep.ds_floor), Style::db)};
  Record metadata;
  if (cfg.pump_power_w) metadata.push_back(num("pump_power_w", *cfg.pump_power_w));
  if (cfg.one_photon_detuning_hz) metadata.push_back(num("one_photon_detuning_hz", *cfg.one_photon_detuning_hz));
  if (cfg.two_photon_detuning_hz) metadata.push_back(num("two_photon_detuning_hz", *cfg.two_photon_detuning_hz));
  if (!cfg.drive_note.empty()) metadata.push_back(str("drive_note", cfg.drive_note));
  Table schemes;
  for (const auto& s : rep.schemes) schemes.rows.push_back(scheme_record(s));

  Record measurement;
  if (rep.slope) {
    measurement = ratio_record(*rep.slope);
    if (cfg.measurement->direct_db) measurement.push_back(num("direct_db", *cfg.measurement->direct_db, Style::db));
    if (rep.degradation_db) measurement.push_back(num("degradation_db", *rep.degradation_db, Style::db));
  }

  if (a.json) {
    Json j = Json::object();
    j["amplifier"] = record_json(amplifier);
    j["metadata"] = record_json(metadata);
    j["schemes"] = schemes.json();
    if (rep.slope) j["measurement"] = record_json(measurement);
    emit_json(out, j);
    return;
  }
  out << "[amplifier]\n" << record_line(amplifier) << '\n';
  if (!metadata.empty()) out << "[metadata]\n" << record_line(metadata) << '\n';
  out << "[schemes]\n" << schemes.csv();
  if (rep.slope) out << "[measurement]\n" << record_line(measurement) << '\n';
}

}  // namespace

double rin_to_epsilon(double rin_db, double power_w, double wavelength_m) {
  if (!std::isfinite(rin_db)) throw ValidationError("RIN must be finite");
  if (!(power_w > 0.0) || !(wavelength_m > 0.0)) throw ValidationError("power and wavelength must be > 0");
  const double photon_energy = kPlanck * kSpeedOfLight / wavelength_m;
  return std::pow(10.0, rin_db / 10.0) * power_w / (2.0 * photon_energy);
}

DesignReport design(const config::RunConfig& cfg) {
  DesignReport rep;
  rep.config = cfg;
  const auto& amp = cfg.amplifier;
  const auto powers = pia::output_powers(amp.gain, amp.seed_power_w, amp.eta);
  rep.probe_power_w = powers.probe_w;
  rep.conjugate_power_w = powers.conjugate_w;
  rep.total_power_w = powers.total_w;
  rep.ds_floor = pia::max_squeezing(amp.eta);
  const double ds_ideal = pia::squeezing_ratio(amp.gain, amp.eta);

  const auto modulated = [&](const std::string& name, probe::ModulatorKind kind, int etalon_count, double rin_db) {
    double alpha;
    if (cfg.alpha) {
      alpha = *cfg.alpha;
    } else {
      // Bracket the global maximum of J_m^2 on a coarse grid, then refine.
      constexpr std::size_t kGrid = 1001;
      const auto scan = probe::efficiency_scan(cfg.target_order, 0.0, 10.0, kGrid);
      const auto best = static_cast<std::size_t>(std::max_element(scan.begin(), scan.end()) - scan.begin());
      const double step = 10.0 / double(kGrid - 1);
      const double lo = best == 0 ? 0.0 : double(best - 1) * step;
      const double hi = std::min(10.0, double(best + 1) * step);
      alpha = probe::optimize_alpha(cfg.target_order, kind, lo, hi).alpha;
    }
    const auto raw = probe::modulator_spectrum(kind, alpha, cfg.rf_hz);
    const std::vector<probe::EtalonParams> cascade(static_cast<std::size_t>(etalon_count), cfg.etalon);
    SchemeRow row;
    row.scheme = name;
    row.etalons = etalon_count;
    row.alpha = alpha;
    row.metrics = probe::probe_metrics(probe::filter_spectrum(raw, cascade), cfg.target_order);
    row.epsilon = rin_to_epsilon(rin_db, amp.seed_power_w, cfg.wavelength_m);
    return row;
  };

  rep.schemes.push_back(modulated("eopm", probe::ModulatorKind::phase_modulator, cfg.eopm_etalons, cfg.eopm_rin_db));
  rep.schemes.push_back(modulated("mzm", probe::ModulatorKind::mz_null_bias, cfg.mzm_etalons, cfg.mzm_rin_db));
  SchemeRow aom;
  aom.scheme = "aom";
  aom.metrics = probe::double_pass_aom_metrics(cfg.aom_efficiency);
  aom.epsilon = rin_to_epsilon(cfg.aom_rin_db, amp.seed_power_w, cfg.wavelength_m);
  rep.schemes.push_back(aom);

  for (auto& row : rep.schemes) {
    if (!(row.metrics.efficiency > 0.0)) throw InfeasibleError(row.scheme + ": target sideband carries no power");
    row.input_power_w = amp.seed_power_w / row.metrics.efficiency;
    row.ds = ds_ideal;
    row.ds_with_noise = pia::squeezing_ratio_with_seed_noise(amp.gain, amp.eta, row.epsilon);
  }

  if (cfg.measurement) {
    rep.slope = noise::slope_ratio_squeezing(noise::load_scan(cfg.measurement->sql_scan),
                                             noise::load_scan(cfg.measurement->squeezed_scan));
    if (cfg.measurement->direct_db && rep.slope->squeezing_db) {
      rep.degradation_db = noise::system_noise_budget(*rep.slope->squeezing_db, *cfg.measurement->direct_db);
    }
  }
  return rep;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Four-wave-mixing two-mode squeezing simulator and noise analysis toolkit", "fwmsq"};
  app.require_subcommand(1);

  PiaArgs pia_args;
  auto* pia_cmd = app.add_subcommand("pia", "Squeezing of a lossy phase-insensitive amplifier");
  pia_cmd->require_subcommand(0, 1);
  auto* gain_opt = pia_cmd->add_option("--gain", pia_args.gain, "Intensity gain G >= 1");
  auto* eta_opt = pia_cmd->add_option("--eta", pia_args.eta, "Arm transmissivity in [0, 1]");
  pia_cmd->add_option("--epsilon", pia_args.epsilon, "Seed excess intensity noise (shot-noise units)");
  pia_cmd->add_flag("--json", pia_args.json, "Emit JSON");

  PiaArgs inv_args;
  auto* inv_cmd = pia_cmd->add_subcommand("invert", "Transmissivity explaining a measured squeezing level");
  inv_cmd->add_option("--gain", inv_args.gain, "Intensity gain G > 1")->required();
  inv_cmd->add_option("--squeezing-db", inv_args.squeezing_db, "Measured squeezing in dB (negative below SQL)")
      ->required();
  inv_cmd->add_flag("--json", inv_args.json, "Emit JSON");

  SidebandArgs sb_args;
  auto* sb_cmd = app.add_subcommand("sidebands", "Modulator sideband spectrum and etalon filtering");
  sb_cmd->add_option("--kind", sb_args.kind, "eopm or mzm")->required();
  sb_cmd->add_option("--alpha", sb_args.alpha, "Modulation index")->required();
  sb_cmd->add_option("--rf-hz", sb_args.rf_hz, "RF drive frequency in Hz")->required();
  sb_cmd->add_option("--target-order", sb_args.target_order, "Sideband kept as the probe (default -1)");
  sb_cmd->add_option("--etalon", sb_args.etalons, "fsr_hz,finesse,tpeak,offset_hz (repeat to cascade)");
  sb_cmd->add_flag("--json", sb_args.json, "Emit JSON");

  OptimizeArgs opt_args;
  auto* opt_cmd = app.add_subcommand("optimize-alpha", "Modulation index maximizing one sideband");
  opt_cmd->add_option("--order", opt_args.order, "Target sideband order")->required();
  opt_cmd->add_option("--kind", opt_args.kind, "eopm or mzm")->required();
  opt_cmd->add_option("--range", opt_args.range, "LO,HI search interval within [0, 10]")->required();
  opt_cmd->add_flag("--json", opt_args.json, "Emit JSON");

  FitArgs fit_args;
  auto* fit_cmd = app.add_subcommand("fit", "Slope-ratio squeezing from SQL and squeezed power scans");
  fit_cmd->add_option("--sql", fit_args.sql, "SQL power scan file")->required();
  fit_cmd->add_option("--squeezed", fit_args.squeezed, "Twin-beam power scan file")->required();
  fit_cmd->add_flag("--json", fit_args.json, "Emit JSON");

  SpectrumArgs sp_args;
  auto* sp_cmd = app.add_subcommand("spectrum", "Per-frequency squeezing relative to the SQL");
  sp_cmd->add_option("--squeezed", sp_args.squeezed, "Squeezed trace file")->required();
  sp_cmd->add_option("--sql", sp_args.sql, "SQL trace file")->required();
  sp_cmd->add_option("--electronic", sp_args.electronic, "Electronic noise floor trace file");
  sp_cmd->add_option("-o,--output", sp_args.output, "Output trace file")->required();
  sp_cmd->add_flag("--json", sp_args.json, "Emit JSON");

  DesignArgs design_args;
  auto* design_cmd = app.add_subcommand("design", "End-to-end probe-generation and squeezing comparison");
  design_cmd->add_option("--config", design_args.config, "Run configuration file")->required();
  design_cmd->add_flag("--json", design_args.json, "Emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitValidation;
  }

  try {
    if (pia_cmd->parsed()) {
      if (inv_cmd->parsed()) {
        cmd_pia_invert(inv_args, out);
      } else {
        cmd_pia(pia_args, gain_opt->count() > 0, eta_opt->count() > 0, out);
      }
    } else if (sb_cmd->parsed()) {
      cmd_sidebands(sb_args, out);
    } else if (opt_cmd->parsed()) {
      cmd_optimize(opt_args, out, err);
    } else if (fit_cmd->parsed()) {
      cmd_fit(fit_args, out);
    } else if (sp_cmd->parsed()) {
      cmd_spectrum(sp_args, out);
    } else if (design_cmd->parsed()) {
      cmd_design(design_args, out);
    }
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace fwmsq::cli
