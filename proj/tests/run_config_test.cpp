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

#include <gtest/gtest.h>

#include <sstream>

#include "fwmsq/errors.hpp"

namespace fwmsq::config {
namespace {

const std::filesystem::path kData = FWMSQ_TEST_DATA_DIR;
const std::filesystem::path kConfigs = FWMSQ_CONFIG_DIR;

const std::string kMinimal =
    "[amplifier]\ngain = 15\neta = 0.9\nseed_power_w = 1e-5\n"
    "[modulator]\nrf_hz = 3.04e9\nalpha = auto\n"
    "[etalon]\nfsr_hz = 15e9\nfinesse = 30\n"
    "[schemes]\neopm_rin_db = -150\nmzm_rin_db = -150\naom_rin_db = -150\n";

RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_run_config(in, kData);
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "accepted:\n" << text;
  return 0;
}

TEST(Ini, SectionsKeysAndComments) {
  std::istringstream in("# top\n[a]\nx = 1\n; note\ny=two words\n\n[b]\nz= 3\n");
  const auto doc = parse_ini(in);
  EXPECT_EQ(doc.sections.at("a").at("x").value, "1");
  EXPECT_EQ(doc.sections.at("a").at("y").value, "two words");
  EXPECT_EQ(doc.sections.at("b").at("z").line, 8u);
}

TEST(Ini, StructuralErrors) {
  const auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      parse_ini(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("x = 1\n"), 1u);
  EXPECT_EQ(line_of("[a]\nx = 1\nx = 2\n"), 3u);
  EXPECT_EQ(line_of("[a]\n[a]\n"), 2u);
  EXPECT_EQ(line_of("[a]\njust words\n"), 2u);
  EXPECT_EQ(line_of("[a\n"), 1u);
}

TEST(RunConfig, MinimalDefaults) {
  const auto c = parse(kMinimal);
  EXPECT_EQ(c.amplifier.gain, 15.0);
  EXPECT_FALSE(c.alpha.has_value());
  EXPECT_EQ(c.target_order, -1);
  EXPECT_EQ(c.etalon.tuning_offset_hz, -3.04e9);
  EXPECT_EQ(c.etalon.peak_transmission, 1.0);
  EXPECT_EQ(c.aom_efficiency, 0.10);
  EXPECT_EQ(c.wavelength_m, 795e-9);
  EXPECT_FALSE(c.measurement.has_value());
}

TEST(RunConfig, BundledOperatingPoint) {
  const auto c = load_run_config(kConfigs / "run.cfg");
  EXPECT_EQ(c.amplifier.gain, 15.0);
  EXPECT_EQ(c.amplifier.seed_power_w, 10e-6);
  EXPECT_EQ(c.rf_hz, 3.04e9);
  EXPECT_EQ(c.etalon.fsr_hz, 15e9);
  EXPECT_EQ(c.drive_note, "2.05 dB");
  ASSERT_TRUE(c.measurement.has_value());
  EXPECT_TRUE(std::filesystem::exists(c.measurement->sql_scan));
  EXPECT_EQ(*c.measurement->direct_db, -8.0);
}

TEST(RunConfig, UnknownKeysAndSectionsAreErrors) {
  EXPECT_EQ(error_line(kMinimal + "[extra]\nx = 1\n"), 15u);
  std::string typo = kMinimal;
  typo.replace(typo.find("finesse"), 7, "finess");
  EXPECT_EQ(error_line(typo), 10u);
}

TEST(RunConfig, MissingSectionOrKey) {
  std::string no_schemes = kMinimal.substr(0, kMinimal.find("[schemes]"));
  EXPECT_THROW(parse(no_schemes), ParseError);
  std::string no_gain = kMinimal;
  no_gain.erase(no_gain.find("gain = 15\n"), 10);
  EXPECT_EQ(error_line(no_gain), 1u);
}

TEST(RunConfig, ValueErrorsPointAtTheirLine) {
  auto with = [](const std::string& from, const std::string& to) {
    std::string s = kMinimal;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  EXPECT_EQ(error_line(with("gain = 15", "gain = 0.5")), 2u);
  EXPECT_EQ(error_line(with("eta = 0.9", "eta = lots")), 3u);
  EXPECT_EQ(error_line(with("alpha = auto", "alpha = 12")), 7u);
  EXPECT_EQ(error_line(with("finesse = 30", "finesse = 1")), 9u);
  EXPECT_EQ(error_line(with("rf_hz = 3.04e9", "rf_hz = -1")), 6u);
  EXPECT_EQ(error_line(kMinimal + "eopm_etalons = 9\n"), 15u);
  EXPECT_EQ(error_line(kMinimal + "aom_efficiency = 0.5\n"), 15u);
  EXPECT_EQ(error_line(with("alpha = auto", "alpha = auto\ntarget_order = 0")), 8u);
}

TEST(RunConfig, MeasurementFilesMustExist) {
  const std::string good = kMinimal + "[measurement]\nsql_scan = power_scan_sql.csv\nsqueezed_scan = power_scan_squeezed.csv\n";
  EXPECT_NO_THROW(parse(good));
  const std::string bad = kMinimal + "[measurement]\nsql_scan = nope.csv\nsqueezed_scan = power_scan_squeezed.csv\n";
  EXPECT_EQ(error_line(bad), 16u);
}

TEST(RunConfig, LoadErrorNamesFile) {
  try {
    load_run_config(kData / "missing.cfg");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("missing.cfg"), std::string::npos);
  }
}

}  // namespace
}  // namespace fwmsq::config
