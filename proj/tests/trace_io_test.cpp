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

#include "fwmsq/trace_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fwmsq/errors.hpp"

namespace fwmsq::noise {
namespace {

const std::filesystem::path kData = FWMSQ_TEST_DATA_DIR;

NoiseTrace trace_from(const std::string& text) {
  std::istringstream in(text);
  return parse_trace(in);
}

PowerScan scan_from(const std::string& text) {
  std::istringstream in(text);
  return parse_scan(in);
}

std::size_t error_line(const std::string& text, bool scan = false) {
  try {
    if (scan) {
      scan_from(text);
    } else {
      trace_from(text);
    }
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return 0;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(ParseTrace, MinimalFile) {
  const auto t = trace_from("# rbw_hz=30000\n# vbw_hz=300\nfreq_hz,power_dbm\n40000,-88.1\n50000,-88.3\n");
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(t.rbw_hz, 30000.0);
  EXPECT_EQ(t.vbw_hz, 300.0);
  EXPECT_EQ(t.freq_hz[1], 50000.0);
  EXPECT_EQ(t.power[0], -88.1);
  EXPECT_EQ(t.units, "dbm");
}

TEST(ParseTrace, CommentsBlankLinesCrlfAndExtraMetadata) {
  const auto t = trace_from(
      "\xEF\xBB\xBF# exported by analyzer\r\n# rbw_hz = 30000\r\n# vbw_hz=300\r\n# label=sql run 3\r\n"
      "# detector=bal-1\r\n\r\nfreq_hz,power_dbm\r\n1, -80\r\n\r\n2,-80.5\r\n# trailing comment\r\n");
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(t.label, "sql run 3");
  EXPECT_EQ(t.extra.at("detector"), "bal-1");
}

TEST(ParseTrace, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("# rbw_hz=1\n# vbw_hz=1\nfreq_hz,power_dbm\n1,-80\n3,-80\n2,-80\n"), 6u);
  EXPECT_EQ(error_line("# rbw_hz=1\n# vbw_hz=1\nfreq_hz,power_dbm\n1,-80\n2,x\n"), 5u);
  EXPECT_EQ(error_line("# rbw_hz=1\n# vbw_hz=1\nfreq,power\n1,-80\n2,-80\n"), 3u);
  EXPECT_EQ(error_line("# rbw_hz=1\n# vbw_hz=1\nfreq_hz,power_dbm\n1,-80\n2\n"), 5u);
  EXPECT_EQ(error_line("# rbw_hz=-5\n# vbw_hz=1\nfreq_hz,power_dbm\n1,-80\n2,-80\n"), 1u);
  EXPECT_EQ(error_line("# vbw_hz=1\nfreq_hz,power_dbm\n1,-80\n2,-80\n"), 2u);
}

TEST(ParseTrace, MessageNamesLine) {
  try {
    trace_from("# rbw_hz=1\n# vbw_hz=1\nfreq_hz,power_dbm\n1,-80\n1,-80\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 5"), std::string::npos) << e.what();
  }
}

TEST(ParseScan, MinimalFile) {
  const auto s = scan_from("# label=sql\noptical_power_w,noise_linear\n2e-05,1.3\n4e-05,2.1\n4e-05,2.2\n");
  EXPECT_EQ(s.label, "sql");
  ASSERT_EQ(s.points.size(), 3u);
  EXPECT_EQ(s.points[0].optical_power_w, 2e-05);
}

TEST(ParseScan, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("optical_power_w,noise_linear\n1e-4,1\n0,2\n", true), 3u);
  EXPECT_EQ(error_line("optical_power_w,noise_linear\n1e-4,1\n2e-4,-2\n", true), 3u);
  EXPECT_EQ(error_line("# rbw_hz=3\noptical_power_w,noise_linear\n1e-4,1\n2e-4,2\n", true), 1u);
}

TEST(LoadFile, MissingFileNamesPath) {
  try {
    load_trace(kData / "does_not_exist.csv");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("does_not_exist.csv"), std::string::npos);
  }
}

TEST(LoadFile, ErrorNamesPathAndLine) {
  try {
    load_trace(kData / "malformed" / "trace_descending.csv");
    FAIL();
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("trace_descending.csv"), std::string::npos) << what;
    EXPECT_NE(what.find("line 6"), std::string::npos) << what;
  }
}

TEST(RoundTrip, WriteThenParseIsLossless) {
  NoiseTrace t;
  t.rbw_hz = 30000;
  t.vbw_hz = 300;
  t.label = "x";
  t.units = "db_rel_sql";
  t.extra["invalid_bins"] = "0";
  t.freq_hz = {1.0 / 3.0, 2.0, 1e6 + 0.1};
  t.power = {-8.826974614441498, 0.1 + 0.2, -1e-300};
  std::ostringstream out;
  write_trace(out, t);
  const auto back = trace_from(out.str());
  EXPECT_EQ(back.freq_hz, t.freq_hz);
  EXPECT_EQ(back.power, t.power);
  EXPECT_EQ(back.units, t.units);
  EXPECT_EQ(back.label, t.label);
  EXPECT_EQ(back.extra, t.extra);

  PowerScan s;
  s.label = "sql";
  s.points = {{3e-5, 2.003057061338948}, {6.599999999999999e-05, 0.7}};
  std::ostringstream sout;
  write_scan(sout, s);
  const auto sback = scan_from(sout.str());
  ASSERT_EQ(sback.points.size(), 2u);
  EXPECT_EQ(sback.points[1].optical_power_w, s.points[1].optical_power_w);
  EXPECT_EQ(sback.points[0].noise, s.points[0].noise);
}

TEST(RoundTrip, NonFiniteValuesAreNotWritten) {
  NoiseTrace t;
  t.rbw_hz = 1;
  t.vbw_hz = 1;
  t.freq_hz = {1, 2};
  t.power = {0, NAN};
  std::ostringstream out;
  EXPECT_THROW(write_trace(out, t), ValidationError);
}

TEST(Fixtures, BundledFilesParse) {
  for (const char* name : {"spectrum_squeezed.csv", "spectrum_sql.csv", "spectrum_electronic.csv", "flat_sql.csv",
                           "flat_squeezed.csv", "flat_electronic.csv"}) {
    EXPECT_NO_THROW(load_trace(kData / name)) << name;
  }
  EXPECT_EQ(load_trace(kData / "spectrum_squeezed.csv").size(), 1024u);
  EXPECT_NO_THROW(load_scan(kData / "power_scan_sql.csv"));
  EXPECT_NO_THROW(load_scan(kData / "power_scan_squeezed.csv"));
}

// Every malformed fixture is rejected by both parsers with a structured error.
TEST(Totality, MalformedCorpusAlwaysYieldsParseError) {
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kData / "malformed")) {
    ++files;
    const std::string text = slurp(entry.path());
    SCOPED_TRACE(entry.path().filename().string());
    EXPECT_THROW(trace_from(text), ParseError);
    EXPECT_THROW(scan_from(text), ParseError);
  }
  EXPECT_GE(files, 10u);
}

// Random byte-level edits of a valid file: the parser either returns a value
// that satisfies every invariant or throws ParseError. Nothing else escapes.
TEST(Totality, MutatedInputsNeverEscape) {
  const std::string base = slurp(kData / "flat_sql.csv").substr(0, 400);
  const std::string alphabet = "0123456789,.-+e#=\n\r x";
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int trial = 0; trial < 3000; ++trial) {
    std::string text = base;
    const int edits = 1 + trial % 4;
    for (int k = 0; k < edits; ++k) {
      const std::size_t p = std::uniform_int_distribution<std::size_t>(0, text.size() - 1)(rng);
      switch (trial % 3) {
        case 0: text[p] = alphabet[pick(rng)]; break;
        case 1: text.erase(p, 1); break;
        default: text.insert(p, 1, alphabet[pick(rng)]); break;
      }
    }
    try {
      const auto t = trace_from(text);
      EXPECT_NO_THROW(t.validate());
    } catch (const ParseError&) {
    } catch (const std::exception& e) {
      ADD_FAILURE() << "unexpected exception " << e.what() << " for:\n" << text;
    }
  }
}

}  // namespace
}  // namespace fwmsq::noise
