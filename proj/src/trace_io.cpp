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

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fwmsq/errors.hpp"
#include "fwmsq/format.hpp"

namespace fwmsq::noise {

namespace {

constexpr std::string_view kTraceHeader = "freq_hz,power_dbm";
constexpr std::string_view kScanHeader = "optical_power_w,noise_linear";

struct Row {
  std::size_t line = 0;
  double first = 0.0;
  double second = 0.0;
};

struct Table {
  std::map<std::string, std::pair<std::string, std::size_t>> meta;  // key -> (value, line)
  std::vector<Row> rows;
  std::size_t header_line = 0;
};

// Single pass over the stream: metadata and comments, one header, numeric rows.
Table read_table(std::istream& in, std::string_view header) {
  Table t;
  std::string raw;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (line_no == 1 && line.substr(0, 3) == "\xEF\xBB\xBF") line.remove_prefix(3);
    line = fmt::trim(line);
    if (line.empty()) continue;

    if (line.front() == '#') {
      const std::string_view body = fmt::trim(line.substr(1));
      const auto eq = body.find('=');
      if (eq == std::string_view::npos) continue;
      if (seen_header) throw ParseError(line_no, "metadata line after the column header");
      const std::string key(fmt::trim(body.substr(0, eq)));
      const std::string value(fmt::trim(body.substr(eq + 1)));
      if (key.empty()) throw ParseError(line_no, "metadata line with empty key");
      if (t.meta.count(key)) throw ParseError(line_no, "duplicate metadata key '" + key + "'");
      t.meta[key] = {value, line_no};
      continue;
    }

    if (!seen_header) {
      if (line != header) {
        throw ParseError(line_no, "expected column header '" + std::string(header) + "', got '" + std::string(line) + "'");
      }
      seen_header = true;
      t.header_line = line_no;
      continue;
    }

    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError(line_no, "expected exactly 2 comma-separated cells");
    }
    const auto a = fmt::parse_double(line.substr(0, comma));
    if (!a) throw ParseError(line_no, "non-numeric cell '" + std::string(fmt::trim(line.substr(0, comma))) + "'");
    const auto b = fmt::parse_double(line.substr(comma + 1));
    if (!b) throw ParseError(line_no, "non-numeric cell '" + std::string(fmt::trim(line.substr(comma + 1))) + "'");
    t.rows.push_back({line_no, *a, *b});
  }
  if (in.bad()) throw ParseError(line_no, "read error");
  if (!seen_header) throw ParseError(line_no, "missing column header '" + std::string(header) + "'");
  return t;
}

double positive_meta(const Table& t, const std::string& key) {
  const auto it = t.meta.find(key);
  if (it == t.meta.end()) throw ParseError(t.header_line, "missing required metadata '# " + key + "=...'");
  const auto v = fmt::parse_double(it->second.first);
  if (!v || !(*v > 0.0)) throw ParseError(it->second.second, key + " must be a positive number");
  return *v;
}

}  // namespace

NoiseTrace parse_trace(std::istream& in) {
  const Table t = read_table(in, kTraceHeader);
  NoiseTrace trace;
  trace.rbw_hz = positive_meta(t, "rbw_hz");
  trace.vbw_hz = positive_meta(t, "vbw_hz");
  for (const auto& [key, value] : t.meta) {
    if (key == "rbw_hz" || key == "vbw_hz") continue;
    if (key == "label") {
      trace.label = value.first;
    } else if (key == "units") {
      trace.units = value.first;
    } else {
      trace.extra[key] = value.first;
    }
  }
  if (t.rows.size() < 2) throw ParseError(t.rows.empty() ? t.header_line : t.rows.back().line, "trace needs at least 2 data rows");
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i > 0 && !(t.rows[i].first > t.rows[i - 1].first)) {
      throw ParseError(t.rows[i].line, "frequency not strictly ascending");
    }
    if (t.rows[i].first < 0.0) throw ParseError(t.rows[i].line, "negative frequency");
    trace.freq_hz.push_back(t.rows[i].first);
    trace.power.push_back(t.rows[i].second);
  }
  trace.validate();
  return trace;
}

PowerScan parse_scan(std::istream& in) {
  const Table t = read_table(in, kScanHeader);
  PowerScan scan;
  for (const auto& [key, value] : t.meta) {
    if (key != "label") throw ParseError(value.second, "unknown scan metadata key '" + key + "'");
    scan.label = value.first;
  }
  std::set<double> distinct;
  for (const auto& row : t.rows) {
    if (!(row.first > 0.0)) throw ParseError(row.line, "optical power must be > 0");
    if (!(row.second >= 0.0)) throw ParseError(row.line, "noise must be >= 0");
    distinct.insert(row.first);
    scan.points.push_back({row.first, row.second});
  }
  if (distinct.size() < 2) {
    throw ParseError(t.rows.empty() ? t.header_line : t.rows.back().line, "scan needs at least 2 distinct optical powers");
  }
  return scan;
}

namespace {

template <typename T>
T load_file(const std::filesystem::path& path, T (*fn)(std::istream&)) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path.string() + ": cannot open file");
  try {
    return fn(in);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

}  // namespace

NoiseTrace load_trace(const std::filesystem::path& path) { return load_file(path, &parse_trace); }

PowerScan load_scan(const std::filesystem::path& path) { return load_file(path, &parse_scan); }

void write_trace(std::ostream& out, const NoiseTrace& trace) {
  trace.validate();
  out << "# rbw_hz=" << fmt::exact(trace.rbw_hz) << '\n';
  out << "# vbw_hz=" << fmt::exact(trace.vbw_hz) << '\n';
  if (!trace.label.empty()) out << "# label=" << trace.label << '\n';
  if (trace.units != "dbm") out << "# units=" << trace.units << '\n';
  for (const auto& [key, value] : trace.extra) out << "# " << key << '=' << value << '\n';
  out << kTraceHeader << '\n';
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (!std::isfinite(trace.power[i])) throw ValidationError("cannot write non-finite trace value at point " + std::to_string(i));
    out << fmt::exact(trace.freq_hz[i]) << ',' << fmt::exact(trace.power[i]) << '\n';
  }
}

void write_scan(std::ostream& out, const PowerScan& scan) {
  scan.validate();
  if (!scan.label.empty()) out << "# label=" << scan.label << '\n';
  out << kScanHeader << '\n';
  for (const auto& p : scan.points) out << fmt::exact(p.optical_power_w) << ',' << fmt::exact(p.noise) << '\n';
}

}  // namespace fwmsq::noise
