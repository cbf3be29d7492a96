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

// Text formats for spectrum-analyzer traces and power scans.
//
// Trace file:
//   # rbw_hz=30000          (required)
//   # vbw_hz=300            (required)
//   # label=squeezed        (optional; other "# key=value" lines are kept)
//   freq_hz,power_dbm
//   40000,-88.1
//   ...
//
// Scan file:
//   # label=sql
//   optical_power_w,noise_linear
//   2e-05,1.3e-09
//   ...
//
// '#' lines without '=' are comments. Blank lines are ignored. Every error is a
// ParseError carrying the offending line number.

#pragma once

#include <filesystem>
#include <istream>
#include <ostream>

#include "fwmsq/noise_fit.hpp"

namespace fwmsq::noise {

NoiseTrace parse_trace(std::istream& in);
PowerScan parse_scan(std::istream& in);

/// File wrappers; errors are rethrown as ValidationError prefixed with the path.
NoiseTrace load_trace(const std::filesystem::path& path);
PowerScan load_scan(const std::filesystem::path& path);

/// Writes values in shortest round-trip form so parse_trace(write_trace(t)) == t.
void write_trace(std::ostream& out, const NoiseTrace& trace);
void write_scan(std::ostream& out, const PowerScan& scan);

}  // namespace fwmsq::noise
