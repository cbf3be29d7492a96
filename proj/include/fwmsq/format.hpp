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

// Locale-independent number formatting and parsing (std::to_chars /
// std::from_chars). Non-finite values print as "inf", "-inf" or "nan"; a
// negative zero prints without its sign.

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace fwmsq::fmt {

/// %.{digits}g equivalent.
std::string sig(double value, int digits = 6);

/// %.{decimals}f equivalent.
std::string fixed(double value, int decimals);

/// Shortest representation that parses back to the same double.
std::string exact(double value);

/// Parses a whole string (surrounding blanks allowed) as a finite double.
std::optional<double> parse_double(std::string_view text);
std::optional<long> parse_long(std::string_view text);

std::string_view trim(std::string_view text);

}  // namespace fwmsq::fmt
