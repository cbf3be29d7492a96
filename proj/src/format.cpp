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

#include "fwmsq/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace fwmsq::fmt {

namespace {

std::optional<std::string> non_finite(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return std::nullopt;
}

// "-0", "-0.00", "-0e+00" and friends lose their sign.
std::string drop_negative_zero(std::string s) {
  if (!s.empty() && s.front() == '-') {
    bool all_zero = true;
    for (char c : s.substr(1)) {
      if (c == 'e' || c == 'E') break;
      if (c != '0' && c != '.') {
        all_zero = false;
        break;
      }
    }
    if (all_zero) s.erase(0, 1);
  }
  return s;
}

template <typename... Args>
std::string render(double value, Args... args) {
  if (auto nf = non_finite(value)) return *nf;
  std::array<char, 128> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, args...);
  return drop_negative_zero(std::string(buf.data(), res.ptr));
}

}  // namespace

std::string sig(double value, int digits) { return render(value, std::chars_format::general, digits); }

std::string fixed(double value, int decimals) { return render(value, std::chars_format::fixed, decimals); }

std::string exact(double value) { return render(value); }

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

std::optional<double> parse_double(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') {
    text.remove_prefix(1);
    if (!text.empty() && text.front() == '-') return std::nullopt;
  }
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::optional<long> parse_long(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') {
    text.remove_prefix(1);
    if (!text.empty() && text.front() == '-') return std::nullopt;
  }
  if (text.empty()) return std::nullopt;
  long value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace fwmsq::fmt
