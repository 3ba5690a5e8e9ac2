// Copyright 2026 The contractive Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "contractive/complex_text.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "contractive/errors.hpp"

namespace contractive {

namespace {

[[noreturn]] void fail(std::string_view text) {
  throw InputError("cannot parse complex number '" + std::string(text) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Parses a signed real with optional exponent; "" / "+" / "-" mean +-1 when
// allow_unit is set (the "i" / "-i" forms).
double parse_real(std::string_view s, bool allow_unit, std::string_view whole) {
  if (allow_unit && (s.empty() || s == "+" || s == "-")) return s == "-" ? -1.0 : 1.0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) fail(whole);
  return value;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) fail(text);
  const char last = s.back();
  if (last != 'i' && last != 'j') return {parse_real(s, false, text), 0.0};

  const std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not the leading sign and not part of an
  // exponent such as 1e-3.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_real(body, true, text)};
  return {parse_real(body.substr(0, split), false, text),
          parse_real(body.substr(split), true, text)};
}

}  // namespace contractive
