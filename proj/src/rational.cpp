// Copyright 2026 The epielim Authors
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

#include "epielim/rational.hpp"

#include <cctype>
#include <string>

#include "epielim/errors.hpp"

namespace epielim {
namespace {

bool IsInteger(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

boost::multiprecision::cpp_int ToInteger(std::string_view text) {
  std::string digits(text);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return boost::multiprecision::cpp_int(digits);
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!IsInteger(text)) {
      throw InputError("not a rational number: '" + std::string(text) + "'");
    }
    return Rational(ToInteger(text));
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!IsInteger(num) || !IsInteger(den)) {
    throw InputError("not a rational number: '" + std::string(text) + "'");
  }
  const auto denominator = ToInteger(den);
  if (denominator == 0) {
    throw InputError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(ToInteger(num), denominator);
}

std::string ToString(const Rational& value) { return value.str(); }

}  // namespace epielim
