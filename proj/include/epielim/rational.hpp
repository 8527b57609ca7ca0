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

#ifndef EPIELIM_RATIONAL_HPP_
#define EPIELIM_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace epielim {

// Exact payoff values. Comparisons must be tie-exact, so no floating point.
using Rational = boost::multiprecision::cpp_rational;

// Parses "7", "-3" or "num/den" (den != 0). Throws InputError otherwise.
Rational ParseRational(std::string_view text);

// Canonical form: "7", "-3/4".
std::string ToString(const Rational& value);

}  // namespace epielim

#endif  // EPIELIM_RATIONAL_HPP_
