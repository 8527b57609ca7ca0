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

#ifndef EPIELIM_ERRORS_HPP_
#define EPIELIM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace epielim {

// Malformed input: unknown identifiers, invalid games, bad file contents.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// An operation was called outside its domain (e.g. s_i not in G_i).
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::logic_error(what) {}
};

// An exhaustive enumeration would exceed its configured budget.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace epielim

#endif  // EPIELIM_ERRORS_HPP_
