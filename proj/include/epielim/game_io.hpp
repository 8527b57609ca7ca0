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

#ifndef EPIELIM_GAME_IO_HPP_
#define EPIELIM_GAME_IO_HPP_

#include <cstddef>
#include <string>
#include <string_view>

#include "epielim/errors.hpp"
#include "epielim/game.hpp"

namespace epielim {

// Game file syntax, one declaration per line, '#' starts a comment:
//
//   players Row Col
//   strategies Row C D
//   strategies Col C D
//   payoff C C : 3 3
//   payoff C D : 0 4/3
//   ...
//
// `players` comes first, then one `strategies` line per player, then one
// `payoff` row per joint strategy. Payoffs are integers or num/den.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message);
  // 1-based; 0 when the problem is not tied to a line (end of input).
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

StrategicGame ParseGame(std::string_view document);

// Canonical document: rows in ascending profile order.
std::string SerializeGame(const StrategicGame& game);

// Reads a file, or standard input when path is "-".
std::string ReadDocument(const std::string& path);

}  // namespace epielim

#endif  // EPIELIM_GAME_IO_HPP_
