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

#include "epielim/game_io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace epielim {
namespace {

std::vector<std::string> Tokens(std::string_view line) {
  std::vector<std::string> out;
  std::string current;
  for (char c : line) {
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

bool IsName(const std::string& token) {
  for (char c : token) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '_' && c != '-' && c != '.' && c != '\'') {
      return false;
    }
  }
  return !token.empty();
}

std::string RowName(const std::vector<std::string>& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ',';
    out += names[i];
  }
  return out + ")";
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : InputError(line == 0 ? message
                           : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

StrategicGame ParseGame(std::string_view document) {
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> strategies;
  std::vector<bool> declared;
  std::vector<std::size_t> strides;
  std::size_t profiles = 0;
  std::vector<std::vector<Rational>> payoffs;
  std::map<std::size_t, std::size_t> row_line;  // profile -> line

  auto ready_for_payoffs = [&](std::size_t line) {
    if (!strides.empty()) return;
    for (std::size_t i = 0; i < players.size(); ++i) {
      if (!declared[i]) {
        throw ParseError(line, "payoff row before strategies of player " +
                                   players[i]);
      }
    }
    strides.assign(players.size(), 1);
    profiles = 1;
    for (std::size_t i = players.size(); i-- > 0;) {
      strides[i] = profiles;
      profiles *= strategies[i].size();
    }
    payoffs.assign(players.size(), std::vector<Rational>(profiles));
  };

  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= document.size()) {
    auto end = document.find('\n', start);
    if (end == std::string_view::npos) end = document.size();
    const auto tokens = Tokens(document.substr(start, end - start));
    start = end + 1;
    ++line_number;
    if (tokens.empty()) continue;

    const std::string& keyword = tokens[0];
    if (keyword == "players") {
      if (!players.empty()) {
        throw ParseError(line_number, "players declared twice");
      }
      players.assign(tokens.begin() + 1, tokens.end());
      if (players.size() < 2) {
        throw ParseError(line_number,
                         "a strategic game needs n > 1 players, got " +
                             std::to_string(players.size()));
      }
      for (std::size_t i = 0; i < players.size(); ++i) {
        if (!IsName(players[i])) {
          throw ParseError(line_number, "bad player name '" + players[i] + "'");
        }
        for (std::size_t j = 0; j < i; ++j) {
          if (players[j] == players[i]) {
            throw ParseError(line_number,
                             "duplicate player name '" + players[i] + "'");
          }
        }
      }
      strategies.assign(players.size(), {});
      declared.assign(players.size(), false);
    } else if (keyword == "strategies") {
      if (players.empty()) {
        throw ParseError(line_number, "strategies before players");
      }
      if (!strides.empty()) {
        throw ParseError(line_number, "strategies after payoff rows");
      }
      if (tokens.size() < 3) {
        throw ParseError(line_number,
                         "expected 'strategies <player> <name>...'");
      }
      std::size_t i = 0;
      while (i < players.size() && players[i] != tokens[1]) ++i;
      if (i == players.size()) {
        throw ParseError(line_number, "unknown player '" + tokens[1] + "'");
      }
      if (declared[i]) {
        throw ParseError(line_number,
                         "strategies of " + players[i] + " declared twice");
      }
      for (std::size_t k = 2; k < tokens.size(); ++k) {
        if (!IsName(tokens[k])) {
          throw ParseError(line_number,
                           "bad strategy name '" + tokens[k] + "'");
        }
        for (const auto& seen : strategies[i]) {
          if (seen == tokens[k]) {
            throw ParseError(line_number, "duplicate strategy '" + tokens[k] +
                                              "' for player " + players[i]);
          }
        }
        strategies[i].push_back(tokens[k]);
      }
      declared[i] = true;
    } else if (keyword == "payoff") {
      if (players.empty()) {
        throw ParseError(line_number, "payoff row before players");
      }
      ready_for_payoffs(line_number);
      const std::size_t n = players.size();
      if (tokens.size() != 2 * n + 2 || tokens[n + 1] != ":") {
        throw ParseError(line_number, "expected 'payoff' followed by " +
                                          std::to_string(n) +
                                          " strategies, ':' and " +
                                          std::to_string(n) + " payoffs");
      }
      std::size_t index = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const auto& names = strategies[i];
        std::size_t s = 0;
        while (s < names.size() && names[s] != tokens[1 + i]) ++s;
        if (s == names.size()) {
          throw ParseError(line_number, "unknown strategy '" + tokens[1 + i] +
                                            "' for player " + players[i]);
        }
        index += s * strides[i];
      }
      const auto [it, inserted] = row_line.emplace(index, line_number);
      if (!inserted) {
        throw ParseError(
            line_number,
            "duplicate payoff row for " +
                RowName({tokens.begin() + 1, tokens.begin() + 1 + n}) +
                " (first given on line " + std::to_string(it->second) + ")");
      }
      for (std::size_t i = 0; i < n; ++i) {
        try {
          payoffs[i][index] = ParseRational(tokens[n + 2 + i]);
        } catch (const InputError& e) {
          throw ParseError(line_number, e.what());
        }
      }
    } else {
      throw ParseError(line_number, "unknown keyword '" + keyword + "'");
    }
  }

  if (players.empty()) throw ParseError(0, "no players declared");
  ready_for_payoffs(line_number);
  if (row_line.size() != profiles) {
    for (std::size_t index = 0; index < profiles; ++index) {
      if (row_line.count(index) != 0) continue;
      std::vector<std::string> names;
      for (std::size_t i = 0; i < players.size(); ++i) {
        names.push_back(
            strategies[i][(index / strides[i]) % strategies[i].size()]);
      }
      throw ParseError(0, "missing payoff row for " + RowName(names));
    }
  }
  return StrategicGame(std::move(players), std::move(strategies),
                       std::move(payoffs));
}

std::string SerializeGame(const StrategicGame& game) {
  std::ostringstream out;
  out << "players";
  for (const auto& name : game.player_names()) out << ' ' << name;
  out << '\n';
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    out << "strategies " << game.player_name(i);
    for (const auto& name : game.strategy_names(i)) out << ' ' << name;
    out << '\n';
  }
  for (ProfileIndex k = 0; k < game.num_profiles(); ++k) {
    out << "payoff";
    for (PlayerId i = 0; i < game.num_players(); ++i) {
      out << ' ' << game.strategy_name(i, game.Component(k, i));
    }
    out << " :";
    for (PlayerId i = 0; i < game.num_players(); ++i) {
      out << ' ' << ToString(game.payoff(i, k));
    }
    out << '\n';
  }
  return out.str();
}

std::string ReadDocument(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace epielim
