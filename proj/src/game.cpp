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

#include "epielim/game.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "epielim/errors.hpp"

namespace epielim {

bool Restriction::Contains(PlayerId i, StrategyId s) const {
  return std::binary_search(sets[i].begin(), sets[i].end(), s);
}

bool Restriction::HasEmptyComponent() const {
  return std::any_of(sets.begin(), sets.end(),
                     [](const StrategySet& s) { return s.empty(); });
}

std::size_t Restriction::NumProfiles() const {
  std::size_t count = 1;
  for (const auto& s : sets) count *= s.size();
  return count;
}

bool IsSubRestriction(const Restriction& a, const Restriction& b) {
  if (a.num_players() != b.num_players()) return false;
  for (std::size_t i = 0; i < a.num_players(); ++i) {
    if (!std::includes(b[i].begin(), b[i].end(), a[i].begin(), a[i].end())) {
      return false;
    }
  }
  return true;
}

Restriction Meet(const Restriction& a, const Restriction& b) {
  Restriction out;
  out.sets.resize(a.num_players());
  for (std::size_t i = 0; i < a.num_players(); ++i) {
    std::set_intersection(a[i].begin(), a[i].end(), b[i].begin(), b[i].end(),
                          std::back_inserter(out[i]));
  }
  return out;
}

StrategicGame::StrategicGame(std::vector<std::string> players,
                             std::vector<std::vector<std::string>> strategies,
                             std::vector<std::vector<Rational>> payoffs)
    : players_(std::move(players)),
      strategies_(std::move(strategies)),
      payoffs_(std::move(payoffs)) {
  const std::size_t n = players_.size();
  if (n < 2) {
    throw InputError("a strategic game needs n > 1 players, got " +
                     std::to_string(n));
  }
  if (std::set<std::string>(players_.begin(), players_.end()).size() != n) {
    throw InputError("duplicate player name");
  }
  if (strategies_.size() != n) {
    throw InputError("expected a strategy list for each of the " +
                     std::to_string(n) + " players");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& names = strategies_[i];
    if (names.empty()) {
      throw InputError("player " + players_[i] + " has no strategies");
    }
    if (std::set<std::string>(names.begin(), names.end()).size() !=
        names.size()) {
      throw InputError("duplicate strategy name for player " + players_[i]);
    }
  }
  strides_.assign(n, 1);
  for (std::size_t i = n; i-- > 0;) {
    strides_[i] = num_profiles_;
    num_profiles_ *= strategies_[i].size();
  }
  if (payoffs_.size() != n) {
    throw InputError("expected a payoff table for each of the " +
                     std::to_string(n) + " players");
  }
  ranks_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (payoffs_[i].size() != num_profiles_) {
      throw InputError("payoff table of player " + players_[i] + " has " +
                       std::to_string(payoffs_[i].size()) +
                       " entries, expected " + std::to_string(num_profiles_));
    }
    std::vector<Rational> distinct = payoffs_[i];
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    ranks_[i].reserve(num_profiles_);
    for (const auto& value : payoffs_[i]) {
      ranks_[i].push_back(static_cast<std::int32_t>(
          std::lower_bound(distinct.begin(), distinct.end(), value) -
          distinct.begin()));
    }
  }
}

PlayerId StrategicGame::PlayerIndex(std::string_view name) const {
  for (PlayerId i = 0; i < players_.size(); ++i) {
    if (players_[i] == name) return i;
  }
  throw InputError("unknown player '" + std::string(name) + "'");
}

StrategyId StrategicGame::StrategyIndex(PlayerId i,
                                        std::string_view name) const {
  CheckPlayer(i);
  const auto& names = strategies_[i];
  for (StrategyId s = 0; s < names.size(); ++s) {
    if (names[s] == name) return s;
  }
  throw InputError("unknown strategy '" + std::string(name) +
                   "' for player " + players_[i]);
}

void StrategicGame::CheckPlayer(PlayerId i) const {
  if (i >= players_.size()) {
    throw InputError("player index " + std::to_string(i) + " out of range");
  }
}

void StrategicGame::CheckStrategy(PlayerId i, StrategyId s) const {
  CheckPlayer(i);
  if (s >= strategies_[i].size()) {
    throw InputError("strategy index " + std::to_string(s) +
                     " out of range for player " + players_[i]);
  }
}

void StrategicGame::CheckRestriction(const Restriction& r) const {
  if (r.num_players() != num_players()) {
    throw InputError("restriction has " + std::to_string(r.num_players()) +
                     " components, game has " +
                     std::to_string(num_players()) + " players");
  }
  for (PlayerId i = 0; i < num_players(); ++i) {
    for (std::size_t k = 0; k < r[i].size(); ++k) {
      CheckStrategy(i, r[i][k]);
      if (k > 0 && r[i][k - 1] >= r[i][k]) {
        throw InputError("restriction component of player " + players_[i] +
                         " is not strictly ascending");
      }
    }
  }
}

ProfileIndex StrategicGame::Encode(std::span<const StrategyId> profile) const {
  if (profile.size() != num_players()) {
    throw InputError("profile has wrong length");
  }
  ProfileIndex index = 0;
  for (PlayerId i = 0; i < num_players(); ++i) {
    CheckStrategy(i, profile[i]);
    index += profile[i] * strides_[i];
  }
  return index;
}

std::vector<StrategyId> StrategicGame::Decode(ProfileIndex index) const {
  std::vector<StrategyId> profile(num_players());
  for (PlayerId i = 0; i < num_players(); ++i) profile[i] = Component(index, i);
  return profile;
}

Restriction StrategicGame::FullRestriction() const {
  Restriction r;
  r.sets.resize(num_players());
  for (PlayerId i = 0; i < num_players(); ++i) {
    for (StrategyId s = 0; s < strategies_[i].size(); ++s) r[i].push_back(s);
  }
  return r;
}

std::string StrategicGame::ProfileName(ProfileIndex index) const {
  std::string out = "(";
  for (PlayerId i = 0; i < num_players(); ++i) {
    if (i > 0) out += ',';
    out += strategies_[i][Component(index, i)];
  }
  return out + ")";
}

std::string StrategicGame::RestrictionName(const Restriction& r) const {
  std::string out;
  for (PlayerId i = 0; i < r.num_players(); ++i) {
    if (i > 0) out += '|';
    out += '{';
    for (std::size_t k = 0; k < r[i].size(); ++k) {
      if (k > 0) out += ',';
      out += strategies_[i][r[i][k]];
    }
    out += '}';
  }
  return out;
}

}  // namespace epielim
