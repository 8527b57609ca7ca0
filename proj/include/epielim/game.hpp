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

#ifndef EPIELIM_GAME_HPP_
#define EPIELIM_GAME_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epielim/rational.hpp"

namespace epielim {

using PlayerId = std::size_t;
using StrategyId = std::size_t;

// Index into the flat joint-strategy table of the initial game. Player 0 is
// the most significant digit, so ids sort lexicographically by profile.
using ProfileIndex = std::size_t;

// Strategies of one player, as indices into H_i, strictly ascending.
using StrategySet = std::vector<StrategyId>;

// A restriction (G_1, ..., G_n) of the initial game, G_i a subset of H_i.
// Restrictions ordered by componentwise inclusion form a complete lattice
// whose top is the full game.
struct Restriction {
  std::vector<StrategySet> sets;

  std::size_t num_players() const { return sets.size(); }
  const StrategySet& operator[](PlayerId i) const { return sets[i]; }
  StrategySet& operator[](PlayerId i) { return sets[i]; }
  bool Contains(PlayerId i, StrategyId s) const;
  // True iff some component is empty.
  bool HasEmptyComponent() const;
  // Number of joint strategies, i.e. the product of the component sizes.
  std::size_t NumProfiles() const;

  friend bool operator==(const Restriction&, const Restriction&) = default;
};

// Componentwise inclusion: a is below b.
bool IsSubRestriction(const Restriction& a, const Restriction& b);
// Lattice meet (componentwise intersection).
Restriction Meet(const Restriction& a, const Restriction& b);

// The initial game H: players, finite strategy sets, exact payoffs.
//
// Immutable after construction. Besides the exact payoffs it keeps, per
// player, an order-preserving integer rank of every payoff so that the
// dominance and best-response code compares machine integers.
class StrategicGame {
 public:
  // payoffs[i][k] is p_i at joint profile k (see ProfileIndex).
  // Throws InputError unless n > 1, each H_i is non-empty and duplicate
  // free, and each payoff table has exactly prod |H_i| entries.
  StrategicGame(std::vector<std::string> players,
                std::vector<std::vector<std::string>> strategies,
                std::vector<std::vector<Rational>> payoffs);

  std::size_t num_players() const { return players_.size(); }
  const std::string& player_name(PlayerId i) const { return players_.at(i); }
  std::size_t num_strategies(PlayerId i) const {
    return strategies_.at(i).size();
  }
  const std::string& strategy_name(PlayerId i, StrategyId s) const {
    return strategies_.at(i).at(s);
  }
  const std::vector<std::string>& strategy_names(PlayerId i) const {
    return strategies_.at(i);
  }
  const std::vector<std::string>& player_names() const { return players_; }

  // Name lookups; throw InputError for unknown names.
  PlayerId PlayerIndex(std::string_view name) const;
  StrategyId StrategyIndex(PlayerId i, std::string_view name) const;

  // Throw InputError when out of range.
  void CheckPlayer(PlayerId i) const;
  void CheckStrategy(PlayerId i, StrategyId s) const;
  // Throws InputError unless r is a restriction of this game.
  void CheckRestriction(const Restriction& r) const;

  std::size_t num_profiles() const { return num_profiles_; }
  std::size_t stride(PlayerId i) const { return strides_[i]; }
  ProfileIndex Encode(std::span<const StrategyId> profile) const;
  std::vector<StrategyId> Decode(ProfileIndex index) const;
  StrategyId Component(ProfileIndex index, PlayerId i) const {
    return (index / strides_[i]) % strategies_[i].size();
  }

  const Rational& payoff(PlayerId i, ProfileIndex index) const {
    return payoffs_[i][index];
  }
  const std::vector<Rational>& payoff_table(PlayerId i) const {
    return payoffs_[i];
  }
  // rank(i, a) < rank(i, b) iff payoff(i, a) < payoff(i, b).
  std::int32_t rank(PlayerId i, ProfileIndex index) const {
    return ranks_[i][index];
  }

  Restriction FullRestriction() const;
  // Human-readable "(C,D)" for a joint profile.
  std::string ProfileName(ProfileIndex index) const;
  // "{C,D}|{D}" for a restriction.
  std::string RestrictionName(const Restriction& r) const;

  friend bool operator==(const StrategicGame& a, const StrategicGame& b) {
    return a.players_ == b.players_ && a.strategies_ == b.strategies_ &&
           a.payoffs_ == b.payoffs_;
  }

 private:
  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> strategies_;
  std::vector<std::vector<Rational>> payoffs_;
  std::vector<std::vector<std::int32_t>> ranks_;
  std::vector<std::size_t> strides_;
  std::size_t num_profiles_ = 1;
};

// Visits every opponent profile s_{-i} in r_{-i}. fn receives the flat index
// of (0, s_{-i}); add s * game.stride(i) to place player i at strategy s.
// fn returns false to stop early. Returns false iff stopped early. With an
// empty r_{-i} the visitor is never called.
template <typename Fn>
bool ForEachOpponentProfile(const StrategicGame& game, const Restriction& r,
                            PlayerId i, Fn&& fn) {
  const std::size_t n = game.num_players();
  for (PlayerId j = 0; j < n; ++j) {
    if (j != i && r[j].empty()) return true;
  }
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    ProfileIndex base = 0;
    for (PlayerId j = 0; j < n; ++j) {
      if (j != i) base += r[j][digit[j]] * game.stride(j);
    }
    if (!fn(base)) return false;
    PlayerId j = n;
    while (j-- > 0) {
      if (j == i) continue;
      if (++digit[j] < r[j].size()) break;
      digit[j] = 0;
    }
    if (j == static_cast<PlayerId>(-1)) return true;
  }
}

// Visits every joint profile in r in ascending ProfileIndex order.
template <typename Fn>
void ForEachProfile(const StrategicGame& game, const Restriction& r, Fn&& fn) {
  if (r.HasEmptyComponent()) return;
  const std::size_t n = game.num_players();
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    ProfileIndex index = 0;
    for (PlayerId j = 0; j < n; ++j) index += r[j][digit[j]] * game.stride(j);
    fn(index);
    PlayerId j = n;
    while (j-- > 0) {
      if (++digit[j] < r[j].size()) break;
      digit[j] = 0;
    }
    if (j == static_cast<PlayerId>(-1)) return;
  }
}

}  // namespace epielim

#endif  // EPIELIM_GAME_HPP_
