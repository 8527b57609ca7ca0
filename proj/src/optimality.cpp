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

#include "epielim/optimality.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "epielim/errors.hpp"

namespace epielim {
namespace {

StrategySet FromMask(std::uint64_t mask, std::size_t size) {
  StrategySet set;
  for (StrategyId s = 0; s < size; ++s) {
    if (mask >> s & 1U) set.push_back(s);
  }
  return set;
}

bool Dominates(PropertyKind kind, const StrategicGame& game, PlayerId i,
               StrategyId dominator, StrategyId dominated,
               const Restriction& r) {
  return kind == PropertyKind::kStrictDominance
             ? StrictlyDominates(game, i, dominator, dominated, r)
             : WeaklyDominates(game, i, dominator, dominated, r);
}

}  // namespace

std::string ToString(OptimalityProperty property) {
  std::string out;
  switch (property.kind) {
    case PropertyKind::kStrictDominance: out = "sd"; break;
    case PropertyKind::kWeakDominance: out = "wd"; break;
    case PropertyKind::kBestResponse: out = "br"; break;
  }
  return out + (property.scope == PropertyScope::kLocal ? "l" : "g");
}

OptimalityProperty ParseProperty(std::string_view text) {
  for (const auto& property : kAllProperties) {
    if (ToString(property) == text) return property;
  }
  throw InputError("unknown optimality property '" + std::string(text) +
                   "' (expected sdl, sdg, wdl, wdg, brl or brg)");
}

bool StrictlyDominates(const StrategicGame& game, PlayerId i,
                       StrategyId dominator, StrategyId dominated,
                       const Restriction& r) {
  game.CheckStrategy(i, dominator);
  game.CheckStrategy(i, dominated);
  const std::size_t stride = game.stride(i);
  return ForEachOpponentProfile(game, r, i, [&](ProfileIndex base) {
    return game.rank(i, base + dominator * stride) >
           game.rank(i, base + dominated * stride);
  });
}

bool WeaklyDominates(const StrategicGame& game, PlayerId i,
                     StrategyId dominator, StrategyId dominated,
                     const Restriction& r) {
  game.CheckStrategy(i, dominator);
  game.CheckStrategy(i, dominated);
  const std::size_t stride = game.stride(i);
  bool somewhere_better = false;
  const bool never_worse =
      ForEachOpponentProfile(game, r, i, [&](ProfileIndex base) {
        const auto a = game.rank(i, base + dominator * stride);
        const auto b = game.rank(i, base + dominated * stride);
        somewhere_better = somewhere_better || a > b;
        return a >= b;
      });
  return never_worse && somewhere_better;
}

bool IsBestResponse(const StrategicGame& game, PlayerId i, StrategyId s,
                    ProfileIndex opponent_base,
                    const StrategySet& comparison) {
  const std::size_t stride = game.stride(i);
  const auto mine = game.rank(i, opponent_base + s * stride);
  return std::all_of(comparison.begin(), comparison.end(), [&](StrategyId t) {
    return mine >= game.rank(i, opponent_base + t * stride);
  });
}

bool IsBestResponse(const StrategicGame& game, PlayerId i, StrategyId s,
                    const std::vector<StrategyId>& profile,
                    const StrategySet& comparison) {
  game.CheckStrategy(i, s);
  for (StrategyId t : comparison) game.CheckStrategy(i, t);
  std::vector<StrategyId> base = profile;
  if (base.size() != game.num_players()) {
    throw InputError("opponent profile has wrong length");
  }
  base[i] = 0;
  return IsBestResponse(game, i, s, game.Encode(base), comparison);
}

StrategySet ComparisonSet(const StrategicGame& game,
                          OptimalityProperty property, PlayerId i,
                          const Restriction& r) {
  if (property.scope == PropertyScope::kLocal) return r[i];
  StrategySet all(game.num_strategies(i));
  std::iota(all.begin(), all.end(), StrategyId{0});
  return all;
}

bool PropertyHolds(OptimalityProperty property, const StrategicGame& game,
                   PlayerId i, StrategyId s, const Restriction& r) {
  game.CheckPlayer(i);
  if (i >= r.num_players() || !r.Contains(i, s)) {
    throw PreconditionError("strategy " + std::to_string(s) +
                            " is not in the restriction for player " +
                            game.player_name(i));
  }
  if (property.kind == PropertyKind::kBestResponse) {
    const StrategySet comparison = ComparisonSet(game, property, i, r);
    const bool none_supports =
        ForEachOpponentProfile(game, r, i, [&](ProfileIndex base) {
          return !IsBestResponse(game, i, s, base, comparison);
        });
    return !none_supports;
  }
  return !FirstDominator(property, game, i, s, r).has_value();
}

std::optional<StrategyId> FirstDominator(OptimalityProperty property,
                                         const StrategicGame& game, PlayerId i,
                                         StrategyId s, const Restriction& r) {
  if (property.kind == PropertyKind::kBestResponse) return std::nullopt;
  for (StrategyId t : ComparisonSet(game, property, i, r)) {
    if (t != s && Dominates(property.kind, game, i, t, s, r)) return t;
  }
  return std::nullopt;
}

AssumptionAResult SatisfiesAssumptionA(OptimalityProperty property,
                                       const StrategicGame& game, PlayerId i,
                                       std::size_t budget) {
  game.CheckPlayer(i);
  const std::size_t n = game.num_players();
  std::size_t total_bits = 0;
  for (PlayerId j = 0; j < n; ++j) total_bits += game.num_strategies(j);
  if (total_bits >= 63 || (std::size_t{1} << total_bits) > budget) {
    throw ResourceError("assumption A check needs 2^" +
                        std::to_string(total_bits) +
                        " restrictions, budget is " + std::to_string(budget));
  }

  const std::size_t own_size = game.num_strategies(i);
  Restriction r;
  r.sets.resize(n);
  std::vector<std::uint64_t> mask(n, 0);
  // Odometer over the opponents' subsets.
  while (true) {
    for (PlayerId j = 0; j < n; ++j) {
      if (j != i) r[j] = FromMask(mask[j], game.num_strategies(j));
    }
    for (StrategyId s = 0; s < own_size; ++s) {
      std::optional<bool> first_value;
      std::uint64_t first_mask = 0;
      for (std::uint64_t own = 0; own < (std::uint64_t{1} << own_size);
           ++own) {
        if (!(own >> s & 1U)) continue;
        r[i] = FromMask(own, own_size);
        const bool value = PropertyHolds(property, game, i, s, r);
        if (!first_value) {
          first_value = value;
          first_mask = own;
        } else if (value != *first_value) {
          AssumptionAWitness witness;
          witness.strategy = s;
          witness.with_own = r;
          witness.with_own[i] = FromMask(first_mask, own_size);
          witness.with_alternative = r;
          witness.holds_with_own = *first_value;
          return {false, std::move(witness)};
        }
      }
    }
    PlayerId j = n;
    while (j-- > 0) {
      if (j == i) continue;
      if (++mask[j] < (std::uint64_t{1} << game.num_strategies(j))) break;
      mask[j] = 0;
    }
    if (j == static_cast<PlayerId>(-1)) break;
  }
  return {true, std::nullopt};
}

}  // namespace epielim
