#pragma once
// Episode: one self-contained gameplay record.
//
// An episode carries its full identity (seed), the active rule set, the
// observation list, and the ground-truth mapping from observable entities to
// rules: piece type names for chess, category ids for the tabletop games.
// ground_truth is an ordered list so serialization stays deterministic.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rulebench/chess/types.hpp"
#include "rulebench/core/rng.hpp"
#include "rulebench/core/rules.hpp"
#include "rulebench/tabletop/blackjack.hpp"
#include "rulebench/tabletop/dice.hpp"
#include "rulebench/tabletop/holdem.hpp"

namespace rulebench {

using Observation =
    std::variant<ChessMove, HoldemObservation, DiceObservation, BlackjackObservation>;

struct Episode {
  EpisodeSeed seed;
  Game game = Game::Chess;
  RuleSet rule_set;
  std::optional<ChessSetup> board;              // chess only
  DiceStyle dice_style = DiceStyle::Duel;       // dice only
  std::vector<Observation> observations;
  std::vector<std::pair<std::string, RuleId>> ground_truth;

  std::optional<RuleId> rule_for(const std::string& entity) const {
    for (const auto& [name, rule] : ground_truth)
      if (name == entity) return rule;
    return std::nullopt;
  }
};

// One failed validation check.  observation_index is -1 for episode-level
// problems.
struct Violation {
  std::string invariant;
  int observation_index = -1;
  std::string detail;
};

// Raised when constructive episode generation cannot satisfy its quotas.
class GenerationError : public std::runtime_error {
 public:
  GenerationError(const std::string& what, const EpisodeSeed& seed)
      : std::runtime_error(what + " (master_seed=" + std::to_string(seed.master_seed) +
                           ", config_index=" + std::to_string(seed.config_index) + ")"),
        seed_(seed) {}

  const EpisodeSeed& seed() const { return seed_; }

 private:
  EpisodeSeed seed_;
};

}  // namespace rulebench
