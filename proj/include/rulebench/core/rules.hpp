#pragma once
// Rule identities, per-game rule pools, and rule-combination enumeration.
//
// Rules are indexed 1-based within their pool to match the NR1../SR1.. names
// used everywhere (transcripts, ground truth, judge records).  A RuleSet is
// the active subset for one episode: chess plays 4 normal + 4 special rules
// out of pools of 6, the other games play 2 + 2 out of pools of 5 (hold'em)
// or 4 (dice, blackjack).  enumerate_rule_combinations orders the rule sets
// lexicographically over sorted index vectors, normals varying slowest, and
// that order pins the config_index <-> RuleSet mapping for good.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rulebench {

enum class Game { Chess, Holdem, Dice, Blackjack };

inline constexpr Game kAllGames[] = {Game::Chess, Game::Holdem, Game::Dice, Game::Blackjack};

enum class RuleKind { Normal, Special };

// Outcome of any two-sided comparison (hands, rolls, duels).
enum class Ordering { AWins, BWins, Tie };

inline const char* game_name(Game g) {
  switch (g) {
    case Game::Chess: return "chess";
    case Game::Holdem: return "holdem";
    case Game::Dice: return "dice";
    case Game::Blackjack: return "blackjack";
  }
  throw std::logic_error("game_name: bad game");
}

// Human-facing name used in judge prompts.
inline const char* game_display_name(Game g) {
  switch (g) {
    case Game::Chess: return "chess";
    case Game::Holdem: return "Texas Hold'em";
    case Game::Dice: return "dice";
    case Game::Blackjack: return "blackjack";
  }
  throw std::logic_error("game_display_name: bad game");
}

inline Game game_from_name(const std::string& name) {
  for (const Game g : kAllGames)
    if (name == game_name(g)) return g;
  throw std::invalid_argument("game_from_name: unknown game '" + name + "'");
}

inline int rule_pool_size(Game g) {
  switch (g) {
    case Game::Chess: return 6;
    case Game::Holdem: return 5;
    case Game::Dice: return 4;
    case Game::Blackjack: return 4;
  }
  throw std::logic_error("rule_pool_size: bad game");
}

// How many rules of each kind an episode activates.
inline int active_rule_count(Game g) { return g == Game::Chess ? 4 : 2; }

struct RuleId {
  Game game = Game::Chess;
  RuleKind kind = RuleKind::Normal;
  int index = 1;  // 1-based within the pool

  friend bool operator==(const RuleId&, const RuleId&) = default;
  friend auto operator<=>(const RuleId&, const RuleId&) = default;
};

inline RuleId make_rule(Game game, RuleKind kind, int index) {
  if (index < 1 || index > rule_pool_size(game))
    throw std::invalid_argument("make_rule: index out of range for game pool");
  return RuleId{game, kind, index};
}

// "NR3", "SR1", ...
inline std::string rule_name(const RuleId& id) {
  return (id.kind == RuleKind::Normal ? "NR" : "SR") + std::to_string(id.index);
}

inline RuleId rule_from_name(Game game, const std::string& name) {
  if (name.size() < 3 || (name[0] != 'N' && name[0] != 'S') || name[1] != 'R')
    throw std::invalid_argument("rule_from_name: bad rule name '" + name + "'");
  const RuleKind kind = name[0] == 'N' ? RuleKind::Normal : RuleKind::Special;
  int index = 0;
  for (std::size_t i = 2; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9')
      throw std::invalid_argument("rule_from_name: bad rule name '" + name + "'");
    index = index * 10 + (name[i] - '0');
  }
  return make_rule(game, kind, index);
}

// Active rules for one episode.  Index vectors are kept sorted ascending.
struct RuleSet {
  Game game = Game::Chess;
  std::vector<int> normals;
  std::vector<int> specials;

  bool contains(RuleKind kind, int index) const {
    const auto& v = kind == RuleKind::Normal ? normals : specials;
    return std::find(v.begin(), v.end(), index) != v.end();
  }
  bool contains(const RuleId& id) const { return id.game == game && contains(id.kind, id.index); }

  std::vector<RuleId> all_rules() const {
    std::vector<RuleId> out;
    for (const int i : normals) out.push_back(RuleId{game, RuleKind::Normal, i});
    for (const int i : specials) out.push_back(RuleId{game, RuleKind::Special, i});
    return out;
  }

  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

// Throws unless rs has the right cardinalities, sorted unique indices, and
// every index inside the game's pool.
inline void validate_rule_set(const RuleSet& rs) {
  const int want = active_rule_count(rs.game);
  const int pool = rule_pool_size(rs.game);
  const auto check = [&](const std::vector<int>& v, const char* which) {
    if (static_cast<int>(v.size()) != want)
      throw std::invalid_argument(std::string("rule set: wrong number of ") + which + " rules");
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 1 || v[i] > pool)
        throw std::invalid_argument(std::string("rule set: ") + which + " index out of pool");
      if (i > 0 && v[i] <= v[i - 1])
        throw std::invalid_argument(std::string("rule set: ") + which +
                                    " indices not strictly ascending");
    }
  };
  check(rs.normals, "normal");
  check(rs.specials, "special");
}

namespace detail {

// All k-subsets of {1..n} in lexicographic order.
inline std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace detail

inline std::uint32_t rule_set_count(Game g) {
  const int n = rule_pool_size(g);
  const int k = active_rule_count(g);
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * static_cast<std::uint64_t>(n - i) / (i + 1);
  return static_cast<std::uint32_t>(c * c);
}

inline std::vector<RuleSet> enumerate_rule_combinations(Game g) {
  const auto subsets = detail::k_subsets(rule_pool_size(g), active_rule_count(g));
  std::vector<RuleSet> out;
  out.reserve(subsets.size() * subsets.size());
  for (const auto& nr : subsets)
    for (const auto& sr : subsets) out.push_back(RuleSet{g, nr, sr});
  return out;
}

inline RuleSet rule_set_for_index(Game g, std::uint32_t config_index) {
  const auto subsets = detail::k_subsets(rule_pool_size(g), active_rule_count(g));
  const std::uint32_t m = static_cast<std::uint32_t>(subsets.size());
  if (config_index >= m * m)
    throw std::invalid_argument("rule_set_for_index: config_index out of range");
  return RuleSet{g, subsets[config_index / m], subsets[config_index % m]};
}

inline std::uint32_t index_for_rule_set(const RuleSet& rs) {
  validate_rule_set(rs);
  const auto subsets = detail::k_subsets(rule_pool_size(rs.game), active_rule_count(rs.game));
  const auto pos = [&](const std::vector<int>& v) {
    const auto it = std::find(subsets.begin(), subsets.end(), v);
    return static_cast<std::uint32_t>(it - subsets.begin());
  };
  return pos(rs.normals) * static_cast<std::uint32_t>(subsets.size()) + pos(rs.specials);
}

// Natural-language statement of each rule, as shown to judges and usable in
// documentation.  Indexed by the same 1-based ids as everything else.
inline const char* rule_text(const RuleId& id) {
  static const char* const chess_nr[6] = {
      "Move one square in any direction.",
      "Move in an L-shaped pattern: two squares in one direction and one square "
      "perpendicular.",
      "Move any number of squares diagonally.",
      "Move exactly two squares forward (in the direction of increasing row).",
      "Move any number of squares straight (horizontally or vertically).",
      "Move exactly two squares diagonally.",
  };
  static const char* const chess_sr[6] = {
      "Move in a straight line any number of squares, then shift vertically by exactly "
      "two squares.",
      "Move diagonally any number of squares, then two squares in a perpendicular "
      "diagonal direction.",
      "Move exactly three squares in one direction, then move one square downward.",
      "Jump to the symmetric position across the nearest blocking piece.",
      "Swap with a target piece on an occupied square within distance ≤ 3.",
      "Move in a straight line any number of squares, followed by a one-square diagonal "
      "shift.",
  };
  static const char* const holdem_nr[5] = {
      "A hand with one pair is treated as stronger than any high card.",
      "A hand with three of a kind is treated as stronger than two pairs.",
      "A straight (five cards in sequential rank, any suit) is treated as stronger than "
      "three of a kind.",
      "A flush (five cards of the same suit, not in sequence) is treated as stronger "
      "than any straight.",
      "Four of a kind (four cards of the same rank) is treated as stronger than any "
      "flush.",
  };
  static const char* const holdem_sr[5] = {
      "A hand containing five consecutive prime numbers (e.g., 2–3–5–7"
      "–J) is treated as stronger than any three-of-a-kind.",
      "A hand with alternating card colors (e.g., red–black–red–black"
      "–red) is treated as a straight regardless of numeric order.",
      "A hand with alternating odd and even values is treated as a \"mirror hand\" and "
      "beats any straight.",
      "A hand containing five consecutive even numbers in the same suit is treated as a "
      "straight flush.",
      "A hand with four cards of one parity (odd/even) and one of the opposite parity is "
      "treated as a \"hybrid hand,\" ranking just below four of a kind.",
  };
  static const char* const dice_nr[4] = {
      "A total sum between 4 and 10 (inclusive) is a \"small total.\"",
      "A total sum between 11 and 17 (inclusive) is a \"large total.\"",
      "A roll containing any pair is treated as stronger than small or large totals.",
      "A triple (three identical dice) is treated as stronger than any pair or total.",
  };
  static const char* const dice_sr[4] = {
      "If the total sum is a prime number, the roll beats any hand including triples.",
      "If all three dice are prime numbers (2, 3, 5), the roll beats all hands except "
      "SR1.",
      "If the dice alternate in parity (odd–even–odd or even–odd–"
      "even), the roll beats all hands except SR1/SR2/triples.",
      "If the roll contains a pair and the third die differs from the pair by exactly "
      "one (e.g., 4–4–5), the roll beats any regular pair or total.",
  };
  static const char* const blackjack_nr[4] = {
      "A hand totaling exactly 21 is a \"blackjack\" and wins.",
      "Any hand exceeding 21 is a bust. If both bust, the closer total to 21 wins.",
      "If neither busts nor hits 21, the hand with the higher total wins.",
      "An ace can be counted as either 1 or 11 to optimize the hand.",
  };
  static const char* const blackjack_sr[4] = {
      "If the total sum is a prime number, the hand wins regardless of bust.",
      "A three-card straight flush is treated as a \"blackjack\" regardless of total.",
      "A hand with exactly one pair of different suits is a special loss.",
      "A hand with three non-consecutive values where the middle equals the average of "
      "the other two (e.g., 3–6–9) is an automatic win.",
  };
  const std::size_t i = static_cast<std::size_t>(id.index - 1);
  switch (id.game) {
    case Game::Chess: return id.kind == RuleKind::Normal ? chess_nr[i] : chess_sr[i];
    case Game::Holdem: return id.kind == RuleKind::Normal ? holdem_nr[i] : holdem_sr[i];
    case Game::Dice: return id.kind == RuleKind::Normal ? dice_nr[i] : dice_sr[i];
    case Game::Blackjack: return id.kind == RuleKind::Normal ? blackjack_nr[i] : blackjack_sr[i];
  }
  throw std::logic_error("rule_text: bad game");
}

}  // namespace rulebench
