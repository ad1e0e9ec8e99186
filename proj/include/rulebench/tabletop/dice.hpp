#pragma once
// Three-dice roll classification and duel resolution.
//
// Unlike the card games, dice categories are fully gated on the active rule
// set: a pair is only a pair if NR3 is active, totals only count under
// NR1/NR2, and inactive SR predicates are invisible.  Rolls matching nothing
// active fall through to a bottom "None" category.  Precedence, strongest
// first:
//
//   SR1 (prime sum) > SR2 (all prime faces) > Triple (NR4)
//     > SR3 (alternating parity) > SR4 (pair plus neighbor)
//     > Pair (NR3) > SmallTotal/LargeTotal (NR1/NR2) > None
//
// The two totals share a tier; duels inside a tier are decided by the stated
// tiebreak key (pair value then kicker for pair-like categories, triple face
// for triples, plain sum otherwise).

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rulebench/core/rules.hpp"
#include "rulebench/tabletop/cards.hpp"  // is_prime

namespace rulebench {

using DiceRoll = std::array<int, 3>;

enum class DiceCategory {
  None,
  SmallTotal,
  LargeTotal,
  Pair,
  PairWithNeighbor,
  AlternatingParity,
  Triple,
  AllPrimeFaces,
  PrimeSum,
};

inline int dice_tier(DiceCategory c) {
  switch (c) {
    case DiceCategory::None: return 0;
    case DiceCategory::SmallTotal: return 10;
    case DiceCategory::LargeTotal: return 10;
    case DiceCategory::Pair: return 20;
    case DiceCategory::PairWithNeighbor: return 30;
    case DiceCategory::AlternatingParity: return 40;
    case DiceCategory::Triple: return 50;
    case DiceCategory::AllPrimeFaces: return 60;
    case DiceCategory::PrimeSum: return 70;
  }
  throw std::logic_error("dice_tier: bad category");
}

inline const char* dice_category_id(DiceCategory c) {
  switch (c) {
    case DiceCategory::None: return "none";
    case DiceCategory::SmallTotal: return "small_total";
    case DiceCategory::LargeTotal: return "large_total";
    case DiceCategory::Pair: return "pair";
    case DiceCategory::PairWithNeighbor: return "pair_with_neighbor";
    case DiceCategory::AlternatingParity: return "alternating_parity";
    case DiceCategory::Triple: return "triple";
    case DiceCategory::AllPrimeFaces: return "all_prime_faces";
    case DiceCategory::PrimeSum: return "prime_sum";
  }
  throw std::logic_error("dice_category_id: bad category");
}

inline DiceCategory dice_rule_subject(const RuleId& id) {
  if (id.game != Game::Dice) throw std::invalid_argument("dice_rule_subject: wrong game");
  if (id.kind == RuleKind::Normal) {
    switch (id.index) {
      case 1: return DiceCategory::SmallTotal;
      case 2: return DiceCategory::LargeTotal;
      case 3: return DiceCategory::Pair;
      case 4: return DiceCategory::Triple;
    }
  } else {
    switch (id.index) {
      case 1: return DiceCategory::PrimeSum;
      case 2: return DiceCategory::AllPrimeFaces;
      case 3: return DiceCategory::AlternatingParity;
      case 4: return DiceCategory::PairWithNeighbor;
    }
  }
  throw std::invalid_argument("dice_rule_subject: bad rule index");
}

namespace dice_detail {

inline int roll_sum(const DiceRoll& r) { return r[0] + r[1] + r[2]; }

inline bool has_pair(const DiceRoll& r) {
  return r[0] == r[1] || r[0] == r[2] || r[1] == r[2];
}

inline bool is_triple(const DiceRoll& r) { return r[0] == r[1] && r[1] == r[2]; }

inline bool all_prime_faces(const DiceRoll& r) {
  for (const int d : r)
    if (d != 2 && d != 3 && d != 5) return false;
  return true;
}

// Parity alternates in rolled order (odd-even-odd or even-odd-even).
inline bool alternating_parity(const DiceRoll& r) {
  return r[0] % 2 != r[1] % 2 && r[1] % 2 != r[2] % 2;
}

// Exactly a pair whose odd die differs from the pair value by one.
inline bool pair_with_neighbor(const DiceRoll& r) {
  for (int i = 0; i < 3; ++i) {
    const int a = r[static_cast<std::size_t>((i + 1) % 3)];
    const int b = r[static_cast<std::size_t>((i + 2) % 3)];
    const int odd = r[static_cast<std::size_t>(i)];
    if (a == b && (odd == a + 1 || odd == a - 1)) return true;
  }
  return false;
}

// Value of the pair (any two equal dice) and the remaining die.
inline std::pair<int, int> pair_and_kicker(const DiceRoll& r) {
  for (int i = 0; i < 3; ++i) {
    const int a = r[static_cast<std::size_t>((i + 1) % 3)];
    const int b = r[static_cast<std::size_t>((i + 2) % 3)];
    if (a == b) return {a, r[static_cast<std::size_t>(i)]};
  }
  throw std::logic_error("pair_and_kicker: no pair");
}

}  // namespace dice_detail

inline void check_roll(const DiceRoll& r) {
  for (const int d : r)
    if (d < 1 || d > 6) throw std::invalid_argument("dice roll: die out of [1,6]");
}

inline DiceCategory classify_dice(const DiceRoll& roll, const RuleSet& active) {
  if (active.game != Game::Dice) throw std::invalid_argument("classify_dice: wrong game");
  check_roll(roll);
  const int sum = dice_detail::roll_sum(roll);
  const auto on = [&](RuleKind k, int i) { return active.contains(k, i); };
  if (on(RuleKind::Special, 1) && is_prime(sum)) return DiceCategory::PrimeSum;
  if (on(RuleKind::Special, 2) && dice_detail::all_prime_faces(roll))
    return DiceCategory::AllPrimeFaces;
  if (on(RuleKind::Normal, 4) && dice_detail::is_triple(roll)) return DiceCategory::Triple;
  if (on(RuleKind::Special, 3) && dice_detail::alternating_parity(roll))
    return DiceCategory::AlternatingParity;
  if (on(RuleKind::Special, 4) && dice_detail::pair_with_neighbor(roll))
    return DiceCategory::PairWithNeighbor;
  if (on(RuleKind::Normal, 3) && dice_detail::has_pair(roll)) return DiceCategory::Pair;
  if (on(RuleKind::Normal, 1) && sum >= 4 && sum <= 10) return DiceCategory::SmallTotal;
  if (on(RuleKind::Normal, 2) && sum >= 11 && sum <= 17) return DiceCategory::LargeTotal;
  return DiceCategory::None;
}

// Within-tier comparison key, larger wins.
inline std::vector<int> dice_tiebreak(const DiceRoll& roll, DiceCategory c) {
  switch (c) {
    case DiceCategory::Triple: return {roll[0]};
    case DiceCategory::Pair:
    case DiceCategory::PairWithNeighbor: {
      const auto [pair, kicker] = dice_detail::pair_and_kicker(roll);
      return {pair, kicker};
    }
    default: return {dice_detail::roll_sum(roll)};
  }
}

inline Ordering compare_dice(const DiceRoll& a, const DiceRoll& b, const RuleSet& active) {
  const DiceCategory ca = classify_dice(a, active);
  const DiceCategory cb = classify_dice(b, active);
  if (dice_tier(ca) != dice_tier(cb))
    return dice_tier(ca) > dice_tier(cb) ? Ordering::AWins : Ordering::BWins;
  const std::vector<int> ka = dice_tiebreak(a, ca);
  const std::vector<int> kb = dice_tiebreak(b, cb);
  if (ka != kb) return ka > kb ? Ordering::AWins : Ordering::BWins;
  return Ordering::Tie;
}

// Single-roll rendering: a roll "wins" when its category outranks the totals
// tier, i.e. the roll exhibits some pattern stronger than a plain total.
inline bool dice_single_win(const DiceRoll& roll, const RuleSet& active) {
  return dice_tier(classify_dice(roll, active)) > dice_tier(DiceCategory::SmallTotal);
}

enum class DiceStyle { Duel, Single };

struct DiceObservation {
  bool duel = true;
  DiceRoll roll{};         // duel: player's roll; single: the only roll
  DiceRoll dealer_roll{};  // duel mode only
  Ordering winner = Ordering::Tie;  // duel mode only
  bool win = false;                 // single mode only

  friend bool operator==(const DiceObservation&, const DiceObservation&) = default;
};

}  // namespace rulebench
