#pragma once
// Texas Hold'em hand classification and comparison under a composite order.
//
// The strength ladder is the standard poker ladder with the episode's active
// special rules spliced in:
//
//   HighCard 0 < Pair 10 < TwoPair 20 < ThreeOfAKind 30 < SR1 35
//     < Straight 40 = SR2 40 < SR3 45 < Flush 50 < SR5 55
//     < FourOfAKind 60 < StraightFlush 70 = SR4 70
//
// Full houses are not a category of their own; such hands classify as three
// of a kind.  The ace is always rank 1 and straights are five consecutive
// numeric ranks, so J/Q/K participate in numeric patterns as 11/12/13.  Ties
// at equal strength fall back to comparing the descending rank vectors.
//
// "Alternating" predicates (SR2 colors, SR3 parity) read the hand sorted
// ascending by rank (suit order breaking rank ties): a special rule must be
// discriminating, and alternation over an unordered set degenerates to a
// near-universal 3-2 split test.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rulebench/core/rules.hpp"
#include "rulebench/tabletop/cards.hpp"

namespace rulebench {

enum class HoldemLabel {
  HighCard,
  Pair,
  TwoPair,
  ThreeOfAKind,
  Straight,
  Flush,
  FourOfAKind,
  StraightFlush,
  SR1,
  SR2,
  SR3,
  SR4,
  SR5,
};

struct HandCategory {
  HoldemLabel label = HoldemLabel::HighCard;
  std::optional<RuleId> source_rule;  // set iff label is an SR label
  std::array<Card, 5> cards{};        // the classified hand, sorted ascending
  std::vector<int> tiebreak;          // ranks descending

  friend bool operator==(const HandCategory&, const HandCategory&) = default;
};

inline int holdem_strength(HoldemLabel label) {
  switch (label) {
    case HoldemLabel::HighCard: return 0;
    case HoldemLabel::Pair: return 10;
    case HoldemLabel::TwoPair: return 20;
    case HoldemLabel::ThreeOfAKind: return 30;
    case HoldemLabel::SR1: return 35;
    case HoldemLabel::Straight: return 40;
    case HoldemLabel::SR2: return 40;
    case HoldemLabel::SR3: return 45;
    case HoldemLabel::Flush: return 50;
    case HoldemLabel::SR5: return 55;
    case HoldemLabel::FourOfAKind: return 60;
    case HoldemLabel::StraightFlush: return 70;
    case HoldemLabel::SR4: return 70;
  }
  throw std::logic_error("holdem_strength: bad label");
}

// Stable identifier used in serialized ground truth and observations.
inline const char* holdem_category_id(HoldemLabel label) {
  switch (label) {
    case HoldemLabel::HighCard: return "high_card";
    case HoldemLabel::Pair: return "pair";
    case HoldemLabel::TwoPair: return "two_pair";
    case HoldemLabel::ThreeOfAKind: return "three_of_a_kind";
    case HoldemLabel::Straight: return "straight";
    case HoldemLabel::Flush: return "flush";
    case HoldemLabel::FourOfAKind: return "four_of_a_kind";
    case HoldemLabel::StraightFlush: return "straight_flush";
    case HoldemLabel::SR1: return "consecutive_primes";
    case HoldemLabel::SR2: return "alternating_colors";
    case HoldemLabel::SR3: return "mirror_hand";
    case HoldemLabel::SR4: return "even_straight_flush";
    case HoldemLabel::SR5: return "hybrid_hand";
  }
  throw std::logic_error("holdem_category_id: bad label");
}

inline HoldemLabel holdem_label_from_id(const std::string& id) {
  static const std::pair<const char*, HoldemLabel> table[] = {
      {"high_card", HoldemLabel::HighCard},
      {"pair", HoldemLabel::Pair},
      {"two_pair", HoldemLabel::TwoPair},
      {"three_of_a_kind", HoldemLabel::ThreeOfAKind},
      {"straight", HoldemLabel::Straight},
      {"flush", HoldemLabel::Flush},
      {"four_of_a_kind", HoldemLabel::FourOfAKind},
      {"straight_flush", HoldemLabel::StraightFlush},
      {"consecutive_primes", HoldemLabel::SR1},
      {"alternating_colors", HoldemLabel::SR2},
      {"mirror_hand", HoldemLabel::SR3},
      {"even_straight_flush", HoldemLabel::SR4},
      {"hybrid_hand", HoldemLabel::SR5},
  };
  for (const auto& [key, label] : table)
    if (id == key) return label;
  throw std::invalid_argument("holdem_label_from_id: unknown id '" + id + "'");
}

// The category an observation must exhibit to count toward a rule's quota.
inline HoldemLabel holdem_rule_subject(const RuleId& id) {
  if (id.game != Game::Holdem) throw std::invalid_argument("holdem_rule_subject: wrong game");
  if (id.kind == RuleKind::Special) {
    switch (id.index) {
      case 1: return HoldemLabel::SR1;
      case 2: return HoldemLabel::SR2;
      case 3: return HoldemLabel::SR3;
      case 4: return HoldemLabel::SR4;
      case 5: return HoldemLabel::SR5;
    }
  } else {
    switch (id.index) {
      case 1: return HoldemLabel::Pair;
      case 2: return HoldemLabel::ThreeOfAKind;
      case 3: return HoldemLabel::Straight;
      case 4: return HoldemLabel::Flush;
      case 5: return HoldemLabel::FourOfAKind;
    }
  }
  throw std::invalid_argument("holdem_rule_subject: bad rule index");
}

namespace holdem_detail {

inline std::array<Card, 5> sorted_hand(std::array<Card, 5> cards) {
  std::sort(cards.begin(), cards.end(), [](const Card& a, const Card& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.suit < b.suit;
  });
  return cards;
}

inline bool is_flush(const std::array<Card, 5>& h) {
  for (int i = 1; i < 5; ++i)
    if (h[i].suit != h[0].suit) return false;
  return true;
}

// Five distinct consecutive ranks, hand pre-sorted ascending.
inline bool is_straight(const std::array<Card, 5>& h) {
  for (int i = 1; i < 5; ++i)
    if (h[i].rank != h[i - 1].rank + 1) return false;
  return true;
}

// Rank multiplicities sorted descending, e.g. {3,2} for a full house.
inline std::vector<int> rank_counts(const std::array<Card, 5>& h) {
  std::map<int, int> m;
  for (const Card& c : h) ++m[c.rank];
  std::vector<int> counts;
  for (const auto& [rank, n] : m) counts.push_back(n);
  std::sort(counts.rbegin(), counts.rend());
  return counts;
}

// SR1: rank set equal to five primes consecutive in the prime sequence.
inline bool consecutive_primes(const std::array<Card, 5>& h) {
  static const std::array<std::array<int, 5>, 2> runs = {{{2, 3, 5, 7, 11}, {3, 5, 7, 11, 13}}};
  std::array<int, 5> ranks;
  for (int i = 0; i < 5; ++i) ranks[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(i)].rank;
  return ranks == runs[0] || ranks == runs[1];
}

// SR2: colors alternate through the sorted hand.
inline bool alternating_colors(const std::array<Card, 5>& h) {
  for (int i = 1; i < 5; ++i)
    if (is_red(h[static_cast<std::size_t>(i)].suit) ==
        is_red(h[static_cast<std::size_t>(i - 1)].suit))
      return false;
  return true;
}

// SR3: parity alternates through the sorted hand.  True straights are
// excluded: consecutive ranks alternate by construction, and a rule that
// "beats any straight" describes a pattern distinct from a straight (the
// exclusion is also what keeps plain straights observable alongside SR3).
inline bool alternating_parity(const std::array<Card, 5>& h) {
  if (is_straight(h)) return false;
  for (int i = 1; i < 5; ++i)
    if (h[static_cast<std::size_t>(i)].rank % 2 ==
        h[static_cast<std::size_t>(i - 1)].rank % 2)
      return false;
  return true;
}

// SR4: five evens consecutive in the even sequence, all one suit.
inline bool even_straight_flush(const std::array<Card, 5>& h) {
  if (!is_flush(h)) return false;
  static const std::array<std::array<int, 5>, 2> runs = {{{2, 4, 6, 8, 10}, {4, 6, 8, 10, 12}}};
  std::array<int, 5> ranks;
  for (int i = 0; i < 5; ++i) ranks[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(i)].rank;
  return ranks == runs[0] || ranks == runs[1];
}

// SR5: exactly four cards of one parity and one of the other.
inline bool hybrid_hand(const std::array<Card, 5>& h) {
  int odd = 0;
  for (const Card& c : h) odd += c.rank % 2;
  return odd == 1 || odd == 4;
}

inline bool sr_predicate(int index, const std::array<Card, 5>& h) {
  switch (index) {
    case 1: return consecutive_primes(h);
    case 2: return alternating_colors(h);
    case 3: return alternating_parity(h);
    case 4: return even_straight_flush(h);
    case 5: return hybrid_hand(h);
  }
  throw std::logic_error("holdem sr_predicate: bad index");
}

inline HoldemLabel base_label(const std::array<Card, 5>& h) {
  const bool flush = is_flush(h);
  const bool straight = is_straight(h);
  if (flush && straight) return HoldemLabel::StraightFlush;
  const std::vector<int> counts = rank_counts(h);
  if (counts[0] == 4) return HoldemLabel::FourOfAKind;
  if (flush) return HoldemLabel::Flush;
  if (straight) return HoldemLabel::Straight;
  if (counts[0] == 3) return HoldemLabel::ThreeOfAKind;
  if (counts[0] == 2) return counts.size() >= 2 && counts[1] == 2 ? HoldemLabel::TwoPair
                                                                  : HoldemLabel::Pair;
  return HoldemLabel::HighCard;
}

}  // namespace holdem_detail

inline HandCategory classify_holdem(const std::array<Card, 5>& cards, const RuleSet& active) {
  if (active.game != Game::Holdem) throw std::invalid_argument("classify_holdem: wrong game");
  const std::array<Card, 5> h = holdem_detail::sorted_hand(cards);
  for (int i = 1; i < 5; ++i)
    if (h[static_cast<std::size_t>(i)] == h[static_cast<std::size_t>(i - 1)])
      throw std::invalid_argument("classify_holdem: duplicate card");

  HandCategory out;
  out.cards = h;
  out.label = holdem_detail::base_label(h);
  // An active SR label takes over when strictly stronger; at equal strength
  // the standard label stands (a color-alternating true straight is still a
  // straight).
  for (const int sr : active.specials) {
    if (!holdem_detail::sr_predicate(sr, h)) continue;
    const HoldemLabel candidate = holdem_rule_subject(RuleId{Game::Holdem, RuleKind::Special, sr});
    if (holdem_strength(candidate) > holdem_strength(out.label)) {
      out.label = candidate;
      out.source_rule = RuleId{Game::Holdem, RuleKind::Special, sr};
    }
  }
  for (int i = 4; i >= 0; --i) out.tiebreak.push_back(h[static_cast<std::size_t>(i)].rank);
  return out;
}

inline Ordering compare_holdem(const HandCategory& a, const HandCategory& b,
                               const RuleSet& active) {
  if (active.game != Game::Holdem) throw std::invalid_argument("compare_holdem: wrong game");
  for (const HandCategory* h : {&a, &b})
    if (h->source_rule && !active.contains(*h->source_rule))
      throw std::invalid_argument("compare_holdem: hand classified under a different rule set");
  const int sa = holdem_strength(a.label);
  const int sb = holdem_strength(b.label);
  if (sa != sb) return sa > sb ? Ordering::AWins : Ordering::BWins;
  if (a.tiebreak != b.tiebreak)
    return a.tiebreak > b.tiebreak ? Ordering::AWins : Ordering::BWins;
  return Ordering::Tie;
}

// Best 5-card hand out of 7 (2 hole + 5 board): argmax over all 21 subsets
// under the same (strength, tiebreak) order the comparator uses.
inline HandCategory best_holdem_hand(const std::vector<Card>& seven, const RuleSet& active) {
  if (seven.size() != 7) throw std::invalid_argument("best_holdem_hand: want 7 cards");
  std::optional<HandCategory> best;
  for (int a = 0; a < 7; ++a) {
    for (int b = a + 1; b < 7; ++b) {
      std::array<Card, 5> hand{};
      int k = 0;
      for (int i = 0; i < 7; ++i)
        if (i != a && i != b) hand[static_cast<std::size_t>(k++)] = seven[static_cast<std::size_t>(i)];
      HandCategory cat = classify_holdem(hand, active);
      if (!best || compare_holdem(cat, *best, active) == Ordering::AWins) best = std::move(cat);
    }
  }
  return *best;
}

// Whether `want` can never be a winning category while the hybrid rule is
// active.  SR5 matches any five cards with a 4-1 parity split, and a 7-card
// set with odd-count o admits such a subset unless o is 0 or 7 (the
// reachable subset odd-counts form the interval [max(0, o-2), min(5, o)],
// which contains 1 or 4 for every mixed o).  A straight mixes parities by
// construction and the SR3 pattern alternates them, so with SR5 active both
// are outranked on every deal that contains them.
inline bool holdem_parity_blocked(HoldemLabel want, const RuleSet& active) {
  if (!active.contains(RuleKind::Special, 5)) return false;
  return want == HoldemLabel::Straight || want == HoldemLabel::SR3;
}

// True when some 5-card subset of `seven` matches the defining pattern of
// `want`.  Only the parity-blocked patterns are supported; these are the ones
// the generator exemplifies through outranked deals.
inline bool holdem_pattern_in_seven(const std::vector<Card>& seven, HoldemLabel want) {
  if (seven.size() != 7) throw std::invalid_argument("holdem_pattern_in_seven: want 7 cards");
  if (want != HoldemLabel::Straight && want != HoldemLabel::SR3)
    throw std::invalid_argument("holdem_pattern_in_seven: unsupported pattern");
  for (int a = 0; a < 7; ++a) {
    for (int b = a + 1; b < 7; ++b) {
      std::array<Card, 5> hand{};
      int k = 0;
      for (int i = 0; i < 7; ++i)
        if (i != a && i != b) hand[static_cast<std::size_t>(k++)] = seven[static_cast<std::size_t>(i)];
      const std::array<Card, 5> h = holdem_detail::sorted_hand(hand);
      if (want == HoldemLabel::Straight ? holdem_detail::is_straight(h)
                                        : holdem_detail::alternating_parity(h))
        return true;
    }
  }
  return false;
}

// Observation payload for one dealt hand.
struct HoldemObservation {
  std::array<Card, 2> hole_a{};
  std::array<Card, 2> hole_b{};
  std::array<Card, 5> board{};
  Ordering winner = Ordering::Tie;         // AWins / BWins / Tie
  HoldemLabel winning_category = HoldemLabel::HighCard;

  friend bool operator==(const HoldemObservation&, const HoldemObservation&) = default;
};

// Transcript-facing category name.  SR2 and SR4 print as the categories the
// rules say they are "treated as"; a pair names its rank.
inline std::string holdem_display_name(HoldemLabel label, const std::vector<int>& tiebreak) {
  switch (label) {
    case HoldemLabel::HighCard: return "High Card";
    case HoldemLabel::Pair: {
      static const char* const words[13] = {"Aces", "Twos", "Threes", "Fours", "Fives",
                                            "Sixes", "Sevens", "Eights", "Nines", "Tens",
                                            "Jacks", "Queens", "Kings"};
      int pair_rank = 0;
      for (std::size_t i = 0; i + 1 < tiebreak.size(); ++i)
        if (tiebreak[i] == tiebreak[i + 1]) pair_rank = tiebreak[i];
      if (pair_rank == 0) throw std::logic_error("holdem_display_name: pair without pair rank");
      return std::string("Pair of ") + words[pair_rank - 1];
    }
    case HoldemLabel::TwoPair: return "Two Pair";
    case HoldemLabel::ThreeOfAKind: return "Three of a Kind";
    case HoldemLabel::Straight: return "Straight";
    case HoldemLabel::Flush: return "Flush";
    case HoldemLabel::FourOfAKind: return "Four of a Kind";
    case HoldemLabel::StraightFlush: return "Straight Flush";
    case HoldemLabel::SR1: return "Special Hand";
    case HoldemLabel::SR2: return "Straight";
    case HoldemLabel::SR3: return "Mirror Hand";
    case HoldemLabel::SR4: return "Straight Flush";
    case HoldemLabel::SR5: return "Hybrid Hand";
  }
  throw std::logic_error("holdem_display_name: bad label");
}

}  // namespace rulebench
