#pragma once
// Blackjack hand resolution with special-rule overrides.
//
// Hands are always 5 cards.  Face cards count 10 toward totals; an ace
// counts 1 or 11, whichever yields the best total not exceeding 21
// (resolved_total falls back to the minimum total when every choice busts).
// The baseline win logic (21 wins, busts lose, otherwise higher total) is
// the game's table convention; the episode's active rule set decides which
// of those conventions the episode exemplifies and which special overrides
// exist.  Special rules apply in the fixed precedence SR1 > SR4 > SR2 > SR3,
// each checked for the player before the dealer.
//
// Pattern predicates (SR2 straight-flush triple, SR3 pair, SR4 arithmetic
// triple) read card values as ranks 1..13; totals-based SR1 reads the
// resolved total, so a busted 23 can still be prime.

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rulebench/core/rules.hpp"
#include "rulebench/tabletop/cards.hpp"

namespace rulebench {

struct BlackjackHand {
  std::array<Card, 5> cards{};
  int resolved_total = 0;
  int min_total = 0;
  bool bust = false;           // true iff even the minimum total exceeds 21
  bool ace_as_eleven = false;  // resolved total counts at least one ace as 11
};

inline int blackjack_card_value(const Card& c) { return c.rank >= 10 ? 10 : c.rank; }

inline BlackjackHand make_blackjack_hand(const std::array<Card, 5>& cards) {
  BlackjackHand h;
  h.cards = cards;
  int base = 0;
  int aces = 0;
  for (const Card& c : cards) {
    base += blackjack_card_value(c);
    if (c.rank == 1) ++aces;
  }
  h.min_total = base;
  h.bust = base > 21;
  h.resolved_total = base;
  h.ace_as_eleven = false;
  for (int k = aces; k >= 1; --k) {
    const int total = base + 10 * k;
    if (total <= 21) {
      h.resolved_total = total;
      h.ace_as_eleven = true;
      break;
    }
  }
  return h;
}

enum class BlackjackOutcome { PlayerWins, DealerWins, Tie };
enum class BlackjackReason { SR1, SR2, SR3, SR4, NR1, NR2, NR3 };

inline const char* blackjack_reason_name(BlackjackReason r) {
  switch (r) {
    case BlackjackReason::SR1: return "SR1";
    case BlackjackReason::SR2: return "SR2";
    case BlackjackReason::SR3: return "SR3";
    case BlackjackReason::SR4: return "SR4";
    case BlackjackReason::NR1: return "NR1";
    case BlackjackReason::NR2: return "NR2";
    case BlackjackReason::NR3: return "NR3";
  }
  throw std::logic_error("blackjack_reason_name: bad reason");
}

inline BlackjackReason blackjack_reason_from_name(const std::string& s) {
  static const std::pair<const char*, BlackjackReason> table[] = {
      {"SR1", BlackjackReason::SR1}, {"SR2", BlackjackReason::SR2},
      {"SR3", BlackjackReason::SR3}, {"SR4", BlackjackReason::SR4},
      {"NR1", BlackjackReason::NR1}, {"NR2", BlackjackReason::NR2},
      {"NR3", BlackjackReason::NR3},
  };
  for (const auto& [key, r] : table)
    if (s == key) return r;
  throw std::invalid_argument("blackjack_reason_from_name: unknown reason '" + s + "'");
}

namespace blackjack_detail {

// SR2: some three cards share a suit and form consecutive ranks.
inline bool straight_flush_triple(const std::array<Card, 5>& cards) {
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c) {
        const Card& x = cards[static_cast<std::size_t>(a)];
        const Card& y = cards[static_cast<std::size_t>(b)];
        const Card& z = cards[static_cast<std::size_t>(c)];
        if (x.suit != y.suit || y.suit != z.suit) continue;
        std::array<int, 3> r = {x.rank, y.rank, z.rank};
        std::sort(r.begin(), r.end());
        if (r[1] == r[0] + 1 && r[2] == r[1] + 1) return true;
      }
  return false;
}

// SR3: exactly one rank appears exactly twice, nothing appears three or more
// times, and the pair's suits are of different colors.
inline bool special_loss_pair(const std::array<Card, 5>& cards) {
  std::array<int, 14> count{};
  for (const Card& c : cards) ++count[static_cast<std::size_t>(c.rank)];
  int pair_rank = 0;
  int pairs = 0;
  for (int r = 1; r <= 13; ++r) {
    if (count[static_cast<std::size_t>(r)] >= 3) return false;
    if (count[static_cast<std::size_t>(r)] == 2) {
      ++pairs;
      pair_rank = r;
    }
  }
  if (pairs != 1) return false;
  std::vector<Suit> suits;
  for (const Card& c : cards)
    if (c.rank == pair_rank) suits.push_back(c.suit);
  return is_red(suits[0]) != is_red(suits[1]);
}

// SR4: three distinct values in arithmetic progression with step >= 2
// (non-consecutive, middle equals the average of the outer two).
inline bool arithmetic_triple(const std::array<Card, 5>& cards) {
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c) {
        std::array<int, 3> r = {cards[static_cast<std::size_t>(a)].rank,
                                cards[static_cast<std::size_t>(b)].rank,
                                cards[static_cast<std::size_t>(c)].rank};
        std::sort(r.begin(), r.end());
        if (r[0] == r[1] || r[1] == r[2]) continue;
        if (r[1] - r[0] == r[2] - r[1] && r[1] - r[0] >= 2) return true;
      }
  return false;
}

inline bool sr_triggers(int index, const BlackjackHand& h) {
  switch (index) {
    case 1: return is_prime(h.resolved_total);
    case 2: return straight_flush_triple(h.cards);
    case 3: return special_loss_pair(h.cards);
    case 4: return arithmetic_triple(h.cards);
  }
  throw std::logic_error("blackjack sr_triggers: bad index");
}

}  // namespace blackjack_detail

struct BlackjackResolution {
  BlackjackOutcome outcome = BlackjackOutcome::Tie;
  BlackjackReason reason = BlackjackReason::NR3;

  friend bool operator==(const BlackjackResolution&, const BlackjackResolution&) = default;
};

inline BlackjackResolution resolve_blackjack(const BlackjackHand& player,
                                             const BlackjackHand& dealer,
                                             const RuleSet& active) {
  if (active.game != Game::Blackjack) throw std::invalid_argument("resolve_blackjack: wrong game");
  // Special overrides, strongest rule first, player before dealer within a
  // rule.  SR3 is a loss for the holder; the others are wins.
  static constexpr int precedence[] = {1, 4, 2, 3};
  static constexpr BlackjackReason reasons[] = {BlackjackReason::SR1, BlackjackReason::SR4,
                                                BlackjackReason::SR2, BlackjackReason::SR3};
  for (int i = 0; i < 4; ++i) {
    const int sr = precedence[i];
    if (!active.contains(RuleKind::Special, sr)) continue;
    const bool win_for_holder = sr != 3;
    if (blackjack_detail::sr_triggers(sr, player))
      return {win_for_holder ? BlackjackOutcome::PlayerWins : BlackjackOutcome::DealerWins,
              reasons[i]};
    if (blackjack_detail::sr_triggers(sr, dealer))
      return {win_for_holder ? BlackjackOutcome::DealerWins : BlackjackOutcome::PlayerWins,
              reasons[i]};
  }
  // 21 wins outright, player checked first.
  if (!player.bust && player.resolved_total == 21)
    return {BlackjackOutcome::PlayerWins, BlackjackReason::NR1};
  if (!dealer.bust && dealer.resolved_total == 21)
    return {BlackjackOutcome::DealerWins, BlackjackReason::NR1};
  // Bust logic; when both bust the total closer to 21 (the smaller one) wins.
  if (player.bust || dealer.bust) {
    if (player.bust && dealer.bust) {
      if (player.min_total == dealer.min_total) return {BlackjackOutcome::Tie, BlackjackReason::NR2};
      return {player.min_total < dealer.min_total ? BlackjackOutcome::PlayerWins
                                                  : BlackjackOutcome::DealerWins,
              BlackjackReason::NR2};
    }
    return {player.bust ? BlackjackOutcome::DealerWins : BlackjackOutcome::PlayerWins,
            BlackjackReason::NR2};
  }
  // Neither busts, neither holds 21: higher total wins.
  if (player.resolved_total == dealer.resolved_total)
    return {BlackjackOutcome::Tie, BlackjackReason::NR3};
  return {player.resolved_total > dealer.resolved_total ? BlackjackOutcome::PlayerWins
                                                        : BlackjackOutcome::DealerWins,
          BlackjackReason::NR3};
}

struct BlackjackObservation {
  std::array<Card, 5> player{};
  std::array<Card, 5> dealer{};
  int total = 0;               // player's resolved total
  bool bust = false;           // player bust flag
  bool ace_as_eleven = false;  // player counted an ace as 11
  BlackjackOutcome outcome = BlackjackOutcome::Tie;
  BlackjackReason reason = BlackjackReason::NR3;

  friend bool operator==(const BlackjackObservation&, const BlackjackObservation&) = default;
};

// Observable hand-category name used as the ground-truth entity for one
// blackjack rule.
inline const char* blackjack_entity_id(const RuleId& id) {
  if (id.game != Game::Blackjack) throw std::invalid_argument("blackjack_entity_id: wrong game");
  static const char* const nr[4] = {"twenty_one", "bust", "higher_total", "flexible_ace"};
  static const char* const sr[4] = {"prime_total", "straight_flush_triple", "mixed_suit_pair",
                                    "arithmetic_triple"};
  const std::size_t i = static_cast<std::size_t>(id.index - 1);
  return id.kind == RuleKind::Normal ? nr[i] : sr[i];
}

// Whether one resolved observation exemplifies a rule.  SRs and NR1-NR3 are
// attributed by the deciding reason; NR4 is exemplified whenever a
// totals-decided win went to a hand that counted an ace as 11 (the ace
// option is what produced the winning total).
inline bool blackjack_exemplifies(const BlackjackObservation& obs, const RuleId& rule) {
  if (rule.game != Game::Blackjack) throw std::invalid_argument("blackjack_exemplifies: wrong game");
  if (obs.outcome == BlackjackOutcome::Tie) return false;
  const BlackjackHand winner = make_blackjack_hand(
      obs.outcome == BlackjackOutcome::PlayerWins ? obs.player : obs.dealer);
  if (rule.kind == RuleKind::Normal && rule.index == 4)
    return (obs.reason == BlackjackReason::NR1 || obs.reason == BlackjackReason::NR3) &&
           winner.ace_as_eleven;
  const BlackjackReason want = blackjack_reason_from_name(rule_name(rule));
  return obs.reason == want;
}

}  // namespace rulebench
