#pragma once
// Episode generation for the card and dice games.
//
// All three generators are plant-then-verify: each of the 12 observations is
// aimed at one active rule (3 per rule, target order shuffled), constructed
// toward that rule's observable category, then re-checked through the public
// classifier/comparator before being accepted.  Planting is heuristic and
// carries no correctness weight; an observation only lands in the episode
// once the oracle agrees it exemplifies its target.
//
// Special rules must also be distinguishable from the baseline: dice duels
// and single rolls prefer observations whose label flips under NR-only
// semantics, and blackjack requires the flip outright for the first
// observation of every active special rule.  Hold'em needs no extra work
// because the winning category is itself part of the observable label and SR
// category names cannot arise NR-only.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rulebench/core/episode.hpp"
#include "rulebench/core/rng.hpp"
#include "rulebench/core/rules.hpp"
#include "rulebench/tabletop/blackjack.hpp"
#include "rulebench/tabletop/cards.hpp"
#include "rulebench/tabletop/dice.hpp"
#include "rulebench/tabletop/holdem.hpp"

namespace rulebench {

namespace tabletop_detail {

inline constexpr int kObservationCount = 12;
inline constexpr int kQuotaPerRule = 3;
inline constexpr int kMaxTries = 50000;

// 3 copies of each active rule, shuffled.
inline std::vector<RuleId> shuffled_targets(const RuleSet& rule_set, const EpisodeSeed& seed) {
  std::vector<RuleId> targets;
  for (const RuleId& rule : rule_set.all_rules())
    for (int k = 0; k < kQuotaPerRule; ++k) targets.push_back(rule);
  Stream s = derive_stream(seed, "targets");
  s.shuffle(targets);
  return targets;
}

inline RuleSet nr_only(const RuleSet& rs) { return RuleSet{rs.game, rs.normals, {}}; }

// Draws n distinct cards from the deck positions [start, deck.size()) by
// partial Fisher-Yates; the deck is reordered in place.
inline std::vector<Card> draw_cards(std::vector<Card>& deck, std::size_t start, std::size_t n,
                                    Stream& s) {
  std::vector<Card> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = static_cast<std::size_t>(
        s.uniform_int(static_cast<std::int64_t>(start + i), static_cast<std::int64_t>(deck.size()) - 1));
    std::swap(deck[start + i], deck[j]);
    out.push_back(deck[start + i]);
  }
  return out;
}

inline Suit random_suit(Stream& s) { return static_cast<Suit>(s.uniform_int(0, 3)); }

inline int random_rank(Stream& s) { return static_cast<int>(s.uniform_int(1, 13)); }

// Distinct ranks, optionally excluding some values.
inline std::vector<int> distinct_ranks(int n, const std::vector<int>& exclude, Stream& s) {
  std::vector<int> out;
  while (static_cast<int>(out.size()) < n) {
    const int r = random_rank(s);
    bool ok = true;
    for (const int e : exclude) ok = ok && r != e;
    for (const int e : out) ok = ok && r != e;
    if (ok) out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hold'em

// Distinct ranks drawn from an explicit pool, optionally excluding values.
inline std::vector<int> distinct_from_pool(const std::vector<int>& pool, int n,
                                           const std::vector<int>& exclude, Stream& s) {
  std::vector<int> out;
  while (static_cast<int>(out.size()) < n) {
    const int r = pool[static_cast<std::size_t>(
        s.uniform_int(0, static_cast<std::int64_t>(pool.size()) - 1))];
    bool ok = true;
    for (const int e : exclude) ok = ok && r != e;
    for (const int e : out) ok = ok && r != e;
    if (ok) out.push_back(r);
  }
  return out;
}

// Rank pool for planting.  With SR5 active, a category weaker than the
// hybrid hand can only win when every card of the deal shares one parity
// (see holdem_parity_blocked), so the pool collapses to a single parity.
inline std::vector<int> plant_rank_pool(bool parity_locked, Stream& s) {
  static const std::vector<int> all{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
  static const std::vector<int> odd{1, 3, 5, 7, 9, 11, 13};
  static const std::vector<int> even{2, 4, 6, 8, 10, 12};
  if (!parity_locked) return all;
  return s.uniform_int(0, 1) == 1 ? odd : even;
}

// Whether planting `target` under `active` must keep the whole deal on one
// parity to stop an SR5 subset from outranking it.
inline bool parity_locked_target(HoldemLabel target, const RuleSet& active) {
  return active.contains(RuleKind::Special, 5) &&
         holdem_strength(target) < holdem_strength(HoldemLabel::SR5) &&
         !holdem_parity_blocked(target, active);
}

// A heuristic 5-card pattern for the target category.  Verification happens
// at the call site; this only has to hit the target often enough.
inline std::array<Card, 5> plant_holdem(HoldemLabel target, const RuleSet& active, Stream& s) {
  std::array<Card, 5> hand{};
  const bool locked = parity_locked_target(target, active);
  const auto fill = [&](const std::vector<int>& ranks) {
    for (std::size_t i = 0; i < 5; ++i) hand[i] = Card{ranks[i], random_suit(s)};
  };
  switch (target) {
    case HoldemLabel::Pair: {
      const std::vector<int> pool = plant_rank_pool(locked, s);
      const int r = distinct_from_pool(pool, 1, {}, s)[0];
      const std::vector<int> kick = distinct_from_pool(pool, 3, {r}, s);
      fill({r, r, kick[0], kick[1], kick[2]});
      hand[1].suit = static_cast<Suit>((static_cast<int>(hand[0].suit) +
                                        static_cast<int>(s.uniform_int(1, 3))) % 4);
      break;
    }
    case HoldemLabel::ThreeOfAKind: {
      const std::vector<int> pool = plant_rank_pool(locked, s);
      const int r = distinct_from_pool(pool, 1, {}, s)[0];
      const std::vector<int> kick = distinct_from_pool(pool, 2, {r}, s);
      fill({r, r, r, kick[0], kick[1]});
      hand[0].suit = Suit::Spades;
      hand[1].suit = Suit::Hearts;
      hand[2].suit = Suit::Diamonds;
      break;
    }
    case HoldemLabel::Straight: {
      const int lo = static_cast<int>(s.uniform_int(1, 9));
      fill({lo, lo + 1, lo + 2, lo + 3, lo + 4});
      if (hand[1].suit == hand[0].suit)
        hand[1].suit = static_cast<Suit>((static_cast<int>(hand[0].suit) + 1) % 4);
      break;
    }
    case HoldemLabel::Flush: {
      const Suit suit = random_suit(s);
      const std::vector<int> ranks = distinct_from_pool(plant_rank_pool(locked, s), 5, {}, s);
      for (std::size_t i = 0; i < 5; ++i) hand[i] = Card{ranks[i], suit};
      break;
    }
    case HoldemLabel::FourOfAKind: {
      const int r = random_rank(s);
      const int kick = distinct_ranks(1, {r}, s)[0];
      for (int i = 0; i < 4; ++i) hand[static_cast<std::size_t>(i)] = Card{r, static_cast<Suit>(i)};
      hand[4] = Card{kick, random_suit(s)};
      break;
    }
    case HoldemLabel::SR1: {
      // With SR5 active the 2-3-5-7-J run is four odds and one even, which
      // the stronger hybrid category would swallow; the all-odd run is safe.
      const bool all_odd_only = active.contains(RuleKind::Special, 5);
      const bool high = all_odd_only || s.uniform_int(0, 1) == 1;
      const std::vector<int> ranks = high ? std::vector<int>{3, 5, 7, 11, 13}
                                          : std::vector<int>{2, 3, 5, 7, 11};
      fill(ranks);
      if (hand[1].suit == hand[0].suit)
        hand[1].suit = static_cast<Suit>((static_cast<int>(hand[0].suit) + 1) % 4);
      break;
    }
    case HoldemLabel::SR2: {
      const std::vector<int> ranks = distinct_from_pool(plant_rank_pool(locked, s), 5, {}, s);
      std::vector<int> sorted = ranks;
      std::sort(sorted.begin(), sorted.end());
      bool red = s.uniform_int(0, 1) == 1;
      for (std::size_t i = 0; i < 5; ++i) {
        const Suit suit = red ? (s.uniform_int(0, 1) ? Suit::Hearts : Suit::Diamonds)
                              : (s.uniform_int(0, 1) ? Suit::Spades : Suit::Clubs);
        hand[i] = Card{sorted[i], suit};
        red = !red;
      }
      break;
    }
    case HoldemLabel::SR3: {
      // Alternating parity, ascending, with at least one gap of 3 so the
      // hand is not a straight.
      const int start = static_cast<int>(s.uniform_int(1, 3));
      const std::size_t wide = static_cast<std::size_t>(s.uniform_int(1, 4));
      std::vector<int> ranks{start};
      for (std::size_t i = 1; i < 5; ++i) ranks.push_back(ranks.back() + (i == wide ? 3 : 1));
      fill(ranks);
      if (hand[1].suit == hand[0].suit)
        hand[1].suit = static_cast<Suit>((static_cast<int>(hand[0].suit) + 1) % 4);
      break;
    }
    case HoldemLabel::SR4: {
      const Suit suit = random_suit(s);
      const int lo = s.uniform_int(0, 1) ? 4 : 2;
      for (std::size_t i = 0; i < 5; ++i)
        hand[i] = Card{lo + 2 * static_cast<int>(i), suit};
      break;
    }
    case HoldemLabel::SR5: {
      const bool mostly_odd = s.uniform_int(0, 1) == 1;
      const std::vector<int> odd{1, 3, 5, 7, 9, 11, 13};
      const std::vector<int> even{2, 4, 6, 8, 10, 12};
      std::vector<int> major = mostly_odd ? odd : even;
      std::vector<int> minor = mostly_odd ? even : odd;
      std::vector<int> ranks;
      while (ranks.size() < 4) {
        const int r = major[static_cast<std::size_t>(
            s.uniform_int(0, static_cast<std::int64_t>(major.size()) - 1))];
        bool dup = false;
        for (const int x : ranks) dup = dup || x == r;
        if (!dup) ranks.push_back(r);
      }
      ranks.push_back(minor[static_cast<std::size_t>(
          s.uniform_int(0, static_cast<std::int64_t>(minor.size()) - 1))]);
      fill(ranks);
      if (hand[1].suit == hand[0].suit)
        hand[1].suit = static_cast<Suit>((static_cast<int>(hand[0].suit) + 1) % 4);
      break;
    }
    default:
      throw std::logic_error("plant_holdem: unsupported target category");
  }
  return hand;
}

inline HoldemObservation make_holdem_observation(const RuleId& target, const RuleSet& active,
                                                 const EpisodeSeed& seed, int obs_index) {
  Stream s = derive_stream(seed, "obs/" + std::to_string(obs_index));
  const HoldemLabel want = holdem_rule_subject(target);
  // A parity-blocked target cannot be a winning category at all; it is
  // exemplified by a deal the hybrid hand outranks while the target's
  // pattern stays visible in the winner's cards.
  const bool outranked = holdem_parity_blocked(want, active);
  const bool locked = parity_locked_target(want, active);
  for (int attempt = 0; attempt < kMaxTries; ++attempt) {
    std::array<Card, 5> made = plant_holdem(want, active, s);

    // Distinctness of the planted pattern (suit collisions are possible by
    // construction in a few branches).
    bool distinct = true;
    for (int i = 0; i < 5 && distinct; ++i)
      for (int j = i + 1; j < 5; ++j) distinct = distinct && !(made[static_cast<std::size_t>(i)] == made[static_cast<std::size_t>(j)]);
    if (!distinct) continue;

    // Deal the rest of the table from the remaining deck.  A locked deal
    // draws only the planted parity so no 5-subset anywhere forms SR5.
    std::vector<Card> deck = full_deck();
    std::erase_if(deck, [&](const Card& c) {
      for (const Card& m : made)
        if (c == m) return true;
      if (locked && c.rank % 2 != made[0].rank % 2) return true;
      return false;
    });
    std::vector<Card> rest = draw_cards(deck, 0, 4, s);

    std::vector<Card> made_shuffled(made.begin(), made.end());
    s.shuffle(made_shuffled);

    HoldemObservation obs;
    const bool planted_is_a = s.uniform_int(0, 1) == 1;
    std::array<Card, 2> winner_hole{made_shuffled[0], made_shuffled[1]};
    std::array<Card, 2> loser_hole{rest[0], rest[1]};
    std::vector<Card> board{made_shuffled[2], made_shuffled[3], made_shuffled[4], rest[2], rest[3]};
    s.shuffle(board);
    for (std::size_t i = 0; i < 5; ++i) obs.board[i] = board[i];
    obs.hole_a = planted_is_a ? winner_hole : loser_hole;
    obs.hole_b = planted_is_a ? loser_hole : winner_hole;

    std::vector<Card> seven_w(winner_hole.begin(), winner_hole.end());
    seven_w.insert(seven_w.end(), board.begin(), board.end());
    std::vector<Card> seven_l(loser_hole.begin(), loser_hole.end());
    seven_l.insert(seven_l.end(), board.begin(), board.end());
    const HandCategory cat_w = best_holdem_hand(seven_w, active);
    if (outranked) {
      if (cat_w.label != HoldemLabel::SR5 || !holdem_pattern_in_seven(seven_w, want)) continue;
    } else if (cat_w.label != want) {
      continue;
    }
    const HandCategory cat_l = best_holdem_hand(seven_l, active);
    if (compare_holdem(cat_w, cat_l, active) != Ordering::AWins) continue;

    obs.winner = planted_is_a ? Ordering::AWins : Ordering::BWins;
    obs.winning_category = cat_w.label;
    return obs;
  }
  throw GenerationError("holdem observation quota unsatisfiable for rule " + rule_name(target),
                        seed);
}

// ---------------------------------------------------------------------------
// Dice

inline std::vector<DiceRoll> all_rolls() {
  std::vector<DiceRoll> rolls;
  rolls.reserve(216);
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      for (int c = 1; c <= 6; ++c) rolls.push_back(DiceRoll{a, b, c});
  return rolls;
}

inline DiceObservation make_dice_duel(const RuleId& target, const RuleSet& active,
                                      const EpisodeSeed& seed, int obs_index) {
  Stream s = derive_stream(seed, "obs/" + std::to_string(obs_index));
  const DiceCategory want = dice_rule_subject(target);
  const RuleSet baseline = nr_only(active);
  const std::vector<DiceRoll> rolls = all_rolls();

  std::vector<std::pair<DiceRoll, DiceRoll>> plain;
  std::vector<std::pair<DiceRoll, DiceRoll>> flips;  // loser would win NR-only
  for (const DiceRoll& w : rolls) {
    if (classify_dice(w, active) != want) continue;
    for (const DiceRoll& l : rolls) {
      if (compare_dice(w, l, active) != Ordering::AWins) continue;
      plain.emplace_back(w, l);
      if (target.kind == RuleKind::Special &&
          compare_dice(w, l, baseline) == Ordering::BWins)
        flips.emplace_back(w, l);
    }
  }
  const auto& pool = (target.kind == RuleKind::Special && !flips.empty()) ? flips : plain;
  if (pool.empty())
    throw GenerationError("dice duel quota unsatisfiable for rule " + rule_name(target), seed);
  const auto& [w, l] = pool[static_cast<std::size_t>(
      s.uniform_int(0, static_cast<std::int64_t>(pool.size()) - 1))];

  DiceObservation obs;
  obs.duel = true;
  const bool winner_is_a = s.uniform_int(0, 1) == 1;
  obs.roll = winner_is_a ? w : l;
  obs.dealer_roll = winner_is_a ? l : w;
  obs.winner = winner_is_a ? Ordering::AWins : Ordering::BWins;
  return obs;
}

inline DiceObservation make_dice_single(const RuleId& target, const RuleSet& active,
                                        const EpisodeSeed& seed, int obs_index) {
  Stream s = derive_stream(seed, "obs/" + std::to_string(obs_index));
  const DiceCategory want = dice_rule_subject(target);
  const RuleSet baseline = nr_only(active);

  std::vector<DiceRoll> pool;
  std::vector<DiceRoll> flips;
  for (const DiceRoll& r : all_rolls()) {
    if (classify_dice(r, active) != want) continue;
    pool.push_back(r);
    if (target.kind == RuleKind::Special && dice_single_win(r, active) != dice_single_win(r, baseline))
      flips.push_back(r);
  }
  const auto& candidates = (target.kind == RuleKind::Special && !flips.empty()) ? flips : pool;
  if (candidates.empty())
    throw GenerationError("dice single-roll quota unsatisfiable for rule " + rule_name(target),
                          seed);
  DiceObservation obs;
  obs.duel = false;
  obs.roll = candidates[static_cast<std::size_t>(
      s.uniform_int(0, static_cast<std::int64_t>(candidates.size()) - 1))];
  obs.win = dice_single_win(obs.roll, active);
  return obs;
}

// ---------------------------------------------------------------------------
// Blackjack

inline BlackjackObservation make_blackjack_observation(const RuleId& target,
                                                       const RuleSet& active,
                                                       const EpisodeSeed& seed, int obs_index,
                                                       bool require_flip) {
  Stream s = derive_stream(seed, "obs/" + std::to_string(obs_index));
  const RuleSet baseline = nr_only(active);
  for (int attempt = 0; attempt < kMaxTries; ++attempt) {
    std::vector<Card> deck = full_deck();
    const std::vector<Card> cards = draw_cards(deck, 0, 10, s);
    std::array<Card, 5> player{};
    std::array<Card, 5> dealer{};
    for (std::size_t i = 0; i < 5; ++i) {
      player[i] = cards[i];
      dealer[i] = cards[i + 5];
    }
    const BlackjackHand ph = make_blackjack_hand(player);
    const BlackjackHand dh = make_blackjack_hand(dealer);
    const BlackjackResolution res = resolve_blackjack(ph, dh, active);

    BlackjackObservation obs;
    obs.player = player;
    obs.dealer = dealer;
    obs.total = ph.resolved_total;
    obs.bust = ph.bust;
    obs.ace_as_eleven = ph.ace_as_eleven;
    obs.outcome = res.outcome;
    obs.reason = res.reason;
    if (!blackjack_exemplifies(obs, target)) continue;
    if (require_flip) {
      const BlackjackResolution nr_res = resolve_blackjack(ph, dh, baseline);
      if (nr_res.outcome == res.outcome) continue;
    }
    return obs;
  }
  throw GenerationError("blackjack observation quota unsatisfiable for rule " + rule_name(target),
                        seed);
}

}  // namespace tabletop_detail

inline Episode generate_tabletop_episode(Game game, const RuleSet& rule_set,
                                         const EpisodeSeed& seed,
                                         DiceStyle dice_style = DiceStyle::Duel) {
  using namespace tabletop_detail;
  if (game == Game::Chess)
    throw std::invalid_argument("generate_tabletop_episode: chess has its own generator");
  if (rule_set.game != game)
    throw std::invalid_argument("generate_tabletop_episode: rule set does not match game");
  validate_rule_set(rule_set);

  Episode ep;
  ep.seed = seed;
  ep.game = game;
  ep.rule_set = rule_set;
  ep.dice_style = dice_style;

  const std::vector<RuleId> targets = shuffled_targets(rule_set, seed);

  // Blackjack: the first observation of each special rule must flip against
  // NR-only resolution so the rule is visible in outcome space at all.
  std::vector<bool> flip_here(targets.size(), false);
  if (game == Game::Blackjack) {
    for (const int sr : rule_set.specials) {
      for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i].kind == RuleKind::Special && targets[i].index == sr) {
          flip_here[i] = true;
          break;
        }
      }
    }
  }

  for (std::size_t i = 0; i < targets.size(); ++i) {
    const int idx = static_cast<int>(i);
    switch (game) {
      case Game::Holdem:
        ep.observations.push_back(
            make_holdem_observation(targets[i], rule_set, seed, idx));
        break;
      case Game::Dice:
        ep.observations.push_back(dice_style == DiceStyle::Duel
                                      ? make_dice_duel(targets[i], rule_set, seed, idx)
                                      : make_dice_single(targets[i], rule_set, seed, idx));
        break;
      case Game::Blackjack:
        ep.observations.push_back(
            make_blackjack_observation(targets[i], rule_set, seed, idx, flip_here[i]));
        break;
      default: break;
    }
  }

  for (const RuleId& rule : rule_set.all_rules()) {
    switch (game) {
      case Game::Holdem:
        ep.ground_truth.emplace_back(holdem_category_id(holdem_rule_subject(rule)), rule);
        break;
      case Game::Dice:
        ep.ground_truth.emplace_back(dice_category_id(dice_rule_subject(rule)), rule);
        break;
      case Game::Blackjack:
        ep.ground_truth.emplace_back(blackjack_entity_id(rule), rule);
        break;
      default: break;
    }
  }
  return ep;
}

}  // namespace rulebench
