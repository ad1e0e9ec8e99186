#pragma once
// Episode validation.
//
// validate_episode re-derives every label from scratch through the public
// classifiers/comparators and reports violations as data; it never throws on
// bad episodes.  Violation names are stable strings tests assert against:
//   rule-set, observation-type, observation-count, round-count, board,
//   ground-truth, move-order, legality, distinct-cards, label-consistency,
//   rule-quota, min-appearance, sr-discriminability

#include <map>
#include <set>
#include <string>
#include <vector>

#include "rulebench/chess/generate.hpp"
#include "rulebench/chess/moves.hpp"
#include "rulebench/core/episode.hpp"
#include "rulebench/tabletop/generate.hpp"

namespace rulebench {

namespace validate_detail {

inline void add(std::vector<Violation>& out, const std::string& invariant, int index,
                const std::string& detail) {
  out.push_back(Violation{invariant, index, detail});
}

inline bool observation_matches_game(const Observation& obs, Game game) {
  switch (game) {
    case Game::Chess: return std::holds_alternative<ChessMove>(obs);
    case Game::Holdem: return std::holds_alternative<HoldemObservation>(obs);
    case Game::Dice: return std::holds_alternative<DiceObservation>(obs);
    case Game::Blackjack: return std::holds_alternative<BlackjackObservation>(obs);
  }
  return false;
}

inline void validate_chess(const Episode& ep, std::vector<Violation>& out) {
  if (!ep.board) {
    add(out, "board", -1, "chess episode without board setup");
    return;
  }
  const ChessSetup& setup = *ep.board;
  if (setup.size < 8 || setup.size > 15) {
    add(out, "board", -1, "board size " + std::to_string(setup.size) + " outside [8,15]");
    return;
  }
  Board board(setup.size);
  std::set<std::pair<int, int>> seen_pieces;
  bool setup_ok = true;
  for (const ChessPlacement& p : setup.placement) {
    if (!board.in_bounds(p.square) || board.at(p.square)) {
      add(out, "board", -1, "bad placement at " + std::to_string(p.square.file) + "," +
                                std::to_string(p.square.rank));
      setup_ok = false;
      continue;
    }
    board.put(p.square, Piece{p.side, p.piece_type});
    seen_pieces.insert({p.side == Side::Red ? 0 : 1, p.piece_type});
  }
  if (setup.placement.size() != 16 || seen_pieces.size() != 16) {
    add(out, "board", -1, "expected one piece per side per type (16 total)");
    setup_ok = false;
  }

  // Ground truth must bind all 8 types and use every active rule.
  std::map<int, RuleId> rule_of;
  for (const auto& [entity, rule] : ep.ground_truth) {
    int type = 0;
    try {
      type = piece_type_from_name(entity);
    } catch (const std::exception&) {
      add(out, "ground-truth", -1, "unknown piece type '" + entity + "'");
      continue;
    }
    if (!ep.rule_set.contains(rule))
      add(out, "ground-truth", -1, "rule " + rule_name(rule) + " not active");
    rule_of.emplace(type, rule);
  }
  if (rule_of.size() != 8) {
    add(out, "ground-truth", -1, "expected 8 piece-type bindings");
    return;
  }
  std::set<std::pair<int, int>> used;
  for (const auto& [type, rule] : rule_of)
    used.insert({rule.kind == RuleKind::Normal ? 0 : 1, rule.index});
  if (used.size() != 8)
    add(out, "ground-truth", -1, "active rules not covered exactly by the 8 piece types");
  if (!setup_ok) return;

  const int rounds = static_cast<int>(ep.observations.size()) / 2;
  if (rounds < 10 || rounds > 12)
    add(out, "round-count", -1, "round count " + std::to_string(rounds) + " outside [10,12]");
  if (ep.observations.size() % 2 != 0)
    add(out, "observation-count", -1, "odd number of half-moves");

  std::map<int, int> moves_per_type;
  for (std::size_t i = 0; i < ep.observations.size(); ++i) {
    const int idx = static_cast<int>(i);
    if (!std::holds_alternative<ChessMove>(ep.observations[i])) continue;
    const ChessMove& mv = std::get<ChessMove>(ep.observations[i]);
    const Side expected_side = i % 2 == 0 ? Side::Red : Side::Black;
    const int expected_round = idx / 2 + 1;
    if (mv.side != expected_side || mv.round != expected_round)
      add(out, "move-order", idx, "expected round " + std::to_string(expected_round) +
                                      " for " + side_name(expected_side));
    const auto it = rule_of.find(mv.piece_type);
    if (it == rule_of.end()) {
      add(out, "legality", idx, "piece type without a rule binding");
      continue;
    }
    try {
      if (!is_legal(it->second, board, mv)) {
        add(out, "legality", idx, "move not legal under " + rule_name(it->second));
        return;  // board state unreliable from here on
      }
      apply_move(board, mv);
    } catch (const std::exception& e) {
      add(out, "legality", idx, e.what());
      return;
    }
    ++moves_per_type[mv.piece_type];
  }
  for (int type = 1; type <= kPieceTypeCount; ++type) {
    const auto it = moves_per_type.find(type);
    const int n = it == moves_per_type.end() ? 0 : it->second;
    if (n < 3)
      add(out, "min-appearance", -1, std::string(piece_type_name(type)) + " moved " +
                                         std::to_string(n) + " time(s), need 3");
  }
}

inline void check_tabletop_ground_truth(const Episode& ep, std::vector<Violation>& out) {
  const std::vector<RuleId> active = ep.rule_set.all_rules();
  if (ep.ground_truth.size() != active.size()) {
    add(out, "ground-truth", -1, "expected one entity per active rule");
    return;
  }
  for (const RuleId& rule : active) {
    std::string expected;
    switch (ep.game) {
      case Game::Holdem: expected = holdem_category_id(holdem_rule_subject(rule)); break;
      case Game::Dice: expected = dice_category_id(dice_rule_subject(rule)); break;
      case Game::Blackjack: expected = blackjack_entity_id(rule); break;
      default: return;
    }
    const auto found = ep.rule_for(expected);
    if (!found || !(*found == rule))
      add(out, "ground-truth", -1, "missing or wrong binding for " + rule_name(rule));
  }
}

inline void validate_holdem(const Episode& ep, std::vector<Violation>& out) {
  const RuleSet baseline = tabletop_detail::nr_only(ep.rule_set);
  std::map<std::string, int> quota;
  bool any_nr_divergence = false;
  for (std::size_t i = 0; i < ep.observations.size(); ++i) {
    const int idx = static_cast<int>(i);
    if (!std::holds_alternative<HoldemObservation>(ep.observations[i])) continue;
    const HoldemObservation& obs = std::get<HoldemObservation>(ep.observations[i]);

    std::vector<Card> all(obs.hole_a.begin(), obs.hole_a.end());
    all.insert(all.end(), obs.hole_b.begin(), obs.hole_b.end());
    all.insert(all.end(), obs.board.begin(), obs.board.end());
    std::set<std::pair<int, int>> distinct;
    for (const Card& c : all) distinct.insert({c.rank, static_cast<int>(c.suit)});
    if (distinct.size() != all.size()) {
      add(out, "distinct-cards", idx, "duplicate card within the deal");
      continue;
    }

    std::vector<Card> seven_a(obs.hole_a.begin(), obs.hole_a.end());
    seven_a.insert(seven_a.end(), obs.board.begin(), obs.board.end());
    std::vector<Card> seven_b(obs.hole_b.begin(), obs.hole_b.end());
    seven_b.insert(seven_b.end(), obs.board.begin(), obs.board.end());
    const HandCategory cat_a = best_holdem_hand(seven_a, ep.rule_set);
    const HandCategory cat_b = best_holdem_hand(seven_b, ep.rule_set);
    const Ordering winner = compare_holdem(cat_a, cat_b, ep.rule_set);
    const HoldemLabel winning_label =
        winner == Ordering::BWins ? cat_b.label : cat_a.label;
    if (winner != obs.winner || winning_label != obs.winning_category) {
      add(out, "label-consistency", idx, "stored winner/category do not re-derive");
      continue;
    }
    if (winner != Ordering::Tie) {
      ++quota[holdem_category_id(winning_label)];
      // A parity-blocked category (see holdem_parity_blocked) can never win
      // while SR5 is active; it counts as exemplified when the winner's
      // cards still contain its pattern underneath the hybrid label.
      if (winning_label == HoldemLabel::SR5) {
        const std::vector<Card>& seven_w = winner == Ordering::BWins ? seven_b : seven_a;
        for (const RuleId& rule : ep.rule_set.all_rules()) {
          const HoldemLabel subject = holdem_rule_subject(rule);
          if (holdem_parity_blocked(subject, ep.rule_set) &&
              holdem_pattern_in_seven(seven_w, subject))
            ++quota[holdem_category_id(subject)];
        }
      }
    }

    const HandCategory nr_a = best_holdem_hand(seven_a, baseline);
    const HandCategory nr_b = best_holdem_hand(seven_b, baseline);
    const Ordering nr_winner = compare_holdem(nr_a, nr_b, baseline);
    const HoldemLabel nr_label = nr_winner == Ordering::BWins ? nr_b.label : nr_a.label;
    if (nr_winner != obs.winner || nr_label != obs.winning_category) any_nr_divergence = true;
  }
  for (const RuleId& rule : ep.rule_set.all_rules()) {
    const int n = quota[holdem_category_id(holdem_rule_subject(rule))];
    if (n < tabletop_detail::kQuotaPerRule)
      add(out, "rule-quota", -1, rule_name(rule) + " exemplified " + std::to_string(n) +
                                     " time(s), need " +
                                     std::to_string(tabletop_detail::kQuotaPerRule));
  }
  if (!any_nr_divergence)
    add(out, "sr-discriminability", -1, "no observation distinguishes SRs from NR-only play");
}

inline void validate_dice(const Episode& ep, std::vector<Violation>& out) {
  const RuleSet baseline = tabletop_detail::nr_only(ep.rule_set);
  std::map<std::string, int> quota;
  bool any_nr_divergence = false;
  for (std::size_t i = 0; i < ep.observations.size(); ++i) {
    const int idx = static_cast<int>(i);
    if (!std::holds_alternative<DiceObservation>(ep.observations[i])) continue;
    const DiceObservation& obs = std::get<DiceObservation>(ep.observations[i]);
    if (obs.duel != (ep.dice_style == DiceStyle::Duel)) {
      add(out, "observation-type", idx, "observation style does not match episode style");
      continue;
    }
    try {
      check_roll(obs.roll);
      if (obs.duel) check_roll(obs.dealer_roll);
    } catch (const std::exception& e) {
      add(out, "label-consistency", idx, e.what());
      continue;
    }
    if (obs.duel) {
      if (compare_dice(obs.roll, obs.dealer_roll, ep.rule_set) != obs.winner) {
        add(out, "label-consistency", idx, "stored duel winner does not re-derive");
        continue;
      }
      if (obs.winner != Ordering::Tie) {
        const DiceRoll& w = obs.winner == Ordering::AWins ? obs.roll : obs.dealer_roll;
        ++quota[dice_category_id(classify_dice(w, ep.rule_set))];
      }
      if (compare_dice(obs.roll, obs.dealer_roll, baseline) != obs.winner)
        any_nr_divergence = true;
    } else {
      if (dice_single_win(obs.roll, ep.rule_set) != obs.win) {
        add(out, "label-consistency", idx, "stored single-roll label does not re-derive");
        continue;
      }
      ++quota[dice_category_id(classify_dice(obs.roll, ep.rule_set))];
      if (dice_single_win(obs.roll, baseline) != obs.win) any_nr_divergence = true;
    }
  }
  for (const RuleId& rule : ep.rule_set.all_rules()) {
    const int n = quota[dice_category_id(dice_rule_subject(rule))];
    if (n < tabletop_detail::kQuotaPerRule)
      add(out, "rule-quota", -1, rule_name(rule) + " exemplified " + std::to_string(n) +
                                     " time(s), need " +
                                     std::to_string(tabletop_detail::kQuotaPerRule));
  }
  if (!any_nr_divergence)
    add(out, "sr-discriminability", -1, "no observation distinguishes SRs from NR-only play");
}

inline void validate_blackjack(const Episode& ep, std::vector<Violation>& out) {
  const RuleSet baseline = tabletop_detail::nr_only(ep.rule_set);
  std::map<std::string, int> exemplified;
  bool any_nr_divergence = false;
  for (std::size_t i = 0; i < ep.observations.size(); ++i) {
    const int idx = static_cast<int>(i);
    if (!std::holds_alternative<BlackjackObservation>(ep.observations[i])) continue;
    const BlackjackObservation& obs = std::get<BlackjackObservation>(ep.observations[i]);

    std::set<std::pair<int, int>> distinct;
    for (const Card& c : obs.player) distinct.insert({c.rank, static_cast<int>(c.suit)});
    for (const Card& c : obs.dealer) distinct.insert({c.rank, static_cast<int>(c.suit)});
    if (distinct.size() != 10) {
      add(out, "distinct-cards", idx, "duplicate card within the deal");
      continue;
    }
    const BlackjackHand ph = make_blackjack_hand(obs.player);
    const BlackjackHand dh = make_blackjack_hand(obs.dealer);
    const BlackjackResolution res = resolve_blackjack(ph, dh, ep.rule_set);
    if (obs.total != ph.resolved_total || obs.bust != ph.bust ||
        obs.ace_as_eleven != ph.ace_as_eleven || obs.outcome != res.outcome ||
        obs.reason != res.reason) {
      add(out, "label-consistency", idx, "stored totals/outcome do not re-derive");
      continue;
    }
    for (const RuleId& rule : ep.rule_set.all_rules())
      if (blackjack_exemplifies(obs, rule)) ++exemplified[rule_name(rule)];
    if (resolve_blackjack(ph, dh, baseline).outcome != res.outcome) any_nr_divergence = true;
  }
  for (const RuleId& rule : ep.rule_set.all_rules()) {
    const int n = exemplified[rule_name(rule)];
    if (n < tabletop_detail::kQuotaPerRule)
      add(out, "rule-quota", -1, rule_name(rule) + " exemplified " + std::to_string(n) +
                                     " time(s), need " +
                                     std::to_string(tabletop_detail::kQuotaPerRule));
  }
  if (!any_nr_divergence)
    add(out, "sr-discriminability", -1, "no observation distinguishes SRs from NR-only play");
}

}  // namespace validate_detail

inline std::vector<Violation> validate_episode(const Episode& ep) {
  using namespace validate_detail;
  std::vector<Violation> out;
  try {
    validate_rule_set(ep.rule_set);
  } catch (const std::exception& e) {
    add(out, "rule-set", -1, e.what());
    return out;
  }
  if (ep.rule_set.game != ep.game) {
    add(out, "rule-set", -1, "rule set game does not match episode game");
    return out;
  }
  for (std::size_t i = 0; i < ep.observations.size(); ++i)
    if (!observation_matches_game(ep.observations[i], ep.game))
      add(out, "observation-type", static_cast<int>(i), "observation payload from another game");

  if (ep.game == Game::Chess) {
    if (ep.observations.size() < 20 || ep.observations.size() > 24)
      add(out, "observation-count", -1,
          std::to_string(ep.observations.size()) + " half-moves, expected 20..24");
    validate_chess(ep, out);
    return out;
  }

  if (ep.observations.size() != tabletop_detail::kObservationCount)
    add(out, "observation-count", -1, std::to_string(ep.observations.size()) +
                                          " observations, expected " +
                                          std::to_string(tabletop_detail::kObservationCount));
  check_tabletop_ground_truth(ep, out);
  switch (ep.game) {
    case Game::Holdem: validate_holdem(ep, out); break;
    case Game::Dice: validate_dice(ep, out); break;
    case Game::Blackjack: validate_blackjack(ep, out); break;
    default: break;
  }
  return out;
}

}  // namespace rulebench
