#ifndef RULEBENCH_TEXT_TRANSCRIPT_HPP
#define RULEBENCH_TEXT_TRANSCRIPT_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rulebench/core/episode.hpp"
#include "rulebench/core/validate.hpp"
#include "rulebench/tabletop/blackjack.hpp"
#include "rulebench/tabletop/cards.hpp"
#include "rulebench/tabletop/dice.hpp"
#include "rulebench/tabletop/holdem.hpp"

// Plain-text episode rendering. This text is the model's *only* view of an
// episode, so it must expose raw actions and outcomes and nothing else: no
// rule names, no entity-to-rule bindings, no derived features. Rendering is
// a pure function of the episode; the golden tests pin it byte-for-byte.

namespace rulebench {

struct TranscriptDoc {
  Game game = Game::Chess;
  std::string header;                   // chess: "Board: 15×15"; empty otherwise
  std::vector<std::string> body_lines;  // "" entries are blank separator lines
  EpisodeSeed episode_ref;

  friend bool operator==(const TranscriptDoc&, const TranscriptDoc&) = default;
};

inline std::string transcript_text(const TranscriptDoc& doc) {
  std::string out;
  if (!doc.header.empty()) out += doc.header + "\n";
  for (const std::string& line : doc.body_lines) out += line + "\n";
  if (!out.empty()) out.pop_back();  // no trailing newline
  return out;
}

namespace transcript_detail {

inline std::string card_list(const Card* cards, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ", ";
    out += card_to_string(cards[i]);
  }
  return out;
}

inline std::string roll_text(const DiceRoll& r) {
  std::string out = "[";
  for (int i = 0; i < 3; ++i) {
    if (i) out += ", ";
    out += std::to_string(r[static_cast<std::size_t>(i)]);
  }
  return out + "]";
}

inline std::string move_token(const ChessMove& mv) {
  std::string out = square_name(mv.from) + "→" + square_name(mv.to);
  if (mv.special_effect == SpecialEffect::Swap) out += " (swap)";
  if (mv.special_effect == SpecialEffect::MirrorJump) out += " (jump)";
  return out;
}

inline void render_chess(const Episode& ep, TranscriptDoc& doc) {
  const ChessSetup& setup = *ep.board;
  doc.header = "Board: " + std::to_string(setup.size) + "×" + std::to_string(setup.size);

  std::string placements;
  for (std::size_t i = 0; i < setup.placement.size(); ++i) {
    const ChessPlacement& p = setup.placement[i];
    if (i) placements += ", ";
    placements += std::string(side_name(p.side)) + " " + piece_type_name(p.piece_type) + " @ " +
                  square_name(p.square);
  }
  doc.body_lines.push_back(placements);

  // One line per round ("Round 1: Red: m14→o13; Black: k2→k0"), captures on
  // their own lines right after the round they happened in.
  std::size_t i = 0;
  while (i < ep.observations.size()) {
    const int round = std::get<ChessMove>(ep.observations[i]).round;
    std::string line = "Round " + std::to_string(round) + ": ";
    std::vector<std::string> captures;
    bool first = true;
    for (; i < ep.observations.size(); ++i) {
      const ChessMove& mv = std::get<ChessMove>(ep.observations[i]);
      if (mv.round != round) break;
      if (!first) line += "; ";
      first = false;
      line += std::string(side_name(mv.side)) + ": " + move_token(mv);
      if (mv.capture)
        captures.push_back(std::string(side_name(mv.side)) + " captures " +
                           side_name(mv.capture->side) + " " +
                           piece_type_name(mv.capture->type));
    }
    doc.body_lines.push_back(line);
    for (std::string& c : captures) doc.body_lines.push_back(std::move(c));
  }
}

inline void render_holdem(const Episode& ep, TranscriptDoc& doc) {
  for (std::size_t i = 0; i < ep.observations.size(); ++i) {
    const auto& o = std::get<HoldemObservation>(ep.observations[i]);
    if (i) doc.body_lines.push_back("");
    doc.body_lines.push_back("Hand " + std::to_string(i + 1) + ":");
    doc.body_lines.push_back("Player A: " + card_list(o.hole_a.data(), 2));
    doc.body_lines.push_back("Player B: " + card_list(o.hole_b.data(), 2));
    doc.body_lines.push_back("Board: " + card_list(o.board.data(), 5));
    std::string winner = "Winner: ";
    if (o.winner == Ordering::Tie) {
      winner += "Tie";
    } else {
      winner += (o.winner == Ordering::AWins) ? "Player A" : "Player B";
      // Recompute the winning hand to get the tiebreak ranks that feed
      // "Pair of Threes"-style names. Special categories keep deliberately
      // vague display names so the transcript never spells out the rule.
      const Card* hole = (o.winner == Ordering::AWins) ? o.hole_a.data() : o.hole_b.data();
      std::vector<Card> seven(hole, hole + 2);
      seven.insert(seven.end(), o.board.begin(), o.board.end());
      const HandCategory cat = best_holdem_hand(seven, ep.rule_set);
      winner += " (" + holdem_display_name(cat.label, cat.tiebreak) + ")";
    }
    doc.body_lines.push_back(winner);
  }
}

inline void render_dice(const Episode& ep, TranscriptDoc& doc) {
  for (std::size_t i = 0; i < ep.observations.size(); ++i) {
    const auto& o = std::get<DiceObservation>(ep.observations[i]);
    if (o.duel) {
      std::string line = "Round " + std::to_string(i + 1) + ": Player A " + roll_text(o.roll) +
                         " vs Player B " + roll_text(o.dealer_roll) + " → ";
      if (o.winner == Ordering::Tie)
        line += "Tie";
      else
        line += (o.winner == Ordering::AWins) ? "Player A wins" : "Player B wins";
      doc.body_lines.push_back(line);
    } else {
      doc.body_lines.push_back("Roll " + std::to_string(i + 1) + ": " + roll_text(o.roll) +
                               " → " + (o.win ? "Win" : "Lose"));
    }
  }
}

inline void render_blackjack(const Episode& ep, TranscriptDoc& doc) {
  for (std::size_t i = 0; i < ep.observations.size(); ++i) {
    const auto& o = std::get<BlackjackObservation>(ep.observations[i]);
    if (i) doc.body_lines.push_back("");
    doc.body_lines.push_back("Hand " + std::to_string(i + 1) + ":");
    doc.body_lines.push_back("Player: " + card_list(o.player.data(), 5));

    bool has_ace = false;
    for (const Card& c : o.player) has_ace |= (c.rank == 1);
    std::string total = "Total: " + std::to_string(o.total);
    if (has_ace) total += o.ace_as_eleven ? " (A=11)" : " (A=1)";
    total += o.bust ? ", Bust" : ", No bust";
    doc.body_lines.push_back(total);

    const BlackjackHand dealer = make_blackjack_hand(o.dealer);
    std::string result = "Result: ";
    switch (o.outcome) {
      case BlackjackOutcome::PlayerWins: result += "Win"; break;
      case BlackjackOutcome::DealerWins: result += "Lose"; break;
      case BlackjackOutcome::Tie: result += "Tie"; break;
    }
    result += " vs Dealer (";
    result += dealer.bust ? "Bust" : "Total " + std::to_string(dealer.resolved_total);
    result += ")";
    doc.body_lines.push_back(result);
  }
}

}  // namespace transcript_detail

inline TranscriptDoc render_transcript(const Episode& ep) {
  const std::vector<Violation> bad = validate_episode(ep);
  if (!bad.empty())
    throw std::invalid_argument("render_transcript: invalid episode (" + bad.front().invariant +
                                ": " + bad.front().detail + ")");

  TranscriptDoc doc;
  doc.game = ep.game;
  doc.episode_ref = ep.seed;
  switch (ep.game) {
    case Game::Chess: transcript_detail::render_chess(ep, doc); break;
    case Game::Holdem: transcript_detail::render_holdem(ep, doc); break;
    case Game::Dice: transcript_detail::render_dice(ep, doc); break;
    case Game::Blackjack: transcript_detail::render_blackjack(ep, doc); break;
  }
  return doc;
}

}  // namespace rulebench

#endif  // RULEBENCH_TEXT_TRANSCRIPT_HPP
