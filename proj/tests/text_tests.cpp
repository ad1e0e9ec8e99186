// Transcript rendering, prompt assembly, and response parsing.  Transcripts
// are the model's only view of an episode, so the tests check three things:
// the bytes match the frozen fixtures, every rendered fact can be parsed back
// and re-derived from the episode, and nothing about the rules leaks.

#include <gtest/gtest.h>

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rulebench/chess/generate.hpp"
#include "rulebench/core/json_io.hpp"
#include "rulebench/core/rules.hpp"
#include "rulebench/tabletop/generate.hpp"
#include "rulebench/text/prompts.hpp"
#include "rulebench/text/templates.hpp"
#include "rulebench/text/transcript.hpp"

#include "golden_config.hpp"
#include "test_util.hpp"

namespace rulebench {
namespace {

using testutil::golden;
using testutil::golden_seed;

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + sep.size();
  }
}

// Expects "prefix<rest>" and returns <rest>.
std::string strip_prefix(const std::string& s, const std::string& prefix) {
  EXPECT_EQ(s.rfind(prefix, 0), 0u) << "line '" << s << "' lacks prefix '" << prefix << "'";
  return s.substr(prefix.size());
}

DiceRoll parse_roll(const std::string& s) {
  EXPECT_GE(s.size(), 2u);
  EXPECT_EQ(s.front(), '[');
  EXPECT_EQ(s.back(), ']');
  const std::vector<std::string> parts = split(s.substr(1, s.size() - 2), ", ");
  EXPECT_EQ(parts.size(), 3u);
  DiceRoll r{};
  for (std::size_t i = 0; i < 3; ++i) r[i] = std::stoi(parts[i]);
  return r;
}

std::vector<Card> parse_cards(const std::string& s) {
  std::vector<Card> out;
  for (const std::string& tok : split(s, ", ")) out.push_back(card_from_string(tok));
  return out;
}

// ---------------------------------------------------------------------------
// Template snapshots

TEST(Templates, SnapshotBytes) {
  EXPECT_EQ(std::string(kInductionTemplate), golden("templates/induction.txt"));
  EXPECT_EQ(std::string(kDecompositionTemplate), golden("templates/decomposition.txt"));
  EXPECT_EQ(std::string(kSolvingTemplate), golden("templates/solving.txt"));
  EXPECT_EQ(std::string(kSummarizationTemplate), golden("templates/summarization.txt"));
  EXPECT_EQ(std::string(kJudgeTemplate), golden("templates/judge.txt"));
}

TEST(Templates, KeyClauses) {
  const std::string induction = kInductionTemplate;
  EXPECT_NE(induction.find(kTranscriptMarker), std::string::npos);
  EXPECT_NE(induction.find("Induced Rule:"), std::string::npos);
  EXPECT_NE(induction.find("(Background Information)"), std::string::npos);
  EXPECT_NE(induction.find("(Output Format)"), std::string::npos);

  const std::string summarization = kSummarizationTemplate;
  EXPECT_NE(summarization.find("within 1000 tokens"), std::string::npos);
  EXPECT_EQ(kSummarizationTokenCap, 1000);

  const std::string judge = kJudgeTemplate;
  EXPECT_NE(judge.find("[GAME TYPE]"), std::string::npos);
  EXPECT_NE(judge.find("[INSERT TRUE RULE]"), std::string::npos);
  EXPECT_NE(judge.find("[INSERT MODEL RULE]"), std::string::npos);
  EXPECT_NE(judge.find("\"Yes, the induced rule matches the ground-truth.\""), std::string::npos);
  EXPECT_NE(judge.find("\"No, the induced rule does not match.\""), std::string::npos);

  const std::string decomposition = kDecompositionTemplate;
  EXPECT_NE(decomposition.find("Step 1:"), std::string::npos);
  EXPECT_NE(decomposition.find("Step 2:"), std::string::npos);
  EXPECT_NE(decomposition.find("Step 3:"), std::string::npos);
}

// ---------------------------------------------------------------------------
// Document assembly

TEST(TranscriptDocs, TextJoinsHeaderAndBodyWithoutTrailingNewline) {
  TranscriptDoc doc;
  doc.header = "Board: 9×9";
  doc.body_lines = {"first", "", "second"};
  EXPECT_EQ(transcript_text(doc), "Board: 9×9\nfirst\n\nsecond");

  TranscriptDoc headerless;
  headerless.body_lines = {"only"};
  EXPECT_EQ(transcript_text(headerless), "only");

  EXPECT_EQ(transcript_text(TranscriptDoc{}), "");
}

TEST(TranscriptDocs, RenderRejectsInvalidEpisodes) {
  const RuleSet rs = rule_set_for_index(Game::Dice, 0);
  Episode ep = generate_tabletop_episode(Game::Dice, rs, EpisodeSeed{3, 0});
  auto& obs = std::get<DiceObservation>(ep.observations[0]);
  obs.winner = obs.winner == Ordering::AWins ? Ordering::BWins : Ordering::AWins;
  EXPECT_THROW(render_transcript(ep), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Per-game line formats (rendered directly off hand-built observations)

TEST(TranscriptRender, DiceDuelLines) {
  Episode ep;
  ep.game = Game::Dice;
  DiceObservation b_wins{true, {6, 1, 2}, {1, 1, 1}, Ordering::BWins, false};
  DiceObservation a_wins{true, {2, 3, 5}, {4, 4, 6}, Ordering::AWins, false};
  DiceObservation tie{true, {2, 2, 1}, {2, 2, 1}, Ordering::Tie, false};
  ep.observations = {b_wins, a_wins, tie};

  TranscriptDoc doc;
  transcript_detail::render_dice(ep, doc);
  ASSERT_EQ(doc.body_lines.size(), 3u);
  EXPECT_EQ(doc.body_lines[0], "Round 1: Player A [6, 1, 2] vs Player B [1, 1, 1] → Player B wins");
  EXPECT_EQ(doc.body_lines[1], "Round 2: Player A [2, 3, 5] vs Player B [4, 4, 6] → Player A wins");
  EXPECT_EQ(doc.body_lines[2], "Round 3: Player A [2, 2, 1] vs Player B [2, 2, 1] → Tie");
}

TEST(TranscriptRender, DiceSingleLines) {
  Episode ep;
  ep.game = Game::Dice;
  DiceObservation win{false, {2, 3, 5}, {}, Ordering::Tie, true};
  DiceObservation lose{false, {4, 4, 6}, {}, Ordering::Tie, false};
  ep.observations = {win, lose};

  TranscriptDoc doc;
  transcript_detail::render_dice(ep, doc);
  ASSERT_EQ(doc.body_lines.size(), 2u);
  EXPECT_EQ(doc.body_lines[0], "Roll 1: [2, 3, 5] → Win");
  EXPECT_EQ(doc.body_lines[1], "Roll 2: [4, 4, 6] → Lose");
}

TEST(TranscriptRender, BlackjackLines) {
  Episode ep;
  ep.game = Game::Blackjack;

  BlackjackObservation soft_win;
  soft_win.player = {card_from_string("A♠"), card_from_string("5♥"), card_from_string("2♦"),
                     card_from_string("2♣"), card_from_string("A♥")};
  soft_win.dealer = {card_from_string("9♠"), card_from_string("4♣"), card_from_string("3♦"),
                     card_from_string("2♠"), card_from_string("2♥")};
  soft_win.total = 21;
  soft_win.bust = false;
  soft_win.ace_as_eleven = true;
  soft_win.outcome = BlackjackOutcome::PlayerWins;
  soft_win.reason = BlackjackReason::NR1;

  BlackjackObservation double_bust;
  double_bust.player = {card_from_string("K♠"), card_from_string("Q♥"), card_from_string("J♦"),
                        card_from_string("5♣"), card_from_string("2♠")};
  double_bust.dealer = {card_from_string("K♥"), card_from_string("Q♦"), card_from_string("J♣"),
                        card_from_string("9♠"), card_from_string("2♦")};
  double_bust.total = 37;
  double_bust.bust = true;
  double_bust.ace_as_eleven = false;
  double_bust.outcome = BlackjackOutcome::PlayerWins;
  double_bust.reason = BlackjackReason::NR2;

  BlackjackObservation hard_ace_loss;
  hard_ace_loss.player = {card_from_string("A♦"), card_from_string("K♦"), card_from_string("9♥"),
                          card_from_string("5♠"), card_from_string("2♣")};
  hard_ace_loss.dealer = {card_from_string("9♦"), card_from_string("4♥"), card_from_string("2♥"),
                          card_from_string("2♠"), card_from_string("A♣")};
  hard_ace_loss.total = 27;
  hard_ace_loss.bust = true;
  hard_ace_loss.ace_as_eleven = false;
  hard_ace_loss.outcome = BlackjackOutcome::DealerWins;
  hard_ace_loss.reason = BlackjackReason::NR2;

  ep.observations = {soft_win, double_bust, hard_ace_loss};

  TranscriptDoc doc;
  transcript_detail::render_blackjack(ep, doc);
  const std::vector<std::string> expected = {
      "Hand 1:",
      "Player: A♠, 5♥, 2♦, 2♣, A♥",
      "Total: 21 (A=11), No bust",
      "Result: Win vs Dealer (Total 20)",
      "",
      "Hand 2:",
      "Player: K♠, Q♥, J♦, 5♣, 2♠",
      "Total: 37, Bust",
      "Result: Win vs Dealer (Bust)",
      "",
      "Hand 3:",
      "Player: A♦, K♦, 9♥, 5♠, 2♣",
      "Total: 27 (A=1), Bust",
      "Result: Lose vs Dealer (Total 18)",
  };
  EXPECT_EQ(doc.body_lines, expected);
}

TEST(TranscriptRender, HoldemLines) {
  Episode ep;
  ep.game = Game::Holdem;
  ep.rule_set = RuleSet{Game::Holdem, {1, 2}, {}};

  HoldemObservation pair_win;
  pair_win.hole_a = {card_from_string("3♠"), card_from_string("3♥")};
  pair_win.hole_b = {card_from_string("4♠"), card_from_string("8♥")};
  pair_win.board = {card_from_string("6♦"), card_from_string("9♣"), card_from_string("Q♠"),
                    card_from_string("2♥"), card_from_string("K♦")};
  pair_win.winner = Ordering::AWins;
  pair_win.winning_category = HoldemLabel::Pair;

  HoldemObservation tie = pair_win;
  tie.hole_b = pair_win.hole_a;
  tie.hole_a = {card_from_string("3♦"), card_from_string("3♣")};
  tie.winner = Ordering::Tie;

  ep.observations = {pair_win, tie};

  TranscriptDoc doc;
  transcript_detail::render_holdem(ep, doc);
  const std::vector<std::string> expected = {
      "Hand 1:",
      "Player A: 3♠, 3♥",
      "Player B: 4♠, 8♥",
      "Board: 6♦, 9♣, Q♠, 2♥, K♦",
      "Winner: Player A (Pair of Threes)",
      "",
      "Hand 2:",
      "Player A: 3♦, 3♣",
      "Player B: 3♠, 3♥",
      "Board: 6♦, 9♣, Q♠, 2♥, K♦",
      "Winner: Tie",
  };
  EXPECT_EQ(doc.body_lines, expected);
}

// ---------------------------------------------------------------------------
// Full renders parse back into the episode's facts

TEST(TranscriptRoundTrip, DiceDuel) {
  const RuleSet rs = rule_set_for_index(Game::Dice, testutil::kGoldenDiceConfig);
  const Episode ep = generate_tabletop_episode(Game::Dice, rs,
                                               golden_seed(testutil::kGoldenDiceConfig));
  const TranscriptDoc doc = render_transcript(ep);
  ASSERT_EQ(doc.body_lines.size(), ep.observations.size());
  for (std::size_t i = 0; i < doc.body_lines.size(); ++i) {
    const auto& obs = std::get<DiceObservation>(ep.observations[i]);
    std::string rest = strip_prefix(doc.body_lines[i], "Round " + std::to_string(i + 1) +
                                                           ": Player A ");
    const std::vector<std::string> vs = split(rest, " vs Player B ");
    ASSERT_EQ(vs.size(), 2u);
    const std::vector<std::string> arrow = split(vs[1], " → ");
    ASSERT_EQ(arrow.size(), 2u);
    EXPECT_EQ(parse_roll(vs[0]), obs.roll);
    EXPECT_EQ(parse_roll(arrow[0]), obs.dealer_roll);
    const std::string verdict = arrow[1];
    if (obs.winner == Ordering::Tie)
      EXPECT_EQ(verdict, "Tie");
    else
      EXPECT_EQ(verdict, obs.winner == Ordering::AWins ? "Player A wins" : "Player B wins");
  }
}

TEST(TranscriptRoundTrip, DiceSingle) {
  const RuleSet rs = rule_set_for_index(Game::Dice, testutil::kGoldenDiceConfig);
  const Episode ep = generate_tabletop_episode(Game::Dice, rs,
                                               golden_seed(testutil::kGoldenDiceConfig),
                                               DiceStyle::Single);
  const TranscriptDoc doc = render_transcript(ep);
  ASSERT_EQ(doc.body_lines.size(), ep.observations.size());
  for (std::size_t i = 0; i < doc.body_lines.size(); ++i) {
    const auto& obs = std::get<DiceObservation>(ep.observations[i]);
    const std::string rest = strip_prefix(doc.body_lines[i], "Roll " + std::to_string(i + 1) + ": ");
    const std::vector<std::string> arrow = split(rest, " → ");
    ASSERT_EQ(arrow.size(), 2u);
    EXPECT_EQ(parse_roll(arrow[0]), obs.roll);
    EXPECT_EQ(arrow[1], obs.win ? "Win" : "Lose");
  }
}

TEST(TranscriptRoundTrip, Blackjack) {
  const RuleSet rs = rule_set_for_index(Game::Blackjack, testutil::kGoldenBlackjackConfig);
  const Episode ep = generate_tabletop_episode(Game::Blackjack, rs,
                                               golden_seed(testutil::kGoldenBlackjackConfig));
  const TranscriptDoc doc = render_transcript(ep);
  ASSERT_EQ(doc.body_lines.size(), ep.observations.size() * 4 + ep.observations.size() - 1);

  for (std::size_t i = 0; i < ep.observations.size(); ++i) {
    const auto& obs = std::get<BlackjackObservation>(ep.observations[i]);
    const std::size_t base = i * 5;  // 4 lines per hand + separator
    EXPECT_EQ(doc.body_lines[base], "Hand " + std::to_string(i + 1) + ":");
    if (i) EXPECT_EQ(doc.body_lines[base - 1], "");

    const std::vector<Card> player = parse_cards(strip_prefix(doc.body_lines[base + 1], "Player: "));
    ASSERT_EQ(player.size(), 5u);
    for (std::size_t c = 0; c < 5; ++c) EXPECT_EQ(player[c], obs.player[c]);

    // The totals line restates the resolved total, the ace treatment, and
    // the bust flag; all three must agree with an independent valuation.
    const BlackjackHand ph = make_blackjack_hand(obs.player);
    std::string expected_total = "Total: " + std::to_string(ph.resolved_total);
    bool has_ace = false;
    for (const Card& c : obs.player) has_ace |= (c.rank == 1);
    if (has_ace) expected_total += ph.ace_as_eleven ? " (A=11)" : " (A=1)";
    expected_total += ph.bust ? ", Bust" : ", No bust";
    EXPECT_EQ(doc.body_lines[base + 2], expected_total);

    const BlackjackHand dh = make_blackjack_hand(obs.dealer);
    std::string expected_result = "Result: ";
    switch (obs.outcome) {
      case BlackjackOutcome::PlayerWins: expected_result += "Win"; break;
      case BlackjackOutcome::DealerWins: expected_result += "Lose"; break;
      case BlackjackOutcome::Tie: expected_result += "Tie"; break;
    }
    expected_result += " vs Dealer (";
    expected_result += dh.bust ? "Bust" : "Total " + std::to_string(dh.resolved_total);
    expected_result += ")";
    EXPECT_EQ(doc.body_lines[base + 3], expected_result);
  }
}

TEST(TranscriptRoundTrip, Holdem) {
  const RuleSet rs = rule_set_for_index(Game::Holdem, testutil::kGoldenHoldemConfig);
  const Episode ep = generate_tabletop_episode(Game::Holdem, rs,
                                               golden_seed(testutil::kGoldenHoldemConfig));
  const TranscriptDoc doc = render_transcript(ep);

  for (std::size_t i = 0; i < ep.observations.size(); ++i) {
    const auto& obs = std::get<HoldemObservation>(ep.observations[i]);
    const std::size_t base = i * 6;  // 5 lines per hand + separator
    EXPECT_EQ(doc.body_lines[base], "Hand " + std::to_string(i + 1) + ":");

    const std::vector<Card> a = parse_cards(strip_prefix(doc.body_lines[base + 1], "Player A: "));
    const std::vector<Card> b = parse_cards(strip_prefix(doc.body_lines[base + 2], "Player B: "));
    const std::vector<Card> board = parse_cards(strip_prefix(doc.body_lines[base + 3], "Board: "));
    ASSERT_EQ(a.size(), 2u);
    ASSERT_EQ(b.size(), 2u);
    ASSERT_EQ(board.size(), 5u);
    for (std::size_t c = 0; c < 2; ++c) {
      EXPECT_EQ(a[c], obs.hole_a[c]);
      EXPECT_EQ(b[c], obs.hole_b[c]);
    }
    for (std::size_t c = 0; c < 5; ++c) EXPECT_EQ(board[c], obs.board[c]);

    const std::string winner_line = doc.body_lines[base + 4];
    if (obs.winner == Ordering::Tie) {
      EXPECT_EQ(winner_line, "Winner: Tie");
    } else {
      // Category name in parentheses must match a fresh best-hand analysis
      // of the winner's seven cards under the episode's rule set.
      const bool a_won = obs.winner == Ordering::AWins;
      std::vector<Card> seven(a_won ? obs.hole_a.begin() : obs.hole_b.begin(),
                              a_won ? obs.hole_a.end() : obs.hole_b.end());
      seven.insert(seven.end(), obs.board.begin(), obs.board.end());
      const HandCategory cat = best_holdem_hand(seven, ep.rule_set);
      EXPECT_EQ(winner_line, std::string("Winner: Player ") + (a_won ? "A" : "B") + " (" +
                                 holdem_display_name(cat.label, cat.tiebreak) + ")");
    }
  }
}

TEST(TranscriptRoundTrip, Chess) {
  const RuleSet rs = rule_set_for_index(Game::Chess, testutil::kGoldenChessConfig);
  const Episode ep = generate_chess_episode(rs, golden_seed(testutil::kGoldenChessConfig));
  const TranscriptDoc doc = render_transcript(ep);

  ASSERT_TRUE(ep.board.has_value());
  EXPECT_EQ(doc.header, "Board: " + std::to_string(ep.board->size) + "×" +
                            std::to_string(ep.board->size));

  // Placement line: all sixteen pieces in setup order.
  ASSERT_FALSE(doc.body_lines.empty());
  const std::vector<std::string> placed = split(doc.body_lines[0], ", ");
  ASSERT_EQ(placed.size(), ep.board->placement.size());
  for (std::size_t i = 0; i < placed.size(); ++i) {
    const ChessPlacement& p = ep.board->placement[i];
    EXPECT_EQ(placed[i], std::string(side_name(p.side)) + " " + piece_type_name(p.piece_type) +
                             " @ " + square_name(p.square));
  }

  // Round lines reproduce every move in order; capture lines follow their
  // round and name the removed piece.
  std::vector<std::string> move_tokens;
  std::vector<std::string> capture_lines;
  for (std::size_t li = 1; li < doc.body_lines.size(); ++li) {
    const std::string& line = doc.body_lines[li];
    if (line.rfind("Round ", 0) == 0) {
      const std::size_t colon = line.find(": ");
      ASSERT_NE(colon, std::string::npos);
      for (const std::string& half : split(line.substr(colon + 2), "; "))
        move_tokens.push_back(half);
    } else {
      capture_lines.push_back(line);
    }
  }

  ASSERT_EQ(move_tokens.size(), ep.observations.size());
  std::vector<std::string> expected_captures;
  for (std::size_t i = 0; i < ep.observations.size(); ++i) {
    const auto& mv = std::get<ChessMove>(ep.observations[i]);
    std::string expected = std::string(side_name(mv.side)) + ": " + square_name(mv.from) + "→" +
                           square_name(mv.to);
    if (mv.special_effect == SpecialEffect::Swap) expected += " (swap)";
    if (mv.special_effect == SpecialEffect::MirrorJump) expected += " (jump)";
    EXPECT_EQ(move_tokens[i], expected);
    if (mv.capture)
      expected_captures.push_back(std::string(side_name(mv.side)) + " captures " +
                                  side_name(mv.capture->side) + " " +
                                  piece_type_name(mv.capture->type));
  }
  EXPECT_EQ(capture_lines, expected_captures);
}

// ---------------------------------------------------------------------------
// Leak scan: rendered text never names rules or their internal ids

// "Special Hand" is a sanctioned display name; the ban list targets rule
// identifiers and rule talk, not category names.
void expect_no_rule_talk(const std::string& text, const std::string& label) {
  for (const char* banned : {"SR", "NR", "rule", "Rule"})
    EXPECT_EQ(text.find(banned), std::string::npos)
        << label << " leaks '" << banned << "'";
}

TEST(TranscriptLeaks, NothingAcrossGamesAndConfigs) {
  for (std::uint32_t cfg = 0; cfg < rule_set_count(Game::Dice); cfg += 7) {
    const RuleSet rs = rule_set_for_index(Game::Dice, cfg);
    for (const DiceStyle style : {DiceStyle::Duel, DiceStyle::Single}) {
      const Episode ep = generate_tabletop_episode(Game::Dice, rs, EpisodeSeed{50, cfg}, style);
      expect_no_rule_talk(transcript_text(render_transcript(ep)), "dice config " +
                                                                      std::to_string(cfg));
    }
  }
  for (std::uint32_t cfg = 0; cfg < rule_set_count(Game::Blackjack); cfg += 7) {
    const RuleSet rs = rule_set_for_index(Game::Blackjack, cfg);
    const Episode ep = generate_tabletop_episode(Game::Blackjack, rs, EpisodeSeed{51, cfg});
    expect_no_rule_talk(transcript_text(render_transcript(ep)), "blackjack config " +
                                                                    std::to_string(cfg));
  }
  for (std::uint32_t cfg = 0; cfg < rule_set_count(Game::Holdem); cfg += 13) {
    const RuleSet rs = rule_set_for_index(Game::Holdem, cfg);
    const Episode ep = generate_tabletop_episode(Game::Holdem, rs, EpisodeSeed{52, cfg});
    expect_no_rule_talk(transcript_text(render_transcript(ep)), "holdem config " +
                                                                    std::to_string(cfg));
  }
  for (std::uint32_t cfg = 0; cfg < rule_set_count(Game::Chess); cfg += 67) {
    const RuleSet rs = rule_set_for_index(Game::Chess, cfg);
    const Episode ep = generate_chess_episode(rs, EpisodeSeed{53, cfg});
    expect_no_rule_talk(transcript_text(render_transcript(ep)), "chess config " +
                                                                    std::to_string(cfg));
  }
}

// ---------------------------------------------------------------------------
// Frozen transcript bytes for the pinned golden episodes

TEST(TranscriptGoldens, ChessBytes) {
  const RuleSet rs = rule_set_for_index(Game::Chess, testutil::kGoldenChessConfig);
  const Episode ep = generate_chess_episode(rs, golden_seed(testutil::kGoldenChessConfig));
  EXPECT_EQ(transcript_text(render_transcript(ep)), golden("transcripts/chess.txt"));
}

TEST(TranscriptGoldens, HoldemBytes) {
  const RuleSet rs = rule_set_for_index(Game::Holdem, testutil::kGoldenHoldemConfig);
  const Episode ep = generate_tabletop_episode(Game::Holdem, rs,
                                               golden_seed(testutil::kGoldenHoldemConfig));
  EXPECT_EQ(transcript_text(render_transcript(ep)), golden("transcripts/holdem.txt"));
}

TEST(TranscriptGoldens, DiceBytes) {
  const RuleSet rs = rule_set_for_index(Game::Dice, testutil::kGoldenDiceConfig);
  const Episode duel = generate_tabletop_episode(Game::Dice, rs,
                                                 golden_seed(testutil::kGoldenDiceConfig));
  EXPECT_EQ(transcript_text(render_transcript(duel)), golden("transcripts/dice_duel.txt"));
  const Episode single = generate_tabletop_episode(Game::Dice, rs,
                                                   golden_seed(testutil::kGoldenDiceConfig),
                                                   DiceStyle::Single);
  EXPECT_EQ(transcript_text(render_transcript(single)), golden("transcripts/dice_single.txt"));
}

TEST(TranscriptGoldens, BlackjackBytes) {
  const RuleSet rs = rule_set_for_index(Game::Blackjack, testutil::kGoldenBlackjackConfig);
  const Episode ep = generate_tabletop_episode(Game::Blackjack, rs,
                                               golden_seed(testutil::kGoldenBlackjackConfig));
  EXPECT_EQ(transcript_text(render_transcript(ep)), golden("transcripts/blackjack.txt"));
}

TEST(TranscriptGoldens, EpisodeJsonBytes) {
  const RuleSet chess_rs = rule_set_for_index(Game::Chess, testutil::kGoldenChessConfig);
  EXPECT_EQ(episode_to_json(generate_chess_episode(chess_rs,
                                                   golden_seed(testutil::kGoldenChessConfig)))
                .dump(2) +
                "\n",
            golden("episodes/chess.json"));

  const RuleSet holdem_rs = rule_set_for_index(Game::Holdem, testutil::kGoldenHoldemConfig);
  EXPECT_EQ(episode_to_json(generate_tabletop_episode(Game::Holdem, holdem_rs,
                                                      golden_seed(testutil::kGoldenHoldemConfig)))
                .dump(2) +
                "\n",
            golden("episodes/holdem.json"));

  const RuleSet dice_rs = rule_set_for_index(Game::Dice, testutil::kGoldenDiceConfig);
  EXPECT_EQ(episode_to_json(generate_tabletop_episode(Game::Dice, dice_rs,
                                                      golden_seed(testutil::kGoldenDiceConfig)))
                .dump(2) +
                "\n",
            golden("episodes/dice.json"));

  const RuleSet bj_rs = rule_set_for_index(Game::Blackjack, testutil::kGoldenBlackjackConfig);
  EXPECT_EQ(episode_to_json(generate_tabletop_episode(Game::Blackjack, bj_rs,
                                                      golden_seed(testutil::kGoldenBlackjackConfig)))
                .dump(2) +
                "\n",
            golden("episodes/blackjack.json"));
}

// ---------------------------------------------------------------------------
// Induction prompt assembly

TranscriptDoc sample_doc() {
  const RuleSet rs = rule_set_for_index(Game::Dice, testutil::kGoldenDiceConfig);
  const Episode ep = generate_tabletop_episode(Game::Dice, rs,
                                               golden_seed(testutil::kGoldenDiceConfig));
  return render_transcript(ep);
}

TEST(InductionPrompt, SplicesTranscriptInPlaceOfMarker) {
  const TranscriptDoc doc = sample_doc();
  const PromptBundle bundle = build_induction_prompt(doc, Intervention::None);

  EXPECT_EQ(bundle.instruction.find(kTranscriptMarker), std::string::npos);
  EXPECT_NE(bundle.instruction.find(transcript_text(doc)), std::string::npos);
  EXPECT_EQ(bundle.instruction.rfind("(Background Information)", 0), 0u);
  EXPECT_NE(bundle.instruction.find("Induced Rule: <your concise natural language description>"),
            std::string::npos);

  // Splicing changes nothing else: removing the transcript text restores
  // the template with its marker.
  std::string restored = bundle.instruction;
  const std::size_t pos = restored.find(transcript_text(doc));
  restored.replace(pos, transcript_text(doc).size(), kTranscriptMarker);
  EXPECT_EQ(restored, std::string(kInductionTemplate));
}

TEST(InductionPrompt, InterventionScaffolds) {
  const TranscriptDoc doc = sample_doc();

  const PromptBundle none = build_induction_prompt(doc, Intervention::None);
  EXPECT_TRUE(none.preamble.empty());
  EXPECT_FALSE(none.max_output_tokens.has_value());
  EXPECT_EQ(none.prompt_text(), none.instruction);

  const PromptBundle decomp = build_induction_prompt(doc, Intervention::Decomposition);
  EXPECT_EQ(decomp.preamble, std::string(kDecompositionTemplate));
  EXPECT_FALSE(decomp.max_output_tokens.has_value());
  EXPECT_EQ(decomp.prompt_text(), decomp.preamble + "\n\n" + decomp.instruction);

  const PromptBundle solving = build_induction_prompt(doc, Intervention::Solving);
  EXPECT_EQ(solving.preamble, std::string(kSolvingTemplate));
  EXPECT_FALSE(solving.max_output_tokens.has_value());

  const PromptBundle summar = build_induction_prompt(doc, Intervention::Summarization);
  EXPECT_EQ(summar.preamble, std::string(kSummarizationTemplate));
  ASSERT_TRUE(summar.max_output_tokens.has_value());
  EXPECT_EQ(*summar.max_output_tokens, 1000);

  const PromptBundle combined = build_induction_prompt(doc, Intervention::Combined);
  EXPECT_EQ(combined.preamble, std::string(kDecompositionTemplate) + "\n\n" + kSolvingTemplate +
                                   "\n\n" + kSummarizationTemplate);
  ASSERT_TRUE(combined.max_output_tokens.has_value());
  EXPECT_EQ(*combined.max_output_tokens, 1000);

  // All five share the same instruction body.
  EXPECT_EQ(none.instruction, decomp.instruction);
  EXPECT_EQ(none.instruction, combined.instruction);
}

TEST(InductionPrompt, NonePromptGoldenBytes) {
  const PromptBundle bundle = build_induction_prompt(sample_doc(), Intervention::None);
  EXPECT_EQ(bundle.prompt_text(), golden("prompts/induction_none.txt"));
}

// ---------------------------------------------------------------------------
// Response parsing and judge prompt

TEST(InducedRuleParse, LastMarkerWinsAndWhitespaceIsTrimmed) {
  const InducedRule simple = parse_induced_rule("Induced Rule: the sum must be prime");
  EXPECT_TRUE(simple.parse_ok);
  EXPECT_EQ(simple.text, "the sum must be prime");
  EXPECT_EQ(simple.raw_response, "Induced Rule: the sum must be prime");

  const InducedRule multi = parse_induced_rule(
      "Thinking about the format line Induced Rule: draft one\n"
      "More reasoning...\n"
      "Induced Rule:   pairs with adjacent kickers win  \n\n");
  EXPECT_TRUE(multi.parse_ok);
  EXPECT_EQ(multi.text, "pairs with adjacent kickers win");

  const InducedRule missing = parse_induced_rule("no marker here");
  EXPECT_FALSE(missing.parse_ok);
  EXPECT_TRUE(missing.text.empty());
  EXPECT_EQ(missing.raw_response, "no marker here");

  const InducedRule empty_tail = parse_induced_rule("Induced Rule:   \n ");
  EXPECT_TRUE(empty_tail.parse_ok);
  EXPECT_TRUE(empty_tail.text.empty());

  EXPECT_FALSE(parse_induced_rule("").parse_ok);
}

TEST(JudgePrompt, SubstitutesAllPlaceholders) {
  InducedRule induced;
  induced.parse_ok = true;
  induced.text = "a hand with two hearts always wins";

  const std::string prompt =
      build_judge_prompt(Game::Holdem, "five odd ranks outrank a flush", induced);
  EXPECT_NE(prompt.find("involving Texas Hold'em"), std::string::npos);
  EXPECT_NE(prompt.find("Ground-truth rule: five odd ranks outrank a flush"), std::string::npos);
  EXPECT_NE(prompt.find("Model-induced rule: a hand with two hearts always wins"),
            std::string::npos);
  EXPECT_EQ(prompt.find("[GAME TYPE]"), std::string::npos);
  EXPECT_EQ(prompt.find("[INSERT"), std::string::npos);

  EXPECT_NE(build_judge_prompt(Game::Chess, "r", induced).find("involving chess"),
            std::string::npos);
}

TEST(JudgePrompt, RequiresAParsedNonEmptyRule) {
  InducedRule unparsed;
  unparsed.parse_ok = false;
  EXPECT_THROW(build_judge_prompt(Game::Dice, "x", unparsed), std::invalid_argument);

  InducedRule empty;
  empty.parse_ok = true;
  empty.text = "";
  EXPECT_THROW(build_judge_prompt(Game::Dice, "x", empty), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Bundle serialization

TEST(PromptBundles, JsonCarriesTheTokenCapOrNull) {
  const TranscriptDoc doc = sample_doc();
  const json none = prompt_bundle_to_json(build_induction_prompt(doc, Intervention::None));
  EXPECT_TRUE(none.at("max_output_tokens").is_null());
  EXPECT_EQ(none.at("intervention"), "None");
  EXPECT_EQ(none.at("episode_seed"), seed_to_json(doc.episode_ref));
  EXPECT_FALSE(none.at("prompt_text").get<std::string>().empty());

  const json summar =
      prompt_bundle_to_json(build_induction_prompt(doc, Intervention::Summarization));
  EXPECT_EQ(summar.at("max_output_tokens"), 1000);
  EXPECT_EQ(summar.at("intervention"), "Summarization");
}

TEST(PromptBundles, JsonlOneObjectPerLine) {
  const TranscriptDoc doc = sample_doc();
  const std::vector<PromptBundle> bundles = {
      build_induction_prompt(doc, Intervention::None),
      build_induction_prompt(doc, Intervention::Combined),
  };
  const std::string jsonl = prompt_bundles_to_jsonl(bundles);
  ASSERT_FALSE(jsonl.empty());
  EXPECT_EQ(jsonl.back(), '\n');

  const std::vector<std::string> lines = split(jsonl.substr(0, jsonl.size() - 1), "\n");
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_TRUE(json::parse(lines[0]).at("max_output_tokens").is_null());
  EXPECT_EQ(json::parse(lines[1]).at("intervention"), "Combined");
  EXPECT_EQ(json::parse(lines[1]).at("max_output_tokens"), 1000);
}

TEST(Interventions, NamesRoundTrip) {
  for (const Intervention iv : kAllInterventions)
    EXPECT_EQ(intervention_from_name(intervention_name(iv)), iv);
  EXPECT_THROW(intervention_from_name("Expansion"), std::invalid_argument);
}

}  // namespace
}  // namespace rulebench
