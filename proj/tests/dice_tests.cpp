// Dice classification, duel comparison, and episode generation.  The
// classifier is checked exhaustively: every roll against every rule set,
// against a predicate chain written out from the rule statements.

#include <gtest/gtest.h>

#include <vector>

#include "rulebench/core/json_io.hpp"
#include "rulebench/core/rng.hpp"
#include "rulebench/core/rules.hpp"
#include "rulebench/core/validate.hpp"
#include "rulebench/tabletop/dice.hpp"
#include "rulebench/tabletop/generate.hpp"

namespace rulebench {
namespace {

bool prime_brute(int n) {
  if (n < 2) return false;
  for (int d = 2; d < n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Direct restatement of the rule texts, evaluated in the documented
// precedence order (ties in the duel tier table break nothing here because
// the first matching category is the label).
DiceCategory oracle_classify(const DiceRoll& r, const RuleSet& rs) {
  const int sum = r[0] + r[1] + r[2];
  const bool two_equal = r[0] == r[1] || r[0] == r[2] || r[1] == r[2];
  const bool three_equal = r[0] == r[1] && r[1] == r[2];
  const bool faces_prime = prime_brute(r[0]) && prime_brute(r[1]) && prime_brute(r[2]);
  const bool alternating = r[0] % 2 != r[1] % 2 && r[1] % 2 != r[2] % 2;
  bool neighbor = false;
  for (int i = 0; i < 3; ++i) {
    const int a = r[static_cast<std::size_t>((i + 1) % 3)];
    const int b = r[static_cast<std::size_t>((i + 2) % 3)];
    const int c = r[static_cast<std::size_t>(i)];
    if (a == b && std::abs(c - a) == 1) neighbor = true;
  }

  const auto on = [&](RuleKind k, int i) { return rs.contains(k, i); };
  if (on(RuleKind::Special, 1) && prime_brute(sum)) return DiceCategory::PrimeSum;
  if (on(RuleKind::Special, 2) && faces_prime) return DiceCategory::AllPrimeFaces;
  if (on(RuleKind::Normal, 4) && three_equal) return DiceCategory::Triple;
  if (on(RuleKind::Special, 3) && alternating) return DiceCategory::AlternatingParity;
  if (on(RuleKind::Special, 4) && neighbor) return DiceCategory::PairWithNeighbor;
  if (on(RuleKind::Normal, 3) && two_equal) return DiceCategory::Pair;
  if (on(RuleKind::Normal, 1) && sum >= 4 && sum <= 10) return DiceCategory::SmallTotal;
  if (on(RuleKind::Normal, 2) && sum >= 11 && sum <= 17) return DiceCategory::LargeTotal;
  return DiceCategory::None;
}

TEST(DiceClassify, ExhaustiveOverAllRollsAndRuleSets) {
  int checked = 0;
  for (std::uint32_t cfg = 0; cfg < rule_set_count(Game::Dice); ++cfg) {
    const RuleSet rs = rule_set_for_index(Game::Dice, cfg);
    for (int a = 1; a <= 6; ++a)
      for (int b = 1; b <= 6; ++b)
        for (int c = 1; c <= 6; ++c) {
          const DiceRoll roll{a, b, c};
          const DiceCategory got = classify_dice(roll, rs);
          ASSERT_EQ(got, oracle_classify(roll, rs))
              << "[" << a << "," << b << "," << c << "] config " << cfg;
          // Label-implies-predicate, brute-forced.
          if (got == DiceCategory::PrimeSum) ASSERT_TRUE(prime_brute(a + b + c));
          if (got == DiceCategory::AllPrimeFaces)
            ASSERT_TRUE(prime_brute(a) && prime_brute(b) && prime_brute(c));
          if (got == DiceCategory::PairWithNeighbor) {
            bool ok = false;
            for (int i = 0; i < 3; ++i) {
              const int x = roll[static_cast<std::size_t>((i + 1) % 3)];
              const int y = roll[static_cast<std::size_t>((i + 2) % 3)];
              if (x == y && std::abs(roll[static_cast<std::size_t>(i)] - x) == 1) ok = true;
            }
            ASSERT_TRUE(ok);
          }
          ++checked;
        }
  }
  EXPECT_EQ(checked, 216 * 36);
}

TEST(DiceClassify, PrecedenceFixtures) {
  // [3,3,3] is a triple of primes: the all-prime-faces label outranks triple.
  const RuleSet both = RuleSet{Game::Dice, {3, 4}, {1, 2}};
  EXPECT_EQ(classify_dice({3, 3, 3}, both), DiceCategory::AllPrimeFaces);
  // Sum 11 is prime: prime-sum outranks everything.
  EXPECT_EQ(classify_dice({3, 3, 5}, both), DiceCategory::PrimeSum);
  // With SR1 off, the same roll is all prime faces.
  EXPECT_EQ(classify_dice({3, 3, 5}, RuleSet{Game::Dice, {3, 4}, {2, 3}}),
            DiceCategory::AllPrimeFaces);
  // A triple is also a pair; the triple rule speaks first when active.
  EXPECT_EQ(classify_dice({4, 4, 4}, RuleSet{Game::Dice, {3, 4}, {3, 4}}),
            DiceCategory::Triple);
  EXPECT_EQ(classify_dice({4, 4, 4}, RuleSet{Game::Dice, {1, 3}, {3, 4}}), DiceCategory::Pair);
  // Inactive categories fall through to totals.
  EXPECT_EQ(classify_dice({4, 4, 4}, RuleSet{Game::Dice, {1, 2}, {3, 4}}),
            DiceCategory::LargeTotal);
}

TEST(DiceClassify, RejectsBadRollsAndWrongGame) {
  const RuleSet rs = rule_set_for_index(Game::Dice, 0);
  EXPECT_THROW(classify_dice({0, 3, 3}, rs), std::invalid_argument);
  EXPECT_THROW(classify_dice({1, 7, 3}, rs), std::invalid_argument);
  EXPECT_THROW(classify_dice({2, 2, 2}, rule_set_for_index(Game::Blackjack, 0)),
               std::invalid_argument);
}

TEST(DiceCompare, TiebreaksWithinTier) {
  const RuleSet rs = RuleSet{Game::Dice, {1, 3}, {3, 4}};
  // Pair value first, then kicker.
  EXPECT_EQ(compare_dice({4, 4, 2}, {3, 3, 6}, rs), Ordering::AWins);
  EXPECT_EQ(compare_dice({4, 4, 2}, {4, 4, 6}, rs), Ordering::BWins);
  EXPECT_EQ(compare_dice({4, 2, 4}, {4, 4, 2}, rs), Ordering::Tie);  // order-insensitive
  // Totals compare by sum.
  const RuleSet totals = RuleSet{Game::Dice, {1, 2}, {1, 2}};
  EXPECT_EQ(compare_dice({1, 2, 3}, {2, 2, 4}, totals), Ordering::BWins);  // 6 < 8
  EXPECT_EQ(compare_dice({6, 6, 4}, {1, 1, 2}, totals), Ordering::AWins);  // large > small
  // Triples by face.
  const RuleSet trip = RuleSet{Game::Dice, {1, 4}, {3, 4}};
  EXPECT_EQ(compare_dice({5, 5, 5}, {2, 2, 2}, trip), Ordering::AWins);
}

TEST(DiceCompare, AntisymmetricOnFullSpace) {
  std::vector<DiceRoll> rolls;
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      for (int c = 1; c <= 6; ++c) rolls.push_back({a, b, c});
  for (std::uint32_t cfg : {0u, 17u, 35u}) {
    const RuleSet rs = rule_set_for_index(Game::Dice, cfg);
    for (const DiceRoll& a : rolls)
      for (const DiceRoll& b : rolls) {
        const Ordering ab = compare_dice(a, b, rs);
        const Ordering ba = compare_dice(b, a, rs);
        if (ab == Ordering::Tie) {
          ASSERT_EQ(ba, Ordering::Tie);
        } else {
          ASSERT_NE(ab, ba);
        }
      }
  }
}

TEST(DiceSingle, WinMeansBeatingTheTotalsTier) {
  const RuleSet rs = RuleSet{Game::Dice, {1, 3}, {1, 2}};
  EXPECT_FALSE(dice_single_win({1, 3, 6}, rs));  // sum 10, small total
  EXPECT_TRUE(dice_single_win({4, 4, 5}, rs));   // pair with NR3 active
  EXPECT_TRUE(dice_single_win({2, 3, 5}, rs));   // all prime faces
  // Same pair, but the pair rule is inactive and no special matches.
  EXPECT_FALSE(dice_single_win({2, 2, 6}, RuleSet{Game::Dice, {1, 2}, {3, 4}}));
}

// ---------------------------------------------------------------------------
// Episodes

TEST(DiceEpisode, AllConfigsBothStylesValidate) {
  for (std::uint32_t cfg = 0; cfg < 36; ++cfg) {
    for (const DiceStyle style : {DiceStyle::Duel, DiceStyle::Single}) {
      const EpisodeSeed seed{61000u + cfg, cfg};
      const Episode ep = generate_tabletop_episode(
          Game::Dice, rule_set_for_index(Game::Dice, cfg), seed, style);
      EXPECT_EQ(ep.observations.size(), 12u);
      EXPECT_EQ(ep.dice_style, style);
      const std::vector<Violation> v = validate_episode(ep);
      EXPECT_TRUE(v.empty()) << (v.empty() ? "" : v.front().invariant + ": " + v.front().detail)
                             << " config " << cfg;
      for (const Observation& o : ep.observations) {
        const DiceObservation& obs = std::get<DiceObservation>(o);
        EXPECT_EQ(obs.duel, style == DiceStyle::Duel);
        if (style == DiceStyle::Duel)
          EXPECT_EQ(compare_dice(obs.roll, obs.dealer_roll, ep.rule_set), obs.winner);
        else
          EXPECT_EQ(dice_single_win(obs.roll, ep.rule_set), obs.win);
      }
    }
  }
}

TEST(DiceEpisode, DeterministicJsonRoundTrip) {
  const RuleSet rs = rule_set_for_index(Game::Dice, 11);
  for (const DiceStyle style : {DiceStyle::Duel, DiceStyle::Single}) {
    const Episode a = generate_tabletop_episode(Game::Dice, rs, EpisodeSeed{8, 11}, style);
    const Episode b = generate_tabletop_episode(Game::Dice, rs, EpisodeSeed{8, 11}, style);
    EXPECT_EQ(episode_to_json(a).dump(), episode_to_json(b).dump());
    EXPECT_EQ(episode_to_json(episode_from_json(episode_to_json(a))).dump(),
              episode_to_json(a).dump());
  }
}

TEST(DiceEpisode, WrongGamePairingThrows) {
  EXPECT_THROW(generate_tabletop_episode(Game::Dice, rule_set_for_index(Game::Holdem, 0),
                                         EpisodeSeed{1, 0}),
               std::invalid_argument);
  EXPECT_THROW(generate_tabletop_episode(Game::Chess, rule_set_for_index(Game::Chess, 0),
                                         EpisodeSeed{1, 0}),
               std::invalid_argument);
}

}  // namespace
}  // namespace rulebench
