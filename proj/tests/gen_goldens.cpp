// Regenerates every frozen fixture under tests/golden/ from the pinned
// inputs in golden_config.hpp. Run manually after an intentional format or
// generator change, review the diff, and commit the files; the test suites
// and the acceptance binary compare against these bytes.

#include <iostream>
#include <string>

#include "rulebench/chess/generate.hpp"
#include "rulebench/core/fsio.hpp"
#include "rulebench/core/json_io.hpp"
#include "rulebench/sim/curves.hpp"
#include "rulebench/sim/sim_io.hpp"
#include "rulebench/tabletop/generate.hpp"
#include "rulebench/text/prompts.hpp"
#include "rulebench/text/templates.hpp"
#include "rulebench/text/transcript.hpp"

#include "golden_config.hpp"

namespace rulebench {
namespace {

void put(const std::string& rel, const std::string& bytes) {
  const std::string path = std::string(RULEBENCH_GOLDEN_DIR) + "/" + rel;
  write_file_atomic(path, bytes);
  std::cout << "wrote " << path << " (" << bytes.size() << " bytes)\n";
}

int run() {
  using namespace testutil;

  put("templates/induction.txt", kInductionTemplate);
  put("templates/decomposition.txt", kDecompositionTemplate);
  put("templates/solving.txt", kSolvingTemplate);
  put("templates/summarization.txt", kSummarizationTemplate);
  put("templates/judge.txt", kJudgeTemplate);

  const Episode chess = generate_chess_episode(
      rule_set_for_index(Game::Chess, kGoldenChessConfig), golden_seed(kGoldenChessConfig));
  put("transcripts/chess.txt", transcript_text(render_transcript(chess)));
  put("episodes/chess.json", episode_to_json(chess).dump(2) + "\n");

  const Episode holdem = generate_tabletop_episode(
      Game::Holdem, rule_set_for_index(Game::Holdem, kGoldenHoldemConfig),
      golden_seed(kGoldenHoldemConfig));
  put("transcripts/holdem.txt", transcript_text(render_transcript(holdem)));
  put("episodes/holdem.json", episode_to_json(holdem).dump(2) + "\n");

  const RuleSet dice_rs = rule_set_for_index(Game::Dice, kGoldenDiceConfig);
  const Episode dice_duel =
      generate_tabletop_episode(Game::Dice, dice_rs, golden_seed(kGoldenDiceConfig));
  put("transcripts/dice_duel.txt", transcript_text(render_transcript(dice_duel)));
  put("episodes/dice.json", episode_to_json(dice_duel).dump(2) + "\n");
  const Episode dice_single = generate_tabletop_episode(
      Game::Dice, dice_rs, golden_seed(kGoldenDiceConfig), DiceStyle::Single);
  put("transcripts/dice_single.txt", transcript_text(render_transcript(dice_single)));

  const Episode blackjack = generate_tabletop_episode(
      Game::Blackjack, rule_set_for_index(Game::Blackjack, kGoldenBlackjackConfig),
      golden_seed(kGoldenBlackjackConfig));
  put("transcripts/blackjack.txt", transcript_text(render_transcript(blackjack)));
  put("episodes/blackjack.json", episode_to_json(blackjack).dump(2) + "\n");

  const PromptBundle none =
      build_induction_prompt(render_transcript(dice_duel), Intervention::None);
  put("prompts/induction_none.txt", none.prompt_text());

  const ReasoningParams params = golden_sim_params();
  const ErrorCurve mc = mc_error_curve(params, kGoldenSimTrials, kGoldenSimSeed);
  const ErrorCurve closed = closed_form_error(params);
  put("sim/curve.csv", curve_csv(mc, &closed));

  return 0;
}

}  // namespace
}  // namespace rulebench

int main() {
  try {
    return rulebench::run();
  } catch (const std::exception& ex) {
    std::cerr << "gen_goldens: " << ex.what() << "\n";
    return 1;
  }
}
