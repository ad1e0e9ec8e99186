#ifndef RULEBENCH_EVAL_JUDGE_HPP
#define RULEBENCH_EVAL_JUDGE_HPP

#include <array>
#include <string>

#include "rulebench/core/rules.hpp"
#include "rulebench/eval/client.hpp"
#include "rulebench/text/prompts.hpp"

namespace rulebench {

struct JudgeVerdict {
  std::array<bool, 3> votes{};              // true = consistent
  bool decision = false;                    // majority: >= 2 true votes
  std::array<std::string, 3> raw_judge_outputs{};
  std::array<bool, 3> parse_flags{};        // false = vote was not parseable

  friend bool operator==(const JudgeVerdict&, const JudgeVerdict&) = default;
};

struct JudgeVote {
  bool yes = false;
  bool parsed = false;
};

// Votes key on the mandated reply prefixes. Anything else is a conservative
// No with the parse flag cleared, so judge flakiness can only depress
// accuracy, never inflate it.
inline JudgeVote parse_judge_vote(const std::string& raw) {
  std::size_t i = 0;
  while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r' || raw[i] == '\n'))
    ++i;
  const std::string body = raw.substr(i);
  JudgeVote v;
  if (body.rfind("Yes,", 0) == 0) {
    v.yes = true;
    v.parsed = true;
  } else if (body.rfind("No,", 0) == 0) {
    v.yes = false;
    v.parsed = true;
  }
  return v;
}

// Three independent judge calls; the per-vote cache salt keeps them from
// collapsing into one cached completion while still making re-runs free.
inline JudgeVerdict judge_rule(const EndpointConfig& cfg_judge, Game game,
                               const std::string& ground_truth_rule, const InducedRule& induced,
                               const Transport& transport) {
  const std::string prompt = build_judge_prompt(game, ground_truth_rule, induced);

  JudgeVerdict verdict;
  int yes_count = 0;
  for (int i = 0; i < 3; ++i) {
    const ModelReply reply = query_text(cfg_judge, prompt, cfg_judge.max_output_tokens, transport,
                                        "vote:" + std::to_string(i));
    verdict.raw_judge_outputs[static_cast<std::size_t>(i)] = reply.ok ? reply.text : reply.error;
    JudgeVote vote;                       // failed calls count as unparsed No
    if (reply.ok) vote = parse_judge_vote(reply.text);
    verdict.votes[static_cast<std::size_t>(i)] = vote.yes;
    verdict.parse_flags[static_cast<std::size_t>(i)] = vote.parsed;
    if (vote.yes) ++yes_count;
  }
  verdict.decision = yes_count >= 2;
  return verdict;
}

}  // namespace rulebench

#endif  // RULEBENCH_EVAL_JUDGE_HPP
