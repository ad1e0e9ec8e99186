#ifndef RULEBENCH_TEXT_PROMPTS_HPP
#define RULEBENCH_TEXT_PROMPTS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rulebench/core/json_io.hpp"
#include "rulebench/core/rules.hpp"
#include "rulebench/text/templates.hpp"
#include "rulebench/text/transcript.hpp"

namespace rulebench {

enum class Intervention { None, Decomposition, Solving, Summarization, Combined };

inline constexpr Intervention kAllInterventions[] = {
    Intervention::None, Intervention::Decomposition, Intervention::Solving,
    Intervention::Summarization, Intervention::Combined};

inline const char* intervention_name(Intervention iv) {
  switch (iv) {
    case Intervention::None: return "None";
    case Intervention::Decomposition: return "Decomposition";
    case Intervention::Solving: return "Solving";
    case Intervention::Summarization: return "Summarization";
    case Intervention::Combined: return "Combined";
  }
  throw std::logic_error("intervention_name: bad intervention");
}

inline Intervention intervention_from_name(const std::string& name) {
  for (const Intervention iv : kAllInterventions)
    if (name == intervention_name(iv)) return iv;
  throw std::invalid_argument("intervention_from_name: unknown intervention '" + name + "'");
}

struct PromptBundle {
  std::string preamble;     // intervention scaffold text, empty for None
  TranscriptDoc transcript;
  std::string instruction;  // induction template with the transcript spliced in
  Intervention intervention = Intervention::None;
  std::optional<int> max_output_tokens;  // nullopt = unlimited

  std::string prompt_text() const {
    return preamble.empty() ? instruction : preamble + "\n\n" + instruction;
  }
};

inline PromptBundle build_induction_prompt(const TranscriptDoc& doc, Intervention iv) {
  PromptBundle bundle;
  bundle.transcript = doc;
  bundle.intervention = iv;

  std::string body = kInductionTemplate;
  const std::string marker = kTranscriptMarker;
  const std::size_t pos = body.find(marker);
  if (pos == std::string::npos)
    throw std::logic_error("build_induction_prompt: transcript marker missing from template");
  body.replace(pos, marker.size(), transcript_text(doc));
  bundle.instruction = std::move(body);

  switch (iv) {
    case Intervention::None:
      break;
    case Intervention::Decomposition:
      bundle.preamble = kDecompositionTemplate;
      break;
    case Intervention::Solving:
      bundle.preamble = kSolvingTemplate;
      break;
    case Intervention::Summarization:
      bundle.preamble = kSummarizationTemplate;
      bundle.max_output_tokens = kSummarizationTokenCap;
      break;
    case Intervention::Combined:
      bundle.preamble = std::string(kDecompositionTemplate) + "\n\n" + kSolvingTemplate + "\n\n" +
                        kSummarizationTemplate;
      bundle.max_output_tokens = kSummarizationTokenCap;
      break;
  }
  return bundle;
}

struct InducedRule {
  std::string text;          // content after the final "Induced Rule:" marker
  std::string raw_response;  // untouched model output
  bool parse_ok = false;
};

// Chain-of-thought outputs often restate the format line mid-reasoning, so
// the *last* marker wins. Parse failure is data, not an error.
inline InducedRule parse_induced_rule(const std::string& raw) {
  InducedRule out;
  out.raw_response = raw;
  static const std::string marker = "Induced Rule:";
  const std::size_t pos = raw.rfind(marker);
  if (pos == std::string::npos) return out;
  std::string text = raw.substr(pos + marker.size());
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  const std::size_t last = text.find_last_not_of(" \t\r\n");
  out.text = (first == std::string::npos) ? "" : text.substr(first, last - first + 1);
  out.parse_ok = true;
  return out;
}

inline std::string build_judge_prompt(Game game, const std::string& ground_truth_rule,
                                      const InducedRule& induced) {
  if (!induced.parse_ok || induced.text.empty())
    throw std::invalid_argument("build_judge_prompt: induced rule missing or unparsed");

  std::string out = kJudgeTemplate;
  const auto substitute = [&out](const std::string& placeholder, const std::string& value) {
    const std::size_t pos = out.find(placeholder);
    if (pos == std::string::npos)
      throw std::logic_error("build_judge_prompt: placeholder missing: " + placeholder);
    out.replace(pos, placeholder.size(), value);
  };
  substitute("[GAME TYPE]", game_display_name(game));
  substitute("[INSERT TRUE RULE]", ground_truth_rule);
  substitute("[INSERT MODEL RULE]", induced.text);
  return out;
}

// Audit-trail serialization; one JSON object per line.
inline json prompt_bundle_to_json(const PromptBundle& bundle) {
  json j;
  j["episode_seed"] = seed_to_json(bundle.transcript.episode_ref);
  j["intervention"] = intervention_name(bundle.intervention);
  j["prompt_text"] = bundle.prompt_text();
  j["max_output_tokens"] =
      bundle.max_output_tokens ? json(*bundle.max_output_tokens) : json(nullptr);
  return j;
}

inline std::string prompt_bundles_to_jsonl(const std::vector<PromptBundle>& bundles) {
  std::string out;
  for (const PromptBundle& b : bundles) out += prompt_bundle_to_json(b).dump() + "\n";
  return out;
}

}  // namespace rulebench

#endif  // RULEBENCH_TEXT_PROMPTS_HPP
