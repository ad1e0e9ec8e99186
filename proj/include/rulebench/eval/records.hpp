#ifndef RULEBENCH_EVAL_RECORDS_HPP
#define RULEBENCH_EVAL_RECORDS_HPP

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rulebench/core/json_io.hpp"
#include "rulebench/core/rules.hpp"
#include "rulebench/eval/judge.hpp"
#include "rulebench/text/prompts.hpp"

namespace rulebench {

// Fixed error-taxonomy vocabulary. Labels are human-entered; nothing in the
// pipeline classifies traces automatically.
inline constexpr const char* kTaxonomyLabels[] = {
    "Breakdown", "Solving:HallucinatedRule", "Solving:Overgeneralization",
    "Solving:MathOveruse", "Summary"};

inline bool is_taxonomy_label(const std::string& label) {
  for (const char* known : kTaxonomyLabels)
    if (label == known) return true;
  return false;
}

struct TaxonomyAnnotation {
  std::string annotator;
  std::string label;  // one of kTaxonomyLabels

  friend bool operator==(const TaxonomyAnnotation&, const TaxonomyAnnotation&) = default;
};

// One model call over one episode, with everything needed to re-audit it.
// Never contains credentials: the prompt hash commits to the prompt, and
// headers are not recorded anywhere.
struct EvalRecord {
  EpisodeSeed episode_seed;
  Game game = Game::Chess;
  std::string model_name;
  Intervention intervention = Intervention::None;
  std::string prompt_hash;
  bool response_ok = false;
  std::string error;  // set when response_ok is false
  InducedRule induced;
  std::map<RuleId, JudgeVerdict> per_rule_verdicts;  // keys within the active rule set
  std::vector<TaxonomyAnnotation> annotations;
  std::optional<std::string> resolution;  // label after annotator disagreement
};

inline nlohmann::json record_to_json(const EvalRecord& r) {
  nlohmann::json j;
  j["episode_seed"] = seed_to_json(r.episode_seed);
  j["game"] = game_name(r.game);
  j["model_name"] = r.model_name;
  j["intervention"] = intervention_name(r.intervention);
  j["prompt_hash"] = r.prompt_hash;
  j["response_ok"] = r.response_ok;
  if (!r.error.empty()) j["error"] = r.error;
  j["raw_response"] = r.induced.raw_response;
  j["induced_rule"] = r.induced.text;
  j["parse_ok"] = r.induced.parse_ok;

  nlohmann::json verdicts = nlohmann::json::object();
  for (const auto& [rule, verdict] : r.per_rule_verdicts) {
    nlohmann::json v;
    v["votes"] = verdict.votes;
    v["decision"] = verdict.decision;
    v["raw_judge_outputs"] = verdict.raw_judge_outputs;
    v["parse_flags"] = verdict.parse_flags;
    verdicts[rule_name(rule)] = v;
  }
  j["per_rule_verdicts"] = verdicts;

  nlohmann::json annotations = nlohmann::json::array();
  for (const TaxonomyAnnotation& a : r.annotations)
    annotations.push_back({{"annotator", a.annotator}, {"label", a.label}});
  j["annotations"] = annotations;
  j["resolution"] = r.resolution ? nlohmann::json(*r.resolution) : nlohmann::json(nullptr);
  return j;
}

inline EvalRecord record_from_json(const nlohmann::json& j) {
  EvalRecord r;
  r.episode_seed = seed_from_json(j.at("episode_seed"));
  r.game = game_from_name(j.at("game").get<std::string>());
  r.model_name = j.at("model_name").get<std::string>();
  r.intervention = intervention_from_name(j.at("intervention").get<std::string>());
  r.prompt_hash = j.at("prompt_hash").get<std::string>();
  r.response_ok = j.at("response_ok").get<bool>();
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  r.induced.raw_response = j.at("raw_response").get<std::string>();
  r.induced.text = j.at("induced_rule").get<std::string>();
  r.induced.parse_ok = j.at("parse_ok").get<bool>();

  for (const auto& [name, v] : j.at("per_rule_verdicts").items()) {
    JudgeVerdict verdict;
    verdict.votes = v.at("votes").get<std::array<bool, 3>>();
    verdict.decision = v.at("decision").get<bool>();
    verdict.raw_judge_outputs = v.at("raw_judge_outputs").get<std::array<std::string, 3>>();
    verdict.parse_flags = v.at("parse_flags").get<std::array<bool, 3>>();
    r.per_rule_verdicts[rule_from_name(r.game, name)] = verdict;
  }

  for (const nlohmann::json& a : j.at("annotations")) {
    TaxonomyAnnotation ann{a.at("annotator").get<std::string>(), a.at("label").get<std::string>()};
    if (!is_taxonomy_label(ann.label))
      throw std::invalid_argument("record_from_json: unknown taxonomy label '" + ann.label + "'");
    r.annotations.push_back(std::move(ann));
  }
  if (j.contains("resolution") && !j.at("resolution").is_null())
    r.resolution = j.at("resolution").get<std::string>();
  return r;
}

inline std::string records_to_jsonl(const std::vector<EvalRecord>& records) {
  std::string out;
  for (const EvalRecord& r : records) out += record_to_json(r).dump() + "\n";
  return out;
}

inline std::vector<EvalRecord> records_from_jsonl(const std::string& text) {
  std::vector<EvalRecord> records;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    records.push_back(record_from_json(nlohmann::json::parse(line)));
  }
  return records;
}

}  // namespace rulebench

#endif  // RULEBENCH_EVAL_RECORDS_HPP
