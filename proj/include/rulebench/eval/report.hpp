#ifndef RULEBENCH_EVAL_REPORT_HPP
#define RULEBENCH_EVAL_REPORT_HPP

#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rulebench/eval/records.hpp"

namespace rulebench {

struct AccuracyRow {
  Game game = Game::Chess;
  RuleId rule;
  int consistent = 0;
  int total = 0;

  double accuracy() const { return total == 0 ? 0.0 : static_cast<double>(consistent) / total; }
};

// Per-(game, rule) consistency proportions, ordered NR1.. then SR1.. within
// each game so the table reads in pool order.
inline std::vector<AccuracyRow> rule_accuracy(const std::vector<EvalRecord>& records) {
  if (records.empty()) throw std::invalid_argument("rule_accuracy: no records");

  std::map<Game, std::map<RuleId, std::pair<int, int>>> counts;
  for (const EvalRecord& r : records)
    for (const auto& [rule, verdict] : r.per_rule_verdicts) {
      auto& [consistent, total] = counts[r.game][rule];
      ++total;
      if (verdict.decision) ++consistent;
    }

  std::vector<AccuracyRow> rows;
  for (const auto& [game, per_rule] : counts)
    for (const auto& [rule, ct] : per_rule)
      rows.push_back(AccuracyRow{game, rule, ct.first, ct.second});
  return rows;
}

inline std::string accuracy_csv(const std::vector<AccuracyRow>& rows) {
  std::string out = "game,rule,consistent,total,accuracy\n";
  char buf[32];
  for (const AccuracyRow& row : rows) {
    std::snprintf(buf, sizeof buf, "%.6f", row.accuracy());
    out += std::string(game_name(row.game)) + "," + rule_name(row.rule) + "," +
           std::to_string(row.consistent) + "," + std::to_string(row.total) + "," + buf + "\n";
  }
  return out;
}

inline std::string accuracy_text(const std::vector<AccuracyRow>& rows) {
  std::string out;
  char line[128];
  std::snprintf(line, sizeof line, "%-10s %-5s %11s %7s %9s\n", "game", "rule", "consistent",
                "total", "accuracy");
  out += line;
  for (const AccuracyRow& row : rows) {
    std::snprintf(line, sizeof line, "%-10s %-5s %11d %7d %9.6f\n", game_name(row.game),
                  rule_name(row.rule).c_str(), row.consistent, row.total, row.accuracy());
    out += line;
  }
  return out;
}

struct TaxonomyRow {
  Game game = Game::Chess;
  std::string model;
  std::map<std::string, int> counts;  // label -> resolved count
  int total_labeled = 0;              // records contributing to rates
  int unresolved = 0;                 // disagreements without a resolution, excluded
};

// "47.4% (526/1109)"-style cell.
inline std::string taxonomy_cell(int count, int total) {
  char buf[48];
  const double pct = total == 0 ? 0.0 : 100.0 * count / total;
  std::snprintf(buf, sizeof buf, "%.1f%% (%d/%d)", pct, count, total);
  return buf;
}

// Effective label policy: unanimous annotators -> the label; disagreement ->
// the explicit resolution when present, otherwise the trace is excluded and
// counted as unresolved. Records without annotations do not participate.
inline std::vector<TaxonomyRow> taxonomy_report(const std::vector<EvalRecord>& records) {
  std::map<std::pair<Game, std::string>, TaxonomyRow> rows;
  int labeled_anywhere = 0;

  for (const EvalRecord& r : records) {
    if (r.annotations.empty()) continue;
    TaxonomyRow& row = rows[{r.game, r.model_name}];
    row.game = r.game;
    row.model = r.model_name;

    bool unanimous = true;
    for (const TaxonomyAnnotation& a : r.annotations)
      unanimous &= (a.label == r.annotations.front().label);

    std::string label;
    if (unanimous) {
      label = r.annotations.front().label;
    } else if (r.resolution) {
      label = *r.resolution;
      if (!is_taxonomy_label(label))
        throw std::invalid_argument("taxonomy_report: resolution is not a taxonomy label: '" +
                                    label + "'");
    } else {
      ++row.unresolved;
      continue;
    }
    ++row.counts[label];
    ++row.total_labeled;
    ++labeled_anywhere;
  }

  if (labeled_anywhere == 0) throw std::runtime_error("taxonomy_report: no labeled records");

  std::vector<TaxonomyRow> out;
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  return out;
}

inline std::string taxonomy_csv(const std::vector<TaxonomyRow>& rows) {
  std::string out = "game,model,category,count,total,rate\n";
  char buf[32];
  for (const TaxonomyRow& row : rows)
    for (const char* label : kTaxonomyLabels) {
      const auto it = row.counts.find(label);
      const int count = it == row.counts.end() ? 0 : it->second;
      const double rate = row.total_labeled == 0
                              ? 0.0
                              : static_cast<double>(count) / row.total_labeled;
      std::snprintf(buf, sizeof buf, "%.6f", rate);
      out += std::string(game_name(row.game)) + "," + row.model + "," + label + "," +
             std::to_string(count) + "," + std::to_string(row.total_labeled) + "," + buf + "\n";
    }
  return out;
}

inline std::string taxonomy_markdown(const std::vector<TaxonomyRow>& rows) {
  std::string out =
      "| Game | Model | Breakdown | Hallucinated Rule | Overgeneralization | Math Overuse | "
      "Summary | Unresolved |\n"
      "|---|---|---|---|---|---|---|---|\n";
  for (const TaxonomyRow& row : rows) {
    out += "| " + std::string(game_display_name(row.game)) + " | " + row.model + " |";
    for (const char* label : kTaxonomyLabels) {
      const auto it = row.counts.find(label);
      const int count = it == row.counts.end() ? 0 : it->second;
      out += " " + taxonomy_cell(count, row.total_labeled) + " |";
    }
    out += " " + std::to_string(row.unresolved) + " |\n";
  }
  return out;
}

}  // namespace rulebench

#endif  // RULEBENCH_EVAL_REPORT_HPP
