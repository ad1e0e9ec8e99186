#ifndef RULEBENCH_CLI_COMMANDS_HPP
#define RULEBENCH_CLI_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rulebench/chess/generate.hpp"
#include "rulebench/core/fsio.hpp"
#include "rulebench/core/json_io.hpp"
#include "rulebench/eval/client.hpp"
#include "rulebench/eval/judge.hpp"
#include "rulebench/eval/records.hpp"
#include "rulebench/eval/report.hpp"
#include "rulebench/sim/analysis.hpp"
#include "rulebench/sim/sim_io.hpp"
#include "rulebench/tabletop/generate.hpp"
#include "rulebench/text/prompts.hpp"
#include "rulebench/text/transcript.hpp"

// Subcommand front end. Exit codes are part of the contract:
//   0 success, 1 usage error, 2 runtime error, 3 upstream endpoint error.
// All file output goes through write_file_atomic, and a stage that can have
// partial failures writes a <out>.manifest.json enumerating them.

namespace rulebench {

// The CLI binary registers the real httplib-backed factory at startup; tests
// either pass an explicit transport or leave this unset and stay offline.
using TransportFactory = std::function<Transport(std::chrono::seconds)>;

inline TransportFactory& transport_factory() {
  static TransportFactory factory;
  return factory;
}

namespace cli_detail {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitUpstream = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Episode generate_episode(Game game, std::uint32_t config_index, std::uint64_t master_seed,
                                DiceStyle dice_style) {
  const EpisodeSeed seed{master_seed, config_index};
  const RuleSet rs = rule_set_for_index(game, config_index);
  if (game == Game::Chess) return generate_chess_episode(rs, seed);
  return generate_tabletop_episode(game, rs, seed, dice_style);
}

inline std::string transcript_file_name(Game game, std::uint32_t config_index) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03u", config_index);
  return std::string(game_name(game)) + "_" + buf + ".txt";
}

struct FailureNote {
  std::uint32_t config_index = 0;
  std::string error;
};

inline void write_manifest(const std::string& out_path, const std::string& command,
                           std::size_t total, std::size_t succeeded,
                           const std::vector<FailureNote>& failures) {
  nlohmann::json j;
  j["command"] = command;
  j["total"] = total;
  j["succeeded"] = succeeded;
  j["failed"] = failures.size();
  nlohmann::json arr = nlohmann::json::array();
  for (const FailureNote& f : failures)
    arr.push_back({{"config_index", f.config_index}, {"error", f.error}});
  j["failures"] = arr;
  write_file_atomic(out_path + ".manifest.json", j.dump(2) + "\n");
}

inline int cmd_generate(Game game, bool all, std::optional<std::uint32_t> config,
                        std::optional<std::string> range, std::uint64_t seed,
                        const std::string& out_path, const std::string& transcripts_dir,
                        DiceStyle dice_style, std::ostream& out, std::ostream& err) {
  const std::uint32_t count = rule_set_count(game);

  std::uint32_t lo = 0, hi = 0;
  const int selectors = int(all) + int(config.has_value()) + int(range.has_value());
  if (selectors != 1)
    throw UsageError("generate: give exactly one of --all, --config, --range");
  if (all) {
    lo = 0;
    hi = count;
  } else if (config) {
    if (*config >= count)
      throw UsageError("generate: --config out of range (game has " + std::to_string(count) +
                       " configurations)");
    lo = *config;
    hi = *config + 1;
  } else {
    const std::size_t colon = range->find(':');
    if (colon == std::string::npos)
      throw UsageError("generate: --range expects A:B (half-open)");
    try {
      lo = static_cast<std::uint32_t>(std::stoul(range->substr(0, colon)));
      hi = static_cast<std::uint32_t>(std::stoul(range->substr(colon + 1)));
    } catch (const std::exception&) {
      throw UsageError("generate: --range expects numeric A:B");
    }
    if (lo >= hi || hi > count)
      throw UsageError("generate: --range out of bounds (game has " + std::to_string(count) +
                       " configurations)");
  }

  std::string jsonl;
  std::vector<FailureNote> failures;
  std::size_t succeeded = 0;
  for (std::uint32_t i = lo; i < hi; ++i) {
    try {
      const Episode ep = generate_episode(game, i, seed, dice_style);
      jsonl += episode_to_json(ep).dump() + "\n";
      if (!transcripts_dir.empty()) {
        const TranscriptDoc doc = render_transcript(ep);
        const std::filesystem::path path =
            std::filesystem::path(transcripts_dir) / transcript_file_name(game, i);
        write_file_atomic(path.string(), transcript_text(doc) + "\n");
      }
      ++succeeded;
    } catch (const GenerationError& ex) {
      err << "generate: config " << i << " failed: " << ex.what() << "\n";
      failures.push_back(FailureNote{i, ex.what()});
    }
  }

  write_file_atomic(out_path, jsonl);
  write_manifest(out_path, "generate", hi - lo, succeeded, failures);
  out << "wrote " << succeeded << " episode(s) to " << out_path << "\n";
  return failures.empty() ? kExitOk : kExitRuntime;
}

inline int cmd_simulate(const std::string& params_path, std::int64_t trials, std::uint64_t seed,
                        const std::string& out_path, std::ostream& out) {
  if (trials < 1) throw UsageError("simulate: --trials must be >= 1");
  const ReasoningParams params = params_from_json(nlohmann::json::parse(read_file(params_path)));

  const ErrorCurve mc = mc_error_curve(params, trials, seed);
  std::optional<ErrorCurve> closed;
  if (params.alpha.kind == AlphaModel::Kind::Deterministic) closed = closed_form_error(params);

  // Constant-parameter main branch: report the literal optimal-depth formula
  // next to the empirical scan and flag disagreement rather than hide it.
  std::optional<NStarResult> nstar;
  bool constant_gamma = true;
  for (const double g : params.gamma_schedule) constant_gamma &= (g == params.gamma_schedule[0]);
  bool constant_alpha = params.alpha.kind == AlphaModel::Kind::Deterministic;
  if (constant_alpha)
    for (const double a : params.alpha.values) constant_alpha &= (a == params.alpha.values[0]);
  if (constant_gamma && constant_alpha && params.sigma > 0.0 && params.alpha.values[0] > 0.0 &&
      params.alpha.values[0] < 1.0)
    nstar = nstar_formula(params.b0(), params.sigma, params.gamma_schedule[0],
                          params.alpha.values[0]);

  const ErrorCurve& scan = closed ? *closed : mc;
  write_file_atomic(out_path, curve_csv(mc, closed ? &*closed : nullptr));
  write_file_atomic(out_path + ".json",
                    simulation_sidecar(params, trials, seed, scan, nstar ? &*nstar : nullptr)
                            .dump(2) +
                        "\n");

  out << "shape=" << curve_shape_name(scan.shape.kind) << " argmin=" << scan.shape.argmin
      << " sign_changes=" << scan.shape.sign_changes << "\n";
  if (nstar) {
    out << "N_star: formula=" << nstar->n_star << " t_star=" << format_g12(nstar->t_star)
        << (nstar->flagged ? " (flagged)" : "") << " scan_argmin=" << scan.shape.argmin
        << " agreement="
        << ((!nstar->flagged && static_cast<std::size_t>(nstar->n_star) == scan.shape.argmin)
                ? "true"
                : "false")
        << "\n";
  } else {
    out << "N_star: not applicable (requires constant gamma, constant alpha in (0,1), sigma > 0)\n";
  }
  out << "wrote " << out_path << " and " << out_path << ".json\n";
  return kExitOk;
}

inline Transport resolve_transport(const EndpointConfig& cfg, const Transport* override_transport) {
  if (override_transport) return *override_transport;
  TransportFactory& factory = transport_factory();
  if (!factory)
    throw std::runtime_error(
        "no HTTP transport registered; run through the CLI binary or pass a transport");
  return factory(cfg.timeout);
}

inline int cmd_evaluate(const std::string& episodes_path, const std::string& endpoint_path,
                        const std::string& intervention_name_str, const std::string& out_path,
                        const std::string& prompts_out, std::int64_t limit,
                        const Transport* override_transport, std::ostream& out,
                        std::ostream& err) {
  const Intervention iv = intervention_from_name(intervention_name_str);
  const EndpointConfig cfg = endpoint_from_json(nlohmann::json::parse(read_file(endpoint_path)));
  const Transport transport = resolve_transport(cfg, override_transport);
  const std::vector<Episode> episodes = episodes_from_jsonl(read_file(episodes_path));

  std::vector<EvalRecord> records;
  std::vector<PromptBundle> bundles;
  std::vector<FailureNote> failures;
  std::size_t done = 0;
  for (const Episode& ep : episodes) {
    if (limit >= 0 && static_cast<std::int64_t>(done) >= limit) break;
    ++done;

    const TranscriptDoc doc = render_transcript(ep);
    const PromptBundle bundle = build_induction_prompt(doc, iv);
    if (!prompts_out.empty()) bundles.push_back(bundle);

    const ModelReply reply = query_model(cfg, bundle, transport);
    EvalRecord rec;
    rec.episode_seed = ep.seed;
    rec.game = ep.game;
    rec.model_name = cfg.model_name;
    rec.intervention = iv;
    rec.prompt_hash = reply.prompt_hash;
    rec.response_ok = reply.ok;
    if (reply.ok) {
      rec.induced = parse_induced_rule(reply.text);
    } else {
      rec.error = reply.error;
      err << "evaluate: config " << ep.seed.config_index << " failed: " << reply.error << "\n";
      failures.push_back(FailureNote{ep.seed.config_index, reply.error});
    }
    records.push_back(std::move(rec));
  }

  write_file_atomic(out_path, records_to_jsonl(records));
  if (!prompts_out.empty()) write_file_atomic(prompts_out, prompt_bundles_to_jsonl(bundles));
  write_manifest(out_path, "evaluate", records.size(), records.size() - failures.size(),
                 failures);
  out << "wrote " << records.size() << " record(s) to " << out_path << " (" << failures.size()
      << " failed)\n";
  return kExitOk;
}

inline int cmd_judge(const std::string& records_path, const std::string& endpoint_path,
                     const std::string& out_path, const Transport* override_transport,
                     std::ostream& out, std::ostream& err) {
  const EndpointConfig cfg = endpoint_from_json(nlohmann::json::parse(read_file(endpoint_path)));
  const Transport transport = resolve_transport(cfg, override_transport);
  std::vector<EvalRecord> records = records_from_jsonl(read_file(records_path));

  std::vector<FailureNote> skipped;
  for (EvalRecord& rec : records) {
    if (!rec.response_ok || !rec.induced.parse_ok || rec.induced.text.empty()) {
      err << "judge: skipping unjudgeable record (config " << rec.episode_seed.config_index
          << ")\n";
      skipped.push_back(FailureNote{rec.episode_seed.config_index,
                                    rec.response_ok ? "induced rule not parsed" : "no response"});
      continue;
    }
    const RuleSet rs = rule_set_for_index(rec.game, rec.episode_seed.config_index);
    for (const RuleId& rule : rs.all_rules())
      rec.per_rule_verdicts[rule] = judge_rule(cfg, rec.game, rule_text(rule), rec.induced,
                                               transport);
  }

  write_file_atomic(out_path, records_to_jsonl(records));
  write_manifest(out_path, "judge", records.size(), records.size() - skipped.size(), skipped);
  out << "judged " << (records.size() - skipped.size()) << "/" << records.size()
      << " record(s), wrote " << out_path << "\n";
  return kExitOk;
}

inline int cmd_report(const std::string& records_path, const std::string& out_dir,
                      std::ostream& out, std::ostream& err) {
  const std::vector<EvalRecord> records = records_from_jsonl(read_file(records_path));
  const std::filesystem::path dir(out_dir);

  const std::vector<AccuracyRow> rows = rule_accuracy(records);
  write_file_atomic((dir / "accuracy.csv").string(), accuracy_csv(rows));
  write_file_atomic((dir / "accuracy.txt").string(), accuracy_text(rows));
  out << accuracy_text(rows);

  try {
    const std::vector<TaxonomyRow> tax = taxonomy_report(records);
    write_file_atomic((dir / "taxonomy.csv").string(), taxonomy_csv(tax));
    write_file_atomic((dir / "taxonomy.md").string(), taxonomy_markdown(tax));
  } catch (const std::runtime_error& ex) {
    err << "report: taxonomy skipped: " << ex.what() << "\n";
  }
  out << "wrote report to " << out_dir << "\n";
  return kExitOk;
}

}  // namespace cli_detail

// Argument-vector entry point (argv[0] excluded). The optional transport
// override lets tests drive evaluate/judge without sockets.
inline int run_cli(const std::vector<std::string>& args, const Transport* transport_override = nullptr,
                   std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  using namespace cli_detail;

  CLI::App app{"hidden-rule benchmark: generation, simulation, evaluation"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "emit episode JSONL (and transcripts)");
  std::string gen_game;
  bool gen_all = false;
  std::optional<std::uint32_t> gen_config;
  std::optional<std::string> gen_range;
  std::uint64_t gen_seed = 0;
  std::string gen_out = "episodes.jsonl";
  std::string gen_transcripts;
  std::string gen_dice_style = "duel";
  gen->add_option("--game", gen_game, "chess | holdem | dice | blackjack")->required();
  gen->add_flag("--all", gen_all, "generate every rule configuration");
  gen->add_option("--config", gen_config, "single configuration index");
  gen->add_option("--range", gen_range, "half-open configuration range A:B");
  gen->add_option("--seed", gen_seed, "master seed");
  gen->add_option("--out", gen_out, "episode JSONL output path");
  gen->add_option("--transcripts-dir", gen_transcripts, "also write per-episode transcripts here");
  gen->add_option("--dice-style", gen_dice_style, "duel | single (dice only)")
      ->check(CLI::IsMember({"duel", "single"}));

  // simulate
  auto* sim = app.add_subcommand("simulate", "Monte Carlo + closed-form error curves");
  std::string sim_params;
  std::int64_t sim_trials = 10000;
  std::uint64_t sim_seed = 0;
  std::string sim_out = "curve.csv";
  sim->add_option("--params", sim_params, "parameter JSON file")->required();
  sim->add_option("--trials", sim_trials, "Monte Carlo trials");
  sim->add_option("--seed", sim_seed, "master seed");
  sim->add_option("--out", sim_out, "CSV output path (sidecar at <out>.json)");

  // evaluate
  auto* eval = app.add_subcommand("evaluate", "query a model over generated episodes");
  std::string eval_episodes, eval_endpoint, eval_out = "records.jsonl", eval_prompts;
  std::string eval_intervention = "None";
  std::int64_t eval_limit = -1;
  eval->add_option("--episodes", eval_episodes, "episode JSONL")->required();
  eval->add_option("--endpoint", eval_endpoint, "endpoint config JSON")->required();
  eval->add_option("--intervention", eval_intervention,
                   "None | Decomposition | Solving | Summarization | Combined");
  eval->add_option("--out", eval_out, "EvalRecord JSONL output path");
  eval->add_option("--prompts-out", eval_prompts, "also write the prompt bundles (JSONL audit)");
  eval->add_option("--limit", eval_limit, "stop after this many episodes");

  // judge
  auto* judge = app.add_subcommand("judge", "majority-vote judging of induced rules");
  std::string judge_records, judge_endpoint, judge_out = "judged.jsonl";
  judge->add_option("--records", judge_records, "EvalRecord JSONL")->required();
  judge->add_option("--endpoint", judge_endpoint, "judge endpoint config JSON")->required();
  judge->add_option("--out", judge_out, "judged JSONL output path");

  // report
  auto* report = app.add_subcommand("report", "accuracy and taxonomy tables");
  std::string report_records, report_dir = ".";
  report->add_option("--records", report_records, "judged EvalRecord JSONL")->required();
  report->add_option("--out-dir", report_dir, "output directory");

  std::vector<const char*> argv;
  argv.push_back("rulebench");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      return cmd_generate(game_from_name(gen_game), gen_all, gen_config, gen_range, gen_seed,
                          gen_out, gen_transcripts,
                          gen_dice_style == "single" ? DiceStyle::Single : DiceStyle::Duel, out,
                          err);
    }
    if (sim->parsed()) return cmd_simulate(sim_params, sim_trials, sim_seed, sim_out, out);
    if (eval->parsed())
      return cmd_evaluate(eval_episodes, eval_endpoint, eval_intervention, eval_out, eval_prompts,
                          eval_limit, transport_override, out, err);
    if (judge->parsed())
      return cmd_judge(judge_records, judge_endpoint, judge_out, transport_override, out, err);
    if (report->parsed()) return cmd_report(report_records, report_dir, out, err);
  } catch (const UsageError& ex) {
    err << ex.what() << "\n";
    return kExitUsage;
  } catch (const AuthError& ex) {
    err << "auth: " << ex.what() << "\n";
    return kExitUpstream;
  } catch (const CLI::ValidationError& ex) {
    err << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace rulebench

#endif  // RULEBENCH_CLI_COMMANDS_HPP
