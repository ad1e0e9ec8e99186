#pragma once
// Episode JSON serialization (one object per line, JSONL).
//
// Top-level fields are a stable contract: seed, game, rule_set,
// observations, ground_truth, generator_version, plus "board" for chess and
// "dice_style" for dice.  Cards serialize as rank symbol + suit glyph
// ("10♥"), squares as algebraic names ("m14"), piece types by name.
// nlohmann::json keeps object keys sorted, so serialization is byte-stable.

#include <string>
#include <vector>

#include <json.hpp>

#include "rulebench/core/episode.hpp"
#include "rulebench/core/fsio.hpp"

namespace rulebench {

using json = nlohmann::json;

inline json card_to_json(const Card& c) { return card_to_string(c); }

inline Card card_from_json(const json& j) { return card_from_string(j.get<std::string>()); }

namespace json_detail {

template <std::size_t N>
inline json cards_to_json(const std::array<Card, N>& cards) {
  json arr = json::array();
  for (const Card& c : cards) arr.push_back(card_to_string(c));
  return arr;
}

template <std::size_t N>
inline std::array<Card, N> cards_from_json(const json& arr) {
  if (!arr.is_array() || arr.size() != N)
    throw std::invalid_argument("episode json: wrong card count");
  std::array<Card, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = card_from_string(arr[i].get<std::string>());
  return out;
}

inline json roll_to_json(const DiceRoll& r) { return json::array({r[0], r[1], r[2]}); }

inline DiceRoll roll_from_json(const json& arr) {
  if (!arr.is_array() || arr.size() != 3) throw std::invalid_argument("episode json: bad roll");
  return DiceRoll{arr[0].get<int>(), arr[1].get<int>(), arr[2].get<int>()};
}

inline const char* winner_tag(Ordering o) {
  switch (o) {
    case Ordering::AWins: return "a";
    case Ordering::BWins: return "b";
    case Ordering::Tie: return "tie";
  }
  throw std::logic_error("winner_tag: bad ordering");
}

inline Ordering winner_from_tag(const std::string& s) {
  if (s == "a") return Ordering::AWins;
  if (s == "b") return Ordering::BWins;
  if (s == "tie") return Ordering::Tie;
  throw std::invalid_argument("episode json: bad winner tag '" + s + "'");
}

inline json observation_to_json(const Observation& obs) {
  json j;
  if (const auto* mv = std::get_if<ChessMove>(&obs)) {
    j["round"] = mv->round;
    j["side"] = side_name(mv->side);
    j["piece_type"] = piece_type_name(mv->piece_type);
    j["from"] = square_name(mv->from);
    j["to"] = square_name(mv->to);
    if (mv->capture)
      j["capture"] = {{"side", side_name(mv->capture->side)},
                      {"piece_type", piece_type_name(mv->capture->type)}};
    if (mv->special_effect) j["special_effect"] = special_effect_name(*mv->special_effect);
    return j;
  }
  if (const auto* h = std::get_if<HoldemObservation>(&obs)) {
    j["hole_a"] = cards_to_json(h->hole_a);
    j["hole_b"] = cards_to_json(h->hole_b);
    j["board"] = cards_to_json(h->board);
    j["winner"] = winner_tag(h->winner);
    j["winning_category"] = holdem_category_id(h->winning_category);
    return j;
  }
  if (const auto* d = std::get_if<DiceObservation>(&obs)) {
    if (d->duel) {
      j["roll_a"] = roll_to_json(d->roll);
      j["roll_b"] = roll_to_json(d->dealer_roll);
      j["winner"] = winner_tag(d->winner);
    } else {
      j["roll"] = roll_to_json(d->roll);
      j["label"] = d->win ? "win" : "lose";
    }
    return j;
  }
  const auto& b = std::get<BlackjackObservation>(obs);
  const BlackjackHand dh = make_blackjack_hand(b.dealer);
  j["player_cards"] = cards_to_json(b.player);
  j["total"] = b.total;
  j["bust"] = b.bust;
  j["ace_as_eleven"] = b.ace_as_eleven;
  j["dealer_summary"] =
      dh.bust ? std::string("Bust") : "Total " + std::to_string(dh.resolved_total);
  j["dealer_cards"] = cards_to_json(b.dealer);
  j["outcome"] = b.outcome == BlackjackOutcome::PlayerWins
                     ? "win"
                     : b.outcome == BlackjackOutcome::DealerWins ? "lose" : "tie";
  j["reason"] = blackjack_reason_name(b.reason);
  return j;
}

inline Observation observation_from_json(Game game, const json& j) {
  switch (game) {
    case Game::Chess: {
      ChessMove mv;
      mv.round = j.at("round").get<int>();
      mv.side = side_from_name(j.at("side").get<std::string>());
      mv.piece_type = piece_type_from_name(j.at("piece_type").get<std::string>());
      mv.from = square_from_name(j.at("from").get<std::string>());
      mv.to = square_from_name(j.at("to").get<std::string>());
      if (j.contains("capture"))
        mv.capture = Piece{side_from_name(j.at("capture").at("side").get<std::string>()),
                           piece_type_from_name(j.at("capture").at("piece_type").get<std::string>())};
      if (j.contains("special_effect"))
        mv.special_effect = special_effect_from_name(j.at("special_effect").get<std::string>());
      return mv;
    }
    case Game::Holdem: {
      HoldemObservation h;
      h.hole_a = cards_from_json<2>(j.at("hole_a"));
      h.hole_b = cards_from_json<2>(j.at("hole_b"));
      h.board = cards_from_json<5>(j.at("board"));
      h.winner = winner_from_tag(j.at("winner").get<std::string>());
      h.winning_category = holdem_label_from_id(j.at("winning_category").get<std::string>());
      return h;
    }
    case Game::Dice: {
      DiceObservation d;
      if (j.contains("roll_a")) {
        d.duel = true;
        d.roll = roll_from_json(j.at("roll_a"));
        d.dealer_roll = roll_from_json(j.at("roll_b"));
        d.winner = winner_from_tag(j.at("winner").get<std::string>());
      } else {
        d.duel = false;
        d.roll = roll_from_json(j.at("roll"));
        d.win = j.at("label").get<std::string>() == "win";
      }
      return d;
    }
    case Game::Blackjack: {
      BlackjackObservation b;
      b.player = cards_from_json<5>(j.at("player_cards"));
      b.dealer = cards_from_json<5>(j.at("dealer_cards"));
      b.total = j.at("total").get<int>();
      b.bust = j.at("bust").get<bool>();
      b.ace_as_eleven = j.at("ace_as_eleven").get<bool>();
      const std::string outcome = j.at("outcome").get<std::string>();
      b.outcome = outcome == "win" ? BlackjackOutcome::PlayerWins
                  : outcome == "lose" ? BlackjackOutcome::DealerWins
                                      : BlackjackOutcome::Tie;
      b.reason = blackjack_reason_from_name(j.at("reason").get<std::string>());
      return b;
    }
  }
  throw std::logic_error("observation_from_json: bad game");
}

}  // namespace json_detail

inline json seed_to_json(const EpisodeSeed& seed) {
  return json{{"master_seed", seed.master_seed},
              {"config_index", seed.config_index},
              {"generator_version", seed.generator_version},
              {"rng_algorithm", seed.rng_algorithm}};
}

inline EpisodeSeed seed_from_json(const json& j) {
  EpisodeSeed seed;
  seed.master_seed = j.at("master_seed").get<std::uint64_t>();
  seed.config_index = j.at("config_index").get<std::uint32_t>();
  seed.generator_version = j.at("generator_version").get<std::string>();
  seed.rng_algorithm = j.at("rng_algorithm").get<std::string>();
  return seed;
}

inline json episode_to_json(const Episode& ep) {
  json j;
  j["seed"] = seed_to_json(ep.seed);
  j["game"] = game_name(ep.game);
  j["rule_set"] = {{"normal", ep.rule_set.normals}, {"special", ep.rule_set.specials}};
  if (ep.game == Game::Chess && ep.board) {
    json placement = json::array();
    for (const ChessPlacement& p : ep.board->placement)
      placement.push_back({{"side", side_name(p.side)},
                           {"piece_type", piece_type_name(p.piece_type)},
                           {"square", square_name(p.square)}});
    j["board"] = {{"size", ep.board->size}, {"initial_placement", placement}};
  }
  if (ep.game == Game::Dice)
    j["dice_style"] = ep.dice_style == DiceStyle::Duel ? "duel" : "single";
  json obs = json::array();
  for (const Observation& o : ep.observations) obs.push_back(json_detail::observation_to_json(o));
  j["observations"] = obs;
  json truth = json::object();
  for (const auto& [entity, rule] : ep.ground_truth) truth[entity] = rule_name(rule);
  j["ground_truth"] = truth;
  j["generator_version"] = kGeneratorVersion;
  return j;
}

inline Episode episode_from_json(const json& j) {
  Episode ep;
  ep.seed = seed_from_json(j.at("seed"));
  ep.game = game_from_name(j.at("game").get<std::string>());
  ep.rule_set.game = ep.game;
  ep.rule_set.normals = j.at("rule_set").at("normal").get<std::vector<int>>();
  ep.rule_set.specials = j.at("rule_set").at("special").get<std::vector<int>>();
  if (j.contains("board")) {
    ChessSetup setup;
    setup.size = j.at("board").at("size").get<int>();
    for (const json& p : j.at("board").at("initial_placement"))
      setup.placement.push_back(
          ChessPlacement{side_from_name(p.at("side").get<std::string>()),
                         piece_type_from_name(p.at("piece_type").get<std::string>()),
                         square_from_name(p.at("square").get<std::string>())});
    ep.board = setup;
  }
  if (j.contains("dice_style"))
    ep.dice_style =
        j.at("dice_style").get<std::string>() == "single" ? DiceStyle::Single : DiceStyle::Duel;
  for (const json& o : j.at("observations"))
    ep.observations.push_back(json_detail::observation_from_json(ep.game, o));
  for (const auto& [entity, name] : j.at("ground_truth").items())
    ep.ground_truth.emplace_back(entity, rule_from_name(ep.game, name.get<std::string>()));
  return ep;
}

inline std::string episodes_to_jsonl(const std::vector<Episode>& episodes) {
  std::string out;
  for (const Episode& ep : episodes) {
    out += episode_to_json(ep).dump();
    out += "\n";
  }
  return out;
}

inline std::vector<Episode> episodes_from_jsonl(const std::string& text) {
  std::vector<Episode> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    const std::string line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    out.push_back(episode_from_json(json::parse(line)));
  }
  return out;
}

}  // namespace rulebench
