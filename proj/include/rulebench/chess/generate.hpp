#pragma once
// Chess episode generation.
//
// Each episode plays exactly 12 rounds (24 half-moves, Red then Black), the
// one round count under which all 8 piece types can move at least 3 times;
// the generator gives each type exactly 3 moves by splitting it 2/1 or 1/2
// across the sides (4 types each way).  A piece with scheduled moves left is
// protected from capture so the schedule stays satisfiable; pieces whose
// moves are spent become fair game.
//
// Generation is attempt-based: every attempt draws a fresh board size,
// placement, type-to-rule binding, and schedule from its own derived stream,
// then plays the schedule out, locally reordering a side's remaining entries
// when the next scheduled piece has no legal move.  An attempt with a fully
// stuck side fails; persistent failure raises GenerationError.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rulebench/chess/moves.hpp"
#include "rulebench/chess/types.hpp"
#include "rulebench/core/episode.hpp"
#include "rulebench/core/rng.hpp"
#include "rulebench/core/rules.hpp"

namespace rulebench {

namespace chess_gen_detail {

inline constexpr int kRounds = 12;
inline constexpr int kMovesPerType = 3;
inline constexpr int kAttempts = 64;

struct PieceRuntime {
  Square sq;
  bool alive = true;
  int remaining = kMovesPerType;  // scheduled half-moves left, both sides pooled per (side,type)
};

inline std::optional<Episode> try_attempt(const RuleSet& rule_set, const EpisodeSeed& seed,
                                          Stream s) {
  const int size = static_cast<int>(s.uniform_int(8, 15));

  // Bind the 4+4 active rules to the 8 piece types, fresh every episode.
  const std::vector<RuleId> rules = rule_set.all_rules();
  std::vector<int> types{1, 2, 3, 4, 5, 6, 7, 8};
  s.shuffle(types);
  std::map<int, RuleId> rule_of;
  for (std::size_t i = 0; i < types.size(); ++i) rule_of.emplace(types[i], rules[i]);

  // Collision-free random placement of both sides' 16 pieces.
  std::vector<Square> squares;
  squares.reserve(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
  for (int f = 0; f < size; ++f)
    for (int r = 0; r < size; ++r) squares.push_back(Square{f, r});
  s.shuffle(squares);

  ChessSetup setup;
  setup.size = size;
  Board board(size);
  std::map<std::pair<int, int>, PieceRuntime> pieces;  // (side, type) -> runtime
  int next_square = 0;
  for (const Side side : {Side::Red, Side::Black})
    for (int type = 1; type <= kPieceTypeCount; ++type) {
      const Square sq = squares[static_cast<std::size_t>(next_square++)];
      board.put(sq, Piece{side, type});
      setup.placement.push_back(ChessPlacement{side, type, sq});
      pieces[{side == Side::Red ? 0 : 1, type}] = PieceRuntime{sq, true, 0};
    }

  // Per-side schedules: each type moves 3 times in total, split 2/1 for the
  // first 4 types of a shuffled order and 1/2 for the rest, so both sides
  // play exactly 12 half-moves.
  std::vector<int> split_order{1, 2, 3, 4, 5, 6, 7, 8};
  s.shuffle(split_order);
  std::vector<int> red_entries;
  std::vector<int> black_entries;
  for (std::size_t i = 0; i < split_order.size(); ++i) {
    const int type = split_order[i];
    const int red_count = i < 4 ? 2 : 1;
    for (int k = 0; k < red_count; ++k) red_entries.push_back(type);
    for (int k = 0; k < kMovesPerType - red_count; ++k) black_entries.push_back(type);
  }
  s.shuffle(red_entries);
  s.shuffle(black_entries);
  for (const Side side : {Side::Red, Side::Black}) {
    const auto& entries = side == Side::Red ? red_entries : black_entries;
    const int key = side == Side::Red ? 0 : 1;
    for (const int type : entries) ++pieces[{key, type}].remaining;
  }

  std::vector<Observation> moves;
  for (int half = 0; half < 2 * kRounds; ++half) {
    const Side side = half % 2 == 0 ? Side::Red : Side::Black;
    const int key = side == Side::Red ? 0 : 1;
    auto& entries = side == Side::Red ? red_entries : black_entries;
    const std::size_t slot = static_cast<std::size_t>(half / 2);

    // Find the first remaining entry whose piece can move; pull it forward.
    std::optional<std::size_t> chosen;
    std::vector<MoveTarget> targets;
    for (std::size_t j = slot; j < entries.size(); ++j) {
      const PieceRuntime& pr = pieces[{key, entries[j]}];
      std::vector<MoveTarget> candidates;
      for (const MoveTarget& t : legal_targets(rule_of.at(entries[j]), board, pr.sq)) {
        if (t.effect != SpecialEffect::Swap) {
          const auto& occupant = board.at(t.to);
          // Keep scheduled pieces alive: capture only spent enemy pieces.
          if (occupant && pieces[{occupant->side == Side::Red ? 0 : 1, occupant->type}].remaining > 0)
            continue;
        }
        candidates.push_back(t);
      }
      if (!candidates.empty()) {
        chosen = j;
        targets = std::move(candidates);
        break;
      }
    }
    if (!chosen) return std::nullopt;  // side fully stuck, retry attempt
    std::swap(entries[slot], entries[*chosen]);
    const int type = entries[slot];
    PieceRuntime& pr = pieces[{key, type}];

    const std::size_t pick =
        static_cast<std::size_t>(s.uniform_int(0, static_cast<std::int64_t>(targets.size()) - 1));
    const MoveTarget& target = targets[pick];

    ChessMove mv;
    mv.round = half / 2 + 1;
    mv.side = side;
    mv.piece_type = type;
    mv.from = pr.sq;
    mv.to = target.to;
    mv.special_effect = target.effect;
    const auto& occupant = board.at(target.to);
    if (occupant && target.effect != SpecialEffect::Swap) mv.capture = *occupant;

    if (target.effect == SpecialEffect::Swap) {
      PieceRuntime& partner = pieces[{occupant->side == Side::Red ? 0 : 1, occupant->type}];
      partner.sq = pr.sq;
    } else if (mv.capture) {
      PieceRuntime& victim = pieces[{occupant->side == Side::Red ? 0 : 1, occupant->type}];
      victim.alive = false;
    }
    apply_move(board, mv);
    pr.sq = target.to;
    --pr.remaining;
    moves.push_back(mv);
  }

  Episode ep;
  ep.seed = seed;
  ep.game = Game::Chess;
  ep.rule_set = rule_set;
  ep.board = setup;
  ep.observations = std::move(moves);
  for (int type = 1; type <= kPieceTypeCount; ++type)
    ep.ground_truth.emplace_back(piece_type_name(type), rule_of.at(type));
  return ep;
}

}  // namespace chess_gen_detail

inline Episode generate_chess_episode(const RuleSet& rule_set, const EpisodeSeed& seed) {
  if (rule_set.game != Game::Chess)
    throw std::invalid_argument("generate_chess_episode: rule set is not a chess rule set");
  validate_rule_set(rule_set);
  for (int attempt = 0; attempt < chess_gen_detail::kAttempts; ++attempt) {
    Stream s = derive_stream(seed, "chess/attempt/" + std::to_string(attempt));
    if (auto ep = chess_gen_detail::try_attempt(rule_set, seed, std::move(s))) return *ep;
  }
  throw GenerationError("unsatisfiable schedule", seed);
}

}  // namespace rulebench
