#pragma once
// Movement semantics for the twelve chess rules.
//
// Conventions shared by all rules:
//   - A destination must be on-board and empty or enemy-occupied, except SR5
//     swap targets, which must be occupied (either side) and merely trade
//     places with the mover.
//   - Sliding legs (NR3, NR5, the straight/diagonal segments of SR1/SR2/SR6)
//     need every intermediate square empty; fixed-offset legs (NR2, NR4, NR6,
//     SR3's three-square leg) jump over whatever is in between.
//   - Compound rules land their first leg on an empty square (the pivot)
//     before shifting; only the final destination may capture.
//   - The mover never ends on its own origin square.
//
// legal_targets reports each distinct (destination, effect) once, with a
// pivot witness for compound paths (segment end for SR1/SR2/SR3/SR6, blocker
// square for SR4) so tests can replay the decomposition.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rulebench/chess/types.hpp"
#include "rulebench/core/rules.hpp"

namespace rulebench {

struct MoveTarget {
  Square to;
  std::optional<SpecialEffect> effect;
  std::optional<Square> pivot;

  friend bool operator==(const MoveTarget&, const MoveTarget&) = default;
};

namespace chess_detail {

inline constexpr int kOrtho[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
inline constexpr int kDiag[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
inline constexpr int kAll8[8][2] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                                    {1, 1},  {1, -1}, {-1, 1}, {-1, -1}};
inline constexpr int kKnight[8][2] = {{1, 2},  {2, 1},  {-1, 2},  {-2, 1},
                                      {1, -2}, {2, -1}, {-1, -2}, {-2, -1}};

inline Square offset(const Square& sq, int df, int dr) {
  return Square{sq.file + df, sq.rank + dr};
}

inline bool empty_or_enemy(const Board& b, const Square& sq, Side mover) {
  const auto& p = b.at(sq);
  return !p || p->side != mover;
}

// Destinations of a sliding leg from `from` along (df,dr): squares with all
// intermediates empty, each destination empty or enemy.
inline void slide(const Board& b, const Square& from, Side mover, int df, int dr,
                  std::vector<MoveTarget>& out) {
  Square sq = offset(from, df, dr);
  while (b.in_bounds(sq)) {
    const auto& p = b.at(sq);
    if (!p) {
      out.push_back(MoveTarget{sq, std::nullopt, std::nullopt});
    } else {
      if (p->side != mover) out.push_back(MoveTarget{sq, std::nullopt, std::nullopt});
      break;
    }
    sq = offset(sq, df, dr);
  }
}

// Empty squares reachable by a sliding leg (pivot candidates for compound
// rules; a blocked square ends the scan and is not itself a pivot).
inline void slide_pivots(const Board& b, const Square& from, int df, int dr,
                         std::vector<Square>& out) {
  Square sq = offset(from, df, dr);
  while (b.in_bounds(sq) && !b.at(sq)) {
    out.push_back(sq);
    sq = offset(sq, df, dr);
  }
}

inline void add_unique(std::vector<MoveTarget>& out, const MoveTarget& t) {
  for (const MoveTarget& existing : out)
    if (existing.to == t.to && existing.effect == t.effect) return;
  out.push_back(t);
}

}  // namespace chess_detail

inline std::vector<MoveTarget> legal_targets(const RuleId& rule, const Board& board,
                                             const Square& from) {
  using namespace chess_detail;
  if (rule.game != Game::Chess) throw std::invalid_argument("legal_targets: wrong game");
  const auto& mover = board.at(from);
  if (!mover) throw std::invalid_argument("legal_targets: from square unoccupied");
  const Side side = mover->side;

  std::vector<MoveTarget> out;
  const auto add_simple = [&](const Square& to) {
    if (board.in_bounds(to) && to != from && empty_or_enemy(board, to, side))
      add_unique(out, MoveTarget{to, std::nullopt, std::nullopt});
  };
  const auto add_compound = [&](const Square& pivot, const Square& to) {
    if (board.in_bounds(to) && to != from && empty_or_enemy(board, to, side))
      add_unique(out, MoveTarget{to, std::nullopt, pivot});
  };

  if (rule.kind == RuleKind::Normal) {
    switch (rule.index) {
      case 1:  // one square, any direction
        for (const auto& d : kAll8) add_simple(offset(from, d[0], d[1]));
        break;
      case 2:  // knight jump
        for (const auto& d : kKnight) add_simple(offset(from, d[0], d[1]));
        break;
      case 3:  // diagonal slide
        for (const auto& d : kDiag) slide(board, from, side, d[0], d[1], out);
        break;
      case 4:  // exactly two squares forward
        add_simple(offset(from, 0, 2 * forward(side)));
        break;
      case 5:  // orthogonal slide
        for (const auto& d : kOrtho) slide(board, from, side, d[0], d[1], out);
        break;
      case 6:  // exactly two squares diagonally
        for (const auto& d : kDiag) add_simple(offset(from, 2 * d[0], 2 * d[1]));
        break;
      default: throw std::invalid_argument("legal_targets: bad rule index");
    }
    std::sort(out.begin(), out.end(), [](const MoveTarget& a, const MoveTarget& b) {
      return std::pair(a.to.file, a.to.rank) < std::pair(b.to.file, b.to.rank);
    });
    return out;
  }

  switch (rule.index) {
    case 1: {  // straight segment, then vertical shift of two
      for (const auto& d : kOrtho) {
        std::vector<Square> pivots;
        slide_pivots(board, from, d[0], d[1], pivots);
        for (const Square& pv : pivots)
          for (const int dy : {2, -2}) add_compound(pv, offset(pv, 0, dy));
      }
      break;
    }
    case 2: {  // diagonal segment, then two squares along a perpendicular diagonal
      for (const auto& d : kDiag) {
        std::vector<Square> pivots;
        slide_pivots(board, from, d[0], d[1], pivots);
        for (const Square& pv : pivots) {
          add_compound(pv, offset(pv, 2 * d[0], -2 * d[1]));
          add_compound(pv, offset(pv, -2 * d[0], 2 * d[1]));
        }
      }
      break;
    }
    case 3: {  // three-square orthogonal jump, then one square downward
      for (const auto& d : kOrtho) {
        const Square pv = offset(from, 3 * d[0], 3 * d[1]);
        if (!board.in_bounds(pv) || board.at(pv)) continue;
        add_compound(pv, offset(pv, 0, -forward(side)));
      }
      break;
    }
    case 4: {  // mirror jump across the nearest blocker on each ray
      for (const auto& d : kAll8) {
        for (int t = 1;; ++t) {
          const Square blocker = offset(from, t * d[0], t * d[1]);
          if (!board.in_bounds(blocker)) break;
          if (!board.at(blocker)) continue;
          const Square to = offset(from, 2 * t * d[0], 2 * t * d[1]);
          if (board.in_bounds(to) && empty_or_enemy(board, to, side))
            add_unique(out, MoveTarget{to, SpecialEffect::MirrorJump, blocker});
          break;  // only the nearest blocker counts
        }
      }
      break;
    }
    case 5: {  // swap with any occupied square within Chebyshev distance 3
      for (int df = -3; df <= 3; ++df)
        for (int dr = -3; dr <= 3; ++dr) {
          if (df == 0 && dr == 0) continue;
          const Square to = offset(from, df, dr);
          if (board.in_bounds(to) && board.at(to))
            add_unique(out, MoveTarget{to, SpecialEffect::Swap, std::nullopt});
        }
      break;
    }
    case 6: {  // straight segment, then one diagonal step
      for (const auto& d : kOrtho) {
        std::vector<Square> pivots;
        slide_pivots(board, from, d[0], d[1], pivots);
        for (const Square& pv : pivots)
          for (const auto& dd : kDiag) add_compound(pv, offset(pv, dd[0], dd[1]));
      }
      break;
    }
    default: throw std::invalid_argument("legal_targets: bad rule index");
  }
  std::sort(out.begin(), out.end(), [](const MoveTarget& a, const MoveTarget& b) {
    return std::pair(a.to.file, a.to.rank) < std::pair(b.to.file, b.to.rank);
  });
  return out;
}

inline bool is_legal(const RuleId& rule, const Board& board, const ChessMove& mv) {
  const auto& p = board.at(mv.from);
  if (!p || p->side != mv.side || p->type != mv.piece_type)
    throw std::invalid_argument("is_legal: from square does not hold the moving piece");
  for (const MoveTarget& t : legal_targets(rule, board, mv.from))
    if (t.to == mv.to && t.effect == mv.special_effect) return true;
  return false;
}

// Applies a move to the board.  Throws when the board state contradicts the
// move record (wrong mover, bad capture, swap without a partner).
inline void apply_move(Board& board, const ChessMove& mv) {
  const auto mover = board.at(mv.from);
  if (!mover || mover->side != mv.side || mover->type != mv.piece_type)
    throw std::invalid_argument("apply_move: from square does not hold the moving piece");
  const auto occupant = board.at(mv.to);
  if (mv.special_effect == SpecialEffect::Swap) {
    if (!occupant) throw std::invalid_argument("apply_move: swap without a partner");
    if (mv.capture) throw std::invalid_argument("apply_move: swap cannot capture");
    board.remove(mv.from);
    board.remove(mv.to);
    board.put(mv.to, *mover);
    board.put(mv.from, *occupant);
    return;
  }
  if (occupant) {
    if (occupant->side == mv.side)
      throw std::invalid_argument("apply_move: destination held by own piece");
    if (!mv.capture || !(*mv.capture == *occupant))
      throw std::invalid_argument("apply_move: capture record does not match board");
    board.remove(mv.to);
  } else if (mv.capture) {
    throw std::invalid_argument("apply_move: capture recorded on empty destination");
  }
  board.remove(mv.from);
  board.put(mv.to, *mover);
}

}  // namespace rulebench
