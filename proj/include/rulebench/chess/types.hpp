#pragma once
// Board, squares, pieces, and the chess move record.
//
// The board is square, size 8..15, with at most one piece per square.  Each
// side fields one piece of each of the 8 types, and a type's movement rule is
// shared across sides.  Red's forward direction is increasing rank, Black's
// is decreasing; files render a..o and ranks 1..15 ("m14" style).

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rulebench {

enum class Side { Red, Black };

inline const char* side_name(Side s) { return s == Side::Red ? "Red" : "Black"; }

inline Side side_from_name(const std::string& s) {
  if (s == "Red") return Side::Red;
  if (s == "Black") return Side::Black;
  throw std::invalid_argument("side_from_name: unknown side '" + s + "'");
}

inline Side opponent(Side s) { return s == Side::Red ? Side::Black : Side::Red; }

// +1 for Red, -1 for Black; NR4's "forward" and SR3's "downward" are
// side-relative through this.
inline int forward(Side s) { return s == Side::Red ? 1 : -1; }

inline constexpr int kPieceTypeCount = 8;

// Display names for piece types 1..8.  The names are cosmetic; the episode's
// shuffled type-to-rule binding is what carries the hidden rule.
inline const char* piece_type_name(int type) {
  static const char* const names[kPieceTypeCount] = {
      "King", "Queen", "Rook", "Bishop", "Knight", "Pawn", "Archbishop", "Chancellor"};
  if (type < 1 || type > kPieceTypeCount)
    throw std::invalid_argument("piece_type_name: type out of [1,8]");
  return names[type - 1];
}

inline int piece_type_from_name(const std::string& name) {
  for (int t = 1; t <= kPieceTypeCount; ++t)
    if (name == piece_type_name(t)) return t;
  throw std::invalid_argument("piece_type_from_name: unknown piece '" + name + "'");
}

struct Square {
  int file = 0;
  int rank = 0;

  friend bool operator==(const Square&, const Square&) = default;
  friend auto operator<=>(const Square&, const Square&) = default;
};

// "a1".."o15"
inline std::string square_name(const Square& sq) {
  if (sq.file < 0 || sq.file > 14 || sq.rank < 0 || sq.rank > 14)
    throw std::invalid_argument("square_name: square outside the a1..o15 range");
  return std::string(1, static_cast<char>('a' + sq.file)) + std::to_string(sq.rank + 1);
}

inline Square square_from_name(const std::string& s) {
  if (s.size() < 2 || s[0] < 'a' || s[0] > 'o')
    throw std::invalid_argument("square_from_name: bad square '" + s + "'");
  const int file = s[0] - 'a';
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("square_from_name: bad square '" + s + "'");
    rank = rank * 10 + (s[i] - '0');
  }
  if (rank < 1 || rank > 15) throw std::invalid_argument("square_from_name: bad square '" + s + "'");
  return Square{file, rank - 1};
}

struct Piece {
  Side side = Side::Red;
  int type = 1;  // 1..8

  friend bool operator==(const Piece&, const Piece&) = default;
};

class Board {
 public:
  explicit Board(int size) : size_(size) {
    if (size < 8 || size > 15) throw std::invalid_argument("Board: size out of [8,15]");
    squares_.resize(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
  }

  int size() const { return size_; }

  bool in_bounds(const Square& sq) const {
    return sq.file >= 0 && sq.file < size_ && sq.rank >= 0 && sq.rank < size_;
  }

  const std::optional<Piece>& at(const Square& sq) const { return squares_[index(sq)]; }

  void put(const Square& sq, const Piece& p) {
    auto& slot = squares_[index(sq)];
    if (slot) throw std::invalid_argument("Board::put: square already occupied");
    slot = p;
  }

  void remove(const Square& sq) { squares_[index(sq)].reset(); }

  int piece_count() const {
    int n = 0;
    for (const auto& s : squares_)
      if (s) ++n;
    return n;
  }

  // Location of one (side, type) piece, if on the board.  Each side fields at
  // most one piece per type, so the answer is unique.
  std::optional<Square> find(Side side, int type) const {
    for (int f = 0; f < size_; ++f)
      for (int r = 0; r < size_; ++r) {
        const Square sq{f, r};
        const auto& p = at(sq);
        if (p && p->side == side && p->type == type) return sq;
      }
    return std::nullopt;
  }

 private:
  std::size_t index(const Square& sq) const {
    if (!in_bounds(sq)) throw std::invalid_argument("Board: square out of bounds");
    return static_cast<std::size_t>(sq.rank) * static_cast<std::size_t>(size_) +
           static_cast<std::size_t>(sq.file);
  }

  int size_;
  std::vector<std::optional<Piece>> squares_;
};

enum class SpecialEffect { Swap, MirrorJump };

inline const char* special_effect_name(SpecialEffect e) {
  return e == SpecialEffect::Swap ? "swap" : "mirror_jump";
}

inline SpecialEffect special_effect_from_name(const std::string& s) {
  if (s == "swap") return SpecialEffect::Swap;
  if (s == "mirror_jump") return SpecialEffect::MirrorJump;
  throw std::invalid_argument("special_effect_from_name: unknown effect '" + s + "'");
}

struct ChessMove {
  int round = 1;
  Side side = Side::Red;
  int piece_type = 1;
  Square from;
  Square to;
  std::optional<Piece> capture;               // the piece removed, if any
  std::optional<SpecialEffect> special_effect;

  friend bool operator==(const ChessMove&, const ChessMove&) = default;
};

struct ChessPlacement {
  Side side = Side::Red;
  int piece_type = 1;
  Square square;

  friend bool operator==(const ChessPlacement&, const ChessPlacement&) = default;
};

struct ChessSetup {
  int size = 8;
  std::vector<ChessPlacement> placement;  // 16 entries, Red types 1..8 then Black

  friend bool operator==(const ChessSetup&, const ChessSetup&) = default;
};

inline Board board_from_setup(const ChessSetup& setup) {
  Board b(setup.size);
  for (const ChessPlacement& p : setup.placement)
    b.put(p.square, Piece{p.side, p.piece_type});
  return b;
}

}  // namespace rulebench
