#pragma once
// Playing cards shared by the hold'em and blackjack modules.
//
// Ranks are numeric 1..13 with the ace low (A=1); parity and primality tests
// operate on these values directly.  Suits order spades, hearts, diamonds,
// clubs, which also defines the deterministic tie order when sorting cards of
// equal rank.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rulebench {

enum class Suit : std::uint8_t { Spades = 0, Hearts = 1, Diamonds = 2, Clubs = 3 };

struct Card {
  int rank = 1;  // 1..13, ace = 1
  Suit suit = Suit::Spades;

  friend bool operator==(const Card&, const Card&) = default;
  friend auto operator<=>(const Card&, const Card&) = default;
};

inline bool is_red(Suit s) { return s == Suit::Hearts || s == Suit::Diamonds; }

// Unicode glyphs as printed in transcripts.
inline const char* suit_glyph(Suit s) {
  switch (s) {
    case Suit::Spades: return "♠";
    case Suit::Hearts: return "♥";
    case Suit::Diamonds: return "♦";
    case Suit::Clubs: return "♣";
  }
  throw std::logic_error("suit_glyph: bad suit");
}

inline std::string rank_symbol(int rank) {
  switch (rank) {
    case 1: return "A";
    case 11: return "J";
    case 12: return "Q";
    case 13: return "K";
    default:
      if (rank < 2 || rank > 10) throw std::invalid_argument("rank_symbol: rank out of range");
      return std::to_string(rank);
  }
}

// "A♠", "10♥", ...
inline std::string card_to_string(const Card& c) { return rank_symbol(c.rank) + suit_glyph(c.suit); }

inline Card card_from_string(const std::string& s) {
  static const std::array<const char*, 4> glyphs = {"♠", "♥", "♦", "♣"};
  for (std::size_t g = 0; g < glyphs.size(); ++g) {
    const std::string glyph = glyphs[g];
    if (s.size() > glyph.size() && s.compare(s.size() - glyph.size(), glyph.size(), glyph) == 0) {
      const std::string sym = s.substr(0, s.size() - glyph.size());
      int rank = 0;
      if (sym == "A") rank = 1;
      else if (sym == "J") rank = 11;
      else if (sym == "Q") rank = 12;
      else if (sym == "K") rank = 13;
      else rank = std::stoi(sym);
      if (rank < 1 || rank > 13) throw std::invalid_argument("card_from_string: bad rank");
      return Card{rank, static_cast<Suit>(g)};
    }
  }
  throw std::invalid_argument("card_from_string: unparseable card '" + s + "'");
}

// 52 cards, rank-major, suit order as declared.
inline std::vector<Card> full_deck() {
  std::vector<Card> deck;
  deck.reserve(52);
  for (int r = 1; r <= 13; ++r)
    for (int s = 0; s < 4; ++s) deck.push_back(Card{r, static_cast<Suit>(s)});
  return deck;
}

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace rulebench
