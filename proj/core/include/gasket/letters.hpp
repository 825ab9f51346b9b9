#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

namespace gasket {

// The three copy labels of the gluing construction, ordered a < b < c.
enum class Letter : std::uint8_t { a = 0, b = 1, c = 2 };

// The three distinguished corners, ordered T < L < R.
// Geometrically: T = top, L = bottom left, R = bottom right.
enum class Corner : std::uint8_t { T = 0, L = 1, R = 2 };

constexpr std::array<Letter, 3> all_letters{Letter::a, Letter::b, Letter::c};
constexpr std::array<Corner, 3> all_corners{Corner::T, Corner::L, Corner::R};

constexpr std::size_t index(Letter m) { return static_cast<std::size_t>(m); }
constexpr std::size_t index(Corner z) { return static_cast<std::size_t>(z); }

// Copy that carries each corner of the glued space: T sits in copy a,
// L in copy b, R in copy c.
constexpr Letter letter_of(Corner z) { return static_cast<Letter>(index(z)); }

// Corner carried by each copy (inverse of letter_of).
constexpr Corner corner_of(Letter m) { return static_cast<Corner>(index(m)); }

char to_char(Letter m);
char to_char(Corner z);
std::optional<Letter> letter_from_char(char ch);
std::optional<Corner> corner_from_char(char ch);

// The three identifications that glue the copies together:
//   (b,T) ~ (a,L),  (a,R) ~ (c,T),  (c,L) ~ (b,R).
// Each copy/corner combination other than (a,T), (b,L), (c,R) appears in
// exactly one of them.
struct GluedPair {
  Letter first_letter;
  Corner first_corner;
  Letter second_letter;
  Corner second_corner;
};

const std::array<GluedPair, 3>& glued_pairs();

// Partner of a copy/corner combination under the gluing, if any.  The three
// unglued combinations (a,T), (b,L), (c,R) are the outer corners.
std::optional<std::pair<Letter, Corner>> glued_partner(Letter m, Corner z);

bool is_glued(Letter m, Corner z);

// Corners realizing the direct identification between two distinct copies:
// the corner of copy m1 that is glued onto a corner of copy m2, and that
// corner of m2.  E.g. direct_corners(a, b) = (L, T) because (a,L) ~ (b,T).
std::pair<Corner, Corner> direct_corners(Letter m1, Letter m2);

// Corners through which copies m1 and m2 each touch the remaining third
// copy; a route between them via that copy crosses it corner to corner at
// cost exactly 1.  E.g. via_corners(a, b) = (R, R).
std::pair<Corner, Corner> via_corners(Letter m1, Letter m2);

// Discrete distance between corners: 0 if equal, 1 otherwise.
constexpr int corner_gap(Corner x, Corner y) { return x == y ? 0 : 1; }

}  // namespace gasket
