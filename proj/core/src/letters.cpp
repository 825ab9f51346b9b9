#include "gasket/letters.hpp"

namespace gasket {

char to_char(Letter m) {
  switch (m) {
    case Letter::a: return 'a';
    case Letter::b: return 'b';
    case Letter::c: return 'c';
  }
  return '?';
}

char to_char(Corner z) {
  switch (z) {
    case Corner::T: return 'T';
    case Corner::L: return 'L';
    case Corner::R: return 'R';
  }
  return '?';
}

std::optional<Letter> letter_from_char(char ch) {
  switch (ch) {
    case 'a': return Letter::a;
    case 'b': return Letter::b;
    case 'c': return Letter::c;
    default: return std::nullopt;
  }
}

std::optional<Corner> corner_from_char(char ch) {
  switch (ch) {
    case 'T': return Corner::T;
    case 'L': return Corner::L;
    case 'R': return Corner::R;
    default: return std::nullopt;
  }
}

const std::array<GluedPair, 3>& glued_pairs() {
  static const std::array<GluedPair, 3> pairs{{
      {Letter::b, Corner::T, Letter::a, Corner::L},
      {Letter::a, Corner::R, Letter::c, Corner::T},
      {Letter::c, Corner::L, Letter::b, Corner::R},
  }};
  return pairs;
}

std::optional<std::pair<Letter, Corner>> glued_partner(Letter m, Corner z) {
  for (const auto& p : glued_pairs()) {
    if (p.first_letter == m && p.first_corner == z) {
      return std::make_pair(p.second_letter, p.second_corner);
    }
    if (p.second_letter == m && p.second_corner == z) {
      return std::make_pair(p.first_letter, p.first_corner);
    }
  }
  return std::nullopt;
}

bool is_glued(Letter m, Corner z) { return glued_partner(m, z).has_value(); }

std::pair<Corner, Corner> direct_corners(Letter m1, Letter m2) {
  for (const auto& p : glued_pairs()) {
    if (p.first_letter == m1 && p.second_letter == m2) {
      return {p.first_corner, p.second_corner};
    }
    if (p.second_letter == m1 && p.first_letter == m2) {
      return {p.second_corner, p.first_corner};
    }
  }
  // Unreachable for distinct letters: every unordered pair of copies is
  // identified along exactly one glued pair.
  return {Corner::T, Corner::T};
}

std::pair<Corner, Corner> via_corners(Letter m1, Letter m2) {
  // The third copy is the one named by neither m1 nor m2.
  const auto third = static_cast<Letter>(3 - index(m1) - index(m2));
  const auto [u1, unused1] = direct_corners(m1, third);
  const auto [u2, unused2] = direct_corners(m2, third);
  (void)unused1;
  (void)unused2;
  return {u1, u2};
}

}  // namespace gasket
