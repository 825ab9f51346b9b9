#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gasket/letters.hpp"

namespace gasket {

// A finite address: a word over {a,b,c} naming nested copies, ending in a
// corner of the innermost copy.  Written "abc:L"; the empty word is ":T".
//
// Two addresses of the same length denote the same point exactly when one
// rewrites into the other along a gluing (see glue_position); each class has
// at most two members and the lexicographically smaller one is canonical.
struct Address {
  std::vector<Letter> word;
  Corner corner = Corner::T;

  std::size_t level() const { return word.size(); }

  friend bool operator==(const Address&, const Address&) = default;
  friend std::strong_ordering operator<=>(const Address& x, const Address& y);
};

// Level-0 address of a distinguished corner.
Address corner_address(Corner z);

// Corner of the level-n space as a level-n address: T -> a^n:T, etc.
Address padded_corner(Corner z, std::size_t level);

// The unique position at which the address can be rewritten along a gluing,
// if any.  Position i qualifies when every letter after i equals
// letter_of(corner) and (word[i], corner) is a glued combination; at most
// one position can qualify because the trailing-run combination itself is
// never glued.
std::optional<std::size_t> glue_position(const Address& x);

// The other member of x's equivalence class, if the class has two.
std::optional<Address> glued_variant(const Address& x);

bool is_canonical(const Address& x);

// Lexicographically least member of x's class (letters a<b<c, corners T<L<R).
Address canonicalize(const Address& x);

// Same point of the address space, after padding the shorter input to the
// longer one's level.
bool equivalent(const Address& x, const Address& y);

// Extend x to the given level without moving the point: appends
// letter_of(corner) and keeps the corner.  Throws if level < x.level().
Address pad(const Address& x, std::size_t level);

// Canonical form of m prepended to x; one application of the algebra
// structure map to x at level n yields a level n+1 address.
Address prepend(Letter m, const Address& x);

inline constexpr std::size_t kEnumerationCap = 12;

// All canonical addresses of exactly the given level, in lexicographic
// order.  Sizes follow count(n+1) = 3*count(n) - 3: 3, 6, 15, 42, ...
// Throws for level > cap.
std::vector<Address> enumerate_addresses(std::size_t level,
                                         std::size_t cap = kEnumerationCap);

// Number of canonical addresses at a level, without materializing them.
std::size_t canonical_count(std::size_t level);

std::string format_address(const Address& x);

// Inverse of format_address; accepts "abc:L" and ":T".  Throws
// std::invalid_argument on malformed input.
Address parse_address(const std::string& text);

}  // namespace gasket
