#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gasket/address.hpp"
#include "gasket/approx.hpp"
#include "gasket/letters.hpp"

namespace gasket {

// Eventually periodic letter sequence head . block^infinity (block never
// empty).  Not every stream has one; when present it makes exact reasoning
// about tails possible.
struct PeriodicTail {
  std::vector<Letter> head;
  std::vector<Letter> block;

  friend bool operator==(const PeriodicTail&, const PeriodicTail&) = default;
};

// Normal form of a periodic descriptor: block shrunk to its primitive
// period, trailing head letters absorbed into the block, and an eventually
// constant tail rewritten to the lexicographically smaller of its two glued
// expansions (a.b^inf rather than b.a^inf, and so on).
PeriodicTail canonical_tail(const PeriodicTail& tail);

// An infinite address: a point of the completed address space.  Letters come
// from a stateful provider and are memoized monotonically behind a mutex, so
// prefixes are computed once and the provider may be arbitrarily expensive.
class AddressStream {
 public:
  // Provider is called once per index, in order.
  static AddressStream from_stepper(std::function<Letter()> step);
  static AddressStream from_tail(PeriodicTail tail);
  static AddressStream constant(Letter m);

  Letter at(std::size_t i) const;
  std::vector<Letter> prefix(std::size_t n) const;

  // Descriptor of the tail when the stream was built from one.
  const std::optional<PeriodicTail>& tail() const { return tail_; }

 private:
  struct State;
  AddressStream(std::shared_ptr<State> state, std::optional<PeriodicTail> tail)
      : state_(std::move(state)), tail_(std::move(tail)) {}

  std::shared_ptr<State> state_;
  std::optional<PeriodicTail> tail_;
};

// The distinguished points of the completion: T = a^inf, L = b^inf, R = c^inf.
AddressStream corner_stream(Corner z);

// A finite address as the stream that stays at its point: the word followed
// by letter_of(corner) forever.
AddressStream lift(const Address& x);

// First n letters as a finite address ending in T.  Moves the point by at
// most 2^-n.
Address truncate_stream(const AddressStream& p, std::size_t n);

// Certified distance in the completion: exact distance of depth-n
// truncations with enclosure radius 2^(2-n), where n is the smallest depth
// with 2^(2-n) <= tol.  Deeper recomputations always land inside the
// enclosure.  Throws for tol <= 0 or tol below 2^-48.
ApproxReal stream_distance(const AddressStream& p, const AddressStream& q,
                           double tol);

// Head letter and remaining stream.
std::pair<Letter, AddressStream> split_head(const AddressStream& p);

// Inverse of split_head.
AddressStream prepend_stream(Letter m, const AddressStream& p);

// "ab(c)" = head ab, block c; "abc:L" lifts the finite address.  Throws
// std::invalid_argument on malformed input.
AddressStream parse_stream(const std::string& text);

std::string format_tail(const PeriodicTail& tail);

}  // namespace gasket
