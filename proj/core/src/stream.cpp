#include "gasket/stream.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "gasket/metric.hpp"

namespace gasket {

struct AddressStream::State {
  std::mutex mu;
  std::vector<Letter> memo;
  std::function<Letter()> step;
};

AddressStream AddressStream::from_stepper(std::function<Letter()> step) {
  auto state = std::make_shared<State>();
  state->step = std::move(step);
  return AddressStream(std::move(state), std::nullopt);
}

AddressStream AddressStream::from_tail(PeriodicTail tail) {
  if (tail.block.empty()) {
    throw std::invalid_argument("AddressStream: empty periodic block");
  }
  // Store the canonical spelling so that the two expansions of a glued
  // point become the same descriptor (and identical letter sequences).
  tail = canonical_tail(tail);
  auto state = std::make_shared<State>();
  auto shared = std::make_shared<PeriodicTail>(tail);
  auto* raw = state.get();
  state->step = [shared, raw]() {
    const std::size_t i = raw->memo.size();
    if (i < shared->head.size()) return shared->head[i];
    return shared->block[(i - shared->head.size()) % shared->block.size()];
  };
  return AddressStream(std::move(state), std::move(tail));
}

AddressStream AddressStream::constant(Letter m) {
  return from_tail(PeriodicTail{{}, {m}});
}

Letter AddressStream::at(std::size_t i) const { return prefix(i + 1)[i]; }

std::vector<Letter> AddressStream::prefix(std::size_t n) const {
  std::scoped_lock lock(state_->mu);
  while (state_->memo.size() < n) state_->memo.push_back(state_->step());
  return {state_->memo.begin(),
          state_->memo.begin() + static_cast<std::ptrdiff_t>(n)};
}

AddressStream corner_stream(Corner z) {
  return AddressStream::constant(letter_of(z));
}

AddressStream lift(const Address& x) {
  return AddressStream::from_tail(
      PeriodicTail{x.word, {letter_of(x.corner)}});
}

Address truncate_stream(const AddressStream& p, std::size_t n) {
  return Address{p.prefix(n), Corner::T};
}

ApproxReal stream_distance(const AddressStream& p, const AddressStream& q,
                           double tol) {
  if (!(tol > 0)) {
    throw std::invalid_argument("stream_distance: tolerance must be positive");
  }
  if (tol < std::ldexp(1.0, -48)) {
    throw std::invalid_argument("stream_distance: tolerance too small");
  }
  int n = 0;
  while (std::ldexp(4.0, -n) > tol) ++n;
  const Dyadic exact =
      address_distance(truncate_stream(p, static_cast<std::size_t>(n)),
                       truncate_stream(q, static_cast<std::size_t>(n)));
  return {exact.to_double(), std::ldexp(4.0, -n)};
}

std::pair<Letter, AddressStream> split_head(const AddressStream& p) {
  const Letter head = p.at(0);
  if (p.tail()) {
    // Shift the descriptor so the tail stays available downstream.
    PeriodicTail tail = *p.tail();
    if (!tail.head.empty()) {
      tail.head.erase(tail.head.begin());
    } else {
      std::rotate(tail.block.begin(), tail.block.begin() + 1,
                  tail.block.end());
    }
    return {head, AddressStream::from_tail(std::move(tail))};
  }
  AddressStream source = p;
  auto counter = std::make_shared<std::size_t>(0);
  return {head, AddressStream::from_stepper([source, counter]() {
            return source.at(1 + (*counter)++);
          })};
}

AddressStream prepend_stream(Letter m, const AddressStream& p) {
  if (p.tail()) {
    PeriodicTail tail = *p.tail();
    tail.head.insert(tail.head.begin(), m);
    return AddressStream::from_tail(std::move(tail));
  }
  AddressStream source = p;
  auto counter = std::make_shared<std::size_t>(0);
  return AddressStream::from_stepper([m, source, counter]() {
    const std::size_t i = (*counter)++;
    return i == 0 ? m : source.at(i - 1);
  });
}

PeriodicTail canonical_tail(const PeriodicTail& tail) {
  if (tail.block.empty()) {
    throw std::invalid_argument("canonical_tail: empty periodic block");
  }
  PeriodicTail out = tail;

  const auto shrink_block = [&out]() {
    const std::size_t n = out.block.size();
    for (std::size_t d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      bool periodic = true;
      for (std::size_t i = d; i < n && periodic; ++i) {
        periodic = out.block[i] == out.block[i % d];
      }
      if (periodic) {
        out.block.resize(d);
        return;
      }
    }
  };

  const auto roll_head = [&out]() {
    while (!out.head.empty() && out.head.back() == out.block.back()) {
      out.head.pop_back();
      std::rotate(out.block.begin(), out.block.end() - 1, out.block.end());
    }
  };

  shrink_block();
  roll_head();

  // An eventually constant stream u.m.l^inf sits on a glued corner exactly
  // when (m, corner of l) is a glued combination; it then has a second
  // expansion through the partner corner.  Keep the lexicographically
  // smaller spelling.
  if (out.block.size() == 1 && !out.head.empty()) {
    const Corner z = corner_of(out.block[0]);
    const Letter m = out.head.back();
    const auto partner = glued_partner(m, z);
    if (partner && partner->first < m) {
      out.head.back() = partner->first;
      out.block[0] = letter_of(partner->second);
      roll_head();
    }
  }
  return out;
}

std::string format_tail(const PeriodicTail& tail) {
  std::string out;
  out.reserve(tail.head.size() + tail.block.size() + 2);
  for (Letter m : tail.head) out += to_char(m);
  out += '(';
  for (Letter m : tail.block) out += to_char(m);
  out += ')';
  return out;
}

AddressStream parse_stream(const std::string& text) {
  if (text.find(':') != std::string::npos) return lift(parse_address(text));
  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')') {
    throw std::invalid_argument(
        "parse_stream: expected \"head(block)\" or an address");
  }
  PeriodicTail tail;
  const auto read_letters = [](const std::string& part,
                               std::vector<Letter>& into) {
    for (char ch : part) {
      const auto m = letter_from_char(ch);
      if (!m) {
        throw std::invalid_argument(
            std::string("parse_stream: bad letter '") + ch + "'");
      }
      into.push_back(*m);
    }
  };
  read_letters(text.substr(0, open), tail.head);
  read_letters(text.substr(open + 1, text.size() - open - 2), tail.block);
  if (tail.block.empty()) {
    throw std::invalid_argument("parse_stream: empty periodic block");
  }
  return AddressStream::from_tail(std::move(tail));
}

}  // namespace gasket
