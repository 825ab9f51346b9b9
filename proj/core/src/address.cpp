#include "gasket/address.hpp"

#include <algorithm>
#include <stdexcept>

namespace gasket {

std::strong_ordering operator<=>(const Address& x, const Address& y) {
  if (auto cmp = x.word <=> y.word; cmp != 0) return cmp;
  return index(x.corner) <=> index(y.corner);
}

Address corner_address(Corner z) { return Address{{}, z}; }

Address padded_corner(Corner z, std::size_t level) {
  return Address{std::vector<Letter>(level, letter_of(z)), z};
}

std::optional<std::size_t> glue_position(const Address& x) {
  const Letter run = letter_of(x.corner);
  std::size_t i = x.word.size();
  while (i > 0 && x.word[i - 1] == run) --i;
  if (i == 0) return std::nullopt;  // pure corner address letter^n:z
  if (!is_glued(x.word[i - 1], x.corner)) return std::nullopt;
  return i - 1;
}

std::optional<Address> glued_variant(const Address& x) {
  const auto pos = glue_position(x);
  if (!pos) return std::nullopt;
  const auto partner = glued_partner(x.word[*pos], x.corner);
  Address y = x;
  y.word[*pos] = partner->first;
  y.corner = partner->second;
  std::fill(y.word.begin() + static_cast<std::ptrdiff_t>(*pos) + 1,
            y.word.end(), letter_of(y.corner));
  return y;
}

bool is_canonical(const Address& x) {
  const auto pos = glue_position(x);
  if (!pos) return true;
  const auto partner = glued_partner(x.word[*pos], x.corner);
  return x.word[*pos] < partner->first;
}

Address canonicalize(const Address& x) {
  if (is_canonical(x)) return x;
  return *glued_variant(x);
}

bool equivalent(const Address& x, const Address& y) {
  const std::size_t level = std::max(x.level(), y.level());
  return canonicalize(pad(x, level)) == canonicalize(pad(y, level));
}

Address pad(const Address& x, std::size_t level) {
  if (level < x.level()) {
    throw std::invalid_argument("pad: cannot shorten an address");
  }
  Address out = x;
  out.word.resize(level, letter_of(x.corner));
  return out;
}

Address prepend(Letter m, const Address& x) {
  Address out;
  out.word.reserve(x.level() + 1);
  out.word.push_back(m);
  out.word.insert(out.word.end(), x.word.begin(), x.word.end());
  out.corner = x.corner;
  return canonicalize(out);
}

std::vector<Address> enumerate_addresses(std::size_t level, std::size_t cap) {
  if (level > cap) {
    throw std::invalid_argument("enumerate_addresses: enumeration too large");
  }
  std::vector<Address> out;
  out.reserve(canonical_count(level));
  Address x;
  x.word.assign(level, Letter::a);
  for (;;) {
    for (Corner z : all_corners) {
      x.corner = z;
      if (is_canonical(x)) out.push_back(x);
    }
    // Odometer step over words, least significant letter last.
    std::size_t i = level;
    while (i > 0 && x.word[i - 1] == Letter::c) {
      x.word[i - 1] = Letter::a;
      --i;
    }
    if (i == 0) break;
    x.word[i - 1] = static_cast<Letter>(index(x.word[i - 1]) + 1);
  }
  return out;
}

std::size_t canonical_count(std::size_t level) {
  // 3^(n+1) minus one address per two-element class: count(n) = 3^n/2*... is
  // easiest kept as the recurrence count(n+1) = 3*count(n) - 3.
  std::size_t count = 3;
  for (std::size_t i = 0; i < level; ++i) count = 3 * count - 3;
  return count;
}

std::string format_address(const Address& x) {
  std::string out;
  out.reserve(x.level() + 2);
  for (Letter m : x.word) out += to_char(m);
  out += ':';
  out += to_char(x.corner);
  return out;
}

Address parse_address(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon + 2 != text.size()) {
    throw std::invalid_argument("parse_address: expected \"<letters>:<corner>\"");
  }
  Address out;
  out.word.reserve(colon);
  for (std::size_t i = 0; i < colon; ++i) {
    const auto m = letter_from_char(text[i]);
    if (!m) {
      throw std::invalid_argument(
          std::string("parse_address: bad letter '") + text[i] + "'");
    }
    out.word.push_back(*m);
  }
  const auto z = corner_from_char(text[colon + 1]);
  if (!z) {
    throw std::invalid_argument(
        std::string("parse_address: bad corner '") + text[colon + 1] + "'");
  }
  out.corner = *z;
  return out;
}

}  // namespace gasket
