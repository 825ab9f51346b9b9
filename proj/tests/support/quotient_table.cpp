#include "quotient_table.hpp"

#include <cstddef>
#include <stdexcept>

namespace gasket_test {

namespace {

using gasket::Address;
using gasket::Corner;
using gasket::Dyadic;
using gasket::Letter;

// Base-3 position of a raw address within its level.
std::size_t raw_index(const Address& x) {
  std::size_t i = 0;
  for (Letter m : x.word) i = 3 * i + gasket::index(m);
  return 3 * i + gasket::index(x.corner);
}

std::vector<Address> list_level(std::size_t level) {
  std::size_t words = 1;
  for (std::size_t i = 0; i < level; ++i) words *= 3;
  std::vector<Address> out;
  out.reserve(words * 3);
  std::vector<Letter> word(level, Letter::a);
  for (std::size_t w = 0; w < words; ++w) {
    std::size_t rest = w;
    for (std::size_t i = level; i-- > 0;) {
      word[i] = static_cast<Letter>(rest % 3);
      rest /= 3;
    }
    for (Corner z : gasket::all_corners) out.push_back({word, z});
  }
  return out;
}

// The corner of the level-k space spelled as a raw address: the letter
// whose copy carries the corner, repeated k times.
Address spelled_corner(Corner z, std::size_t level) {
  return {std::vector<Letter>(level, gasket::letter_of(z)), z};
}

struct Table {
  std::vector<Address> points;
  std::size_t n = 0;
  std::vector<Dyadic> d;  // row-major n x n

  const Dyadic& at(std::size_t i, std::size_t j) const { return d[i * n + j]; }
  Dyadic& at(std::size_t i, std::size_t j) { return d[i * n + j]; }
};

Table build_level(std::size_t level, const Table* below) {
  Table t;
  t.points = list_level(level);
  t.n = t.points.size();
  t.d.assign(t.n * t.n, Dyadic::zero());

  if (level == 0) {
    for (std::size_t i = 0; i < t.n; ++i) {
      for (std::size_t j = 0; j < t.n; ++j) {
        t.at(i, j) = i == j ? Dyadic::zero() : Dyadic::one();
      }
    }
    return t;
  }

  // Pre-quotient weights: each copy is a half-scaled image of the level
  // below, and any hop between different copies costs the full diameter 1.
  const auto tail_index = [](const Address& x) {
    return raw_index(Address{{x.word.begin() + 1, x.word.end()}, x.corner});
  };
  for (std::size_t i = 0; i < t.n; ++i) {
    for (std::size_t j = 0; j < t.n; ++j) {
      if (i == j) continue;
      if (t.points[i].word[0] == t.points[j].word[0]) {
        t.at(i, j) =
            below->at(tail_index(t.points[i]), tail_index(t.points[j]))
                .half();
      } else {
        t.at(i, j) = Dyadic::one();
      }
    }
  }

  // The three identifications, spelled at this level.
  const auto join = [&t, level](Letter m1, Corner z1, Letter m2, Corner z2) {
    Address x = spelled_corner(z1, level - 1);
    x.word.insert(x.word.begin(), m1);
    Address y = spelled_corner(z2, level - 1);
    y.word.insert(y.word.begin(), m2);
    t.at(raw_index(x), raw_index(y)) = Dyadic::zero();
    t.at(raw_index(y), raw_index(x)) = Dyadic::zero();
  };
  join(Letter::b, Corner::T, Letter::a, Corner::L);
  join(Letter::a, Corner::R, Letter::c, Corner::T);
  join(Letter::c, Corner::L, Letter::b, Corner::R);

  // Quotient metric: cheapest chain through the identifications.
  for (std::size_t k = 0; k < t.n; ++k) {
    for (std::size_t i = 0; i < t.n; ++i) {
      for (std::size_t j = 0; j < t.n; ++j) {
        const Dyadic through = t.at(i, k) + t.at(k, j);
        if (through < t.at(i, j)) t.at(i, j) = through;
      }
    }
  }
  return t;
}

const std::vector<Table>& tables() {
  static const std::vector<Table> all = [] {
    std::vector<Table> out;
    out.reserve(kTableLevelCap + 1);
    for (std::size_t level = 0; level <= kTableLevelCap; ++level) {
      out.push_back(build_level(level, level ? &out.back() : nullptr));
    }
    return out;
  }();
  return all;
}

}  // namespace

const std::vector<Address>& raw_addresses(std::size_t level) {
  if (level > kTableLevelCap) {
    throw std::invalid_argument("raw_addresses: level above the table cap");
  }
  return tables()[level].points;
}

Dyadic table_distance(const Address& x, const Address& y) {
  if (x.level() != y.level()) {
    throw std::invalid_argument("table_distance: levels differ");
  }
  if (x.level() > kTableLevelCap) {
    throw std::invalid_argument("table_distance: level above the table cap");
  }
  const Table& t = tables()[x.level()];
  return t.at(raw_index(x), raw_index(y));
}

}  // namespace gasket_test
