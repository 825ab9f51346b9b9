#include <random>
#include <stdexcept>

#include "doctest.h"
#include "gasket/address.hpp"
#include "quotient_table.hpp"

using namespace gasket;

TEST_SUITE_BEGIN("address");

TEST_CASE("format and parse round trip") {
  for (const char* text : {":T", ":L", ":R", "a:T", "ab:L", "cba:R",
                           "abcabc:L"}) {
    const Address x = parse_address(text);
    CHECK(format_address(x) == text);
  }
  CHECK(parse_address("ab:L") ==
        Address{{Letter::a, Letter::b}, Corner::L});
  CHECK(parse_address(":T") == corner_address(Corner::T));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_address(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_address("ab"), std::invalid_argument);
  CHECK_THROWS_AS(parse_address("zb:L"), std::invalid_argument);
  CHECK_THROWS_AS(parse_address("ab:Q"), std::invalid_argument);
  CHECK_THROWS_AS(parse_address("ab:"), std::invalid_argument);
  CHECK_THROWS_AS(parse_address("ab:LL"), std::invalid_argument);
}

TEST_CASE("padded corners") {
  CHECK(padded_corner(Corner::T, 3) == parse_address("aaa:T"));
  CHECK(padded_corner(Corner::L, 2) == parse_address("bb:L"));
  CHECK(padded_corner(Corner::R, 0) == corner_address(Corner::R));
}

TEST_CASE("glued variants") {
  // (b,T) ~ (a,L) at the last position.
  CHECK(glued_variant(parse_address("ab:T")) == parse_address("aa:L"));
  // The rewrite position sits before the trailing run of letter_of(corner).
  CHECK(glued_variant(parse_address("ab:L")) == parse_address("ba:T"));
  CHECK(glued_variant(parse_address("abb:L")) == parse_address("baa:T"));
  // Outer corners have no partner.
  CHECK(!glued_variant(parse_address("aa:T")).has_value());
  CHECK(!glued_variant(corner_address(Corner::L)).has_value());
  CHECK(!glue_position(parse_address("aa:T")).has_value());
}

TEST_CASE("canonicalization is idempotent and least") {
  for (std::size_t level = 0; level <= 3; ++level) {
    for (const Address& x : gasket_test::raw_addresses(level)) {
      const Address c = canonicalize(x);
      CHECK(is_canonical(c));
      CHECK(canonicalize(c) == c);
      CHECK(equivalent(c, x));
      CHECK(c <= x);
      if (const auto other = glued_variant(x)) {
        CHECK(equivalent(*other, x));
        CHECK(canonicalize(*other) == c);
      }
    }
  }
}

TEST_CASE("equivalence pads to the longer level") {
  CHECK(equivalent(parse_address("a:L"), parse_address("ab:L")));
  CHECK(equivalent(parse_address("a:L"), parse_address("ba:T")));
  CHECK(!equivalent(parse_address("a:L"), parse_address("ab:T")));
}

TEST_CASE("pad keeps the point") {
  const Address x = parse_address("ac:R");
  CHECK(pad(x, 4) == parse_address("accc:R"));
  CHECK(equivalent(pad(x, 5), x));
  CHECK_THROWS_AS(pad(x, 1), std::invalid_argument);
}

TEST_CASE("prepend canonicalizes one algebra step") {
  CHECK(prepend(Letter::a, parse_address("b:L")) == parse_address("ab:L"));
  // a.(b:T) = ab:T ~ aa:L, and aa:L is smaller.
  CHECK(prepend(Letter::a, parse_address("b:T")) == parse_address("aa:L"));
  CHECK(prepend(Letter::b, corner_address(Corner::T)).level() == 1);
}

TEST_CASE("enumeration counts follow 3n-3") {
  CHECK(enumerate_addresses(0).size() == 3);
  CHECK(enumerate_addresses(1).size() == 6);
  CHECK(enumerate_addresses(2).size() == 15);
  CHECK(enumerate_addresses(3).size() == 42);
  CHECK(enumerate_addresses(4).size() == 123);
  for (std::size_t level = 0; level <= 4; ++level) {
    CHECK(canonical_count(level) == enumerate_addresses(level).size());
  }
  CHECK(canonical_count(12) == 797163);
  CHECK_THROWS_AS(enumerate_addresses(13), std::invalid_argument);
}

TEST_CASE("enumeration is sorted canonical without duplicates") {
  const auto level3 = enumerate_addresses(3);
  for (std::size_t i = 0; i < level3.size(); ++i) {
    CHECK(is_canonical(level3[i]));
    if (i) CHECK(level3[i - 1] < level3[i]);
  }
}

TEST_SUITE_END();
