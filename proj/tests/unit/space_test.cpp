#include <any>
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "gasket/metric.hpp"
#include "gasket/space.hpp"

using namespace gasket;

TEST_SUITE_BEGIN("space");

TEST_CASE("corner space") {
  const TripointedSpace s = corner_space();
  for (Corner y : all_corners) {
    for (Corner z : all_corners) {
      CHECK(s.distance(s.corner(y), s.corner(z)) == (y == z ? 0.0 : 1.0));
    }
  }
  CHECK(s.contains);
  CHECK(s.contains(Point(Corner::T)));
}

TEST_CASE("address space") {
  const TripointedSpace s = address_space(5);
  CHECK(std::any_cast<Address>(s.corner(Corner::L)) ==
        corner_address(Corner::L));
  const Point x = Point(parse_address("ab:L"));
  const Point y = Point(parse_address("ba:T"));
  CHECK(s.distance(x, y) == 0.0);
  // ab:L is the midpoint of the T-L edge.
  CHECK(s.distance(s.corner(Corner::T), x) == 0.5);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Address a = std::any_cast<Address>(s.sample(rng));
    CHECK(a.level() <= 5);
    CHECK(is_canonical(a));
  }
}

TEST_CASE("sampled addresses are canonical at the exact level") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const Address a = sample_address(6, rng);
    CHECK(a.level() == 6);
    CHECK(is_canonical(a));
  }
  // Deterministic under the same seed.
  std::mt19937_64 r1(9), r2(9);
  CHECK(sample_address(7, r1) == sample_address(7, r2));
}

TEST_CASE("tensor space over the corners is the level-1 space") {
  const TripointedSpace t = tensor_space(corner_space());
  for (Letter m1 : all_letters) {
    for (Corner z1 : all_corners) {
      for (Letter m2 : all_letters) {
        for (Corner z2 : all_corners) {
          const double got =
              t.distance(Point(TensorPoint{m1, Point(z1)}),
                         Point(TensorPoint{m2, Point(z2)}));
          const Dyadic want = address_distance(Address{{m1}, z1},
                                               Address{{m2}, z2});
          CHECK(got == want.to_double());
        }
      }
    }
  }
  // Distinguished points of the tensor: a(x)T, b(x)L, c(x)R.
  const auto top = std::any_cast<TensorPoint>(t.corner(Corner::T));
  CHECK(top.copy == Letter::a);
  CHECK(std::any_cast<Corner>(top.inner) == Corner::T);
  CHECK(t.distance(t.corner(Corner::T), t.corner(Corner::L)) == 1.0);
}

TEST_CASE("discrete wrapper flattens to 0/1") {
  const TripointedSpace d = discrete_wrapper(address_space());
  const Point x = Point(parse_address("ab:L"));
  const Point y = Point(parse_address("ba:T"));
  const Point z = Point(parse_address("aa:T"));
  CHECK(d.distance(x, y) == 0.0);  // identified points stay identified
  CHECK(d.distance(x, z) == 1.0);
  CHECK(d.distance(d.corner(Corner::T), d.corner(Corner::R)) == 1.0);
}

TEST_CASE("tensor map lifts morphisms and rejects non-morphisms") {
  const PointedMap pad_map{
      "pad",
      address_space(4),
      address_space(4),
      [](const Point& p) {
        return Point(pad(std::any_cast<Address>(p),
                         std::any_cast<Address>(p).level() + 1));
      }};
  const PointedMap lifted = tensor_map(pad_map);
  const Point x = Point(TensorPoint{Letter::b, Point(parse_address("a:R"))});
  const auto image = std::any_cast<TensorPoint>(lifted.apply(x));
  CHECK(image.copy == Letter::b);
  CHECK(std::any_cast<Address>(image.inner) == parse_address("ac:R"));

  const PointedMap swap_corners{
      "swap",
      address_space(4),
      address_space(4),
      [](const Point& p) {
        Address a = std::any_cast<Address>(p);
        a.corner = a.corner == Corner::T ? Corner::L : Corner::T;
        return Point(a);
      }};
  CHECK_THROWS_AS(tensor_map(swap_corners), std::invalid_argument);
}

TEST_CASE("regularity check certifies and refutes") {
  const TripointedSpace addr = address_space(5);
  const MapView identity{
      "identity", addr,
      [addr](const Point& x, const Point& y) { return addr.distance(x, y); },
      [](const Point& p) { return p; }};
  const RegularityReport ok =
      check_regularity(identity, MapClass::short_map(), 200, 5);
  CHECK(ok.passed);
  CHECK(ok.max_ratio <= 1.0 + kRegularitySlack);
  CHECK(ok.witnesses.empty());

  // Same map viewed into a doubled metric: short fails, Lipschitz(2) holds.
  const MapView doubled{
      "doubled", addr,
      [addr](const Point& x, const Point& y) {
        return 2 * addr.distance(x, y);
      },
      [](const Point& p) { return p; }};
  const RegularityReport bad =
      check_regularity(doubled, MapClass::short_map(), 200, 5);
  CHECK(!bad.passed);
  CHECK(!bad.witnesses.empty());
  CHECK(bad.max_ratio == doctest::Approx(2.0));
  const RegularityReport relaxed =
      check_regularity(doubled, MapClass::lipschitz(2.0), 200, 5);
  CHECK(relaxed.passed);

  // Continuity mode reports a delta per epsilon.
  const RegularityReport cont = check_regularity(
      identity, MapClass::continuous({0.5, 0.25}), 200, 5);
  CHECK(cont.passed);
  REQUIRE(cont.deltas.size() == 2);
  CHECK(cont.deltas[0].found);
  CHECK(cont.deltas[0].delta > 0.0);

  // Probe pairs are evaluated verbatim, ahead of the samples.
  const auto probe = std::make_pair(Point(parse_address("aa:L")),
                                    Point(corner_address(Corner::T)));
  const RegularityReport probed =
      check_regularity(doubled, MapClass::short_map(), 0, 5, {probe});
  CHECK(!probed.passed);
  REQUIRE(!probed.witnesses.empty());
  CHECK(probed.witnesses[0].dx == doctest::Approx(0.25));
  CHECK(probed.witnesses[0].dy == doctest::Approx(0.5));
}

TEST_CASE("map class descriptions") {
  CHECK(MapClass::short_map().describe() == "short");
  CHECK(MapClass::lipschitz(2.0).describe().find("2") != std::string::npos);
  CHECK(MapClass::continuous({0.5}).describe().find("continuous") !=
        std::string::npos);
}

TEST_SUITE_END();
