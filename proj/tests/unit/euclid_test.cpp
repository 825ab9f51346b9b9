#include <any>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "gasket/euclid.hpp"
#include "gasket/metric.hpp"

using namespace gasket;

namespace {

const double kSqrt3 = std::sqrt(3.0);

}  // namespace

TEST_SUITE_BEGIN("euclid");

TEST_CASE("vertices") {
  CHECK(gasket_vertex(Corner::L).x == 0.0);
  CHECK(gasket_vertex(Corner::L).y == 0.0);
  CHECK(gasket_vertex(Corner::R).x == 1.0);
  CHECK(gasket_vertex(Corner::T).x == 0.5);
  CHECK(gasket_vertex(Corner::T).y == doctest::Approx(kSqrt3 / 2));
  for (Corner y : all_corners) {
    for (Corner z : all_corners) {
      const double d = euclid_distance(gasket_vertex(y), gasket_vertex(z));
      CHECK(d == doctest::Approx(y == z ? 0.0 : 1.0));
    }
  }
  // Exact vertices project onto the double ones.
  for (Corner z : all_corners) {
    const Point2 p = to_point2(exact_gasket_vertex(z));
    CHECK(p.x == gasket_vertex(z).x);
    CHECK(p.y == doctest::Approx(gasket_vertex(z).y));
  }
}

TEST_CASE("contractions") {
  const Point2 top = sigma_apply(Letter::a, gasket_vertex(Corner::T));
  CHECK(top.x == 0.5);
  CHECK(top.y == doctest::Approx(kSqrt3 / 2));

  const ExactPoint image =
      sigma_apply(Letter::a, exact_gasket_vertex(Corner::R));
  CHECK(image.x == Dyadic::make(3, 2));
  CHECK(image.y_sqrt3 == Dyadic::make(1, 2));
  // Fixed points: each letter fixes its own vertex.
  for (Letter m : all_letters) {
    const ExactPoint v = exact_gasket_vertex(corner_of(m));
    CHECK(exact_squared_distance(sigma_apply(m, v), v).is_zero());
  }
}

TEST_CASE("address location, exact and floating") {
  const ExactPoint p = address_to_point_exact(parse_address("a:R"));
  CHECK(p.x == Dyadic::make(3, 2));
  CHECK(p.y_sqrt3 == Dyadic::make(1, 2));

  // Glued spellings land on the same exact point.
  const char* pairs[][2] = {
      {"ab:L", "ba:T"}, {"ab:T", "aa:L"}, {"cb:R", "cc:L"}};
  for (const auto& pair : pairs) {
    const Dyadic gap = exact_squared_distance(
        address_to_point_exact(parse_address(pair[0])),
        address_to_point_exact(parse_address(pair[1])));
    CHECK(gap.is_zero());
  }

  std::mt19937_64 rng(41);
  for (int i = 0; i < 50; ++i) {
    Address x;
    const std::size_t level = 1 + rng() % 10;
    for (std::size_t k = 0; k < level; ++k) {
      x.word.push_back(static_cast<Letter>(rng() % 3));
    }
    x.corner = static_cast<Corner>(rng() % 3);
    const Point2 direct = address_to_point(x);
    const Point2 via_exact = to_point2(address_to_point_exact(x));
    CHECK(std::abs(direct.x - via_exact.x) <= 1e-14);
    CHECK(std::abs(direct.y - via_exact.y) <= 1e-14);
  }
}

TEST_CASE("exact squared distance") {
  const ExactPoint l = exact_gasket_vertex(Corner::L);
  const ExactPoint r = exact_gasket_vertex(Corner::R);
  const ExactPoint t = exact_gasket_vertex(Corner::T);
  CHECK(exact_squared_distance(l, r) == Dyadic::one());
  CHECK(exact_squared_distance(l, t) == Dyadic::one());
  CHECK(exact_squared_distance(t, r) == Dyadic::one());
  CHECK(exact_squared_distance(t, t) == Dyadic::zero());
}

TEST_CASE("exact triangle membership") {
  CHECK(in_triangle(exact_gasket_vertex(Corner::L)));
  CHECK(in_triangle(exact_gasket_vertex(Corner::R)));
  CHECK(in_triangle(exact_gasket_vertex(Corner::T)));
  CHECK(in_triangle(ExactPoint{Dyadic::make(1, 1), Dyadic::make(1, 2)}));
  // Above the left edge: y_sqrt3 > x.
  CHECK(!in_triangle(ExactPoint{Dyadic::make(1, 2), Dyadic::make(1, 1)}));
  // Beyond the right edge: x + y_sqrt3 > 1.
  CHECK(!in_triangle(ExactPoint{Dyadic::make(7, 3), Dyadic::make(1, 1)}));
}

TEST_CASE("analysis step on doubles") {
  auto [m1, p1] = sigma_step(Point2{0.6, 0.0});
  CHECK(m1 == Letter::c);
  CHECK(p1.x == doctest::Approx(0.2));
  auto [m2, p2] = sigma_step(Point2{0.25, 0.0});
  CHECK(m2 == Letter::b);
  CHECK(p2.x == doctest::Approx(0.5));
  CHECK_THROWS_AS(sigma_step(Point2{2.0, 2.0}), std::invalid_argument);
}

TEST_CASE("analysis step resolves boundary ties deterministically") {
  // A point on the shared edge y = sqrt3/4 belongs to the top copy.
  const ExactPoint edge{Dyadic::make(1, 1), Dyadic::make(1, 2)};
  auto [m, p] = sigma_step(edge);
  CHECK(m == Letter::a);
  CHECK(p.x == Dyadic::make(1, 1));
  CHECK(p.y_sqrt3.is_zero());
  // The bottom gluing point goes to the least letter, b.
  auto [m2, p2] = sigma_step(ExactPoint{Dyadic::make(1, 1), Dyadic::zero()});
  CHECK(m2 == Letter::b);
  CHECK(p2.x == Dyadic::one());
  // Corner fixed points.
  for (Corner z : all_corners) {
    auto [mz, pz] = sigma_step(exact_gasket_vertex(z));
    CHECK(mz == letter_of(z));
    CHECK(exact_squared_distance(pz, exact_gasket_vertex(z)).is_zero());
  }
  CHECK_THROWS_AS(sigma_step(ExactPoint{Dyadic::one(), Dyadic::one()}),
                  std::invalid_argument);
}

TEST_CASE("snap to lattice") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 50; ++i) {
    const Address x = sample_address(8, rng);
    const ExactPoint exact = address_to_point_exact(x);
    const ExactPoint snapped = snap_to_lattice(to_point2(exact));
    // One rounding of y and the 2^-48 grid: squared error stays tiny.
    CHECK(exact_squared_distance(exact, snapped) <= Dyadic::pow2(60));
  }
  CHECK_THROWS_AS(snap_to_lattice(Point2{2.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(snap_to_lattice(Point2{0.5, -0.2}), std::invalid_argument);
  const ExactPoint top = snap_to_lattice(Point2{0.5, kSqrt3 / 2});
  CHECK(exact_squared_distance(top, exact_gasket_vertex(Corner::T))
            .is_zero());
}

TEST_CASE("gasket space and coalgebra carriers") {
  const TripointedSpace s = gasket_space();
  CHECK(s.distance(s.corner(Corner::L), s.corner(Corner::R)) ==
        doctest::Approx(1.0));
  CHECK(s.contains(Point(exact_gasket_vertex(Corner::T))));
  CHECK(!s.contains(Point(ExactPoint{Dyadic::make(3, 0), Dyadic::zero()})));
  CHECK(!s.contains(Point(Point2{0.5, 0.2})));  // wrong representation
  std::mt19937_64 rng(44);
  for (int i = 0; i < 20; ++i) CHECK(s.contains(s.sample(rng)));
  CHECK(gasket_coalgebra().regularity.find("short") == std::string::npos);
}

TEST_CASE("distortion of the embedding") {
  const DistortionReport report = distortion_report(4);
  CHECK(report.max_level == 4);
  CHECK(report.pairs > 0);
  // The infimum 1/2 is attained (collinear pairs), up to double rounding.
  CHECK(report.min_ratio >= 0.5 - 1e-12);
  CHECK(report.max_ratio <= 1.0 + 1e-12);
  CHECK(!report.min_pair.empty());
  CHECK(!report.max_pair.empty());
  const std::string json = to_json_string(report);
  CHECK(json.find("\"schema\": 1") != std::string::npos);
}

TEST_CASE("rendering") {
  const std::string svg = render_svg(3);
  CHECK(svg == render_svg(3));
  std::size_t triangles = 0;
  for (std::size_t pos = svg.find('M'); pos != std::string::npos;
       pos = svg.find('M', pos + 1)) {
    ++triangles;
  }
  CHECK(triangles == 27);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("#123") == std::string::npos);
  CHECK(render_svg(1, "#123").find("#123") != std::string::npos);
  CHECK_THROWS_AS(render_svg(kRenderDepthCap + 1), std::invalid_argument);

  const std::string csv = render_points(2);
  CHECK(csv.rfind("word,corner,x,y\n", 0) == 0);
  std::size_t lines = 0;
  for (char ch : csv) lines += ch == '\n';
  CHECK(lines == 16);  // header + the 15 level-2 addresses
  CHECK_THROWS_AS(render_points(kRenderDepthCap + 1), std::invalid_argument);
}

TEST_SUITE_END();
