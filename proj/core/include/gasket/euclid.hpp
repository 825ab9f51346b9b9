#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gasket/address.hpp"
#include "gasket/dyadic.hpp"
#include "gasket/space.hpp"

namespace gasket {

struct Point2 {
  double x = 0;
  double y = 0;
};

double euclid_distance(const Point2& p, const Point2& q);

// Corner vertices of the unit-side triangle: T = (1/2, sqrt3/2), L = (0,0),
// R = (1,0).
Point2 gasket_vertex(Corner z);

// The three contractions: halve towards L, then translate copy a up to the
// top and copy c to the right.  Fixed points are the corner vertices.
Point2 sigma_apply(Letter m, const Point2& p);

// Every address lands on the lattice (dyadic, dyadic * sqrt3); keeping the
// two dyadics exact makes squared distances between landed points exact.
struct ExactPoint {
  Dyadic x;
  Dyadic y_sqrt3;  // y coordinate = y_sqrt3 * sqrt(3)
};

ExactPoint address_to_point_exact(const Address& address);

ExactPoint exact_gasket_vertex(Corner z);

Point2 to_point2(const ExactPoint& p);

// Contraction for one letter on exact coordinates.
ExactPoint sigma_apply(Letter m, const ExactPoint& p);

// Nearest lattice point with denominator 2^48, clamped into the closed
// triangle.  Throws std::invalid_argument when p is not in the triangle to
// begin with (up to a small slack).
ExactPoint snap_to_lattice(const Point2& p);

// |p - q|^2 as an exact dyadic: dx^2 + 3 * d(y_sqrt3)^2.
Dyadic exact_squared_distance(const ExactPoint& p, const ExactPoint& q);

// Euclidean location of a finite address; glued addresses land on the same
// point.  Short as a map from the address metric: never expands distances.
Point2 address_to_point(const Address& address);

bool in_triangle(const Point2& p, double slack = 1e-9);

// Exact membership in the closed triangle: 0 <= y_sqrt3 <= min(x, 1 - x).
bool in_triangle(const ExactPoint& p);

// One analysis step: which copy contains p (ties resolved to the least
// letter by testing copy a's halfplane first, then copy b's) and the point
// pulled back through that copy's contraction.  Throws "not in carrier" for
// points outside the closed triangle.
std::pair<Letter, Point2> sigma_step(const Point2& p);

// The same step on exact coordinates.  Every test and pullback is dyadic
// arithmetic, so orbits of points that lie exactly on a cell boundary take
// the branch the tie rule prescribes instead of whichever side rounding
// noise lands on, at any depth.
std::pair<Letter, ExactPoint> sigma_step(const ExactPoint& p);

// The gasket as a tripointed space.  Points are ExactPoint values (the
// plain-double step is kept for display); the metric is Euclidean and
// sampling draws random level-12 addresses.
TripointedSpace gasket_space();

// sigma_step as a coalgebra on the gasket (continuous, not short).
Coalgebra gasket_coalgebra();

struct DistortionReport {
  std::size_t max_level = 0;
  std::size_t pairs = 0;
  double min_ratio = 0;  // Euclidean / address distance over distinct pairs
  double max_ratio = 0;
  std::string min_pair;
  std::string max_pair;
};

// Ratio statistics over all canonical address pairs up to max_level.
DistortionReport distortion_report(std::size_t max_level);

std::string to_json_string(const DistortionReport& report);

inline constexpr std::size_t kRenderDepthCap = 12;

// Self-similar rendering: 3^depth filled triangles, byte-deterministic.
std::string render_svg(std::size_t depth, const std::string& fill = "#444");

// CSV "word,corner,x,y" of every canonical address at exactly the given
// level.
std::string render_points(std::size_t depth);

}  // namespace gasket
