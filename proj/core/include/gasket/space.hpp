#pragma once

#include <any>
#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gasket/address.hpp"
#include "gasket/letters.hpp"

namespace gasket {

// Points are type-erased; each space knows how to measure, sample, print and
// (optionally) validate its own points.
using Point = std::any;

// A 1-bounded metric space with three distinguished points at pairwise
// distance 1.
struct TripointedSpace {
  std::string name;
  std::function<double(const Point&, const Point&)> dist;
  std::array<Point, 3> corners;  // indexed by Corner
  std::function<Point(std::mt19937_64&)> sample;
  std::function<std::string(const Point&)> describe;
  std::function<bool(const Point&)> contains;  // empty: not validated

  const Point& corner(Corner z) const { return corners[index(z)]; }
  double distance(const Point& x, const Point& y) const { return dist(x, y); }
};

// A point of the glued space built over a base space: a copy label plus a
// base point.
struct TensorPoint {
  Letter copy;
  Point inner;
};

// Glued union of three half-scaled copies of the base, corners identified
// pairwise; its distinguished points are a(x)T, b(x)L, c(x)R.
TripointedSpace tensor_space(const TripointedSpace& base);

// A map between tripointed spaces; morphisms preserve the distinguished
// points.
struct PointedMap {
  std::string name;
  TripointedSpace domain;
  TripointedSpace codomain;
  std::function<Point(const Point&)> apply;
};

// f lifted copywise to the glued spaces: m(x)x -> m(x)f(x).  Verifies that f
// preserves the three distinguished points (throws "not a tripointed
// morphism" otherwise); the lift then respects the gluings by construction.
PointedMap tensor_map(const PointedMap& f);

// Same carrier and distinguished points, distance flattened to 0/1 (points
// at base distance 0 stay identified).
TripointedSpace discrete_wrapper(const TripointedSpace& base);

// A coalgebra: a space X with a structure map X -> M(x)X.  No regularity is
// required of the structure map; the recorded class is metadata.
struct Coalgebra {
  std::string name;
  TripointedSpace space;
  std::function<TensorPoint(const Point&)> structure;
  std::string regularity;
};

// Regularity classes a map can be checked against.
struct MapClass {
  enum class Kind { Short, Lipschitz, Continuous } kind = Kind::Short;
  double constant = 1.0;          // Lipschitz bound
  std::vector<double> epsilons;   // continuity thresholds to search deltas for

  static MapClass short_map() { return {Kind::Short, 1.0, {}}; }
  static MapClass lipschitz(double k) { return {Kind::Lipschitz, k, {}}; }
  static MapClass continuous(std::vector<double> eps) {
    return {Kind::Continuous, 0.0, std::move(eps)};
  }
  std::string describe() const;
};

// A map to be checked empirically; codomain enters only through its metric,
// so unpointed maps (like coalgebra structure maps) fit too.
struct MapView {
  std::string name;
  TripointedSpace domain;
  std::function<double(const Point&, const Point&)> codomain_dist;
  std::function<Point(const Point&)> apply;
};

MapView as_view(const PointedMap& f);
MapView structure_view(const Coalgebra& co);

struct RegularityReport {
  std::string map_name;
  std::string class_name;
  std::size_t samples = 0;
  double tolerance = 0;
  bool passed = false;
  double max_ratio = 0;  // sup image/preimage distance over separated pairs

  struct Witness {
    std::string x;
    std::string y;
    double dx = 0;
    double dy = 0;
  };
  std::vector<Witness> witnesses;  // violating pairs, capped

  struct DeltaRow {
    double epsilon = 0;
    double delta = 0;
    bool found = false;
  };
  std::vector<DeltaRow> deltas;  // continuity mode only
};

// Comparison slack for class violations on doubles.
inline constexpr double kRegularitySlack = 1e-9;

// Samples point pairs (any probe pairs first, verbatim) and tests the class:
// short means dy <= dx, Lipschitz(k) means dy <= k*dx, both up to the fixed
// slack; continuity searches a power-of-two delta for each requested epsilon
// over the same pair set.
RegularityReport check_regularity(
    const MapView& f, const MapClass& cls, std::size_t samples,
    std::uint64_t seed,
    const std::vector<std::pair<Point, Point>>& probes = {});

std::string to_json_string(const RegularityReport& report);

// The discrete three-point space on the corners themselves (points are
// Corner values).
TripointedSpace corner_space();

// Finite-address space: points are Address values under address_distance,
// sampled as random canonical addresses of level <= sample_level.
TripointedSpace address_space(std::size_t sample_level = 8);

// Uniformly random canonical address of exactly the given level.
Address sample_address(std::size_t level, std::mt19937_64& rng);

}  // namespace gasket
