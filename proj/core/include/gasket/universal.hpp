#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gasket/address.hpp"
#include "gasket/approx.hpp"
#include "gasket/space.hpp"
#include "gasket/stream.hpp"

namespace gasket {

// An algebra: a space X with a structure map M(x)X -> X, curried as
// (letter, point) -> point.
struct Algebra {
  std::string name;
  TripointedSpace space;
  std::function<Point(Letter, const Point&)> apply;
  // Gluing well-definedness slack for fold_map's consistency check.
  double glue_tol = 1e-9;
};

// The unique structure-respecting map out of the finite addresses:
// fold(z) = corner z, fold(m.w) = apply(m, fold(w)).  When the input address
// has a glued variant both spellings are evaluated; if the algebra
// distinguishes them beyond glue_tol the returned function throws with the
// witness pair ("algebra not well defined...").
std::function<Point(const Address&)> fold_map(const Algebra& alg);

// State of a corecursive unfolding: letters emitted so far and the current
// point.
struct IterationState {
  std::vector<Letter> emitted;
  Point current;
};

IterationState start_iteration(const Coalgebra& co, Point x);

// One application of the structure map: emits a letter and moves the point.
// Throws if the structure map leaves the carrier (when the space validates).
void unfold_step(const Coalgebra& co, IterationState& state);

// Address emitted by n unfold steps from x, closed with the given corner.
// Different corner choices change the result by at most 2^(1-n) in the
// address metric; successive depths form a Cauchy sequence with modulus
// d(itinerary p, itinerary q) <= 2^-min(p,q).
Address itinerary(const Coalgebra& co, const Point& x, std::size_t n,
                  Corner close = Corner::T);

// The full emitted stream: the coalgebra-to-completion map, evaluated
// lazily.  Corners of X map to the corner streams.
AddressStream unfold(const Coalgebra& co, const Point& x);

// Certified distance between m1(x)p and m2(x)q in the glued completion,
// via corner-stream distances; enclosure radius at most tol.
ApproxReal tensor_stream_distance(Letter m1, const AddressStream& p,
                                  Letter m2, const AddressStream& q,
                                  double tol);

struct SquareReport {
  std::string coalgebra;
  std::size_t samples = 0;
  double tolerance = 0;
  bool passed = false;
  // Largest lower interval end seen; <= 0 everywhere when the square
  // commutes.
  double worst_low = 0;

  struct Witness {
    std::string point;
    char left_head = '?';
    char right_head = '?';
    double low = 0;
    double high = 0;
  };
  std::vector<Witness> witnesses;
};

// Checks that splitting the unfolded stream equals unfolding one structure
// step: for sampled x, the certified distance between head(f x)(x)tail(f x)
// and e(x) pushed through f must enclose 0.  negative_control replaces the
// left side with a constant head to prove the check can fail.
SquareReport check_square(const Coalgebra& co, std::size_t samples, double tol,
                          std::uint64_t seed, bool negative_control = false);

std::string to_json_string(const SquareReport& report);

struct ShortnessReport {
  std::string coalgebra;
  std::size_t samples = 0;
  double tolerance = 0;
  bool precondition_passed = false;  // structure map certified short
  RegularityReport structure_report;
  bool passed = false;
  double max_excess = 0;  // sup over pairs of high(d_S) - d_X

  struct Witness {
    std::string x;
    std::string y;
    double dx = 0;
    double d_high = 0;
  };
  std::vector<Witness> witnesses;
};

// For a coalgebra whose structure map certifies short, the induced map to
// the completion must be short up to tol: high(d_S(f x, f y)) <= d(x,y)+tol
// on sampled pairs.  A failed certification is reported as an unmet
// precondition with the structure map's witnesses (probes are checked
// first, verbatim).
ShortnessReport check_short_preservation(
    const Coalgebra& co, std::size_t samples, double tol, std::uint64_t seed,
    const std::vector<std::pair<Point, Point>>& probes = {});

std::string to_json_string(const ShortnessReport& report);

struct BlowupRow {
  int n = 0;
  double d_c = 0;        // Euclidean gap of the n-th pair
  ApproxReal d_s;        // certified completion distance of the images
  double ratio = 0;      // d_s.value / d_c
};

// The Lipschitz blow-up of the comb coalgebra with scale j: pairs
// x_n = sum_{i<=n} j^-i, y_n = x_n + j^-n collapse at rate j^-n in the
// carrier while their unfoldings stay 2^-n apart, so the ratio grows like
// (j/2)^n without bound.  Requires j >= 4 and depth <= 20.
std::vector<BlowupRow> blowup_table(int j, int depth);

std::string blowup_csv(const std::vector<BlowupRow>& rows);

// Segment-with-apex carrier: the unit segment plus the top vertex,
// Euclidean.  Unfolding the coalgebra below sends it onto a Cantor set of
// addresses.
TripointedSpace cantor_space();

// The coalgebra on the segment with scale j >= 4: the outermost j-ths
// freeze to the L/R corners, the two neighbouring j-ths are blown up onto
// the whole segment (Lipschitz constant j/2), the middle collapses to the
// glued corner, the apex stays put.
Coalgebra cantor_coalgebra(int j);

// e(z) = letter_of(z)(x)z on the three corners; short.
Coalgebra corner_coalgebra();

// sigma as an algebra on the Euclidean gasket.
Algebra gasket_algebra();

// Prepending letters as an algebra on the finite addresses; its fold is
// canonicalization.
Algebra address_algebra();

// "gasket", "corners", "cantor", "cantor:<j>", or JSON like
// {"cantor": {"j": 8}}.  Throws std::invalid_argument for unknown names.
Coalgebra coalgebra_from_config(const std::string& spec);

}  // namespace gasket
