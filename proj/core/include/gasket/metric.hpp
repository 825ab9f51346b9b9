#pragma once

#include <array>
#include <stdexcept>

#include "gasket/address.hpp"
#include "gasket/approx.hpp"
#include "gasket/dyadic.hpp"
#include "gasket/letters.hpp"

namespace gasket {

// Value types the tensor-metric formula works over: exact dyadics, plain
// doubles, and certified enclosures.
template <class Num>
struct metric_ops;

template <>
struct metric_ops<Dyadic> {
  static Dyadic one() { return Dyadic::one(); }
  static Dyadic add(const Dyadic& x, const Dyadic& y) { return x + y; }
  static Dyadic half(const Dyadic& x) { return x.half(); }
  static Dyadic meet(const Dyadic& x, const Dyadic& y) { return min(x, y); }
  static bool in_unit_interval(const Dyadic& x) { return x <= Dyadic::one(); }
};

template <>
struct metric_ops<double> {
  static double one() { return 1.0; }
  static double add(double x, double y) { return x + y; }
  static double half(double x) { return x / 2; }
  static double meet(double x, double y) { return x < y ? x : y; }
  static bool in_unit_interval(double x) { return x >= 0 && x <= 1 + 1e-9; }
};

template <>
struct metric_ops<ApproxReal> {
  static ApproxReal one() { return ApproxReal::exact(1.0); }
  static ApproxReal add(const ApproxReal& x, const ApproxReal& y) {
    return x + y;
  }
  static ApproxReal half(const ApproxReal& x) { return x.half(); }
  static ApproxReal meet(const ApproxReal& x, const ApproxReal& y) {
    return interval_min(x, y);
  }
  static bool in_unit_interval(const ApproxReal& x) {
    return x.high() >= 0 && x.low() <= 1 + 1e-9;
  }
};

// Distances from a point to the three distinguished corners of its space,
// indexed by Corner.
template <class Num>
using CornerDists = std::array<Num, 3>;

// Distance between m1(x)x and m2(x)y in the glued union of three half-scaled
// copies, given each point's corner distances and (for the same-copy case)
// the distance between the underlying points.  Within one copy everything is
// halved; between copies the shortest route either crosses the single glued
// corner pair directly or runs corner-to-corner through the third copy,
// which costs an extra 1.  The result never exceeds 1.
template <class Num>
Num tensor_distance(Letter m1, const CornerDists<Num>& x_dists, Letter m2,
                    const CornerDists<Num>& y_dists, const Num& same_copy) {
  using ops = metric_ops<Num>;
  for (const auto& d : x_dists) {
    if (!ops::in_unit_interval(d)) {
      throw std::invalid_argument("tensor_distance: not a 1-bounded metric");
    }
  }
  for (const auto& d : y_dists) {
    if (!ops::in_unit_interval(d)) {
      throw std::invalid_argument("tensor_distance: not a 1-bounded metric");
    }
  }
  if (m1 == m2) return ops::half(same_copy);
  const auto [z1, z2] = direct_corners(m1, m2);
  const auto [u1, u2] = via_corners(m1, m2);
  const Num direct = ops::add(x_dists[index(z1)], y_dists[index(z2)]);
  const Num detour = ops::add(x_dists[index(u1)],
                              ops::add(ops::one(), y_dists[index(u2)]));
  return ops::meet(ops::half(ops::meet(direct, detour)), ops::one());
}

// Exact distances from an address to the three corners of its level,
// computed bottom up from the innermost corner; one tensor step per letter.
CornerDists<Dyadic> corner_distances(const Address& x);

// Exact distance between two addresses in the level-max(levels) space (the
// shorter address is padded).  Zero exactly on equivalent addresses.
Dyadic address_distance(const Address& x, const Address& y);

// 2^-(length of the longest common prefix of the words): an upper bound for
// address_distance once the addresses are padded to a common level.
Dyadic common_prefix_bound(const Address& x, const Address& y);

}  // namespace gasket
