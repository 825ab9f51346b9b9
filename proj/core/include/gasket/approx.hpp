#pragma once

#include <algorithm>
#include <cmath>

namespace gasket {

// A certified enclosure value +/- radius of a nonnegative real quantity.
// Arithmetic is interval arithmetic; min of two enclosures is the enclosure
// [min of lows, min of highs].
struct ApproxReal {
  double value = 0;
  double radius = 0;

  static ApproxReal exact(double v) { return {v, 0}; }

  double low() const { return value - radius; }
  double high() const { return value + radius; }

  bool contains(double x) const { return low() <= x && x <= high(); }
  bool overlaps(const ApproxReal& o) const {
    return low() <= o.high() && o.low() <= high();
  }

  ApproxReal half() const { return {value / 2, radius / 2}; }

  friend ApproxReal operator+(const ApproxReal& x, const ApproxReal& y) {
    return {x.value + y.value, x.radius + y.radius};
  }
};

inline ApproxReal from_bounds(double lo, double hi) {
  return {(lo + hi) / 2, (hi - lo) / 2};
}

inline ApproxReal interval_min(const ApproxReal& x, const ApproxReal& y) {
  return from_bounds(std::min(x.low(), y.low()), std::min(x.high(), y.high()));
}

}  // namespace gasket
