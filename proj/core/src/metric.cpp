#include "gasket/metric.hpp"

#include <algorithm>

namespace gasket {

namespace {

CornerDists<Dyadic> discrete_corner_dists(Corner z) {
  CornerDists<Dyadic> out;
  for (Corner w : all_corners) {
    out[index(w)] = corner_gap(z, w) ? Dyadic::one() : Dyadic::zero();
  }
  return out;
}

}  // namespace

CornerDists<Dyadic> corner_distances(const Address& x) {
  CornerDists<Dyadic> cur = discrete_corner_dists(x.corner);
  // Peel letters from the innermost one outwards; at each level the corner
  // named z is letter_of(z) applied to the lower-level corner.
  for (std::size_t i = x.word.size(); i > 0; --i) {
    const Letter m = x.word[i - 1];
    CornerDists<Dyadic> next;
    for (Corner z : all_corners) {
      next[index(z)] = tensor_distance(m, cur, letter_of(z),
                                       discrete_corner_dists(z),
                                       cur[index(z)]);
    }
    cur = next;
  }
  return cur;
}

Dyadic address_distance(const Address& x, const Address& y) {
  const std::size_t level = std::max(x.level(), y.level());
  const Address px = pad(x, level);
  const Address py = pad(y, level);
  std::size_t i = 0;
  while (i < level && px.word[i] == py.word[i]) ++i;
  if (i == level) {
    if (px.corner == py.corner) return Dyadic::zero();
    return Dyadic::pow2(static_cast<int>(level));
  }
  const Address sx{{px.word.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                    px.word.end()},
                   px.corner};
  const Address sy{{py.word.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                    py.word.end()},
                   py.corner};
  const Dyadic at_split = tensor_distance(px.word[i], corner_distances(sx),
                                          py.word[i], corner_distances(sy),
                                          Dyadic::zero());
  return at_split * Dyadic::pow2(static_cast<int>(i));
}

Dyadic common_prefix_bound(const Address& x, const Address& y) {
  const std::size_t level = std::max(x.level(), y.level());
  const Address px = pad(x, level);
  const Address py = pad(y, level);
  std::size_t i = 0;
  while (i < level && px.word[i] == py.word[i]) ++i;
  return Dyadic::pow2(static_cast<int>(i));
}

}  // namespace gasket
