#pragma once

#include "gasket/address.hpp"
#include "gasket/dyadic.hpp"

namespace gasket {

inline constexpr std::size_t kOracleLevelCap = 8;

// Reference distance computed straight from the quotient-metric definition,
// with none of the closed-form route analysis address_distance uses: per
// level, build the weighted graph whose vertices are the nine corner tuples
// of that level plus the two query points, connect vertices in the same copy
// at half the recursively computed lower-level distance, glued corner tuples
// at 0, everything else across copies at 1, and take all-pairs shortest
// paths.  Subproblems are memoized per call.
//
// Agrees exactly with address_distance; throws for common levels above the
// cap ("oracle too large").
Dyadic oracle_distance(const Address& x, const Address& y);

}  // namespace gasket
