#include "gasket/oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gasket {

namespace {

struct Vertex {
  Letter copy;
  Address inner;                 // point of the level-(k-1) space
  std::optional<Corner> corner;  // set for the nine corner tuples
};

class OracleContext {
 public:
  Dyadic distance(const Address& x, const Address& y) {
    const std::size_t level = x.level();
    if (level == 0) {
      return corner_gap(x.corner, y.corner) ? Dyadic::one() : Dyadic::zero();
    }
    auto key = std::make_pair(format_address(x), format_address(y));
    if (key.second < key.first) std::swap(key.first, key.second);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::vector<Vertex> verts;
    verts.reserve(11);
    for (Letter m : all_letters) {
      for (Corner z : all_corners) {
        verts.push_back({m, padded_corner(z, level - 1), z});
      }
    }
    const auto tail = [](const Address& a) {
      return Address{{a.word.begin() + 1, a.word.end()}, a.corner};
    };
    verts.push_back({x.word[0], tail(x), std::nullopt});
    verts.push_back({y.word[0], tail(y), std::nullopt});
    const std::size_t ix = verts.size() - 2;
    const std::size_t iy = verts.size() - 1;

    const std::size_t n = verts.size();
    const Dyadic inf = Dyadic::make(8, 0);  // above any path weight
    std::vector<std::vector<Dyadic>> w(n, std::vector<Dyadic>(n, inf));
    for (std::size_t i = 0; i < n; ++i) {
      w[i][i] = Dyadic::zero();
      for (std::size_t j = i + 1; j < n; ++j) {
        Dyadic weight = Dyadic::one();  // base cost of changing copies
        if (verts[i].copy == verts[j].copy) {
          weight = distance(verts[i].inner, verts[j].inner).half();
        } else if (verts[i].corner && verts[j].corner) {
          const auto partner =
              glued_partner(verts[i].copy, *verts[i].corner);
          if (partner && partner->first == verts[j].copy &&
              partner->second == *verts[j].corner) {
            weight = Dyadic::zero();
          }
        }
        w[i][j] = weight;
        w[j][i] = weight;
      }
    }

    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const Dyadic through = w[i][k] + w[k][j];
          if (through < w[i][j]) w[i][j] = through;
        }
      }
    }

    const Dyadic result = w[ix][iy];
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::map<std::pair<std::string, std::string>, Dyadic> memo_;
};

}  // namespace

Dyadic oracle_distance(const Address& x, const Address& y) {
  const std::size_t level = std::max(x.level(), y.level());
  if (level > kOracleLevelCap) {
    throw std::invalid_argument("oracle_distance: oracle too large");
  }
  OracleContext ctx;
  return ctx.distance(pad(x, level), pad(y, level));
}

}  // namespace gasket
