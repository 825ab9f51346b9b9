#include "gasket/space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gasket/metric.hpp"

namespace gasket {

namespace {

CornerDists<double> corner_dists_of(const TripointedSpace& base,
                                    const Point& p) {
  CornerDists<double> out;
  for (Corner z : all_corners) {
    out[index(z)] = base.dist(p, base.corner(z));
  }
  return out;
}

}  // namespace

TripointedSpace tensor_space(const TripointedSpace& base) {
  TripointedSpace out;
  out.name = "M(x)" + base.name;
  out.dist = [base](const Point& p, const Point& q) {
    const auto& tp = std::any_cast<const TensorPoint&>(p);
    const auto& tq = std::any_cast<const TensorPoint&>(q);
    const double same = tp.copy == tq.copy ? base.dist(tp.inner, tq.inner) : 0;
    return tensor_distance<double>(tp.copy, corner_dists_of(base, tp.inner),
                                   tq.copy, corner_dists_of(base, tq.inner),
                                   same);
  };
  out.corners = {Point(TensorPoint{Letter::a, base.corner(Corner::T)}),
                 Point(TensorPoint{Letter::b, base.corner(Corner::L)}),
                 Point(TensorPoint{Letter::c, base.corner(Corner::R)})};
  out.sample = [base](std::mt19937_64& rng) {
    const auto m = static_cast<Letter>(rng() % 3);
    return Point(TensorPoint{m, base.sample(rng)});
  };
  out.describe = [base](const Point& p) {
    const auto& tp = std::any_cast<const TensorPoint&>(p);
    return std::string(1, to_char(tp.copy)) + "(x)" + base.describe(tp.inner);
  };
  if (base.contains) {
    out.contains = [base](const Point& p) {
      const auto* tp = std::any_cast<TensorPoint>(&p);
      return tp != nullptr && base.contains(tp->inner);
    };
  }
  return out;
}

PointedMap tensor_map(const PointedMap& f) {
  for (Corner z : all_corners) {
    const double gap = f.codomain.dist(f.apply(f.domain.corner(z)),
                                       f.codomain.corner(z));
    if (!(gap <= kRegularitySlack)) {
      throw std::invalid_argument("tensor_map: not a tripointed morphism (" +
                                  f.name + " moves corner " +
                                  std::string(1, to_char(z)) + ")");
    }
  }
  PointedMap out;
  out.name = "M(x)" + f.name;
  out.domain = tensor_space(f.domain);
  out.codomain = tensor_space(f.codomain);
  auto apply = f.apply;
  out.apply = [apply](const Point& p) {
    const auto& tp = std::any_cast<const TensorPoint&>(p);
    return Point(TensorPoint{tp.copy, apply(tp.inner)});
  };
  return out;
}

TripointedSpace discrete_wrapper(const TripointedSpace& base) {
  TripointedSpace out = base;
  out.name = "disc(" + base.name + ")";
  auto dist = base.dist;
  out.dist = [dist](const Point& p, const Point& q) {
    return dist(p, q) == 0 ? 0.0 : 1.0;
  };
  return out;
}

std::string MapClass::describe() const {
  switch (kind) {
    case Kind::Short:
      return "short";
    case Kind::Lipschitz:
      return "lipschitz(" + std::to_string(constant) + ")";
    case Kind::Continuous:
      return "continuous";
  }
  return "?";
}

MapView as_view(const PointedMap& f) {
  return MapView{f.name, f.domain, f.codomain.dist, f.apply};
}

MapView structure_view(const Coalgebra& co) {
  const TripointedSpace glued = tensor_space(co.space);
  auto structure = co.structure;
  return MapView{co.name + ".structure", co.space, glued.dist,
                 [structure](const Point& p) {
                   return Point(structure(p));
                 }};
}

RegularityReport check_regularity(
    const MapView& f, const MapClass& cls, std::size_t samples,
    std::uint64_t seed, const std::vector<std::pair<Point, Point>>& probes) {
  RegularityReport report;
  report.map_name = f.name;
  report.class_name = cls.describe();
  report.samples = samples + probes.size();
  report.tolerance = kRegularitySlack;

  std::mt19937_64 rng(seed);
  std::vector<std::pair<double, double>> measured;  // (dx, dy)
  measured.reserve(report.samples);

  const auto measure = [&](const Point& x, const Point& y) {
    const double dx = f.domain.dist(x, y);
    const double dy = f.codomain_dist(f.apply(x), f.apply(y));
    measured.emplace_back(dx, dy);
    if (dx > 0) report.max_ratio = std::max(report.max_ratio, dy / dx);
    const double bound = cls.kind == MapClass::Kind::Lipschitz
                             ? cls.constant * dx
                             : dx;
    if (cls.kind != MapClass::Kind::Continuous &&
        dy > bound + kRegularitySlack && report.witnesses.size() < 8) {
      report.witnesses.push_back(
          {f.domain.describe(x), f.domain.describe(y), dx, dy});
    }
  };

  for (const auto& [x, y] : probes) measure(x, y);
  for (std::size_t i = 0; i < samples; ++i) {
    measure(f.domain.sample(rng), f.domain.sample(rng));
  }

  if (cls.kind == MapClass::Kind::Continuous) {
    for (double eps : cls.epsilons) {
      RegularityReport::DeltaRow row;
      row.epsilon = eps;
      for (int k = 0; k <= 30 && !row.found; ++k) {
        const double delta = std::ldexp(1.0, -k);
        bool ok = true;
        for (const auto& [dx, dy] : measured) {
          if (dx < delta && dy + kRegularitySlack >= eps) {
            ok = false;
            break;
          }
        }
        if (ok) {
          row.delta = delta;
          row.found = true;
        }
      }
      report.deltas.push_back(row);
    }
    report.passed = std::all_of(report.deltas.begin(), report.deltas.end(),
                                [](const auto& row) { return row.found; });
  } else {
    report.passed = report.witnesses.empty();
  }
  return report;
}

std::string to_json_string(const RegularityReport& report) {
  nlohmann::json j;
  j["schema"] = 1;
  j["map"] = report.map_name;
  j["class"] = report.class_name;
  j["samples"] = report.samples;
  j["tolerance"] = report.tolerance;
  j["passed"] = report.passed;
  j["max_ratio"] = report.max_ratio;
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : report.witnesses) {
    j["witnesses"].push_back(
        {{"x", w.x}, {"y", w.y}, {"dx", w.dx}, {"dy", w.dy}});
  }
  if (!report.deltas.empty()) {
    j["deltas"] = nlohmann::json::array();
    for (const auto& row : report.deltas) {
      j["deltas"].push_back({{"epsilon", row.epsilon},
                             {"delta", row.delta},
                             {"found", row.found}});
    }
  }
  return j.dump(2);
}

TripointedSpace corner_space() {
  TripointedSpace out;
  out.name = "I";
  out.dist = [](const Point& p, const Point& q) {
    return std::any_cast<Corner>(p) == std::any_cast<Corner>(q) ? 0.0 : 1.0;
  };
  out.corners = {Point(Corner::T), Point(Corner::L), Point(Corner::R)};
  out.sample = [](std::mt19937_64& rng) {
    return Point(static_cast<Corner>(rng() % 3));
  };
  out.describe = [](const Point& p) {
    return std::string(1, to_char(std::any_cast<Corner>(p)));
  };
  out.contains = [](const Point& p) {
    return std::any_cast<Corner>(&p) != nullptr;
  };
  return out;
}

Address sample_address(std::size_t level, std::mt19937_64& rng) {
  Address x;
  x.word.reserve(level);
  for (std::size_t i = 0; i < level; ++i) {
    x.word.push_back(static_cast<Letter>(rng() % 3));
  }
  x.corner = static_cast<Corner>(rng() % 3);
  return canonicalize(x);
}

TripointedSpace address_space(std::size_t sample_level) {
  TripointedSpace out;
  out.name = "G";
  out.dist = [](const Point& p, const Point& q) {
    return address_distance(std::any_cast<const Address&>(p),
                            std::any_cast<const Address&>(q))
        .to_double();
  };
  out.corners = {Point(corner_address(Corner::T)),
                 Point(corner_address(Corner::L)),
                 Point(corner_address(Corner::R))};
  out.sample = [sample_level](std::mt19937_64& rng) {
    return Point(sample_address(rng() % (sample_level + 1), rng));
  };
  out.describe = [](const Point& p) {
    return format_address(std::any_cast<const Address&>(p));
  };
  out.contains = [](const Point& p) {
    return std::any_cast<Address>(&p) != nullptr;
  };
  return out;
}

}  // namespace gasket
