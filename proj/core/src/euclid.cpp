#include "gasket/euclid.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gasket/metric.hpp"

namespace gasket {

namespace {

const double kSqrt3 = std::sqrt(3.0);

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.7f", v);
  return buf;
}

struct ExactOffset {
  Dyadic x;
  Dyadic y_sqrt3;
};

ExactOffset sigma_offset(Letter m) {
  switch (m) {
    case Letter::a: return {Dyadic::make(1, 2), Dyadic::make(1, 2)};
    case Letter::b: return {Dyadic::zero(), Dyadic::zero()};
    case Letter::c: return {Dyadic::make(1, 1), Dyadic::zero()};
  }
  return {};
}

ExactPoint exact_vertex(Corner z) {
  switch (z) {
    case Corner::T: return {Dyadic::make(1, 1), Dyadic::make(1, 1)};
    case Corner::L: return {Dyadic::zero(), Dyadic::zero()};
    case Corner::R: return {Dyadic::one(), Dyadic::zero()};
  }
  return {};
}

Dyadic abs_diff(const Dyadic& a, const Dyadic& b) {
  return a <= b ? b - a : a - b;
}

std::string describe_point(const Point2& p) {
  return "(" + fmt(p.x) + ", " + fmt(p.y) + ")";
}

}  // namespace

double euclid_distance(const Point2& p, const Point2& q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

Point2 to_point2(const ExactPoint& p) {
  return {p.x.to_double(), p.y_sqrt3.to_double() * kSqrt3};
}

Point2 gasket_vertex(Corner z) { return to_point2(exact_vertex(z)); }

ExactPoint exact_gasket_vertex(Corner z) { return exact_vertex(z); }

Point2 sigma_apply(Letter m, const Point2& p) {
  const ExactOffset off = sigma_offset(m);
  return {p.x / 2 + off.x.to_double(),
          p.y / 2 + off.y_sqrt3.to_double() * kSqrt3};
}

ExactPoint sigma_apply(Letter m, const ExactPoint& p) {
  const ExactOffset off = sigma_offset(m);
  return {p.x.half() + off.x, p.y_sqrt3.half() + off.y_sqrt3};
}

ExactPoint snap_to_lattice(const Point2& p) {
  if (!in_triangle(p, 1e-9)) {
    throw std::invalid_argument("snap_to_lattice: not in the triangle " +
                                describe_point(p));
  }
  const double scale = std::ldexp(1.0, 48);
  const std::int64_t cap = std::int64_t{1} << 48;
  std::int64_t xn = std::llround(std::fmax(p.x, 0.0) * scale);
  if (xn > cap) xn = cap;
  std::int64_t yn = std::llround(std::fmax(p.y, 0.0) / kSqrt3 * scale);
  const std::int64_t ycap = xn < cap - xn ? xn : cap - xn;
  if (yn > ycap) yn = ycap;
  return {Dyadic::make(xn, 48), Dyadic::make(yn, 48)};
}

ExactPoint address_to_point_exact(const Address& address) {
  ExactPoint p = exact_vertex(address.corner);
  for (std::size_t i = address.word.size(); i > 0; --i) {
    const ExactOffset off = sigma_offset(address.word[i - 1]);
    p.x = p.x.half() + off.x;
    p.y_sqrt3 = p.y_sqrt3.half() + off.y_sqrt3;
  }
  return p;
}

Dyadic exact_squared_distance(const ExactPoint& p, const ExactPoint& q) {
  const Dyadic dx = abs_diff(p.x, q.x);
  const Dyadic dy = abs_diff(p.y_sqrt3, q.y_sqrt3);
  return dx * dx + Dyadic::make(3, 0) * (dy * dy);
}

Point2 address_to_point(const Address& address) {
  const ExactPoint p = address_to_point_exact(address);
  return {p.x.to_double(), p.y_sqrt3.to_double() * kSqrt3};
}

bool in_triangle(const Point2& p, double slack) {
  return p.y >= -slack && p.y <= kSqrt3 * p.x + 2 * slack &&
         p.y <= kSqrt3 * (1 - p.x) + 2 * slack;
}

bool in_triangle(const ExactPoint& p) {
  // y >= 0 holds by construction; y <= sqrt3 * x and y <= sqrt3 * (1 - x)
  // divide through by sqrt3.  The sum form avoids a negative difference.
  return p.y_sqrt3 <= p.x && p.x + p.y_sqrt3 <= Dyadic::one();
}

std::pair<Letter, Point2> sigma_step(const Point2& p) {
  if (!in_triangle(p)) {
    throw std::invalid_argument("sigma_step: not in carrier " +
                                describe_point(p));
  }
  // Halfplane order implements the least-letter rule at glued boundaries.
  if (p.y >= kSqrt3 * 0.25) {
    return {Letter::a, {2 * p.x - 0.5, 2 * p.y - kSqrt3 * 0.5}};
  }
  if (p.x <= 0.5) {
    return {Letter::b, {2 * p.x, 2 * p.y}};
  }
  return {Letter::c, {2 * p.x - 1, 2 * p.y}};
}

std::pair<Letter, ExactPoint> sigma_step(const ExactPoint& p) {
  if (!in_triangle(p)) {
    throw std::invalid_argument("sigma_step: not in carrier " +
                                describe_point(to_point2(p)));
  }
  const Dyadic quarter = Dyadic::make(1, 2);
  const Dyadic half = Dyadic::make(1, 1);
  // 2x - c is computed as (x - c/2) * 2; the tests keep every difference
  // non-negative (y >= 1/4 forces x >= 1/4 inside the triangle).
  if (p.y_sqrt3 >= quarter) {
    return {Letter::a,
            {(p.x - quarter).twice(), (p.y_sqrt3 - quarter).twice()}};
  }
  if (p.x <= half) {
    return {Letter::b, {p.x.twice(), p.y_sqrt3.twice()}};
  }
  return {Letter::c, {(p.x - half).twice(), p.y_sqrt3.twice()}};
}

TripointedSpace gasket_space() {
  TripointedSpace out;
  out.name = "S";
  out.dist = [](const Point& p, const Point& q) {
    return euclid_distance(to_point2(std::any_cast<const ExactPoint&>(p)),
                           to_point2(std::any_cast<const ExactPoint&>(q)));
  };
  out.corners = {Point(exact_vertex(Corner::T)), Point(exact_vertex(Corner::L)),
                 Point(exact_vertex(Corner::R))};
  out.sample = [](std::mt19937_64& rng) {
    return Point(address_to_point_exact(sample_address(12, rng)));
  };
  out.describe = [](const Point& p) {
    return describe_point(to_point2(std::any_cast<const ExactPoint&>(p)));
  };
  out.contains = [](const Point& p) {
    const auto* pt = std::any_cast<ExactPoint>(&p);
    return pt != nullptr && in_triangle(*pt);
  };
  return out;
}

Coalgebra gasket_coalgebra() {
  Coalgebra out;
  out.name = "gasket";
  out.space = gasket_space();
  out.structure = [](const Point& p) {
    const auto [m, rest] = sigma_step(std::any_cast<const ExactPoint&>(p));
    return TensorPoint{m, Point(rest)};
  };
  out.regularity = "continuous";
  return out;
}

DistortionReport distortion_report(std::size_t max_level) {
  DistortionReport report;
  report.max_level = max_level;
  bool first = true;
  for (std::size_t level = 1; level <= max_level; ++level) {
    const auto points = enumerate_addresses(level);
    std::vector<Point2> located(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      located[i] = address_to_point(points[i]);
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        // Distinct canonical addresses of one level are distinct points.
        const double dg = address_distance(points[i], points[j]).to_double();
        const double de = euclid_distance(located[i], located[j]);
        const double ratio = de / dg;
        ++report.pairs;
        const std::string pair_name =
            format_address(points[i]) + " vs " + format_address(points[j]);
        if (first || ratio < report.min_ratio) {
          report.min_ratio = ratio;
          report.min_pair = pair_name;
        }
        if (first || ratio > report.max_ratio) {
          report.max_ratio = ratio;
          report.max_pair = pair_name;
        }
        first = false;
      }
    }
  }
  return report;
}

std::string to_json_string(const DistortionReport& report) {
  nlohmann::json j;
  j["schema"] = 1;
  j["max_level"] = report.max_level;
  j["pairs"] = report.pairs;
  j["min_ratio"] = report.min_ratio;
  j["max_ratio"] = report.max_ratio;
  j["min_pair"] = report.min_pair;
  j["max_pair"] = report.max_pair;
  return j.dump(2);
}

std::string render_svg(std::size_t depth, const std::string& fill) {
  if (depth > kRenderDepthCap) {
    throw std::invalid_argument("render_svg: depth above cap");
  }
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" "
      "viewBox=\"0 0 1 0.8660254\">\n<path fill=\"" +
      fill + "\" d=\"";
  std::vector<Letter> word(depth, Letter::a);
  const Dyadic half = Dyadic::make(1, 1);
  for (;;) {
    for (Corner z : all_corners) {
      const ExactPoint p = address_to_point_exact(Address{word, z});
      // Flip y so the triangle sits upright in SVG's downward axis; the
      // apex maps to 0 exactly because coefficients never exceed 1/2.
      const double sx = p.x.to_double();
      const double sy = (half - p.y_sqrt3).to_double() * kSqrt3;
      out += index(z) == 0 ? "M" : "L";
      out += fmt_fixed(sx);
      out += ' ';
      out += fmt_fixed(sy);
    }
    out += "Z";
    std::size_t i = depth;
    while (i > 0 && word[i - 1] == Letter::c) {
      word[i - 1] = Letter::a;
      --i;
    }
    if (i == 0) break;
    word[i - 1] = static_cast<Letter>(index(word[i - 1]) + 1);
  }
  out += "\"/>\n</svg>\n";
  return out;
}

std::string render_points(std::size_t depth) {
  std::string out = "word,corner,x,y\n";
  for (const Address& x : enumerate_addresses(depth)) {
    const Point2 p = address_to_point(x);
    std::string word;
    for (Letter m : x.word) word += to_char(m);
    out += word;
    out += ',';
    out += to_char(x.corner);
    out += ',';
    out += fmt(p.x);
    out += ',';
    out += fmt(p.y);
    out += '\n';
  }
  return out;
}

}  // namespace gasket
