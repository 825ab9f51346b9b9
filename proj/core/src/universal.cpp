#include "gasket/universal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gasket/euclid.hpp"
#include "gasket/metric.hpp"

namespace gasket {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::function<Point(const Address&)> fold_map(const Algebra& alg) {
  auto eval = [alg](const Address& x) {
    Point p = alg.space.corner(x.corner);
    for (std::size_t i = x.word.size(); i > 0; --i) {
      p = alg.apply(x.word[i - 1], p);
    }
    return p;
  };
  return [alg, eval](const Address& x) {
    Point result = eval(x);
    if (const auto variant = glued_variant(x)) {
      const Point other = eval(*variant);
      if (!(alg.space.dist(result, other) <= alg.glue_tol)) {
        throw std::runtime_error("algebra not well defined on glued pair " +
                                 format_address(x) + " ~ " +
                                 format_address(*variant) + " (" + alg.name +
                                 ")");
      }
    }
    return result;
  };
}

IterationState start_iteration(const Coalgebra& co, Point x) {
  if (co.space.contains && !co.space.contains(x)) {
    throw std::invalid_argument("start_iteration: not in carrier (" +
                                co.name + ")");
  }
  return IterationState{{}, std::move(x)};
}

void unfold_step(const Coalgebra& co, IterationState& state) {
  TensorPoint next = co.structure(state.current);
  if (co.space.contains && !co.space.contains(next.inner)) {
    throw std::runtime_error(
        "unfold_step: structure map left the carrier of " + co.name +
        " at " + co.space.describe(next.inner));
  }
  state.emitted.push_back(next.copy);
  state.current = std::move(next.inner);
}

Address itinerary(const Coalgebra& co, const Point& x, std::size_t n,
                  Corner close) {
  IterationState state = start_iteration(co, x);
  for (std::size_t i = 0; i < n; ++i) unfold_step(co, state);
  return Address{std::move(state.emitted), close};
}

AddressStream unfold(const Coalgebra& co, const Point& x) {
  auto state = std::make_shared<IterationState>(start_iteration(co, x));
  return AddressStream::from_stepper([co, state]() {
    unfold_step(co, *state);
    return state->emitted.back();
  });
}

ApproxReal tensor_stream_distance(Letter m1, const AddressStream& p,
                                  Letter m2, const AddressStream& q,
                                  double tol) {
  if (!(tol > 0)) {
    throw std::invalid_argument(
        "tensor_stream_distance: tolerance must be positive");
  }
  if (m1 == m2) return stream_distance(p, q, tol).half();
  const double inner = tol / 2;
  CornerDists<ApproxReal> dp, dq;
  for (Corner z : all_corners) {
    dp[index(z)] = stream_distance(p, corner_stream(z), inner);
    dq[index(z)] = stream_distance(q, corner_stream(z), inner);
  }
  return tensor_distance<ApproxReal>(m1, dp, m2, dq, ApproxReal::exact(0));
}

SquareReport check_square(const Coalgebra& co, std::size_t samples, double tol,
                          std::uint64_t seed, bool negative_control) {
  SquareReport report;
  report.coalgebra = co.name;
  report.samples = samples;
  report.tolerance = tol;
  report.passed = true;
  bool first = true;

  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const Point x = co.space.sample(rng);
    auto [head, rest] = split_head(unfold(co, x));
    if (negative_control) {
      head = Letter::a;
      rest = corner_stream(Corner::T);
    }
    const TensorPoint step = co.structure(x);
    const AddressStream unfolded_step = unfold(co, step.inner);
    const ApproxReal gap =
        tensor_stream_distance(head, rest, step.copy, unfolded_step, tol);
    if (first || gap.low() > report.worst_low) report.worst_low = gap.low();
    first = false;
    if (gap.low() > 0) {
      report.passed = false;
      if (report.witnesses.size() < 8) {
        report.witnesses.push_back({co.space.describe(x), to_char(head),
                                    to_char(step.copy), gap.low(),
                                    gap.high()});
      }
    }
  }
  return report;
}

std::string to_json_string(const SquareReport& report) {
  nlohmann::json j;
  j["schema"] = 1;
  j["coalgebra"] = report.coalgebra;
  j["samples"] = report.samples;
  j["tolerance"] = report.tolerance;
  j["passed"] = report.passed;
  j["worst_low"] = report.worst_low;
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : report.witnesses) {
    j["witnesses"].push_back({{"point", w.point},
                              {"left_head", std::string(1, w.left_head)},
                              {"right_head", std::string(1, w.right_head)},
                              {"low", w.low},
                              {"high", w.high}});
  }
  return j.dump(2);
}

ShortnessReport check_short_preservation(
    const Coalgebra& co, std::size_t samples, double tol, std::uint64_t seed,
    const std::vector<std::pair<Point, Point>>& probes) {
  ShortnessReport report;
  report.coalgebra = co.name;
  report.samples = samples;
  report.tolerance = tol;
  report.structure_report = check_regularity(
      structure_view(co), MapClass::short_map(), samples, seed, probes);
  report.precondition_passed = report.structure_report.passed;
  if (!report.precondition_passed) {
    report.passed = false;
    return report;
  }

  std::mt19937_64 rng(seed + 1);
  report.passed = true;
  bool first = true;
  for (std::size_t i = 0; i < samples; ++i) {
    const Point x = co.space.sample(rng);
    const Point y = co.space.sample(rng);
    const double dx = co.space.dist(x, y);
    const ApproxReal ds = stream_distance(unfold(co, x), unfold(co, y), tol);
    const double excess = ds.high() - dx;
    if (first || excess > report.max_excess) report.max_excess = excess;
    first = false;
    if (excess > tol) {
      report.passed = false;
      if (report.witnesses.size() < 8) {
        report.witnesses.push_back({co.space.describe(x), co.space.describe(y),
                                    dx, ds.high()});
      }
    }
  }
  return report;
}

std::string to_json_string(const ShortnessReport& report) {
  nlohmann::json j;
  j["schema"] = 1;
  j["coalgebra"] = report.coalgebra;
  j["samples"] = report.samples;
  j["tolerance"] = report.tolerance;
  j["precondition_passed"] = report.precondition_passed;
  j["structure_map"] = nlohmann::json::parse(
      to_json_string(report.structure_report));
  j["passed"] = report.passed;
  j["max_excess"] = report.max_excess;
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : report.witnesses) {
    j["witnesses"].push_back(
        {{"x", w.x}, {"y", w.y}, {"dx", w.dx}, {"d_high", w.d_high}});
  }
  return j.dump(2);
}

std::vector<BlowupRow> blowup_table(int j, int depth) {
  if (j < 4) {
    throw std::invalid_argument("blowup: scale must be at least 4");
  }
  if (depth < 1 || depth > 20) {
    throw std::invalid_argument("blowup: depth must be between 1 and 20");
  }
  const Coalgebra co = cantor_coalgebra(j);
  const double tol = std::ldexp(1.0, -(depth + 12));
  std::vector<BlowupRow> rows;
  rows.reserve(static_cast<std::size_t>(depth));
  double xn = 0;
  double step = 1.0;
  for (int n = 1; n <= depth; ++n) {
    step /= j;  // exact for the power-of-two scales
    xn += step;
    const double yn = xn + step;
    BlowupRow row;
    row.n = n;
    row.d_c = yn - xn;
    row.d_s = stream_distance(unfold(co, Point2{xn, 0}),
                              unfold(co, Point2{yn, 0}), tol);
    row.ratio = row.d_s.value / row.d_c;
    rows.push_back(row);
  }
  return rows;
}

std::string blowup_csv(const std::vector<BlowupRow>& rows) {
  std::string out = "n,d_C,d_S_lo,d_S_hi,ratio\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n);
    out += ',';
    out += fmt(row.d_c);
    out += ',';
    out += fmt(row.d_s.low());
    out += ',';
    out += fmt(row.d_s.high());
    out += ',';
    out += fmt(row.ratio);
    out += '\n';
  }
  return out;
}

TripointedSpace cantor_space() {
  TripointedSpace out;
  out.name = "C";
  out.dist = [](const Point& p, const Point& q) {
    return euclid_distance(std::any_cast<const Point2&>(p),
                           std::any_cast<const Point2&>(q));
  };
  out.corners = {Point(gasket_vertex(Corner::T)), Point(Point2{0, 0}),
                 Point(Point2{1, 0})};
  out.sample = [](std::mt19937_64& rng) {
    if (rng() % 16 == 0) return Point(gasket_vertex(Corner::T));
    const double x = static_cast<double>(rng() >> 11) * 0x1p-53;
    return Point(Point2{x, 0});
  };
  out.describe = [](const Point& p) {
    const auto& pt = std::any_cast<const Point2&>(p);
    return "(" + fmt(pt.x) + ", " + fmt(pt.y) + ")";
  };
  out.contains = [](const Point& p) {
    const auto* pt = std::any_cast<Point2>(&p);
    if (pt == nullptr) return false;
    const Point2 apex = gasket_vertex(Corner::T);
    if (std::abs(pt->x - apex.x) <= 1e-12 && std::abs(pt->y - apex.y) <= 1e-12) {
      return true;
    }
    return std::abs(pt->y) <= 1e-12 && pt->x >= -1e-12 && pt->x <= 1 + 1e-12;
  };
  return out;
}

Coalgebra cantor_coalgebra(int j) {
  if (j < 4) {
    throw std::invalid_argument("cantor_coalgebra: scale must be at least 4");
  }
  Coalgebra out;
  out.name = "cantor(" + std::to_string(j) + ")";
  out.space = cantor_space();
  const double s = j;
  out.structure = [s](const Point& p) {
    const auto& pt = std::any_cast<const Point2&>(p);
    if (pt.y > 1e-12) return TensorPoint{Letter::a, p};  // apex stays put
    const double x = pt.x;
    if (x <= 1 / s) return TensorPoint{Letter::b, Point(Point2{0, 0})};
    if (x <= 2 / s) return TensorPoint{Letter::b, Point(Point2{s * x - 1, 0})};
    if (x <= 1 - 2 / s) return TensorPoint{Letter::b, Point(Point2{1, 0})};
    if (x <= 1 - 1 / s) {
      return TensorPoint{Letter::c, Point(Point2{s * x - (s - 2), 0})};
    }
    return TensorPoint{Letter::c, Point(Point2{1, 0})};
  };
  out.regularity = "lipschitz(" + fmt(j / 2.0) + ")";
  return out;
}

Coalgebra corner_coalgebra() {
  Coalgebra out;
  out.name = "corners";
  out.space = corner_space();
  out.structure = [](const Point& p) {
    const Corner z = std::any_cast<Corner>(p);
    return TensorPoint{letter_of(z), p};
  };
  out.regularity = "short";
  return out;
}

Algebra gasket_algebra() {
  Algebra out;
  out.name = "gasket";
  out.space = gasket_space();
  out.apply = [](Letter m, const Point& p) {
    return Point(sigma_apply(m, std::any_cast<const ExactPoint&>(p)));
  };
  // Contractions on exact coordinates agree on glued pairs exactly.
  out.glue_tol = 0;
  return out;
}

Algebra address_algebra() {
  Algebra out;
  out.name = "addresses";
  out.space = address_space();
  out.apply = [](Letter m, const Point& p) {
    return Point(prepend(m, std::any_cast<const Address&>(p)));
  };
  // Distances are exact dyadics, so gluing must agree exactly.
  out.glue_tol = 0;
  return out;
}

Coalgebra coalgebra_from_config(const std::string& spec) {
  const auto fail = [&spec]() -> Coalgebra {
    throw std::invalid_argument("unknown coalgebra \"" + spec + "\"");
  };
  if (spec.empty()) return fail();
  if (spec.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(spec);
    } catch (const nlohmann::json::parse_error&) {
      throw std::invalid_argument("coalgebra config is not valid JSON");
    }
    if (!j.is_object() || j.size() != 1) return fail();
    const auto& [key, params] = *j.items().begin();
    if (key == "gasket") return gasket_coalgebra();
    if (key == "corners") return corner_coalgebra();
    if (key == "cantor") {
      return cantor_coalgebra(params.value("j", 8));
    }
    return fail();
  }
  if (spec == "gasket") return gasket_coalgebra();
  if (spec == "corners") return corner_coalgebra();
  if (spec == "cantor") return cantor_coalgebra(8);
  if (spec.rfind("cantor:", 0) == 0) {
    int scale = 0;
    try {
      scale = std::stoi(spec.substr(7));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad cantor scale in \"" + spec + "\"");
    }
    return cantor_coalgebra(scale);
  }
  return fail();
}

}  // namespace gasket
