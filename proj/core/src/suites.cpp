#include "gasket/suites.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>

#include "gasket/address.hpp"
#include "gasket/euclid.hpp"
#include "gasket/metric.hpp"
#include "gasket/oracle.hpp"
#include "gasket/space.hpp"
#include "gasket/stream.hpp"
#include "gasket/universal.hpp"

#include <nlohmann/json.hpp>

namespace gasket {
namespace {

// A check body returns an empty string on success and a description of the
// first violation otherwise.  Exceptions count as failures so one broken
// check cannot take the whole suite run down.
using CheckBody = std::function<std::string()>;

void run_check(std::vector<CheckResult>& out, const std::string& name,
               const CheckBody& body) {
  CheckResult r;
  r.name = name;
  try {
    std::string detail = body();
    r.passed = detail.empty();
    r.details = r.passed ? "ok" : detail;
  } catch (const std::exception& e) {
    r.passed = false;
    r.details = std::string("exception: ") + e.what();
  }
  out.push_back(std::move(r));
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

std::string brief(const RegularityReport& r) {
  std::string out = fmt("max ratio %.6g over %zu samples", r.max_ratio,
                        r.samples);
  if (!r.witnesses.empty()) {
    out += fmt("; first violation %s vs %s (dx %.6g, dy %.6g)",
               r.witnesses[0].x.c_str(), r.witnesses[0].y.c_str(),
               r.witnesses[0].dx, r.witnesses[0].dy);
  }
  return out;
}

Address random_raw_address(std::mt19937_64& rng, int max_level) {
  std::uniform_int_distribution<int> level_dist(0, max_level);
  std::uniform_int_distribution<int> three(0, 2);
  Address a;
  int level = level_dist(rng);
  for (int i = 0; i < level; ++i)
    a.word.push_back(static_cast<Letter>(three(rng)));
  a.corner = static_cast<Corner>(three(rng));
  return a;
}

// ---------------------------------------------------------------- metric ---

void metric_checks(std::vector<CheckResult>& out, std::mt19937_64& rng) {
  run_check(out, "distinguished points at distance one", [] {
    for (Corner y : {Corner::T, Corner::L, Corner::R})
      for (Corner z : {Corner::T, Corner::L, Corner::R}) {
        Dyadic d = address_distance(corner_address(y), corner_address(z));
        Dyadic want = y == z ? Dyadic::zero() : Dyadic::one();
        if (d != want)
          return fmt("d(%c,%c) = %s", to_char(y), to_char(z),
                     d.to_fraction().c_str());
      }
    return std::string();
  });

  run_check(out, "pinned distance values", [] {
    struct Case {
      const char* x;
      const char* y;
      const char* want;
    };
    const Case cases[] = {
        {"a:T", "b:L", "1"},        {"a:L", "c:R", "1"},
        {"a:R", "b:R", "1/2^1"},    {"aa:L", "aa:R", "1/2^2"},
        {"ab:L", "ba:T", "0"},      {"b:T", "a:L", "0"},
        {"ba:T", "ab:L", "0"},      {"a:T", "a:L", "1/2^1"},
    };
    for (const Case& c : cases) {
      Dyadic d = address_distance(parse_address(c.x), parse_address(c.y));
      if (d.to_fraction() != c.want)
        return fmt("d(%s,%s) = %s, want %s", c.x, c.y,
                   d.to_fraction().c_str(), c.want);
    }
    return std::string();
  });

  run_check(out, "iterate cardinalities 3,6,15,42,123", [] {
    const std::size_t want[] = {3, 6, 15, 42, 123};
    for (int n = 0; n < 5; ++n) {
      std::size_t got = enumerate_addresses(n).size();
      if (got != want[n]) return fmt("level %d has %zu points", n, got);
      if (got != canonical_count(n))
        return fmt("canonical_count(%d) = %zu disagrees", n,
                   canonical_count(n));
    }
    return std::string();
  });

  run_check(out, "oracle agreement, exhaustive to level 3", [] {
    for (int n = 0; n <= 3; ++n) {
      auto pts = enumerate_addresses(n);
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i; j < pts.size(); ++j) {
          Dyadic lhs = address_distance(pts[i], pts[j]);
          Dyadic rhs = oracle_distance(pts[i], pts[j]);
          if (lhs != rhs)
            return fmt("level %d: d(%s,%s) = %s but oracle says %s", n,
                       format_address(pts[i]).c_str(),
                       format_address(pts[j]).c_str(),
                       lhs.to_fraction().c_str(), rhs.to_fraction().c_str());
        }
    }
    return std::string();
  });

  run_check(out, "oracle agreement, sampled to level 6", [&rng] {
    for (int k = 0; k < 200; ++k) {
      Address x = canonicalize(random_raw_address(rng, 6));
      Address y = canonicalize(random_raw_address(rng, 6));
      Dyadic lhs = address_distance(x, y);
      Dyadic rhs = oracle_distance(x, y);
      if (lhs != rhs)
        return fmt("d(%s,%s) = %s but oracle says %s",
                   format_address(x).c_str(), format_address(y).c_str(),
                   lhs.to_fraction().c_str(), rhs.to_fraction().c_str());
    }
    return std::string();
  });

  run_check(out, "metric axioms on sampled triples", [&rng] {
    for (int k = 0; k < 400; ++k) {
      Address x = canonicalize(random_raw_address(rng, 6));
      Address y = canonicalize(random_raw_address(rng, 6));
      Address z = canonicalize(random_raw_address(rng, 6));
      Dyadic dxy = address_distance(x, y);
      Dyadic dyx = address_distance(y, x);
      if (dxy != dyx)
        return fmt("asymmetric: d(%s,%s)", format_address(x).c_str(),
                   format_address(y).c_str());
      if (dxy > Dyadic::one())
        return fmt("unbounded: d(%s,%s) = %s", format_address(x).c_str(),
                   format_address(y).c_str(), dxy.to_fraction().c_str());
      if ((dxy == Dyadic::zero()) != equivalent(x, y))
        return fmt("separation fails on (%s,%s)", format_address(x).c_str(),
                   format_address(y).c_str());
      Dyadic dxz = address_distance(x, z);
      Dyadic dzy = address_distance(z, y);
      if (dxy > dxz + dzy)
        return fmt("triangle fails on (%s,%s,%s)", format_address(x).c_str(),
                   format_address(y).c_str(), format_address(z).c_str());
    }
    return std::string();
  });

  run_check(out, "prefix scaling is an exact halving", [&rng] {
    for (int k = 0; k < 300; ++k) {
      Address x = canonicalize(random_raw_address(rng, 6));
      Address y = canonicalize(random_raw_address(rng, 6));
      Dyadic d = address_distance(x, y);
      for (Letter m : {Letter::a, Letter::b, Letter::c}) {
        Dyadic dm = address_distance(prepend(m, x), prepend(m, y));
        if (dm != d.half())
          return fmt("prepend %c breaks halving on (%s,%s)", to_char(m),
                     format_address(x).c_str(), format_address(y).c_str());
      }
    }
    return std::string();
  });

  run_check(out, "shared prefixes bound distances", [&rng] {
    for (int k = 0; k < 300; ++k) {
      Address x = canonicalize(random_raw_address(rng, 6));
      Address y = canonicalize(random_raw_address(rng, 6));
      if (address_distance(x, y) > common_prefix_bound(x, y))
        return fmt("bound fails on (%s,%s)", format_address(x).c_str(),
                   format_address(y).c_str());
    }
    return std::string();
  });
}

// --------------------------------------------------------------- functor ---

void functor_checks(std::vector<CheckResult>& out, std::mt19937_64& rng,
                    std::uint64_t seed) {
  run_check(out, "tensor of the corner space is the first iterate", [] {
    TripointedSpace fc = tensor_space(corner_space());
    for (Letter m1 : {Letter::a, Letter::b, Letter::c})
      for (Corner z1 : {Corner::T, Corner::L, Corner::R})
        for (Letter m2 : {Letter::a, Letter::b, Letter::c})
          for (Corner z2 : {Corner::T, Corner::L, Corner::R}) {
            double got = fc.dist(TensorPoint{m1, z1}, TensorPoint{m2, z2});
            Address x{{m1}, z1};
            Address y{{m2}, z2};
            double want = address_distance(x, y).to_double();
            if (std::fabs(got - want) > 1e-15)
              return fmt("d(%c:%c,%c:%c) = %.17g, want %.17g", to_char(m1),
                         to_char(z1), to_char(m2), to_char(z2), got, want);
          }
    return std::string();
  });

  run_check(out, "tensor keeps distinguished points apart", [] {
    for (const TripointedSpace& base :
         {corner_space(), address_space(4), gasket_space()}) {
      TripointedSpace ten = tensor_space(base);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          double d = ten.dist(ten.corners[i], ten.corners[j]);
          double want = i == j ? 0.0 : 1.0;
          if (std::fabs(d - want) > 1e-12)
            return fmt("%s: corner pair (%d,%d) at %.17g", ten.name.c_str(),
                       i, j, d);
        }
    }
    return std::string();
  });

  run_check(out, "tensor of a short map stays short", [seed] {
    PointedMap f;
    f.name = "locate";
    f.domain = address_space(8);
    f.codomain = gasket_space();
    f.apply = [](const Point& p) {
      return Point(address_to_point_exact(std::any_cast<const Address&>(p)));
    };
    PointedMap mf = tensor_map(f);
    RegularityReport base =
        check_regularity(as_view(f), MapClass::short_map(), 200, seed);
    RegularityReport lifted =
        check_regularity(as_view(mf), MapClass::short_map(), 200, seed + 1);
    if (!base.passed) return "base map failed: " + brief(base);
    if (!lifted.passed) return "tensored map failed: " + brief(lifted);
    return std::string();
  });

  run_check(out, "tensor over the discrete metric takes values 0, 1/2, 1",
            [&rng] {
    TripointedSpace disc = discrete_wrapper(address_space(6));
    TripointedSpace ten = tensor_space(disc);
    for (int k = 0; k < 300; ++k) {
      TensorPoint x{static_cast<Letter>(rng() % 3),
                    Point(sample_address(rng() % 7, rng))};
      TensorPoint y{static_cast<Letter>(rng() % 3),
                    Point(sample_address(rng() % 7, rng))};
      double d = ten.dist(x, y);
      if (d != 0.0 && d != 0.5 && d != 1.0)
        return fmt("value %.17g outside {0, 1/2, 1}", d);
    }
    return std::string();
  });

  run_check(out, "tensor map rejects a non-tripointed morphism", [] {
    PointedMap bad;
    bad.name = "swap";
    bad.domain = corner_space();
    bad.codomain = corner_space();
    bad.apply = [](const Point& p) {
      Corner z = std::any_cast<Corner>(p);
      return Point(z == Corner::L ? Corner::R
                                  : (z == Corner::R ? Corner::L : Corner::T));
    };
    try {
      tensor_map(bad);
    } catch (const std::invalid_argument&) {
      return std::string();
    }
    return std::string("corner-swapping map was accepted");
  });
}

// ------------------------------------------------------------ initiality ---

void initiality_checks(std::vector<CheckResult>& out, std::mt19937_64& rng) {
  run_check(out, "folding the address algebra is canonicalization", [&rng] {
    Algebra alg = address_algebra();
    auto h = fold_map(alg);
    for (int k = 0; k < 200; ++k) {
      Address raw = random_raw_address(rng, 8);
      Address want = canonicalize(raw);
      auto got = std::any_cast<Address>(h(raw));
      if (got != want)
        return fmt("%s folded to %s, want %s", format_address(raw).c_str(),
                   format_address(got).c_str(), format_address(want).c_str());
    }
    return std::string();
  });

  run_check(out, "folding the plane algebra locates addresses", [] {
    Algebra alg = gasket_algebra();
    auto h = fold_map(alg);
    for (int n = 0; n <= 5; ++n)
      for (const Address& x : enumerate_addresses(n)) {
        auto got = std::any_cast<ExactPoint>(h(x));
        ExactPoint want = address_to_point_exact(x);
        if (exact_squared_distance(got, want) != Dyadic::zero())
          return fmt("%s folds away from its location",
                     format_address(x).c_str());
      }
    return std::string();
  });

  run_check(out, "glued addresses land on the same plane point", [] {
    for (int n = 1; n <= 5; ++n)
      for (const Address& x : enumerate_addresses(n)) {
        auto variant = glued_variant(x);
        if (!variant) continue;
        ExactPoint p = address_to_point_exact(x);
        ExactPoint q = address_to_point_exact(*variant);
        if (exact_squared_distance(p, q) != Dyadic::zero())
          return fmt("%s and %s map to different points",
                     format_address(x).c_str(),
                     format_address(*variant).c_str());
      }
    return std::string();
  });

  run_check(out, "ill-defined algebra is rejected", [] {
    // Copy a is translated to the wrong spot, so the two names of a glued
    // point evaluate differently.
    Algebra bad = gasket_algebra();
    bad.name = "skewed plane";
    bad.glue_tol = 1e-9;
    bad.apply = [](Letter m, const Point& p) {
      ExactPoint v = sigma_apply(m, std::any_cast<const ExactPoint&>(p));
      if (m == Letter::a) v.x = v.x + Dyadic::make(1, 3);
      return Point(v);
    };
    try {
      auto h = fold_map(bad);
      h(parse_address("ab:L"));
    } catch (const std::runtime_error&) {
      return std::string();
    }
    return std::string("skewed algebra evaluated a glued pair inconsistently "
                       "without complaint");
  });
}

// -------------------------------------------------------------- finality ---

void finality_checks(std::vector<CheckResult>& out, std::mt19937_64& rng,
                     std::uint64_t seed, bool negative_control) {
  run_check(out, "pinned itineraries", [] {
    Coalgebra plane = gasket_coalgebra();
    Address left = itinerary(plane, Point(exact_gasket_vertex(Corner::L)), 3);
    if (format_address(left) != "bbb:T")
      return fmt("left vertex itinerary = %s", format_address(left).c_str());
    Address apex = itinerary(plane, Point(exact_gasket_vertex(Corner::T)), 4);
    if (format_address(apex) != "aaaa:T")
      return fmt("apex itinerary = %s", format_address(apex).c_str());
    Coalgebra cantor = cantor_coalgebra(8);
    Address eighth = itinerary(cantor, Point(Point2{0.125, 0.0}), 2);
    if (format_address(eighth) != "bb:T")
      return fmt("itinerary of 1/8 = %s", format_address(eighth).c_str());
    return std::string();
  });

  run_check(out, "itineraries are Cauchy with the dyadic modulus", [&rng, seed] {
    std::mt19937_64 sampler(seed ^ 0x9e3779b97f4a7c15ull);
    for (const Coalgebra& co : {gasket_coalgebra(), cantor_coalgebra(8)}) {
      for (int k = 0; k < 30; ++k) {
        Point x = co.space.sample(sampler);
        for (int t = 0; t < 4; ++t) {
          int p = static_cast<int>(rng() % 10) + 1;
          int q = static_cast<int>(rng() % 10) + 1;
          Dyadic d = address_distance(itinerary(co, x, p), itinerary(co, x, q));
          if (d > Dyadic::pow2(std::min(p, q)))
            return fmt("%s: modulus fails at depths %d,%d on %s",
                       co.name.c_str(), p, q, co.space.describe(x).c_str());
        }
      }
    }
    return std::string();
  });

  run_check(out, "closing corner choice is irrelevant in the limit", [seed] {
    std::mt19937_64 sampler(seed ^ 0xda942042e4dd58b5ull);
    Coalgebra plane = gasket_coalgebra();
    for (int k = 0; k < 30; ++k) {
      Point x = plane.space.sample(sampler);
      for (int n : {4, 8, 12}) {
        Address t = itinerary(plane, x, n, Corner::T);
        Address l = itinerary(plane, x, n, Corner::L);
        if (address_distance(t, l).to_double() > std::ldexp(1.0, 1 - n))
          return fmt("corner choice separates depth-%d itineraries of %s", n,
                     plane.space.describe(x).c_str());
      }
    }
    return std::string();
  });

  run_check(out, "corner points unfold to constant streams", [] {
    for (const Coalgebra& co : {gasket_coalgebra(), corner_coalgebra()}) {
      for (Corner z : {Corner::T, Corner::L, Corner::R}) {
        AddressStream s = unfold(co, co.space.corners[index(z)]);
        for (std::size_t i = 0; i < 12; ++i)
          if (s.at(i) != letter_of(z))
            return fmt("%s: corner %c stream deviates at position %zu",
                       co.name.c_str(), to_char(z), i);
      }
    }
    return std::string();
  });

  run_check(out, "unfolding commutes with the structure map", [seed,
                                                              negative_control] {
    double tol = std::ldexp(1.0, -10);
    for (const Coalgebra& co : {gasket_coalgebra(), cantor_coalgebra(8)}) {
      SquareReport rep = check_square(co, 30, tol, seed, negative_control);
      if (!rep.passed)
        return fmt("%s: worst interval low %.6g over %zu samples",
                   co.name.c_str(), rep.worst_low, rep.samples);
    }
    return std::string();
  });

  run_check(out, "tampered unfolding is caught", [seed] {
    double tol = std::ldexp(1.0, -10);
    SquareReport rep = check_square(gasket_coalgebra(), 10, tol, seed, true);
    if (rep.passed)
      return std::string("deliberately broken square went unnoticed");
    return std::string();
  });

  run_check(out, "corner coalgebra unfolds as a short map", [seed] {
    ShortnessReport rep = check_short_preservation(
        corner_coalgebra(), 200, std::ldexp(1.0, -10), seed);
    if (!rep.precondition_passed)
      return "structure map not certified short: " +
             brief(rep.structure_report);
    if (!rep.passed) return fmt("max excess %.6g", rep.max_excess);
    return std::string();
  });
}

// ------------------------------------------------------------ completion ---

void completion_checks(std::vector<CheckResult>& out, std::mt19937_64& rng) {
  run_check(out, "truncations are Cauchy", [&rng] {
    for (int k = 0; k < 60; ++k) {
      Address base = sample_address(rng() % 6, rng);
      AddressStream s = lift(base);
      int p = static_cast<int>(rng() % 14) + 1;
      int q = static_cast<int>(rng() % 14) + 1;
      Dyadic d = address_distance(truncate_stream(s, p), truncate_stream(s, q));
      if (d > Dyadic::pow2(std::min(p, q)))
        return fmt("truncations of %s separate at depths %d,%d",
                   format_address(base).c_str(), p, q);
    }
    return std::string();
  });

  run_check(out, "eventually constant tails are rewritten canonically", [] {
    struct Case {
      const char* in;
      const char* want;
    };
    const Case cases[] = {
        {"b(a)", "a(b)"},   {"c(a)", "a(c)"},   {"c(b)", "b(c)"},
        {"a(b)", "a(b)"},   {"(ab)", "(ab)"},   {"a(ba)", "(ab)"},
        {"abb(b)", "a(b)"}, {"ac(a)", "aa(c)"}, {"(aa)", "(a)"},
    };
    for (const Case& c : cases) {
      AddressStream s = parse_stream(c.in);
      if (!s.tail()) return fmt("%s lost its periodic descriptor", c.in);
      std::string got = format_tail(*s.tail());
      if (got != c.want)
        return fmt("%s normalized to %s, want %s", c.in, got.c_str(), c.want);
    }
    return std::string();
  });

  run_check(out, "dual expansions are certified equal", [] {
    const char* pairs[][2] = {{"a(b)", "b(a)"}, {"a(c)", "c(a)"},
                              {"b(c)", "c(b)"}, {"ba(c)", "bc(a)"}};
    for (auto& p : pairs) {
      ApproxReal d =
          stream_distance(parse_stream(p[0]), parse_stream(p[1]), 1e-9);
      if (d.value != 0.0)
        return fmt("d(%s,%s) is bounded away from zero", p[0], p[1]);
    }
    return std::string();
  });

  run_check(out, "corner streams stay one apart", [] {
    for (Corner y : {Corner::T, Corner::L, Corner::R})
      for (Corner z : {Corner::T, Corner::L, Corner::R}) {
        if (y == z) continue;
        ApproxReal d =
            stream_distance(corner_stream(y), corner_stream(z), 1e-6);
        if (!d.contains(1.0))
          return fmt("d(%c stream, %c stream) misses 1", to_char(y),
                     to_char(z));
      }
    return std::string();
  });

  run_check(out, "split then prepend is the identity", [&rng] {
    for (int k = 0; k < 40; ++k) {
      Address base = sample_address(rng() % 5, rng);
      AddressStream s = lift(base);
      auto [head, rest] = split_head(s);
      AddressStream back = prepend_stream(head, rest);
      ApproxReal d = stream_distance(s, back, 1e-9);
      if (d.value != 0.0)
        return fmt("roundtrip moved the stream for %s",
                   format_address(base).c_str());
    }
    return std::string();
  });

  run_check(out, "approximations nest as the tolerance shrinks", [&rng] {
    for (int k = 0; k < 40; ++k) {
      AddressStream s = lift(sample_address(rng() % 6, rng));
      AddressStream t = lift(sample_address(rng() % 6, rng));
      ApproxReal coarse = stream_distance(s, t, 1e-2);
      ApproxReal fine = stream_distance(s, t, 1e-2 / 16.0);
      if (fine.low() < coarse.low() - 1e-15 ||
          fine.high() > coarse.high() + 1e-15)
        return std::string("finer interval escapes the coarser one");
    }
    return std::string();
  });

  run_check(out, "tolerance guards", [] {
    try {
      stream_distance(corner_stream(Corner::T), corner_stream(Corner::L), 0.0);
      return std::string("tolerance zero was accepted");
    } catch (const std::invalid_argument&) {
    }
    try {
      stream_distance(corner_stream(Corner::T), corner_stream(Corner::L),
                      std::ldexp(1.0, -60));
      return std::string("tolerance below the exactness floor was accepted");
    } catch (const std::invalid_argument&) {
    }
    return std::string();
  });
}

// ----------------------------------------------------------------- euclid ---

void euclid_checks(std::vector<CheckResult>& out, std::mt19937_64& rng) {
  run_check(out, "vertices and the pinned tensor image", [] {
    for (Corner z : {Corner::T, Corner::L, Corner::R}) {
      Point2 got = address_to_point(corner_address(z));
      if (euclid_distance(got, gasket_vertex(z)) > 1e-15)
        return fmt("corner %c lands off its vertex", to_char(z));
    }
    Point2 img = sigma_apply(Letter::a, gasket_vertex(Corner::R));
    if (std::fabs(img.x - 0.75) > 1e-12 ||
        std::fabs(img.y - std::sqrt(3.0) / 4.0) > 1e-12)
      return fmt("a . R maps to (%.17g,%.17g)", img.x, img.y);
    return std::string();
  });

  run_check(out, "the plane contracts a unit distance to sqrt(3)/2", [] {
    Point2 u = sigma_apply(Letter::b, gasket_vertex(Corner::L));
    Point2 v = sigma_apply(Letter::a, gasket_vertex(Corner::R));
    Dyadic dg = address_distance(parse_address("b:L"), parse_address("a:R"));
    double de = euclid_distance(u, v);
    if (dg != Dyadic::one()) return std::string("address distance is not 1");
    if (std::fabs(de - std::sqrt(3.0) / 2.0) > 1e-12)
      return fmt("plane distance %.17g, want sqrt(3)/2", de);
    return std::string();
  });

  run_check(out, "plane distances never exceed address distances", [] {
    for (int n = 0; n <= 4; ++n) {
      auto pts = enumerate_addresses(n);
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
          double de = euclid_distance(address_to_point(pts[i]),
                                      address_to_point(pts[j]));
          double dg = address_distance(pts[i], pts[j]).to_double();
          if (de > dg + 1e-12)
            return fmt("(%s,%s): plane %.17g > address %.17g",
                       format_address(pts[i]).c_str(),
                       format_address(pts[j]).c_str(), de, dg);
        }
    }
    return std::string();
  });

  run_check(out, "distortion stays within [1/2, 1]", [] {
    DistortionReport rep = distortion_report(4);
    if (rep.min_ratio < 0.5 - 1e-12)
      return fmt("min ratio %.17g below 1/2 at %s", rep.min_ratio,
                 rep.min_pair.c_str());
    if (rep.max_ratio > 1.0 + 1e-12)
      return fmt("max ratio %.17g above 1", rep.max_ratio);
    return std::string();
  });

  run_check(out, "pinned structure map steps", [] {
    struct Case {
      Point2 in;
      Letter letter;
      Point2 rest;
    };
    const Case cases[] = {
        {{0.5, std::sqrt(3.0) / 2.0}, Letter::a, {0.5, std::sqrt(3.0) / 2.0}},
        {{0.75, std::sqrt(3.0) / 4.0}, Letter::a, {1.0, 0.0}},
        {{0.5, 0.0}, Letter::b, {1.0, 0.0}},
        {{0.0, 0.0}, Letter::b, {0.0, 0.0}},
        {{1.0, 0.0}, Letter::c, {1.0, 0.0}},
    };
    for (const Case& c : cases) {
      auto [m, rest] = sigma_step(c.in);
      if (m != c.letter || euclid_distance(rest, c.rest) > 1e-12)
        return fmt("(%.4f,%.4f) steps to %c (%.4f,%.4f)", c.in.x, c.in.y,
                   to_char(m), rest.x, rest.y);
    }
    return std::string();
  });

  run_check(out, "locate then unfold returns home", [&rng] {
    Coalgebra plane = gasket_coalgebra();
    for (int k = 0; k < 60; ++k) {
      Address x = sample_address(12, rng);
      ExactPoint p = address_to_point_exact(x);
      Address back = itinerary(plane, Point(p), 12);
      Dyadic sq = exact_squared_distance(p, address_to_point_exact(back));
      if (sq > Dyadic::pow2(24))
        return fmt("roundtrip of %s drifted", format_address(x).c_str());
    }
    return std::string();
  });

  run_check(out, "structure map rejects points outside the carrier", [] {
    try {
      sigma_step(Point2{2.0, 2.0});
    } catch (const std::invalid_argument&) {
      return std::string();
    }
    return std::string("a faraway point was accepted");
  });

  run_check(out, "rendering is deterministic and complete", [] {
    std::string svg = render_svg(3);
    if (svg != render_svg(3)) return std::string("two renders differ");
    std::size_t count = 0;
    for (std::size_t pos = svg.find('M'); pos != std::string::npos;
         pos = svg.find('M', pos + 1))
      ++count;
    if (count != 27) return fmt("depth 3 renders %zu triangles, want 27", count);
    return std::string();
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "metric", "functor", "initiality", "finality", "completion", "euclid",
      "all"};
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed,
                      bool negative_control) {
  bool known = false;
  for (const std::string& s : suite_names()) known = known || s == name;
  if (!known) throw std::invalid_argument("unknown suite: " + name);

  SuiteResult result;
  result.suite = name;
  result.seed = seed;
  std::mt19937_64 rng(seed);

  bool all = name == "all";
  if (all || name == "metric") metric_checks(result.checks, rng);
  if (all || name == "functor") functor_checks(result.checks, rng, seed);
  if (all || name == "initiality") initiality_checks(result.checks, rng);
  if (all || name == "finality")
    finality_checks(result.checks, rng, seed, negative_control);
  if (all || name == "completion") completion_checks(result.checks, rng);
  if (all || name == "euclid") euclid_checks(result.checks, rng);

  result.passed = true;
  for (const CheckResult& c : result.checks) result.passed &= c.passed;
  return result;
}

std::string to_json_string(const SuiteResult& result) {
  nlohmann::json j;
  j["schema"] = 1;
  j["suite"] = result.suite;
  j["seed"] = result.seed;
  j["passed"] = result.passed;
  j["checks"] = nlohmann::json::array();
  for (const CheckResult& c : result.checks)
    j["checks"].push_back(
        {{"name", c.name}, {"passed", c.passed}, {"details", c.details}});
  return j.dump(2);
}

}  // namespace gasket
