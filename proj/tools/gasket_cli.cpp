// Command line interface to the gasket library.
//
// Exit codes: 0 on success, 1 when a checked property fails, 2 on usage
// errors (malformed addresses, out-of-range depths, unknown names).

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "gasket/address.hpp"
#include "gasket/dyadic.hpp"
#include "gasket/euclid.hpp"
#include "gasket/metric.hpp"
#include "gasket/oracle.hpp"
#include "gasket/stream.hpp"
#include "gasket/suites.hpp"
#include "gasket/universal.hpp"

namespace {

using namespace gasket;

std::string show_distance(const Dyadic& d) {
  const std::string frac = d.to_fraction();
  if (frac == "0" || frac == "1") return frac;
  return frac + " = " + d.to_decimal();
}

std::string show_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open output file " + out_path);
  }
  out << text;
}

struct Options {
  std::string x_text;
  std::string y_text;
  bool cross_check = false;

  std::size_t depth = 0;
  std::string format;
  std::string out_path;
  std::string fill = "#444";

  double px = 0;
  double py = 0;

  std::string coalgebra = "gasket";
  std::size_t samples = 100;
  double tol = std::ldexp(1.0, -10);
  std::uint64_t seed = 0;
  bool negative_control = false;
  bool shortness = false;

  int scale = 8;
  std::string suite = "all";
};

int run_dist(const Options& opt) {
  const Address x = parse_address(opt.x_text);
  const Address y = parse_address(opt.y_text);
  const Dyadic d = address_distance(x, y);
  std::cout << show_distance(d) << "\n";
  if (opt.cross_check) {
    const Dyadic o = oracle_distance(x, y);
    if (o != d) {
      std::cout << "oracle disagrees: " << show_distance(o) << "\n";
      return 1;
    }
    std::cout << "oracle agrees\n";
  }
  return 0;
}

int run_oracle(const Options& opt) {
  const Dyadic d =
      oracle_distance(parse_address(opt.x_text), parse_address(opt.y_text));
  std::cout << show_distance(d) << "\n";
  return 0;
}

int run_enum(const Options& opt) {
  const auto points = enumerate_addresses(opt.depth);
  if (opt.format == "json") {
    std::string body = "{\n  \"schema\": 1,\n  \"level\": " +
                       std::to_string(opt.depth) +
                       ",\n  \"count\": " + std::to_string(points.size()) +
                       ",\n  \"addresses\": [";
    for (std::size_t i = 0; i < points.size(); ++i) {
      body += i == 0 ? "\"" : ", \"";
      body += format_address(points[i]);
      body += '"';
    }
    body += "]\n}\n";
    emit(body, opt.out_path);
    return 0;
  }
  std::string body;
  for (const Address& p : points) {
    body += format_address(p);
    body += '\n';
  }
  emit(body, opt.out_path);
  return 0;
}

int run_render(const Options& opt) {
  if (opt.format == "csv") {
    emit(render_points(opt.depth), opt.out_path);
  } else {
    emit(render_svg(opt.depth, opt.fill), opt.out_path);
  }
  return 0;
}

int run_point_of(const Options& opt) {
  const Address x = parse_address(opt.x_text);
  const ExactPoint e = address_to_point_exact(x);
  const Point2 p = to_point2(e);
  if (opt.format == "json") {
    std::cout << "{\n  \"schema\": 1,\n  \"address\": \"" << format_address(x)
              << "\",\n  \"x\": " << show_double(p.x)
              << ",\n  \"y\": " << show_double(p.y) << ",\n  \"x_exact\": \""
              << e.x.to_fraction() << "\",\n  \"y_over_sqrt3_exact\": \""
              << e.y_sqrt3.to_fraction() << "\"\n}\n";
    return 0;
  }
  std::cout << show_double(p.x) << " " << show_double(p.y) << "\n";
  return 0;
}

int run_address_of(const Options& opt) {
  const ExactPoint p = snap_to_lattice(Point2{opt.px, opt.py});
  const Coalgebra plane = gasket_coalgebra();
  const Address x = itinerary(plane, Point(p), opt.depth);
  std::cout << format_address(canonicalize(x)) << "\n";
  return 0;
}

int run_finality(const Options& opt) {
  const Coalgebra co = coalgebra_from_config(opt.coalgebra);
  if (opt.shortness) {
    const ShortnessReport report =
        check_short_preservation(co, opt.samples, opt.tol, opt.seed);
    if (opt.format == "json") {
      std::cout << to_json_string(report) << "\n";
    } else {
      std::cout << "shortness of the induced map for " << co.name << ": "
                << (report.passed ? "PASS" : "FAIL")
                << " (max excess " << show_double(report.max_excess)
                << " over " << report.samples << " pairs)\n";
      if (!report.precondition_passed) {
        std::cout << "structure map was not certified short\n";
      }
    }
    return report.passed ? 0 : 1;
  }
  const SquareReport report =
      check_square(co, opt.samples, opt.tol, opt.seed, opt.negative_control);
  if (opt.format == "json") {
    std::cout << to_json_string(report) << "\n";
  } else {
    std::cout << "finality square for " << co.name << ": "
              << (report.passed ? "PASS" : "FAIL") << " (worst interval low "
              << show_double(report.worst_low) << " over " << report.samples
              << " samples)\n";
    for (const auto& w : report.witnesses) {
      std::cout << "  witness " << w.point << ": heads " << w.left_head
                << " vs " << w.right_head << ", gap ["
                << show_double(w.low) << ", " << show_double(w.high) << "]\n";
    }
  }
  return report.passed ? 0 : 1;
}

int run_blowup(const Options& opt) {
  const auto rows = blowup_table(opt.scale, static_cast<int>(opt.depth));
  emit(blowup_csv(rows), opt.out_path);
  return 0;
}

int run_props(const Options& opt) {
  const SuiteResult result =
      run_suite(opt.suite, opt.seed, opt.negative_control);
  if (opt.format == "json") {
    emit(to_json_string(result) + "\n", opt.out_path);
  } else {
    std::string body;
    std::size_t failed = 0;
    for (const CheckResult& c : result.checks) {
      if (c.passed) {
        body += "[ok]   " + c.name + "\n";
      } else {
        ++failed;
        body += "[FAIL] " + c.name + ": " + c.details + "\n";
      }
    }
    body += "suite " + result.suite + ": " +
            std::to_string(result.checks.size()) + " checks, " +
            std::to_string(failed) + " failed (seed " +
            std::to_string(result.seed) + ")\n";
    emit(body, opt.out_path);
  }
  return result.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sierpinski gasket addresses, metrics and universal maps"};
  app.require_subcommand(1);
  Options opt;
  int rc = 0;

  CLI::App* dist = app.add_subcommand(
      "dist", "Exact distance between two finite addresses");
  dist->add_option("x", opt.x_text, "First address, e.g. ab:L")->required();
  dist->add_option("y", opt.y_text, "Second address")->required();
  dist->add_flag("--oracle", opt.cross_check,
                 "Cross-check against the shortest-path oracle");
  dist->callback([&] { rc = run_dist(opt); });

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Distance from the shortest-path oracle alone");
  oracle->add_option("x", opt.x_text, "First address")->required();
  oracle->add_option("y", opt.y_text, "Second address")->required();
  oracle->callback([&] { rc = run_oracle(opt); });

  CLI::App* enumerate = app.add_subcommand(
      "enum", "List all canonical addresses of one level");
  enumerate->add_option("--depth", opt.depth, "Level to enumerate")
      ->required();
  enumerate->add_option("--format", opt.format, "text or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));
  enumerate->add_option("--out", opt.out_path, "Write to a file");
  enumerate->callback([&] { rc = run_enum(opt); });

  CLI::App* render = app.add_subcommand(
      "render", "Render the finite approximation at a depth");
  render->add_option("--depth", opt.depth, "Subdivision depth")
      ->default_val(6);
  render->add_option("--format", opt.format, "svg or csv of the points")
      ->default_val("svg")
      ->check(CLI::IsMember({"svg", "csv"}));
  render->add_option("--fill", opt.fill, "SVG fill color");
  render->add_option("--out", opt.out_path, "Write to a file");
  render->callback([&] { rc = run_render(opt); });

  CLI::App* point_of = app.add_subcommand(
      "point-of", "Euclidean location of a finite address");
  point_of->add_option("address", opt.x_text, "Address, e.g. abc:R")
      ->required();
  point_of->add_option("--format", opt.format, "text or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));
  point_of->callback([&] { rc = run_point_of(opt); });

  CLI::App* address_of = app.add_subcommand(
      "address-of", "Address of a plane point to a given depth");
  address_of->add_option("x", opt.px, "x coordinate")->required();
  address_of->add_option("y", opt.py, "y coordinate")->required();
  address_of->add_option("--depth", opt.depth, "Itinerary length")
      ->default_val(12);
  address_of->callback([&] { rc = run_address_of(opt); });

  CLI::App* finality = app.add_subcommand(
      "finality", "Check that unfolding a coalgebra commutes with its "
                  "structure map");
  finality->add_option("--coalgebra", opt.coalgebra,
                       "gasket, corners, cantor, cantor:J or a JSON object")
      ->default_val("gasket");
  finality->add_option("--samples", opt.samples, "Sample count")
      ->default_val(100);
  finality->add_option("--tol", opt.tol, "Certified interval tolerance")
      ->default_val(std::ldexp(1.0, -10));
  finality->add_option("--seed", opt.seed, "Sampler seed")->default_val(0);
  finality->add_option("--format", opt.format, "text or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));
  finality->add_flag("--short", opt.shortness,
                     "Check instead that the induced map is short");
  finality->add_flag("--negative-control", opt.negative_control,
                     "Tamper with the unfolding to demonstrate a failure")
      ->group("");
  finality->callback([&] { rc = run_finality(opt); });

  CLI::App* blowup = app.add_subcommand(
      "blowup", "Lipschitz blow-up table of the scaled Cantor coalgebra");
  blowup->add_option("--scale", opt.scale, "Scale j >= 4")->default_val(8);
  blowup->add_option("--depth", opt.depth, "Number of pairs")
      ->default_val(12);
  blowup->add_option("--out", opt.out_path, "Write to a file");
  blowup->callback([&] { rc = run_blowup(opt); });

  CLI::App* props = app.add_subcommand(
      "props", "Run a property suite over the library");
  props->add_option("--suite", opt.suite,
                    "metric, functor, initiality, finality, completion, "
                    "euclid or all")
      ->default_val("all");
  props->add_option("--seed", opt.seed, "Sampler seed")->default_val(0);
  props->add_option("--format", opt.format, "text or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));
  props->add_option("--out", opt.out_path, "Write to a file");
  props->add_flag("--negative-control", opt.negative_control,
                  "Break one finality check to demonstrate the failure path")
      ->group("");
  props->callback([&] { rc = run_props(opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
