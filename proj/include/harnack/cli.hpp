#pragma once
// Command-line front end. Exit codes: 0 success, 1 invalid input (or a failed
// certificate for verify-harnack), 2 numerical non-convergence.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "harnack/amoeba.hpp"
#include "harnack/divisor.hpp"
#include "harnack/error.hpp"
#include "harnack/genus0.hpp"
#include "harnack/harnack_check.hpp"
#include "harnack/holes.hpp"
#include "harnack/io.hpp"
#include "harnack/isoradial.hpp"
#include "harnack/kasteleyn.hpp"
#include "harnack/legendre.hpp"
#include "harnack/ronkin.hpp"

namespace harnack::cli {

using io::json;
using io::r12;

inline std::vector<double> parse_list(const std::string& s, std::size_t n, const char* what) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError(std::string(what) + ": cannot parse \"" + s + "\"");
    }
  }
  if (v.size() != n) throw ValidationError(std::string(what) + ": expected " + std::to_string(n) + " numbers");
  return v;
}

inline std::uint64_t seed_from_env() {
  const char* s = std::getenv("HARNACK_SEED");
  if (!s || !*s) return 1;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw ValidationError("HARNACK_SEED must be an unsigned integer");
  }
}

inline json hole_json(const Hole& h) {
  return json{{"order", {h.order[0], h.order[1]}},
              {"area", r12(h.area)},
              {"pixels", h.pixels},
              {"center", {r12(h.center[0]), r12(h.center[1])}},
              {"intercept", r12(h.intercept)}};
}

inline json hole_report_json(const HoleReport& rep) {
  json holes = json::array(), nodes = json::array();
  for (const auto& h : rep.holes) holes.push_back(hole_json(h));
  for (const auto& h : rep.candidate_nodes) nodes.push_back(hole_json(h));
  return json{{"genus", rep.genus}, {"holes", holes}, {"candidate_nodes", nodes}};
}

inline json certificate_json(const HarnackCertificate& c) {
  return json{{"pass", c.pass},
              {"boundary_real", c.boundary_real},
              {"area_maximal", c.area_maximal},
              {"two_to_one", c.two_to_one},
              {"ovals_consistent", c.ovals_consistent},
              {"area_ratio", r12(c.area_ratio)},
              {"genus", c.genus},
              {"compact_ovals", c.compact_ovals},
              {"candidate_nodes", c.candidate_nodes},
              {"real_nodes", c.real_nodes},
              {"preimage_counts", c.preimage_counts},
              {"message", c.message}};
}

inline Window parse_window(const std::string& s, const BivariatePolynomial& P) {
  if (s == "auto") return auto_window(P);
  const auto v = parse_list(s, 4, "--window");
  Window w{v[0], v[1], v[2], v[3]};
  w.validate();
  return w;
}

/// Runs one subcommand; never throws.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral curves of periodic hexagonal dimer models"};
  app.require_subcommand(1);
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  std::string weights, poly, poly2, out_path, svg_path, window = "auto", at, boundary, angles, weights_out, vertex;
  int grid = 400, points = 20;
  double step = 1e-2;
  bool check = false;

  auto* spectral = app.add_subcommand("spectral", "characteristic polynomial det K(z, w)");
  spectral->add_option("--weights", weights, "weight file")->required();
  spectral->add_option("--out", out_path, "polynomial file (default stdout)");

  auto* bnd = app.add_subcommand("boundary", "boundary points: zig-zag products against polynomial roots");
  bnd->add_option("--weights", weights, "weight file")->required();

  auto* amoeba = app.add_subcommand("amoeba", "rasterize the amoeba");
  amoeba->add_option("--poly", poly, "polynomial file")->required();
  amoeba->add_option("--grid", grid, "pixels per side")->check(CLI::Range(16, 20000));
  amoeba->add_option("--window", window, "auto or x0,x1,y0,y1");
  amoeba->add_option("--out", out_path, "PGM output")->required();
  amoeba->add_option("--svg", svg_path, "SVG output with hole labels");

  auto* ron = app.add_subcommand("ronkin", "Ronkin function and gradient at a point");
  ron->add_option("--poly", poly, "polynomial file")->required();
  ron->add_option("--at", at, "x,y")->required();

  auto* ma = app.add_subcommand("ma-check", "Monge-Ampere residual at random interior points");
  ma->add_option("--poly", poly, "polynomial file")->required();
  ma->add_option("--points", points, "number of points")->check(CLI::PositiveNumber);
  ma->add_option("--step", step, "finite-difference step")->check(CLI::PositiveNumber);

  auto* holes = app.add_subcommand("holes", "holes of the amoeba with order, area and intercept");
  holes->add_option("--poly", poly, "polynomial file")->required();
  holes->add_option("--grid", grid, "pixels per side")->check(CLI::Range(16, 20000));
  holes->add_option("--window", window, "auto or x0,x1,y0,y1");

  auto* vh = app.add_subcommand("verify-harnack", "Harnack certificate; exit 0 iff it passes");
  vh->add_option("--poly", poly, "polynomial file")->required();

  auto* fit = app.add_subcommand("genus0-fit", "genus-zero curve with given boundary values");
  fit->add_option("--boundary", boundary, "boundary file {A, B, C}")->required();
  fit->add_option("--out", out_path, "curve file (default stdout)");

  auto* iso = app.add_subcommand("isoradial", "isoradial weights from rhombus angles");
  iso->add_option("--angles", angles, "angle file")->required();
  iso->add_option("--weights-out", weights_out, "weight file");
  iso->add_flag("--check", check, "check the sine parametrization against the spectral curve");

  auto* div = app.add_subcommand("divisor", "divisor of a white vertex");
  div->add_option("--weights", weights, "weight file")->required();
  div->add_option("--vertex", vertex, "i,j")->required();

  auto* vol = app.add_subcommand("volume-diff", "volume difference of two curves with equal boundary");
  vol->add_option("--poly1", poly, "polynomial file")->required();
  vol->add_option("--poly2", poly2, "polynomial file")->required();

  auto fail = [&](int code, const char* kind, const std::string& msg, double residual = -1) {
    json e{{"error", kind}, {"message", msg}};
    if (residual >= 0) e["residual"] = r12(residual);
    err << e.dump() << "\n";
    return code;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    return fail(1, "usage", e.what());
  }

  try {
    if (*spectral) {
      const auto P = characteristic_polynomial(io::weights_from_json(io::read_json(weights)));
      const std::string text = io::dump(io::to_json(P));
      if (out_path.empty())
        out << text;
      else
        io::write_text(out_path, text);
    } else if (*bnd) {
      const auto rep = verify_boundary_vs_zigzag(io::weights_from_json(io::read_json(weights)));
      out << io::dump(json{{"zigzag",
                            {{"horizontal", r12(rep.zigzag[0])}, {"nw_se", r12(rep.zigzag[1])}, {"vertical", r12(rep.zigzag[2])}}},
                           {"roots", {{"on_w0", r12(rep.roots.on_w0)}, {"at_inf", r12(rep.roots.at_inf)}, {"on_z0", r12(rep.roots.on_z0)}}},
                           {"max_relative_error", r12(rep.max_relative_error)},
                           {"pass", rep.pass}});
    } else if (*amoeba) {
      const auto P = io::polynomial_from_json(io::read_json(poly));
      const Window w = parse_window(window, P);
      const auto g = rasterize_amoeba(P, w, grid, grid, 0.0, threads);
      io::write_text(out_path, io::pgm(g));
      if (!svg_path.empty()) io::write_text(svg_path, io::svg(g, detect_holes(P, g)));
      const auto area = amoeba_area(g, P);
      out << io::dump(json{{"window", {r12(w.x_min), r12(w.x_max), r12(w.y_min), r12(w.y_max)}},
                           {"grid", grid},
                           {"area", r12(area.area)},
                           {"area_error", r12(area.error)},
                           {"warning", area.warning}});
    } else if (*ron) {
      const auto P = io::polynomial_from_json(io::read_json(poly));
      const auto xy = parse_list(at, 2, "--at");
      const auto grad = ronkin_gradient(P, xy[0], xy[1]);
      out << io::dump(json{{"x", r12(xy[0])},
                           {"y", r12(xy[1])},
                           {"value", r12(ronkin(P, xy[0], xy[1]))},
                           {"gradient", {r12(grad[0]), r12(grad[1])}},
                           {"in_amoeba", amoeba_membership(P, xy[0], xy[1])}});
    } else if (*ma) {
      const auto P = io::polynomial_from_json(io::read_json(poly));
      const Window w = auto_window(P, 0.0);
      std::mt19937_64 gen(seed_from_env());
      std::uniform_real_distribution<double> ux(w.x_min, w.x_max), uy(w.y_min, w.y_max);
      json pts = json::array();
      std::vector<double> res;
      for (int attempt = 0; attempt < 500 * points && static_cast<int>(res.size()) < points; ++attempt) {
        const double x = ux(gen), y = uy(gen);
        try {
          const double r = monge_ampere_residual(P, x, y, step);
          res.push_back(std::abs(r));
          pts.push_back({{"x", r12(x)}, {"y", r12(y)}, {"residual", r12(r)}});
        } catch (const ValidationError&) {
        }
      }
      if (res.empty()) throw ValidationError("no interior points found");
      std::vector<double> sorted = res;
      std::sort(sorted.begin(), sorted.end());
      const std::size_t n = sorted.size();
      const double median = n % 2 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
      out << io::dump(json{{"step", r12(step)}, {"points", pts}, {"median_abs", r12(median)}, {"max_abs", r12(sorted.back())}});
    } else if (*holes) {
      const auto P = io::polynomial_from_json(io::read_json(poly));
      const auto g = rasterize_amoeba(P, parse_window(window, P), grid, grid, 0.0, threads);
      out << io::dump(hole_report_json(detect_holes(P, g)));
    } else if (*vh) {
      const auto P = io::polynomial_from_json(io::read_json(poly));
      HarnackOptions opt;
      opt.seed = seed_from_env();
      opt.threads = threads;
      const auto c = verify_harnack(P, opt);
      out << io::dump(certificate_json(c));
      return c.pass ? 0 : 1;
    } else if (*fit) {
      const auto rep = invert_boundary_detailed(io::triple_from_json(io::read_json(boundary)));
      const std::string text = io::dump(io::to_json(rep.curve));
      if (out_path.empty())
        out << text;
      else {
        io::write_text(out_path, text);
        out << io::dump(json{{"iterations", rep.iterations}, {"residual", r12(rep.residual)}});
      }
    } else if (*iso) {
      Genus0Curve c = io::curve_from_json(io::read_json(angles));
      json report;
      if (c.rho_z != 1.0 || c.rho_w != 1.0) {
        const auto s = find_isoradial_shift(c);
        if (!s.isoradial) throw ValidationError("not isoradial");
        c = s.shifted;
        report["zeta"] = {r12(s.zeta.real()), r12(s.zeta.imag())};
        report["shifted"] = io::to_json(c);
      }
      const IsoradialAngles ang{c.d, c.alpha, c.beta, c.gamma};
      const auto W = isoradial_weights(ang);
      if (!weights_out.empty())
        io::write_text(weights_out, io::dump(io::to_json(W)));
      else
        report["weights"] = io::to_json(W);
      if (check) {
        const auto rep = isoradial_spectral_check(ang);
        report["residual"] = r12(rep.residual);
        report["pass"] = rep.pass;
        report["origin_in_amoeba"] = amoeba_membership(rep.P, 0.0, 0.0);
      }
      out << io::dump(report);
    } else if (*div) {
      const auto W = io::weights_from_json(io::read_json(weights));
      const auto ij = parse_list(vertex, 2, "--vertex");
      const int i = static_cast<int>(ij[0]), j = static_cast<int>(ij[1]);
      if (i != ij[0] || j != ij[1] || i < 0 || j < 0 || i >= W.d || j >= W.d)
        throw ValidationError("--vertex must be integers in [0, d)");
      json list = json::array();
      for (const auto& p : vertex_divisor(W, white_index(W.d, i, j)))
        list.push_back({{"vertex", {i, j}}, {"oval_id", p.oval_id}, {"z", r12(p.z)}, {"w", r12(p.w)}});
      out << io::dump(list);
    } else if (*vol) {
      const auto r = volume_difference_detailed(io::polynomial_from_json(io::read_json(poly)),
                                                io::polynomial_from_json(io::read_json(poly2)));
      out << io::dump(json{{"value", r12(r.value)}, {"converged", r.converged}, {"half_width", r12(r.half_width)},
                           {"last_ring", r12(r.last_ring)}});
    }
  } catch (const ValidationError& e) {
    return fail(1, "validation", e.what());
  } catch (const ConvergenceError& e) {
    return fail(2, "convergence", e.what(), e.residual());
  } catch (const Error& e) {
    return fail(2, "numerical", e.what());
  } catch (const std::exception& e) {
    return fail(1, "invalid", e.what());
  }
  return 0;
}

}  // namespace harnack::cli
