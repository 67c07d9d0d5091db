#pragma once
// Torus preimage counting and the composite Harnack certificate.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "harnack/amoeba.hpp"
#include "harnack/holes.hpp"
#include "harnack/kasteleyn.hpp"
#include "harnack/ovals.hpp"
#include "harnack/ronkin.hpp"

namespace harnack {

struct PreimageReport {
  int count = 0;                               ///< distinct torus preimages
  std::vector<int> multiplicity;               ///< per preimage
  std::vector<std::array<double, 2>> points;   ///< (arg z, arg w)
  bool degenerate = false;                     ///< some preimage has multiplicity > 1
};

namespace detail {

inline double circle_dist(double a, double b) {
  const double d = std::remainder(a - b, kTwoPi);
  return std::abs(d);
}

inline double min_gap(const BivariatePolynomial& P, double x, double y, double phi) {
  double g = std::numeric_limits<double>::infinity();
  for (double l : w_roots(P, x, phi).log_mod) g = std::min(g, std::abs(l - y));
  return g;
}

}  // namespace detail

/// Torus points over (x, y): transversal crossings are located as jumps of the
/// number of w-roots inside |w| = e^y along a sweep of arg z; tangential
/// touches (no jump) are found as zeros of the distance min_r |log|w_r| - y|.
inline PreimageReport two_to_one_check(const BivariatePolynomial& P, double x, double y, int sweep = 2048,
                                       double touch_tol = 1e-7) {
  detail::require_curve(P);
  struct Hit {
    double phi, argw;
    int mult;
  };
  std::vector<Hit> hits;
  auto roots_at = [&](double phi) { return roots(ComplexPoly(P.w_coeffs(std::polar(std::exp(x), phi)))); };
  auto count = [&](double phi) { return detail::count_inside(detail::w_roots(P, x, phi), y); };
  auto record = [&](double phi, int mult) {
    // the root closest to the circle |w| = e^y
    double best = std::numeric_limits<double>::infinity(), arg = 0.0;
    for (const cplx r : roots_at(phi)) {
      const double g = std::abs(std::log(std::abs(r)) - y);
      if (g < best) {
        best = g;
        arg = std::arg(r);
      }
    }
    hits.push_back({phi, arg, mult});
  };
  std::vector<int> n(sweep + 1);
  std::vector<double> gap(sweep + 1);
  for (int k = 0; k <= sweep; ++k) {
    const double phi = kTwoPi * k / sweep;
    n[k] = count(phi);
    gap[k] = detail::min_gap(P, x, y, phi);
  }
  std::vector<char> jump(sweep, 0);
  for (int k = 0; k < sweep; ++k) {
    if (n[k] == n[k + 1]) continue;
    jump[k] = 1;
    double lo = kTwoPi * k / sweep, hi = kTwoPi * (k + 1) / sweep;
    for (int it = 0; it < 60; ++it) {
      const double m = 0.5 * (lo + hi);
      if (!(m > lo && m < hi)) break;
      (count(m) == n[k] ? lo : hi) = m;
    }
    record(0.5 * (lo + hi), std::abs(n[k + 1] - n[k]));
  }
  // touches: local minima of the gap away from jumps
  for (int k = 0; k < sweep; ++k) {
    const int km = (k + sweep - 1) % sweep, kp = k + 1;
    if (!(gap[k] <= gap[km] && gap[k] <= gap[kp])) continue;
    if (jump[k] || jump[km]) continue;
    auto f = [&](double phi) { return detail::min_gap(P, x, y, phi); };
    const double h = kTwoPi / sweep;
    double a = kTwoPi * k / sweep - h, b = kTwoPi * k / sweep + h;
    constexpr double g = 0.6180339887498949;
    double c = b - g * (b - a), e = a + g * (b - a), fc = f(c), fe = f(e);
    for (int it = 0; it < 80 && b - a > 1e-14; ++it) {
      if (fc < fe) {
        b = e;
        e = c;
        fe = fc;
        c = b - g * (b - a);
        fc = f(c);
      } else {
        a = c;
        c = e;
        fc = fe;
        e = a + g * (b - a);
        fe = f(e);
      }
    }
    if (std::min(fc, fe) < touch_tol) record(fc < fe ? c : e, 2);
  }
  // merge hits that land on the same torus point
  PreimageReport rep;
  std::vector<char> taken(hits.size(), 0);
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (taken[i]) continue;
    int m = hits[i].mult;
    for (std::size_t j = i + 1; j < hits.size(); ++j)
      if (!taken[j] && detail::circle_dist(hits[i].phi, hits[j].phi) < 1e-5 &&
          detail::circle_dist(hits[i].argw, hits[j].argw) < 1e-5) {
        taken[j] = 1;
        m += hits[j].mult;
      }
    rep.points.push_back({std::remainder(hits[i].phi, kTwoPi), hits[i].argw});
    rep.multiplicity.push_back(m);
    rep.degenerate = rep.degenerate || m > 1;
  }
  rep.count = static_cast<int>(rep.points.size());
  return rep;
}

struct HarnackOptions {
  int resolution = 600;
  int interior_points = 10;
  std::uint64_t seed = 1;
  double area_tolerance = 0.02;
  int threads = 1;
};

struct HarnackCertificate {
  bool boundary_real = false;
  bool area_maximal = false;
  bool two_to_one = false;
  bool ovals_consistent = false;
  bool pass = false;
  double area_ratio = 0.0;  ///< amoeba area / (pi^2 Area(Delta))
  int genus = 0;
  int compact_ovals = 0;
  int candidate_nodes = 0;
  int real_nodes = 0;
  std::vector<int> preimage_counts;
  std::string message;
};

/// Largest number of boundary points (with multiplicity) on one side whose
/// logs form a chain with gaps below `gap`. Nearby tentacles thin together
/// like a single tentacle of that multiplicity before they separate.
inline int max_boundary_multiplicity(const BivariatePolynomial& P, double gap = 0.5) {
  int m = 1;
  for (const auto& q : {P.bottom_edge(), P.left_edge(), P.hypotenuse()}) {
    std::vector<double> l;
    for (const auto& rc : root_clusters(q)) l.insert(l.end(), rc.multiplicity, std::log(std::abs(rc.value)));
    std::sort(l.begin(), l.end());
    int run = 1;
    for (std::size_t i = 1; i < l.size(); ++i) {
      run = l[i] - l[i - 1] < gap ? run + 1 : 1;
      m = std::max(m, run);
    }
  }
  return m;
}

/// Window for area measurements. A tentacle of multiplicity m thins like
/// e^{-t/m}, so the padding grows with the largest (effective) multiplicity.
inline Window area_window(const BivariatePolynomial& P) {
  return auto_window(P, 1.0 + 7.0 * max_boundary_multiplicity(P));
}

inline HarnackCertificate verify_harnack(const BivariatePolynomial& P, const HarnackOptions& opt = {}) {
  HarnackCertificate c;
  const int d = P.degree();
  try {
    c.boundary_real = boundary_constant_sign(boundary_points(P));
  } catch (const ValidationError& e) {
    c.message = e.what();
    return c;
  }
  if (!c.boundary_real) {
    c.message = "boundary points change sign";
    return c;
  }
  const Window w = area_window(P);
  const auto grid = rasterize_amoeba(P, w, opt.resolution, opt.resolution, 0.0, opt.threads);
  const double target = std::numbers::pi * std::numbers::pi * 0.5 * d * d;
  c.area_ratio = amoeba_area(grid).area / target;
  c.area_maximal = std::abs(c.area_ratio - 1.0) <= opt.area_tolerance;

  // interior points: member pixels whose 5x5 neighbourhood is inside the amoeba
  std::vector<int> interior;
  for (int iy = 2; iy < grid.ny - 2; ++iy)
    for (int ix = 2; ix < grid.nx - 2; ++ix) {
      bool all = true;
      for (int a = -2; a <= 2 && all; ++a)
        for (int b = -2; b <= 2 && all; ++b) all = grid.at(ix + a, iy + b);
      if (all) interior.push_back(iy * grid.nx + ix);
    }
  std::mt19937_64 gen(opt.seed);
  c.two_to_one = !interior.empty();
  for (int k = 0; k < opt.interior_points && !interior.empty(); ++k) {
    const int p = interior[std::uniform_int_distribution<std::size_t>(0, interior.size() - 1)(gen)];
    const auto rep = two_to_one_check(P, grid.x(p % grid.nx), grid.y(p / grid.nx));
    c.preimage_counts.push_back(rep.count);
    c.two_to_one = c.two_to_one && rep.count == 2 && !rep.degenerate;
  }

  const int bound = (d - 1) * (d - 2) / 2;
  try {
    const auto holes = detect_holes(P, grid);
    c.genus = holes.genus;
    c.candidate_nodes = static_cast<int>(holes.candidate_nodes.size());
    c.compact_ovals = compact_oval_count(trace_real_ovals(P, w), 4 * grid.pixel_area());
    c.real_nodes = static_cast<int>(find_real_nodes(P, w).size());
    c.ovals_consistent = c.compact_ovals == c.genus && c.compact_ovals + c.real_nodes <= bound;
  } catch (const Error& e) {
    c.message = e.what();
  }
  c.pass = c.boundary_real && c.area_maximal && c.two_to_one && c.ovals_consistent;
  if (c.message.empty() && !c.pass) c.message = "certificate failed";
  return c;
}

}  // namespace harnack
