#pragma once
// Amoeba of P = 0 under (z, w) -> (log|z|, log|w|).
//
// For fixed x the k-th smallest log|w_r(e^{x+i phi})| is a continuous function
// of phi on the circle, so its image is an interval. The vertical slice of the
// amoeba at x is the union of these d intervals.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "harnack/error.hpp"
#include "harnack/numerics.hpp"
#include "harnack/parallel.hpp"
#include "harnack/polynomial.hpp"

namespace harnack {

struct Window {
  double x_min = -4, x_max = 4, y_min = -4, y_max = 4;

  void validate() const {
    if (!(x_min < x_max && y_min < y_max)) throw ValidationError("window must be strictly ordered");
  }
};

namespace detail {

inline void require_curve(const BivariatePolynomial& P) {
  if (P.degree() < 1) throw ValidationError("polynomial must have degree at least 1");
  if (P(0, P.degree()) == 0.0) throw ValidationError("leading w-coefficient p_0d must be nonzero");
}

/// Sorted log|w_r| over the w-roots of P(e^{x+i phi}, w); zero roots give -inf.
inline std::vector<double> sorted_log_w(const BivariatePolynomial& P, double x, double phi) {
  std::vector<double> out;
  for (const auto& rc : root_clusters(ComplexPoly(P.w_coeffs(std::polar(std::exp(x), phi))))) {
    const double l = rc.value == cplx(0.0) ? -std::numeric_limits<double>::infinity() : std::log(std::abs(rc.value));
    out.insert(out.end(), rc.multiplicity, l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Golden-section search for the extremum of f on [a, b]; sign = +1 for max.
template <class F>
double golden_extremum(F&& f, double a, double b, double sign, double best) {
  constexpr double g = 0.6180339887498949;
  double c = b - g * (b - a), e = a + g * (b - a);
  double fc = sign * f(c), fe = sign * f(e);
  for (int it = 0; it < 40 && b - a > 1e-10; ++it) {
    if (fc > fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - g * (b - a);
      fc = sign * f(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + g * (b - a);
      fe = sign * f(e);
    }
  }
  return sign > 0 ? std::max(best, std::max(fc, fe)) : std::min(best, -std::max(fc, fe));
}

}  // namespace detail

/// Union of closed intervals in y forming the amoeba at a fixed x.
struct AmoebaSlice {
  std::vector<std::pair<double, double>> intervals;

  bool contains(double y, double tol = 0.0) const {
    for (const auto& [lo, hi] : intervals)
      if (y >= lo - tol && y <= hi + tol) return true;
    return false;
  }
};

/// Slice of the amoeba at x from n_phi samples of the order statistics, with
/// the extremes refined by golden-section search. Real coefficients make the
/// roots symmetric under phi -> -phi, so only [0, pi] is sampled.
inline AmoebaSlice amoeba_slice(const BivariatePolynomial& P, double x, int n_phi = 512) {
  detail::require_curve(P);
  const int d = P.degree();
  const int m = std::max(8, n_phi / 2);
  std::vector<std::vector<double>> s(m + 1);
  for (int k = 0; k <= m; ++k) s[k] = detail::sorted_log_w(P, x, std::numbers::pi * k / m);
  AmoebaSlice out;
  for (int j = 0; j < d; ++j) {
    int kmin = 0, kmax = 0;
    for (int k = 1; k <= m; ++k) {
      if (s[k][j] < s[kmin][j]) kmin = k;
      if (s[k][j] > s[kmax][j]) kmax = k;
    }
    auto f = [&](double phi) { return detail::sorted_log_w(P, x, phi)[j]; };
    const double h = std::numbers::pi / m;
    double lo = s[kmin][j], hi = s[kmax][j];
    if (std::isfinite(lo))
      lo = detail::golden_extremum(f, std::max(0.0, (kmin - 1) * h), std::min(std::numbers::pi, (kmin + 1) * h), -1.0, lo);
    if (std::isfinite(hi))
      hi = detail::golden_extremum(f, std::max(0.0, (kmax - 1) * h), std::min(std::numbers::pi, (kmax + 1) * h), 1.0, hi);
    out.intervals.emplace_back(lo, hi);
  }
  std::sort(out.intervals.begin(), out.intervals.end());
  std::vector<std::pair<double, double>> merged;
  for (const auto& iv : out.intervals) {
    if (!merged.empty() && iv.first <= merged.back().second) merged.back().second = std::max(merged.back().second, iv.second);
    else merged.push_back(iv);
  }
  out.intervals = std::move(merged);
  return out;
}

/// True when some torus point over (x, y) lies on P = 0. `tol` widens each
/// interval (a distance band in log-coordinates).
inline bool amoeba_membership(const BivariatePolynomial& P, double x, double y, double tol = 0.0, int n_phi = 512) {
  return amoeba_slice(P, x, n_phi).contains(y, tol);
}

struct AmoebaGrid {
  Window window;
  int nx = 0, ny = 0;
  std::vector<unsigned char> membership;  ///< row-major by iy, ny rows of nx
  std::vector<double> ronkin;             ///< optional, same layout

  double dx() const { return (window.x_max - window.x_min) / nx; }
  double dy() const { return (window.y_max - window.y_min) / ny; }
  double x(int ix) const { return window.x_min + (ix + 0.5) * dx(); }
  double y(int iy) const { return window.y_min + (iy + 0.5) * dy(); }
  double pixel_area() const { return dx() * dy(); }
  bool at(int ix, int iy) const { return membership[static_cast<std::size_t>(iy) * nx + ix] != 0; }
  std::size_t count() const { return static_cast<std::size_t>(std::count(membership.begin(), membership.end(), 1)); }
};

/// Bounding box of the logs of the boundary points, padded by `pad`.
inline Window auto_window(const BivariatePolynomial& P, double pad = 2.0) {
  detail::require_curve(P);
  std::vector<double> xs{0.0}, ys{0.0};
  auto logs = [](const ComplexPoly& q) {
    std::vector<double> out;
    for (const auto& rc : root_clusters(q))
      if (rc.value != cplx(0.0)) out.push_back(std::log(std::abs(rc.value)));
    return out;
  };
  for (double l : logs(P.bottom_edge())) xs.push_back(l);
  for (double l : logs(P.left_edge())) ys.push_back(l);
  // at infinity z/w = s: the tentacle sits on x - y = log|s|, anchored by the other two
  for (double l : logs(P.hypotenuse())) {
    xs.push_back(l);
    ys.push_back(-l);
  }
  const auto [x0, x1] = std::minmax_element(xs.begin(), xs.end());
  const auto [y0, y1] = std::minmax_element(ys.begin(), ys.end());
  return {*x0 - pad, *x1 + pad, *y0 - pad, *y1 + pad};
}

/// Pixel-center membership raster. Columns are independent and are filled in
/// parallel; the result is identical for any thread count.
inline AmoebaGrid rasterize_amoeba(const BivariatePolynomial& P, const Window& window, int nx, int ny,
                                   double band = 0.0, int threads = 1, int n_phi = 512) {
  detail::require_curve(P);
  window.validate();
  if (nx < 16 || ny < 16) throw ValidationError("raster resolution must be at least 16");
  AmoebaGrid g;
  g.window = window;
  g.nx = nx;
  g.ny = ny;
  g.membership.assign(static_cast<std::size_t>(nx) * ny, 0);
  parallel_for(nx, threads, [&](int ix) {
    const auto slice = amoeba_slice(P, g.x(ix), n_phi);
    for (int iy = 0; iy < ny; ++iy) g.membership[static_cast<std::size_t>(iy) * nx + ix] = slice.contains(g.y(iy), band);
  });
  return g;
}

struct AreaEstimate {
  double area = 0.0;
  double error = 0.0;          ///< half the area of pixels on the amoeba boundary
  int unexpected_frame = 0;    ///< member frame pixels away from every tentacle
  std::string warning;
};

inline AreaEstimate amoeba_area(const AmoebaGrid& g) {
  AreaEstimate a;
  std::size_t edge = 0;
  for (int iy = 0; iy < g.ny; ++iy)
    for (int ix = 0; ix < g.nx; ++ix) {
      if (!g.at(ix, iy)) continue;
      a.area += g.pixel_area();
      if (ix == 0 || iy == 0 || ix == g.nx - 1 || iy == g.ny - 1 || !g.at(ix - 1, iy) || !g.at(ix + 1, iy) ||
          !g.at(ix, iy - 1) || !g.at(ix, iy + 1))
        ++edge;
    }
  a.error = 0.5 * static_cast<double>(edge) * g.pixel_area();
  return a;
}

/// Area with the frame check: member pixels on the frame must lie on a
/// tentacle, i.e. within `slack` of the asymptote of some boundary point.
inline AreaEstimate amoeba_area(const AmoebaGrid& g, const BivariatePolynomial& P, double slack = 0.5) {
  AreaEstimate a = amoeba_area(g);
  auto logs = [](const ComplexPoly& q) {
    std::vector<double> out;
    for (const auto& rc : root_clusters(q))
      if (rc.value != cplx(0.0)) out.push_back(std::log(std::abs(rc.value)));
    return out;
  };
  const auto bx = logs(P.bottom_edge()), ly = logs(P.left_edge()), hs = logs(P.hypotenuse());
  auto near = [&](double x, double y) {
    for (double l : bx)
      if (std::abs(x - l) < slack && y < 0) return true;
    for (double l : ly)
      if (std::abs(y - l) < slack && x < 0) return true;
    for (double l : hs)
      if (std::abs(x - y - l) < slack && x + y > 0) return true;
    return false;
  };
  for (int iy = 0; iy < g.ny; ++iy)
    for (int ix = 0; ix < g.nx; ++ix) {
      const bool frame = ix == 0 || iy == 0 || ix == g.nx - 1 || iy == g.ny - 1;
      if (frame && g.at(ix, iy) && !near(g.x(ix), g.y(iy))) ++a.unexpected_frame;
    }
  if (a.unexpected_frame > 0) a.warning = "tentacles exit the window in unexpected directions";
  return a;
}

}  // namespace harnack
