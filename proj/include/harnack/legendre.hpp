#pragma once
// Legendre dual of the Ronkin function and volume differences between Ronkin
// functions with the same boundary data.

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "harnack/error.hpp"
#include "harnack/numerics.hpp"
#include "harnack/polynomial.hpp"
#include "harnack/ronkin.hpp"

namespace harnack {

struct LegendreResult {
  double value = 0.0;
  std::array<double, 2> argmax{};  ///< maximizer, meaningless on the boundary of the triangle
  bool converged = true;
  int iterations = 0;
};

namespace detail {

// sup_u (s u - R1(u)) for the 1-D Ronkin function of q, s in [0, deg q].
// R1 is convex piecewise linear with corners at log|roots|; the supremum is
// attained at a corner or, for s at an end of the range, at infinity.
inline double legendre_1d(ComplexPoly q, double s) {
  q.trim(0.0);
  const int n = q.degree();
  std::vector<double> corners;
  for (const auto& rc : root_clusters(q))
    if (rc.value != cplx(0.0)) corners.push_back(std::log(std::abs(rc.value)));
  double best = -std::numeric_limits<double>::infinity();
  for (double u : corners) best = std::max(best, s * u - ronkin_1d(q, u));
  if (s <= 1e-14) best = std::max(best, -std::log(std::abs(q.coeffs.front())));
  if (s >= n - 1e-14) best = std::max(best, -std::log(std::abs(q.coeffs.back())));
  return best;
}

}  // namespace detail

/// R^(s, t) = sup_{x,y} (s x + t y - R(x, y)) for (s, t) in the Newton triangle.
/// Interior points use damped Newton on the concave objective with the exact
/// gradient (s, t) - grad R; edges of the triangle reduce to the 1-D transform
/// of the matching edge polynomial.
inline LegendreResult legendre_detailed(const BivariatePolynomial& P, double s, double t, double tol = 1e-11) {
  detail::require_curve(P);
  const int d = P.degree();
  constexpr double eps = 1e-12;
  if (s < -eps || t < -eps || s + t > d + eps) throw ValidationError("(s,t) outside Newton triangle");
  LegendreResult out;
  if (t <= eps) {
    out.value = detail::legendre_1d(P.bottom_edge(), s);
    return out;
  }
  if (s <= eps) {
    out.value = detail::legendre_1d(P.left_edge(), t);
    return out;
  }
  if (s + t >= d - eps) {
    out.value = detail::legendre_1d(P.hypotenuse(), s);
    return out;
  }
  auto f = [&](double x, double y) { return s * x + t * y - ronkin(P, x, y, 1e-13); };
  // start at the centre of the window spanned by the boundary points
  const Window w = auto_window(P, 0.0);
  double x = 0.5 * (w.x_min + w.x_max), y = 0.5 * (w.y_min + w.y_max);
  double fx = f(x, y);
  const double h = 1e-4;
  for (int it = 0; it < 200; ++it) {
    out.iterations = it + 1;
    const auto g0 = ronkin_gradient(P, x, y);
    const double gx = s - g0[0], gy = t - g0[1];
    if (std::hypot(gx, gy) < tol) break;
    // Hessian of R from differences of the exact gradient
    const auto gxp = ronkin_gradient(P, x + h, y), gxm = ronkin_gradient(P, x - h, y);
    const auto gyp = ronkin_gradient(P, x, y + h), gym = ronkin_gradient(P, x, y - h);
    const double hxx = (gxp[0] - gxm[0]) / (2 * h), hyy = (gyp[1] - gym[1]) / (2 * h);
    const double hxy = 0.25 * ((gxp[1] - gxm[1]) + (gyp[0] - gym[0])) / h;
    const double det = hxx * hyy - hxy * hxy;
    double px = gx, py = gy;  // ascent direction
    if (det > 1e-10 && hxx > 0) {
      px = (hyy * gx - hxy * gy) / det;
      py = (hxx * gy - hxy * gx) / det;
    }
    const double len = std::hypot(px, py);
    if (len > 2.0) {
      px *= 2.0 / len;
      py *= 2.0 / len;
    }
    double step = 1.0;
    bool moved = false;
    for (int k = 0; k < 40; ++k, step *= 0.5) {
      const double fn = f(x + step * px, y + step * py);
      if (fn >= fx - 1e-14) {
        x += step * px;
        y += step * py;
        moved = fn > fx || step * len < 1e-14;
        fx = fn;
        break;
      }
    }
    if (!moved && std::hypot(gx, gy) > 1e-6) {
      out.converged = false;
      break;
    }
    if (!moved) break;
  }
  out.value = fx;
  out.argmax = {x, y};
  return out;
}

inline double legendre_transform(const BivariatePolynomial& P, double s, double t) {
  return legendre_detailed(P, s, t).value;
}

/// det Hess R^ - pi^2 at an interior non-lattice point of the triangle.
inline double dual_monge_ampere_residual(const BivariatePolynomial& P, double s, double t, double h = 1e-2) {
  const int d = P.degree();
  if (s - h <= 0 || t - h <= 0 || s + t + 2 * h >= d) throw ValidationError("point too close to the triangle boundary");
  auto L = [&](double u, double v) { return legendre_transform(P, u, v); };
  const double c = L(s, t);
  const double lss = (L(s + h, t) - 2 * c + L(s - h, t)) / (h * h);
  const double ltt = (L(s, t + h) - 2 * c + L(s, t - h)) / (h * h);
  const double lst = (L(s + h, t + h) - L(s + h, t - h) - L(s - h, t + h) + L(s - h, t - h)) / (4 * h * h);
  return lss * ltt - lst * lst - std::numbers::pi * std::numbers::pi;
}

struct VolumeResult {
  double value = 0.0;
  double last_ring = 0.0;  ///< contribution of the final ring
  double half_width = 0.0;
  bool converged = false;
};

/// Integral of R1 - R2 over the plane. Outside both amoebas the two functions
/// share their facets, so the difference lives on a core box plus the
/// tentacles. Unit cells (Gauss-Legendre) fill the core box, then rings are
/// added one at a time, keeping only cells near a tentacle asymptote, until a
/// ring adds less than `rel` of the running total.
inline VolumeResult volume_difference_detailed(const BivariatePolynomial& P1, const BivariatePolynomial& P2,
                                               double rel = 1e-4, int max_rings = 60, int order = 4,
                                               double ronkin_tol = 1e-8, int sweep = 64) {
  detail::require_curve(P1);
  detail::require_curve(P2);
  const int d = P1.degree();
  if (P2.degree() != d) throw ValidationError("different boundary data");
  const auto a = P1.normalized(), b = P2.normalized();
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j)
      if (a.on_boundary(i, j) && std::abs(a(i, j) - b(i, j)) > 1e-12 * std::max(1.0, std::abs(a(i, j))))
        throw ValidationError("different boundary data");
  // an overall scalar shifts R by a constant, which would not decay
  const double shift = std::log(std::abs(P1(0, 0))) - std::log(std::abs(P2(0, 0)));
  std::vector<double> gx, gw;
  gauss_legendre(order, gx, gw);
  auto cell = [&](double x0, double y0) {
    double acc = 0.0;
    for (int i = 0; i < order; ++i)
      for (int j = 0; j < order; ++j) {
        const double x = x0 + 0.5 * (1 + gx[i]), y = y0 + 0.5 * (1 + gx[j]);
        acc += 0.25 * gw[i] * gw[j] * (ronkin(P1, x, y, ronkin_tol, sweep) - ronkin(P2, x, y, ronkin_tol, sweep) - shift);
      }
    return acc;
  };
  auto logs = [](const ComplexPoly& q) {
    std::vector<double> out;
    for (const auto& rc : root_clusters(q)) out.push_back(std::log(std::abs(rc.value)));
    return out;
  };
  const auto bx = logs(P1.bottom_edge()), ly = logs(P1.left_edge()), hs = logs(P1.hypotenuse());
  const Window w = auto_window(P1, 1.0);
  const int x0 = static_cast<int>(std::floor(w.x_min)), x1 = static_cast<int>(std::ceil(w.x_max));
  const int y0 = static_cast<int>(std::floor(w.y_min)), y1 = static_cast<int>(std::ceil(w.y_max));
  constexpr double reach = 2.5;  // cell-centre distance to an asymptote
  auto near_tentacle = [&](double cx, double cy) {
    for (double l : bx)
      if (cy < y0 && std::abs(cx - l) < reach) return true;
    for (double l : ly)
      if (cx < x0 && std::abs(cy - l) < reach) return true;
    for (double l : hs)
      if ((cx > x1 || cy > y1) && std::abs(cx - cy - l) < reach * std::numbers::sqrt2) return true;
    return false;
  };
  VolumeResult out;
  for (int ix = x0; ix < x1; ++ix)
    for (int iy = y0; iy < y1; ++iy) out.value += cell(ix, iy);
  for (int k = 1; k <= max_rings; ++k) {
    double ring = 0.0;
    for (int ix = x0 - k; ix < x1 + k; ++ix)
      for (int iy = y0 - k; iy < y1 + k; ++iy) {
        const bool on_ring = ix == x0 - k || ix == x1 + k - 1 || iy == y0 - k || iy == y1 + k - 1;
        if (on_ring && near_tentacle(ix + 0.5, iy + 0.5)) ring += cell(ix, iy);
      }
    out.value += ring;
    out.last_ring = ring;
    out.half_width = 0.5 * std::max(x1 - x0, y1 - y0) + k;
    if (std::abs(ring) <= rel * std::abs(out.value)) {
      out.converged = true;
      break;
    }
  }
  return out;
}

inline double volume_difference(const BivariatePolynomial& P1, const BivariatePolynomial& P2) {
  return volume_difference_detailed(P1, P2).value;
}

}  // namespace harnack
