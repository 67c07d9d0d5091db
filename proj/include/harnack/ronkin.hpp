#pragma once
// Ronkin function R(x, y), the mean of log|P| over the torus |z| = e^x, |w| = e^y.
// Jensen's formula in w reduces it to a single integral over arg z:
//   R(x, y) = (1/2pi) int [ log|lead| + sum_r max(y, log|w_r(e^{x+i phi})|) ] dphi.
// The integrand has corners where some |w_r| crosses e^y; those are located by
// bisection on the count of roots inside the circle and the pieces are
// integrated separately.

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "harnack/amoeba.hpp"
#include "harnack/error.hpp"
#include "harnack/numerics.hpp"
#include "harnack/polynomial.hpp"

namespace harnack {

namespace detail {

struct WRoots {
  double log_lead = 0.0;
  std::vector<double> log_mod;  // -inf for zero roots
};

inline WRoots w_roots(const BivariatePolynomial& P, double x, double phi) {
  ComplexPoly q(P.w_coeffs(std::polar(std::exp(x), phi)));
  q.trim(0.0);
  WRoots out;
  out.log_lead = std::log(std::abs(q.coeffs.back()));
  if (q.degree() < 1) return out;
  for (const auto& rc : root_clusters(q)) {
    const double l = rc.value == cplx(0.0) ? -std::numeric_limits<double>::infinity() : std::log(std::abs(rc.value));
    out.log_mod.insert(out.log_mod.end(), rc.multiplicity, l);
  }
  return out;
}

inline double jensen_integrand(const WRoots& r, double y) {
  double v = r.log_lead;
  for (double l : r.log_mod) v += std::max(y, l);
  return v;
}

inline int count_inside(const WRoots& r, double y) {
  int n = 0;
  for (double l : r.log_mod) n += l < y;
  return n;
}

/// Points in (0, pi) where the number of w-roots with |w| < e^y changes.
inline std::vector<double> count_breaks(const BivariatePolynomial& P, double x, double y, int sweep) {
  auto count = [&](double phi) { return count_inside(w_roots(P, x, phi), y); };
  std::vector<double> out;
  double a = 0.0;
  int na = count(a);
  for (int k = 1; k <= sweep; ++k) {
    const double b = std::numbers::pi * k / sweep;
    const int nb = count(b);
    if (nb != na) {
      double lo = a, hi = b;
      for (int it = 0; it < 60; ++it) {
        const double m = 0.5 * (lo + hi);
        if (!(m > lo && m < hi)) break;
        (count(m) == na ? lo : hi) = m;
      }
      out.push_back(0.5 * (lo + hi));
    }
    a = b;
    na = nb;
  }
  return out;
}

// 1-D Jensen: mean of log|q| over |z| = e^x.
inline double ronkin_1d(ComplexPoly q, double x) {
  q.trim(0.0);
  double v = std::log(std::abs(q.coeffs.back()));
  if (q.degree() < 1) return v;
  for (const auto& rc : root_clusters(q)) {
    const double l = rc.value == cplx(0.0) ? -std::numeric_limits<double>::infinity() : std::log(std::abs(rc.value));
    v += rc.multiplicity * std::max(x, l);
  }
  return v;
}

}  // namespace detail

/// R(x, y) with quadrature diagnostics. `tol` is the absolute tolerance on R.
/// P has real coefficients, so the integrand is even in phi and [0, pi] suffices.
inline QuadratureResult ronkin_detailed(const BivariatePolynomial& P, double x, double y, double tol = 1e-12,
                                        int sweep = 128) {
  detail::require_curve(P);
  auto g = [&](double phi) { return detail::jensen_integrand(detail::w_roots(P, x, phi), y); };
  const auto breaks = detail::count_breaks(P, x, y, sweep);
  QuadratureResult r;
  if (breaks.empty()) {
    r = periodic_quadrature(g, 16, tol * kTwoPi);
    r.value /= kTwoPi;
    r.error_estimate /= kTwoPi;
  } else {
    r = integrate_piecewise(g, 0.0, std::numbers::pi, breaks, tol * std::numbers::pi);
    r.value /= std::numbers::pi;
    r.error_estimate /= std::numbers::pi;
  }
  return r;
}

inline double ronkin(const BivariatePolynomial& P, double x, double y, double tol = 1e-12, int sweep = 128) {
  return ronkin_detailed(P, x, y, tol, sweep).value;
}

/// Gradient of R. dR/dy is the mean number of w-roots inside |w| = e^y over the
/// circle |z| = e^x; dR/dx is the same count for z-roots with the roles swapped.
inline std::array<double, 2> ronkin_gradient(const BivariatePolynomial& P, double x, double y, int sweep = 128) {
  detail::require_curve(P);
  if (P(P.degree(), 0) == 0.0) throw ValidationError("leading z-coefficient p_d0 must be nonzero");
  auto mean_count = [sweep](const BivariatePolynomial& Q, double u, double v) {
    auto pts = detail::count_breaks(Q, u, v, sweep);
    pts.insert(pts.begin(), 0.0);
    pts.push_back(std::numbers::pi);
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k)
      acc += (pts[k + 1] - pts[k]) * detail::count_inside(detail::w_roots(Q, u, 0.5 * (pts[k] + pts[k + 1])), v);
    return acc / std::numbers::pi;
  };
  return {mean_count(P.swapped(), y, x), mean_count(P, x, y)};
}

/// Central-difference Hessian (Rxx, Rxy, Ryy) from Ronkin values.
inline std::array<double, 3> ronkin_hessian(const BivariatePolynomial& P, double x, double y, double h,
                                            double tol = 1e-13) {
  auto R = [&](double u, double v) { return ronkin(P, u, v, tol); };
  const double c = R(x, y);
  const double rxx = (R(x + h, y) - 2 * c + R(x - h, y)) / (h * h);
  const double ryy = (R(x, y + h) - 2 * c + R(x, y - h)) / (h * h);
  const double rxy = (R(x + h, y + h) - R(x + h, y - h) - R(x - h, y + h) + R(x - h, y - h)) / (4 * h * h);
  return {rxx, rxy, ryy};
}

/// det Hess R - 1/pi^2 at (x, y). With `richardson` the determinants at h and
/// h/2 are combined to cancel the O(h^2) term.
inline double monge_ampere_residual(const BivariatePolynomial& P, double x, double y, double h = 1e-2,
                                    bool richardson = true) {
  if (!(h > 0)) throw ValidationError("step must be positive");
  // the stencil must stay inside the amoeba
  const double r = 3 * h;
  for (int k = -1; k < 8; ++k) {
    const double u = k < 0 ? x : x + r * std::cos(k * std::numbers::pi / 4);
    const double v = k < 0 ? y : y + r * std::sin(k * std::numbers::pi / 4);
    if (!amoeba_membership(P, u, v)) throw ValidationError("point outside amoeba");
  }
  auto det = [&](double s) {
    const auto H = ronkin_hessian(P, x, y, s);
    return H[0] * H[2] - H[1] * H[1];
  };
  const double d1 = det(h);
  const double value = richardson ? (4 * det(0.5 * h) - d1) / 3 : d1;
  return value - 1.0 / (std::numbers::pi * std::numbers::pi);
}

}  // namespace harnack
