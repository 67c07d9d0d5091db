#pragma once
// Kasteleyn operator K(z, w) of the hexagonal lattice, its determinant P(z, w)
// and the boundary points of the spectral curve P = 0.

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <vector>

#include "harnack/error.hpp"
#include "harnack/lattice.hpp"
#include "harnack/numerics.hpp"
#include "harnack/polynomial.hpp"

namespace harnack {

inline int white_index(int d, int r, int c) { return ((r % d + d) % d) * d + ((c % d + d) % d); }

/// Weighted adjacency matrix with Bloch multipliers; rows are white vertices,
/// columns black vertices, both indexed as r * d + c.
inline ComplexMatrix assemble_K(const EdgeWeights& wt, cplx z, cplx w) {
  const int d = wt.d;
  ComplexMatrix k(d * d, d * d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      const int row = white_index(d, r, c);
      k(row, white_index(d, r, c)) += wt.c(r, c);
      k(row, white_index(d, r, c + 1)) += wt.a(r, c) * (c == d - 1 ? z : cplx(1.0));
      k(row, white_index(d, r + 1, c)) += wt.b(r, c) * (r == d - 1 ? w : cplx(1.0));
    }
  return k;
}

namespace detail {

inline double geometric_mean_abs(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += std::log(std::abs(x));
  return std::exp(s / static_cast<double>(v.size()));
}

// Coefficients of the degree-d polynomial t -> f(t), from d + 1 samples on |t| = radius.
template <class F>
std::vector<cplx> dft_coefficients(F&& f, int d, double radius) {
  const int n = d + 1;
  std::vector<cplx> vals(n), out(n, 0.0);
  for (int k = 0; k < n; ++k) vals[k] = f(std::polar(radius, kTwoPi * k / n));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) out[i] += vals[k] * std::polar(1.0, -kTwoPi * ((i * k) % n) / n);
    out[i] /= n * std::pow(radius, i);
  }
  return out;
}

// Coefficient of t^d in f, sampled where the top term dominates.
template <class F>
cplx leading_coefficient(F&& f, int d, double scale) {
  auto c = dft_coefficients(f, d, scale);
  double r = 1.0;
  for (int k = 0; k < d; ++k)
    if (std::abs(c[d]) > 0) r = std::max(r, std::pow(std::abs(c[k]) / std::abs(c[d]), 1.0 / (d - k)) / scale);
  return dft_coefficients(f, d, 8.0 * r * scale)[d];
}

}  // namespace detail

/// P(z, w) = det K(z, w), recovered from a (d+1) x (d+1) grid of determinant
/// values by an inverse 2-D DFT. The representative has p_00 > 0.
inline BivariatePolynomial characteristic_polynomial(const EdgeWeights& wt) {
  wt.validate();
  const int d = wt.d;
  const int n = d + 1;
  std::vector<cplx> root(n);
  for (int k = 0; k < n; ++k) root[k] = std::polar(1.0, kTwoPi * k / n);

  auto sample = [&](double rz, double rw) {
    std::vector<cplx> vals(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) vals[k * n + l] = det_complex(assemble_K(wt, rz * root[k], rw * root[l]));
    return vals;
  };

  double rz = 1.0, rw = 1.0;
  auto vals = sample(rz, rw);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const auto& v : vals) {
    lo = std::min(lo, std::abs(v));
    hi = std::max(hi, std::abs(v));
  }
  if (!(hi <= 1e12 * lo)) {
    // torus where the corner terms balance
    rz = detail::geometric_mean_abs(zigzag_products(wt, ZigZagOrientation::horizontal));
    rw = detail::geometric_mean_abs(zigzag_products(wt, ZigZagOrientation::vertical));
    vals = sample(rz, rw);
  }

  std::vector<cplx> coef(static_cast<std::size_t>(n) * n);
  double maxabs = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx acc = 0.0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) acc += vals[k * n + l] * root[(n - (i * k) % n) % n] * root[(n - (j * l) % n) % n];
      acc /= static_cast<double>(n * n);
      maxabs = std::max(maxabs, std::abs(acc));
      acc /= std::pow(rz, i) * std::pow(rw, j);
      coef[i * n + j] = acc;
    }
  // consistency is judged on the scaled coefficients
  const double thr = 1e-9 * maxabs;
  BivariatePolynomial p(d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const cplx v = coef[i * n + j];
      const double sc = std::pow(rz, i) * std::pow(rw, j);
      if (std::abs(v.imag()) * sc > thr) throw Error("interpolation inconsistency");
      if (i + j > d) {
        if (std::abs(v) * sc > thr) throw Error("interpolation inconsistency");
        continue;
      }
      p(i, j) = v.real();
    }
  // the three edge restrictions are recomputed by 1-D transforms at their own
  // scales, which keeps the boundary roots accurate when coefficients spread
  {
    const auto bottom = detail::dft_coefficients([&](cplx z) { return det_complex(assemble_K(wt, z, 0.0)); }, d,
                                                 detail::geometric_mean_abs(zigzag_products(wt, ZigZagOrientation::horizontal)));
    const auto left = detail::dft_coefficients([&](cplx w) { return det_complex(assemble_K(wt, 0.0, w)); }, d,
                                               detail::geometric_mean_abs(zigzag_products(wt, ZigZagOrientation::vertical)));
    const double sz = detail::geometric_mean_abs(zigzag_products(wt, ZigZagOrientation::horizontal));
    const double sw = detail::geometric_mean_abs(zigzag_products(wt, ZigZagOrientation::vertical));
    const auto lead = [&](cplx s) {
      return detail::leading_coefficient([&](cplx t) { return det_complex(assemble_K(wt, s * t, t)); }, d, sw);
    };
    const auto hyp = detail::dft_coefficients(lead, d, sz / sw);
    for (int i = 0; i <= d; ++i) p(i, 0) = bottom[i].real();
    for (int j = 1; j <= d; ++j) p(0, j) = left[j].real();
    for (int i = 1; i < d; ++i) p(i, d - i) = hyp[i].real();
  }
  if (p(0, 0) < 0)
    for (int i = 0; i <= d; ++i)
      for (int j = 0; i + j <= d; ++j) p(i, j) = -p(i, j);
  return p;
}

/// The 3d intersection points with the coordinate lines, counted with multiplicity.
struct BoundaryPoints {
  std::vector<double> on_w0;   ///< z-roots of P(z, 0)
  std::vector<double> on_z0;   ///< w-roots of P(0, w)
  std::vector<double> at_inf;  ///< roots s = z/w of the leading form
  /// ordering[o][k]: position in the sorted list of orientation o of the point
  /// belonging to zig-zag cycle k (filled by verify_boundary_vs_zigzag).
  std::array<std::vector<int>, 3> ordering;
};

namespace detail {

inline std::vector<double> real_roots_strict(const ComplexPoly& p, const char* what) {
  std::vector<double> out;
  for (const auto& rc : root_clusters(p)) {
    if (std::abs(rc.value.imag()) > 1e-8 * std::max(1.0, std::abs(rc.value.real())))
      throw ValidationError(std::string("non-Harnack boundary (complex root on ") + what + ")");
    for (int k = 0; k < rc.multiplicity; ++k) out.push_back(rc.value.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline BoundaryPoints boundary_points(const BivariatePolynomial& p) {
  const int d = p.degree();
  if (d < 1) throw ValidationError("boundary_points: degree must be at least 1");
  if (p(0, 0) == 0.0 || p(d, 0) == 0.0 || p(0, d) == 0.0)
    throw ValidationError("boundary_points: corner coefficients must be nonzero");
  BoundaryPoints b;
  b.on_w0 = detail::real_roots_strict(p.bottom_edge(), "w=0");
  b.on_z0 = detail::real_roots_strict(p.left_edge(), "z=0");
  b.at_inf = detail::real_roots_strict(p.hypotenuse(), "line at infinity");
  return b;
}

/// True when every list is nonzero and of constant sign.
inline bool boundary_constant_sign(const BoundaryPoints& b) {
  for (const auto* v : {&b.on_w0, &b.on_z0, &b.at_inf}) {
    if (v->empty()) continue;
    const bool neg = v->front() < 0;
    for (double x : *v)
      if (x == 0.0 || (x < 0) != neg) return false;
  }
  return true;
}

struct BoundaryReport {
  BoundaryPoints roots;
  std::array<std::vector<double>, 3> zigzag;  ///< horizontal, nw-se, vertical in cycle order
  double max_relative_error = 0.0;
  bool pass = false;
};

/// Compares the roots of the restricted polynomials with the zig-zag products.
inline BoundaryReport verify_boundary_vs_zigzag(const EdgeWeights& wt) {
  BoundaryReport rep;
  rep.roots = boundary_points(characteristic_polynomial(wt));
  const std::array<ZigZagOrientation, 3> orient = {ZigZagOrientation::horizontal, ZigZagOrientation::nw_se,
                                                   ZigZagOrientation::vertical};
  const std::array<const std::vector<double>*, 3> lists = {&rep.roots.on_w0, &rep.roots.at_inf, &rep.roots.on_z0};
  // ordering is stored as (w=0, z=0, infinity) to mirror BoundaryPoints' field order
  const std::array<int, 3> slot = {0, 2, 1};
  for (int o = 0; o < 3; ++o) {
    rep.zigzag[o] = zigzag_products(wt, orient[o]);
    const auto& zz = rep.zigzag[o];
    const auto& rr = *lists[o];
    std::vector<int> perm(zz.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) { return zz[x] < zz[y]; });
    std::vector<int> order(zz.size());
    for (std::size_t pos = 0; pos < perm.size(); ++pos) {
      const double expect = zz[perm[pos]];
      const double got = rr.at(pos);
      rep.max_relative_error = std::max(rep.max_relative_error, std::abs(got - expect) / std::abs(expect));
      order[perm[pos]] = static_cast<int>(pos);
    }
    rep.roots.ordering[slot[o]] = order;
  }
  rep.pass = rep.max_relative_error < 1e-8;
  return rep;
}

}  // namespace harnack
