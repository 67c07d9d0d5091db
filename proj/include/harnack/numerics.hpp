#pragma once
// Shared numerical kernels: univariate complex root finding (Aberth-Ehrlich),
// complex LU determinants, and periodic / adaptive quadrature.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>
#include <span>
#include <vector>

#include "harnack/error.hpp"

namespace harnack {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Univariate polynomial with complex coefficients in ascending degree.
struct ComplexPoly {
  std::vector<cplx> coeffs;

  ComplexPoly() = default;
  explicit ComplexPoly(std::vector<cplx> c) : coeffs(std::move(c)) {}

  /// Drops trailing coefficients below rel * max|coeff| (exact zeros only when rel = 0).
  void trim(double rel = 1e-14) {
    double m = 0.0;
    for (const auto& c : coeffs) m = std::max(m, std::abs(c));
    while (!coeffs.empty() && (coeffs.back() == cplx(0.0) || std::abs(coeffs.back()) <= rel * m)) coeffs.pop_back();
  }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  cplx operator()(cplx z) const {
    cplx acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs) m = std::max(m, std::abs(c));
    return m;
  }
};

/// A root together with the number of computed roots merged into it.
struct RootCluster {
  cplx value;
  int multiplicity = 1;
};

namespace detail {

// Newton correction p(z)/p'(z) and the backward-error ratio |p(z)| / sum|c_k||z|^k.
// For |z| > 1 the reversed polynomial is used to avoid overflow.
inline void newton_ratio(std::span<const cplx> c, cplx z, cplx& ratio, double& backward) {
  const int n = static_cast<int>(c.size()) - 1;
  if (std::abs(z) <= 1.0) {
    cplx p = c[n], dp = 0.0;
    double s = std::abs(c[n]);
    const double az = std::abs(z);
    for (int k = n - 1; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + c[k];
      s = s * az + std::abs(c[k]);
    }
    backward = s > 0 ? std::abs(p) / s : 0.0;
    ratio = (dp == cplx(0.0)) ? cplx(0.0) : p / dp;
    if (dp == cplx(0.0) && p != cplx(0.0)) ratio = cplx(1e-3 * (1.0 + az), 1e-3);
    return;
  }
  const cplx y = 1.0 / z;
  cplx q = c[0], dq = 0.0;
  double s = std::abs(c[0]);
  const double ay = std::abs(y);
  for (int k = 1; k <= n; ++k) {
    dq = dq * y + q;
    q = q * y + c[k];
    s = s * ay + std::abs(c[k]);
  }
  backward = s > 0 ? std::abs(q) / s : 0.0;
  const cplx den = static_cast<double>(n) * q - y * dq;
  ratio = (den == cplx(0.0)) ? cplx(1e-3 * std::abs(z), 1e-3) : z * q / den;
}

// log of sum |c_k| |z|^k, safe for large |z|.
inline double log_abs_scale(std::span<const cplx> c, cplx z) {
  const int n = static_cast<int>(c.size()) - 1;
  const double az = std::abs(z);
  double s = 0.0;
  if (az <= 1.0) {
    for (int k = n; k >= 0; --k) s = s * az + std::abs(c[k]);
    return std::log(s);
  }
  const double ay = 1.0 / az;
  for (int k = 0; k <= n; ++k) s = s * ay + std::abs(c[k]);
  return n * std::log(az) + std::log(s);
}

// Initial approximations from the upper convex hull of (k, log|c_k|): each hull
// edge gives a circle radius and the number of roots placed on it.
inline std::vector<cplx> newton_polygon_guesses(std::span<const cplx> c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<int> idx;
  std::vector<double> lg;
  for (int k = 0; k <= n; ++k) {
    if (std::abs(c[k]) > 0) {
      idx.push_back(k);
      lg.push_back(std::log(std::abs(c[k])));
    }
  }
  std::vector<int> hull;  // positions into idx
  for (int p = 0; p < static_cast<int>(idx.size()); ++p) {
    while (hull.size() >= 2) {
      const int a = hull[hull.size() - 2], b = hull.back();
      const double cross = (idx[b] - idx[a]) * (lg[p] - lg[a]) - (lg[b] - lg[a]) * (idx[p] - idx[a]);
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }
  std::vector<cplx> z;
  z.reserve(n);
  const double sigma = 0.7;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const int k0 = idx[hull[h]], k1 = idx[hull[h + 1]];
    const int m = k1 - k0;
    const double r = std::exp((lg[hull[h]] - lg[hull[h + 1]]) / m);
    for (int j = 0; j < m; ++j) {
      const double ang = kTwoPi * j / m + kTwoPi * static_cast<double>(h) / n + sigma;
      z.emplace_back(r * std::cos(ang), r * std::sin(ang));
    }
  }
  return z;
}

// A root of multiplicity m is a simple root of p^(m-1); Newton there is well
// conditioned. Steps are kept only while |p^(m-1)| decreases.
inline cplx refine_multiple(std::span<const cplx> c, cplx z0, int m) {
  std::vector<cplx> d(c.begin(), c.end());
  for (int k = 1; k < m; ++k) {
    for (std::size_t i = 1; i < d.size(); ++i) d[i - 1] = static_cast<double>(i) * d[i];
    d.pop_back();
  }
  if (d.size() < 2) return z0;
  cplx z = z0, ratio;
  double back;
  newton_ratio(d, z, ratio, back);
  for (int it = 0; it < 20; ++it) {
    const cplx cand = z - ratio;
    cplx r2;
    double b2;
    newton_ratio(d, cand, r2, b2);
    if (!(b2 < back)) break;
    z = cand;
    ratio = r2;
    back = b2;
  }
  return z;
}

}  // namespace detail

/// Root clusters of p. Roots whose inclusion discs overlap, or whose
/// distance is below 1e-6 * max(1,|r|), are merged and replaced by their mean.
inline std::vector<RootCluster> root_clusters(ComplexPoly p) {
  // only exact zeros are dropped: small leading terms still carry large roots
  p.trim(0.0);
  if (p.coeffs.empty()) throw ValidationError("roots: zero polynomial");
  if (p.degree() < 1) throw ValidationError("roots: polynomial has degree 0");

  int zeros = 0;
  while (zeros < p.degree() && p.coeffs[zeros] == cplx(0.0)) ++zeros;
  std::span<const cplx> c(p.coeffs.data() + zeros, p.coeffs.size() - zeros);
  const int n = static_cast<int>(c.size()) - 1;

  std::vector<cplx> z;
  std::vector<double> radius;
  if (n == 1) {
    z.push_back(-c[0] / c[1]);
    radius.push_back(0.0);
  } else if (n > 1) {
    z = detail::newton_polygon_guesses(c);
    std::vector<char> done(n, 0);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int it = 0; it < 200; ++it) {
      bool all = true;
      for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        cplx ratio;
        double back;
        detail::newton_ratio(c, z[i], ratio, back);
        if (back <= 4 * eps) {
          done[i] = 1;
          continue;
        }
        all = false;
        cplx s = 0.0;
        for (int j = 0; j < n; ++j)
          if (j != i) s += 1.0 / (z[i] - z[j]);
        const cplx corr = ratio / (1.0 - ratio * s);
        z[i] -= corr;
        if (std::abs(corr) <= 2 * eps * std::abs(z[i])) done[i] = 1;
      }
      if (all) break;
    }
    radius.resize(n);
    for (int i = 0; i < n; ++i) {
      cplx ratio;
      double back;
      detail::newton_ratio(c, z[i], ratio, back);
      // one Newton polish, kept only if it does not increase the backward error
      const cplx cand = z[i] - ratio;
      cplx r2;
      double b2;
      detail::newton_ratio(c, cand, r2, b2);
      if (b2 < back) {
        z[i] = cand;
        ratio = r2;
      }
      back = std::max(back, 4 * eps);
      // Weierstrass inclusion radius n |p(z_i)| / |c_n prod (z_i - z_j)|, with
      // |p(z_i)| floored at the rounding level so computed clusters overlap
      double lr = std::log(static_cast<double>(n) * back) + detail::log_abs_scale(c, z[i]) - std::log(std::abs(c[n]));
      for (int j = 0; j < n; ++j)
        if (j != i) lr -= std::log(std::abs(z[i] - z[j]));
      radius[i] = std::max(n * std::abs(ratio), std::exp(lr));
    }
  }

  // cluster via union-find on overlapping discs
  std::vector<int> parent(z.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      const double dist = std::abs(z[i] - z[j]);
      const double tol = std::max(1e-6 * std::max(1.0, std::abs(z[i])), radius[i] + radius[j]);
      if (dist < tol) parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
    }
  std::vector<RootCluster> out;
  std::vector<int> slot(z.size(), -1);
  std::vector<cplx> sum;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const int r = find(static_cast<int>(i));
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.push_back({0.0, 0});
      sum.push_back(0.0);
    }
    sum[slot[r]] += z[i];
    out[slot[r]].multiplicity += 1;
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k].value = sum[k] / static_cast<double>(out[k].multiplicity);
    if (out[k].multiplicity > 1) out[k].value = detail::refine_multiple(c, out[k].value, out[k].multiplicity);
  }
  if (zeros > 0) out.push_back({0.0, zeros});
  return out;
}

/// All deg(p) roots, repeated according to multiplicity.
inline std::vector<cplx> roots(const ComplexPoly& p) {
  std::vector<cplx> out;
  for (const auto& rc : root_clusters(p))
    for (int k = 0; k < rc.multiplicity; ++k) out.push_back(rc.value);
  return out;
}

/// Dense complex matrix, row-major.
struct ComplexMatrix {
  int rows = 0, cols = 0;
  std::vector<cplx> data;

  ComplexMatrix() = default;
  ComplexMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

  cplx& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  const cplx& operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

/// Determinant by LU with partial pivoting.
inline cplx det_complex(ComplexMatrix m) {
  if (m.rows != m.cols) throw ValidationError("det_complex: matrix is not square");
  const int n = m.rows;
  cplx det = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(m(k, k));
    for (int i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > best) {
        best = std::abs(m(i, k));
        piv = i;
      }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      det = -det;
    }
    const cplx pk = m(k, k);
    det *= pk;
    for (int i = k + 1; i < n; ++i) {
      const cplx f = m(i, k) / pk;
      if (f == cplx(0.0)) continue;
      for (int j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

struct QuadratureResult {
  double value = 0.0;
  int evaluations = 0;
  double error_estimate = 0.0;
  bool converged = true;
};

/// Trapezoid rule on [0, 2pi), doubling n until successive estimates agree to tol.
/// Non-convergence at the cap is reported through `converged`, not thrown.
template <class F>
QuadratureResult periodic_quadrature(F&& f, int n = 8, double tol = 1e-12, int cap = 1 << 16) {
  if (n < 8) throw ValidationError("periodic_quadrature: need at least 8 samples");
  double sum = 0.0;
  for (int k = 0; k < n; ++k) sum += f(kTwoPi * k / n);
  double est = sum * kTwoPi / n;
  int evals = n;
  while (true) {
    if (2 * n > cap) return {est, evals, std::numeric_limits<double>::infinity(), false};
    for (int k = 0; k < n; ++k) sum += f(kTwoPi * (k + 0.5) / n);
    evals += n;
    n *= 2;
    const double next = sum * kTwoPi / n;
    const double diff = std::abs(next - est);
    est = next;
    if (diff < tol) return {est, evals, diff, true};
  }
}

namespace detail {

inline constexpr std::array<double, 8> kKronrodX = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodW = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussW = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
};

template <class F>
Segment gk15(F& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  double k = fc * kKronrodW[7];
  double g = fc * kGaussW[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kKronrodX[j];
    const double s = f(c - dx) + f(c + dx);
    k += kKronrodW[j] * s;
    if (j % 2 == 1) g += kGaussW[j / 2] * s;
  }
  return {a, b, k * h, std::abs((k - g) * h)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double tol = 1e-12, int max_segments = 4000) {
  if (!(b > a)) return {0.0, 0, 0.0, true};
  std::vector<detail::Segment> segs{detail::gk15(f, a, b)};
  int evals = 15;
  auto total_error = [&] {
    double e = 0.0;
    for (const auto& s : segs) e += s.error;
    return e;
  };
  while (total_error() > tol && static_cast<int>(segs.size()) < max_segments) {
    auto worst = std::max_element(segs.begin(), segs.end(),
                                  [](const auto& x, const auto& y) { return x.error < y.error; });
    const double m = 0.5 * (worst->a + worst->b);
    if (!(m > worst->a && m < worst->b)) break;
    const auto left = detail::gk15(f, worst->a, m);
    const auto right = detail::gk15(f, m, worst->b);
    *worst = left;
    segs.push_back(right);
    evals += 30;
  }
  std::sort(segs.begin(), segs.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
  QuadratureResult r;
  for (const auto& s : segs) r.value += s.value;
  r.error_estimate = total_error();
  r.evaluations = evals;
  r.converged = r.error_estimate <= tol;
  return r;
}

/// Integral of f over [a, b] split at the given interior breakpoints.
template <class F>
QuadratureResult integrate_piecewise(F&& f, double a, double b, std::vector<double> breaks, double tol = 1e-12) {
  std::sort(breaks.begin(), breaks.end());
  std::vector<double> pts{a};
  for (double x : breaks)
    if (x > pts.back() && x < b) pts.push_back(x);
  pts.push_back(b);
  QuadratureResult total;
  const double share = tol / static_cast<double>(pts.size() - 1);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto r = integrate_adaptive(f, pts[i], pts[i + 1], share);
    total.value += r.value;
    total.evaluations += r.evaluations;
    total.error_estimate += r.error_estimate;
    total.converged = total.converged && r.converged;
  }
  return total;
}

/// Gauss-Legendre nodes and weights on [-1, 1].
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-16) {
        w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        break;
      }
      w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    x[i] = t;
  }
}

}  // namespace harnack
