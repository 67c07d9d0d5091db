#pragma once
// Divisor of a white vertex: zeros of the v-component of the cokernel section
// of K(z, w) along the compact real ovals of the spectral curve.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include "harnack/amoeba.hpp"
#include "harnack/error.hpp"
#include "harnack/harnack_check.hpp"
#include "harnack/kasteleyn.hpp"
#include "harnack/lattice.hpp"
#include "harnack/ovals.hpp"

namespace harnack {

struct DivisorPoint {
  double z = 0.0, w = 0.0;
  int oval_id = -1;  ///< index into the traced ovals; -1 for a real node
  int vertex = 0;    ///< white vertex r * d + c
};

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out(i, j) = m(i, j);
  return out;
}

/// Unit u with u^T K(z, w) = 0, rotated so that its largest entry is real and
/// positive. At real points the result is real.
inline Eigen::VectorXcd left_null_vector(const EdgeWeights& wt, cplx z, cplx w) {
  const Eigen::MatrixXcd K = to_eigen(assemble_K(wt, z, w));
  const int n = static_cast<int>(K.rows());
  if (n == 1) {
    if (std::abs(K(0, 0)) > 1e-8 * (wt.a(0, 0) * std::abs(z) + wt.b(0, 0) * std::abs(w) + wt.c(0, 0)))
      throw ValidationError("point not on the spectral curve");
    return Eigen::VectorXcd::Ones(1);
  }
  // K^T u = 0  <=>  K^* conj(u) = 0: conj(u) is the last left singular vector
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(K, Eigen::ComputeFullU);
  const auto& s = svd.singularValues();
  if (s(n - 1) > 1e-8 * s(0)) throw ValidationError("point not on the spectral curve");
  if (s(n - 2) < 1e3 * s(n - 1) || s(n - 2) < 1e-8 * s(0)) throw Error("singular point");
  Eigen::VectorXcd u = svd.matrixU().col(n - 1).conjugate();
  Eigen::Index imax = 0;
  u.cwiseAbs().maxCoeff(&imax);
  u *= std::abs(u(imax)) / u(imax);
  return u.normalized();
}

/// Real null vector at a real point of the curve.
inline Eigen::VectorXd real_left_null_vector(const EdgeWeights& wt, double z, double w) {
  return left_null_vector(wt, z, w).real().normalized();
}

struct OvalSection {
  int oval_id = 0;
  int sign_changes = 0;  ///< zeros of the v-component found along the loop
  int holonomy = 1;      ///< sign of u_end . u_start after continuous transport
};

struct DivisorReport {
  std::vector<DivisorPoint> points;
  std::vector<RealOval> ovals;
  std::vector<OvalSection> sections;  ///< one per compact oval
  std::vector<std::array<double, 2>> nodes;
  int expected = 0;  ///< (d - 1)(d - 2) / 2
};

namespace detail {

// Point on the curve between two consecutive oval samples, in log coordinates.
inline std::array<double, 2> oval_interpolate(const BivariatePolynomial& P, const RealOval& o, std::size_t k,
                                              double s) {
  const auto& a = o.logs[k];
  const auto& b = o.logs[(k + 1) % o.logs.size()];
  double X = a[0] + s * (b[0] - a[0]), Y = a[1] + s * (b[1] - a[1]);
  int it = 0;
  project(P, o.quadrant[0], o.quadrant[1], X, Y, it);
  return {o.quadrant[0] * std::exp(X), o.quadrant[1] * std::exp(Y)};
}

}  // namespace detail

/// Traces the compact ovals, transports the real null vector continuously
/// along each one and locates the sign changes of its v-component by
/// bisection. Real nodes carry one divisor point each.
inline DivisorReport divisor_report(const EdgeWeights& wt, int vertex) {
  const int d = wt.d;
  if (vertex < 0 || vertex >= d * d) throw ValidationError("vertex out of range");
  DivisorReport rep;
  rep.expected = (d - 1) * (d - 2) / 2;
  if (d < 3) return rep;
  const BivariatePolynomial P = characteristic_polynomial(wt);
  const Window win = area_window(P);
  rep.ovals = trace_real_ovals(P, win);
  rep.nodes = find_real_nodes(P, win);
  for (const auto& nd : rep.nodes) rep.points.push_back({nd[0], nd[1], -1, vertex});

  for (int id = 0; id < static_cast<int>(rep.ovals.size()); ++id) {
    const RealOval& o = rep.ovals[id];
    if (!o.closed || !(o.log_area > 0.0)) continue;
    OvalSection sec{id, 0, 1};
    const std::size_t n = o.points.size();
    std::vector<Eigen::VectorXd> u(n);
    for (std::size_t k = 0; k < n; ++k) {
      u[k] = real_left_null_vector(wt, o.points[k][0], o.points[k][1]);
      if (k && u[k].dot(u[k - 1]) < 0) u[k] = -u[k];
    }
    sec.holonomy = u[n - 1].dot(u[0]) < 0 ? -1 : 1;
    for (std::size_t k = 0; k < n; ++k) {
      const Eigen::VectorXd& ua = u[k];
      const Eigen::VectorXd ub = k + 1 < n ? u[k + 1] : Eigen::VectorXd(sec.holonomy * u[0]);
      if ((ua(vertex) < 0) == (ub(vertex) < 0)) continue;
      double lo = 0.0, hi = 1.0;
      std::array<double, 2> pt = o.points[k];
      for (int it = 0; it < 50; ++it) {
        const double mid = 0.5 * (lo + hi);
        pt = detail::oval_interpolate(P, o, k, mid);
        Eigen::VectorXd um = real_left_null_vector(wt, pt[0], pt[1]);
        if (um.dot(ua) < 0) um = -um;
        ((um(vertex) < 0) == (ua(vertex) < 0) ? lo : hi) = mid;
      }
      rep.points.push_back({pt[0], pt[1], id, vertex});
      ++sec.sign_changes;
    }
    rep.sections.push_back(sec);
  }
  return rep;
}

/// Divisor points of a white vertex; throws when their number differs from
/// (d - 1)(d - 2) / 2.
inline std::vector<DivisorPoint> vertex_divisor(const EdgeWeights& wt, int vertex) {
  const DivisorReport rep = divisor_report(wt, vertex);
  if (static_cast<int>(rep.points.size()) != rep.expected) {
    std::ostringstream msg;
    msg << "divisor degree " << rep.points.size() << " != " << rep.expected << " (compact ovals "
        << rep.sections.size() << ", real nodes " << rep.nodes.size() << ", sign changes";
    for (const auto& s : rep.sections) msg << ' ' << s.sign_changes << (s.holonomy < 0 ? "*" : "");
    msg << ")";
    throw Error(msg.str());
  }
  return rep.points;
}

/// True iff each nondegenerate compact oval carries exactly one point.
inline bool is_standard_divisor(const std::vector<DivisorPoint>& points, const std::vector<RealOval>& ovals) {
  std::vector<int> count(ovals.size(), 0);
  for (const auto& p : points) {
    if (p.oval_id < 0) continue;
    if (p.oval_id >= static_cast<int>(ovals.size())) return false;
    ++count[p.oval_id];
  }
  for (std::size_t i = 0; i < ovals.size(); ++i) {
    const bool compact = ovals[i].closed && ovals[i].log_area > 0.0;
    if (compact ? count[i] != 1 : count[i] != 0) return false;
  }
  return true;
}

}  // namespace harnack
