#pragma once
// Genus-zero Harnack curves in the circle chart of RP^1:
//   z(t) = rho_z prod_i s(t - alpha_i) / s(t - beta_i),
//   w(t) = rho_w prod_i s(t - gamma_i) / s(t - beta_i),   s(x) = sin(x / 2).
// Counterclockwise the parameters read alpha_1..alpha_d, beta_1..beta_d,
// gamma_1..gamma_d. The sign of rho selects the quadrant the curve lives in.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "harnack/error.hpp"
#include "harnack/numerics.hpp"
#include "harnack/polynomial.hpp"

namespace harnack {

struct Genus0Curve {
  int d = 0;
  std::vector<double> alpha, beta, gamma;  ///< z-zeros, poles, w-zeros
  double rho_z = 1.0, rho_w = 1.0;
};

/// Boundary values: A = w at the zeros of z, B = 1/z at the zeros of w,
/// C = z/w at the poles. Each vector has constant sign.
struct BoundaryTriple {
  std::vector<double> A, B, C;
};

namespace detail {

inline double half_sin(double x) { return std::sin(0.5 * x); }
inline double half_cot(double x) { return 0.5 / std::tan(0.5 * x); }

inline double wrap(double t) {
  t = std::fmod(t, kTwoPi);
  return t < 0 ? t + kTwoPi : t;
}

}  // namespace detail

/// Parameters lifted to an increasing chain alpha.., beta.., gamma.. inside
/// [alpha_1, alpha_1 + 2pi). Throws when the cyclic order is violated.
struct Chain {
  int d = 0;
  std::vector<double> alpha, beta, gamma;

  std::vector<double> all() const {
    std::vector<double> v = alpha;
    v.insert(v.end(), beta.begin(), beta.end());
    v.insert(v.end(), gamma.begin(), gamma.end());
    return v;
  }
};

inline Chain make_chain(int d, const std::vector<double>& alpha, const std::vector<double>& beta,
                        const std::vector<double>& gamma) {
  if (d < 1) throw ValidationError("degree must be positive");
  if (static_cast<int>(alpha.size()) != d || static_cast<int>(beta.size()) != d || static_cast<int>(gamma.size()) != d)
    throw ValidationError("each angle family must have d entries");
  struct Item {
    double t;
    int fam;
  };
  std::vector<Item> items;
  for (int f = 0; f < 3; ++f)
    for (double t : f == 0 ? alpha : f == 1 ? beta : gamma) {
      if (!std::isfinite(t)) throw ValidationError("angles must be finite");
      items.push_back({detail::wrap(t), f});
    }
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.t < b.t; });
  const int n = 3 * d;
  for (int start = 0; start < n; ++start) {
    if (items[start].fam != 0 || items[(start + n - 1) % n].fam != 2) continue;
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) ok = items[(start + k) % n].fam == k / d;
    if (!ok) continue;
    Chain c;
    c.d = d;
    const double base = items[start].t;
    for (int k = 0; k < n; ++k) {
      double t = items[(start + k) % n].t;
      if (t < base) t += kTwoPi;
      (k < d ? c.alpha : k < 2 * d ? c.beta : c.gamma).push_back(t);
    }
    // families must not touch each other
    const auto v = c.all();
    for (int k = 0; k < n; ++k) {
      const double gap = k + 1 < n ? v[k + 1] - v[k] : v[0] + kTwoPi - v[k];
      if ((k % d == d - 1) && !(gap > 0)) throw ValidationError("cyclic order violated: families overlap");
    }
    return c;
  }
  throw ValidationError("cyclic order violated");
}

inline Chain make_chain(const Genus0Curve& c) { return make_chain(c.d, c.alpha, c.beta, c.gamma); }

inline void validate(const Genus0Curve& c) {
  make_chain(c);
  if (!(c.rho_z != 0.0 && c.rho_w != 0.0 && std::isfinite(c.rho_z) && std::isfinite(c.rho_w)))
    throw ValidationError("prefactors must be nonzero");
}

/// (z(t), w(t)).
inline std::array<double, 2> evaluate_parametrization(const Genus0Curve& c, double t) {
  double z = c.rho_z, w = c.rho_w;
  for (int i = 0; i < c.d; ++i) {
    const double sb = detail::half_sin(t - c.beta[i]);
    if (std::abs(sb) < 1e-12) throw ValidationError("parameter at a pole");
    z *= detail::half_sin(t - c.alpha[i]) / sb;
    w *= detail::half_sin(t - c.gamma[i]) / sb;
  }
  return {z, w};
}

/// Same at a complex parameter.
inline std::array<cplx, 2> evaluate_parametrization(const Genus0Curve& c, cplx t) {
  cplx z = c.rho_z, w = c.rho_w;
  for (int i = 0; i < c.d; ++i) {
    const cplx sb = std::sin(0.5 * (t - c.beta[i]));
    z *= std::sin(0.5 * (t - c.alpha[i])) / sb;
    w *= std::sin(0.5 * (t - c.gamma[i])) / sb;
  }
  return {z, w};
}

/// Boundary values, indexed like the stored angles. The stored values are
/// used as they are: moving a parameter by 2pi flips the sign of its factor.
inline BoundaryTriple boundary_map(const Genus0Curve& c) {
  validate(c);
  const int d = c.d;
  BoundaryTriple t;
  for (int i = 0; i < d; ++i) {
    double a = c.rho_w, b = 1.0 / c.rho_z, cc = c.rho_z / c.rho_w;
    for (int j = 0; j < d; ++j) {
      a *= detail::half_sin(c.alpha[i] - c.gamma[j]) / detail::half_sin(c.alpha[i] - c.beta[j]);
      b *= detail::half_sin(c.gamma[i] - c.beta[j]) / detail::half_sin(c.gamma[i] - c.alpha[j]);
      cc *= detail::half_sin(c.beta[i] - c.alpha[j]) / detail::half_sin(c.beta[i] - c.gamma[j]);
    }
    t.A.push_back(a);
    t.B.push_back(b);
    t.C.push_back(cc);
  }
  return t;
}

/// Angles wrapped into [0, 2pi), each family sorted ascending, with the
/// prefactor signs compensated so the functions z and w do not change.
inline Genus0Curve normalized(const Genus0Curve& c) {
  validate(c);
  Genus0Curve out = c;
  int flips_z = 0, flips_w = 0;
  auto fix = [](std::vector<double>& v) {
    int flips = 0;
    for (double& t : v) {
      const double k = std::floor(t / kTwoPi);
      t -= k * kTwoPi;
      int shifts = static_cast<int>(k);
      if (t >= kTwoPi - 1e-12) {
        t = 0.0;
        ++shifts;
      }
      flips += shifts;
    }
    std::sort(v.begin(), v.end());
    return flips;
  };
  const int fa = fix(out.alpha), fb = fix(out.beta), fg = fix(out.gamma);
  flips_z = fa + fb;
  flips_w = fg + fb;
  if (flips_z % 2) out.rho_z = -out.rho_z;
  if (flips_w % 2) out.rho_w = -out.rho_w;
  return out;
}

struct ImplicitizeResult {
  BivariatePolynomial P;
  double residual = 0.0;  ///< max |P(z(t), w(t))| / scale over fresh samples
};

/// Degree-d implicit equation from the null space of the monomial matrix at
/// sample points. The representative has p_00 >= 0 and max |p_ij| = 1.
inline ImplicitizeResult implicitize_detailed(const Genus0Curve& c) {
  validate(c);
  const int d = c.d;
  const Chain ch = make_chain(c);
  const int m = (d + 1) * (d + 2) / 2;
  const int samples = 4 * m + 12;
  // balance the coefficients with the geometric-mean boundary radii
  const auto bt = boundary_map(c);
  double lz = 0.0, lw = 0.0;
  for (int i = 0; i < d; ++i) {
    lz -= std::log(std::abs(bt.B[i])) / d;
    lw += std::log(std::abs(bt.A[i])) / d;
  }
  lz = std::exp(lz);
  lw = std::exp(lw);
  // samples off the real circle, where z and w stay bounded; real and
  // imaginary parts give separate rows
  Eigen::MatrixXd M(2 * samples, m);
  for (int k = 0; k < samples; ++k) {
    const double heights[4] = {0.15, 0.4, 0.9, 1.6};
    const cplx t(kTwoPi * (k + 0.37) / samples, heights[k % 4]);
    auto zw = evaluate_parametrization(c, t);
    zw[0] /= lz;
    zw[1] /= lw;
    const double sc = 1.0 / (1.0 + std::pow(std::abs(zw[0]) + std::abs(zw[1]), d));
    int col = 0;
    for (int i = 0; i <= d; ++i)
      for (int j = 0; i + j <= d; ++j) {
        const cplx v = std::pow(zw[0], i) * std::pow(zw[1], j) * sc;
        M(2 * k, col) = v.real();
        M(2 * k + 1, col) = v.imag();
        ++col;
      }
  }
  // fresh real samples inside the gaps for the residual
  auto sample_t = [&](int k) {
    const auto v = ch.all();
    const int n = static_cast<int>(v.size());
    const int gi = k % n;
    const double lo = v[gi], hi = gi + 1 < n ? v[gi + 1] : v[0] + kTwoPi;
    return lo + (hi - lo) * (0.05 + 0.9 * std::fmod(0.618034 * (k / n + 1), 1.0));
  };
  Eigen::VectorXd norms = M.colwise().norm();
  for (int j = 0; j < m; ++j) M.col(j) /= norms(j);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  if (!(s(m - 1) <= 1e-8 * s(0)) || s(m - 2) <= 1e-8 * s(0)) throw Error("parametrization degenerate");
  Eigen::VectorXd v = svd.matrixV().col(m - 1);
  ImplicitizeResult out{BivariatePolynomial(d), 0.0};
  int col = 0;
  double mx = 0.0;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) {
      out.P(i, j) = v(col) / norms(col) / (std::pow(lz, i) * std::pow(lw, j));
      mx = std::max(mx, std::abs(out.P(i, j)));
      ++col;
    }
  const double sgn = out.P(0, 0) < 0 ? -1.0 : 1.0;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) out.P(i, j) *= sgn / mx;
  for (int k = 0; k < 100; ++k) {
    const auto zw = evaluate_parametrization(c, sample_t(k));
    out.residual = std::max(out.residual, std::abs(out.P.eval(zw[0], zw[1])) / out.P.scale(std::abs(zw[0]), std::abs(zw[1])));
  }
  return out;
}

inline BivariatePolynomial implicitize(const Genus0Curve& c) { return implicitize_detailed(c).P; }

/// Chart x = tan((theta - theta_ref) / 2) with theta_ref + pi in the middle of
/// the largest gap, so no parameter is sent to infinity.
struct LineChart {
  double theta_ref = 0.0;
  double operator()(double theta) const { return std::tan(0.5 * (theta - theta_ref)); }
  double derivative(double theta) const {
    const double x = (*this)(theta);
    return 0.5 * (1 + x * x);
  }
};

inline LineChart line_chart(const Chain& ch) {
  const auto v = ch.all();
  const int n = static_cast<int>(v.size());
  double best = -1, mid = 0;
  for (int k = 0; k < n; ++k) {
    const double lo = v[k], hi = k + 1 < n ? v[k + 1] : v[0] + kTwoPi;
    if (hi - lo > best) {
      best = hi - lo;
      mid = 0.5 * (lo + hi);
    }
  }
  return {mid - std::numbers::pi};
}

/// Jacobian of (log|A|, log|B|, log|C|) with respect to the real-line chart
/// coordinates (a, b, c) = (zeros of z, zeros of w, poles), holding the
/// real-line prefactors fixed. Assembled as (1/d) times the sum over all
/// triples (a_i, b_j, c_k) of the rank-one blocks
///   [ 1/(a-b) - 1/(a-c)   1/(b-a)             1/(a-c)           ]
///   [ 1/(b-a)             1/(b-c) - 1/(b-a)   1/(c-b)           ]
///   [ 1/(a-c)             1/(c-b)             1/(c-a) - 1/(c-b) ]
/// Rows are ordered A.., B.., C.. and columns a.., b.., c.., so J is symmetric.
struct LogABCJacobian {
  Eigen::MatrixXd J;
  std::vector<double> x;  ///< chart coordinates a.., b.., c..
  LineChart chart;
};

inline Eigen::Matrix3d elementary_block(double a, double b, double c) {
  Eigen::Matrix3d B;
  B << 1 / (a - b) - 1 / (a - c), 1 / (b - a), 1 / (a - c),  //
      1 / (b - a), 1 / (b - c) - 1 / (b - a), 1 / (c - b),   //
      1 / (a - c), 1 / (c - b), 1 / (c - a) - 1 / (c - b);
  return B;
}

inline LogABCJacobian jacobian_logABC(const Genus0Curve& curve) {
  validate(curve);
  const Chain ch = make_chain(curve);
  const int d = curve.d;
  LogABCJacobian out;
  out.chart = line_chart(ch);
  for (double t : ch.alpha) out.x.push_back(out.chart(t));
  for (double t : ch.gamma) out.x.push_back(out.chart(t));
  for (double t : ch.beta) out.x.push_back(out.chart(t));
  for (int i = 0; i < 3 * d; ++i)
    for (int j = 0; j < i; ++j)
      if (out.x[i] == out.x[j]) throw ValidationError("jacobian needs distinct parameters");
  out.J = Eigen::MatrixXd::Zero(3 * d, 3 * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const int idx[3] = {i, d + j, 2 * d + k};
        const Eigen::Matrix3d B = elementary_block(out.x[idx[0]], out.x[idx[1]], out.x[idx[2]]);
        for (int r = 0; r < 3; ++r)
          for (int s = 0; s < 3; ++s) out.J(idx[r], idx[s]) += B(r, s) / d;
      }
  return out;
}

/// Jacobian of (log|A|, log|B|, log|C|) in chain order with respect to the
/// circle angles (alpha.., beta.., gamma..) at fixed rho.
inline Eigen::MatrixXd jacobian_logABC_circle(const Chain& ch) {
  const int d = ch.d;
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(3 * d, 3 * d);
  const int oa = 0, ob = d, og = 2 * d;  // column offsets
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      using detail::half_cot;
      // A_i = rho_w prod s(alpha_i - gamma_j) / s(alpha_i - beta_j)
      const double ag = half_cot(ch.alpha[i] - ch.gamma[j]), ab = half_cot(ch.alpha[i] - ch.beta[j]);
      J(i, oa + i) += ag - ab;
      J(i, og + j) -= ag;
      J(i, ob + j) += ab;
      // B_i = rho_z^-1 prod s(gamma_i - beta_j) / s(gamma_i - alpha_j)
      const double gb = half_cot(ch.gamma[i] - ch.beta[j]), ga = half_cot(ch.gamma[i] - ch.alpha[j]);
      J(d + i, og + i) += gb - ga;
      J(d + i, ob + j) -= gb;
      J(d + i, oa + j) += ga;
      // C_i = rho_z / rho_w prod s(beta_i - alpha_j) / s(beta_i - gamma_j)
      const double ba = half_cot(ch.beta[i] - ch.alpha[j]), bg = half_cot(ch.beta[i] - ch.gamma[j]);
      J(2 * d + i, ob + i) += ba - bg;
      J(2 * d + i, oa + j) -= ba;
      J(2 * d + i, og + j) += bg;
    }
  return J;
}

/// Orientation-preserving Moebius map of the circle, acting on the projective
/// vector (sin(t/2), cos(t/2)).
struct CircleMoebius {
  Eigen::Matrix2d M = Eigen::Matrix2d::Identity();

  double operator()(double t) const {
    const Eigen::Vector2d v(std::sin(0.5 * t), std::cos(0.5 * t));
    const Eigen::Vector2d u = M * v;
    return detail::wrap(2.0 * std::atan2(u(0), u(1)));
  }
};

/// The map sending p1, p2, p3 to q1, q2, q3.
inline CircleMoebius three_point_map(std::array<double, 3> p, std::array<double, 3> q) {
  auto normal_form = [](const std::array<double, 3>& t) {
    // sends t0 -> 0, t1 -> infinity, t2 -> 1 in the chart u0 / u1
    const Eigen::Vector2d v0(std::sin(0.5 * t[0]), std::cos(0.5 * t[0]));
    const Eigen::Vector2d v1(std::sin(0.5 * t[1]), std::cos(0.5 * t[1]));
    const Eigen::Vector2d v2(std::sin(0.5 * t[2]), std::cos(0.5 * t[2]));
    Eigen::Matrix2d basis;
    basis << v1, v0;
    const Eigen::Vector2d lam = basis.colPivHouseholderQr().solve(v2);
    Eigen::Matrix2d N;
    N << lam(0) * v1, lam(1) * v0;
    return Eigen::Matrix2d(N.inverse());
  };
  CircleMoebius m;
  m.M = normal_form(q).inverse() * normal_form(p);
  return m;
}

/// The same curve with every parameter moved by the orientation-preserving
/// circle map g (angle to angle); the
/// prefactors are recomputed so that z and w are unchanged as functions on
/// the curve.
template <class AngleMap>
inline Genus0Curve transport(const Genus0Curve& c, const AngleMap& g) {
  const Chain ch = make_chain(c);
  Genus0Curve out = c;
  out.alpha.clear();
  out.beta.clear();
  out.gamma.clear();
  for (double t : ch.alpha) out.alpha.push_back(g(t));
  for (double t : ch.beta) out.beta.push_back(g(t));
  for (double t : ch.gamma) out.gamma.push_back(g(t));
  out.rho_z = out.rho_w = 1.0;
  // match at the middle of the largest gap
  const double t0 = line_chart(ch).theta_ref + std::numbers::pi;
  const auto before = evaluate_parametrization(c, t0);
  const auto after = evaluate_parametrization(out, g(t0));
  out.rho_z = before[0] / after[0];
  out.rho_w = before[1] / after[1];
  return out;
}

/// Gauge-fixed form: alpha_1 = 0, beta_1 = 2pi/3, gamma_1 = 4pi/3.
inline Genus0Curve gauge_fix(const Genus0Curve& c) {
  const Chain ch = make_chain(c);
  return normalized(
      transport(c, three_point_map({ch.alpha[0], ch.beta[0], ch.gamma[0]}, {0.0, kTwoPi / 3, 2 * kTwoPi / 3})));
}

struct InversionReport {
  Genus0Curve curve;
  int iterations = 0;
  double residual = 0.0;
};

/// Genus-zero curve with the given boundary values (unique up to gauge). Damped
/// Newton on the 3d - 3 free angles after fixing alpha_1, beta_1, gamma_1;
/// the residual compares log|X_i / X_1| for each family.
inline InversionReport invert_boundary_detailed(const BoundaryTriple& target, int max_iterations = 100) {
  const int d = static_cast<int>(target.A.size());
  if (d < 1 || static_cast<int>(target.B.size()) != d || static_cast<int>(target.C.size()) != d)
    throw ValidationError("boundary vectors must have equal positive length");
  double logprod = 0.0;
  int negatives = 0;
  for (const auto* v : {&target.A, &target.B, &target.C}) {
    for (double x : *v) {
      if (x == 0.0 || !std::isfinite(x)) throw ValidationError("boundary values must be finite and nonzero");
      if ((x < 0) != ((*v)[0] < 0)) throw ValidationError("boundary values must have constant sign per family");
      logprod += std::log(std::abs(x));
      negatives += x < 0;
    }
  }
  if (std::abs(logprod) > 1e-8 || (negatives % 2) != (d % 2)) throw ValidationError("target violates prod A B C = (-1)^d");

  const double g0[3] = {0.0, kTwoPi / 3, 2 * kTwoPi / 3};
  // equally spaced within each third
  std::vector<double> th(3 * d);
  for (int f = 0; f < 3; ++f)
    for (int i = 0; i < d; ++i) th[f * d + i] = g0[f] + (kTwoPi / 3) * i / d;

  std::vector<double> tl(3 * d);
  for (int i = 0; i < d; ++i) {
    tl[i] = std::log(std::abs(target.A[i]));
    tl[d + i] = std::log(std::abs(target.B[i]));
    tl[2 * d + i] = std::log(std::abs(target.C[i]));
  }
  // along the chain each family increases in modulus
  for (int f = 0; f < 3; ++f) std::sort(tl.begin() + f * d, tl.begin() + (f + 1) * d);
  // residual rows: families in order A (alpha), B (gamma), C (beta); skip index 0
  auto chain_of = [&](const std::vector<double>& t) {
    Chain c;
    c.d = d;
    c.alpha.assign(t.begin(), t.begin() + d);
    c.beta.assign(t.begin() + d, t.begin() + 2 * d);
    c.gamma.assign(t.begin() + 2 * d, t.end());
    return c;
  };
  auto curve_of = [&](const std::vector<double>& t) {
    Genus0Curve g;
    g.d = d;
    g.alpha.assign(t.begin(), t.begin() + d);
    g.beta.assign(t.begin() + d, t.begin() + 2 * d);
    g.gamma.assign(t.begin() + 2 * d, t.end());
    return g;
  };
  auto residual = [&](const std::vector<double>& t) {
    const auto bt = boundary_map(curve_of(t));
    Eigen::VectorXd r(3 * d - 3);
    int k = 0;
    for (int f = 0; f < 3; ++f) {
      const auto& v = f == 0 ? bt.A : f == 1 ? bt.B : bt.C;
      for (int i = 1; i < d; ++i)
        r(k++) = std::log(std::abs(v[i] / v[0])) - (tl[f * d + i] - tl[f * d]);
    }
    return r;
  };
  // free unknowns: th indices other than 0, d, 2d
  std::vector<int> free_idx;
  for (int m = 0; m < 3 * d; ++m)
    if (m % d != 0) free_idx.push_back(m);

  InversionReport rep;
  Eigen::VectorXd r = residual(th);
  double rn = r.norm();
  int stagnant = 0;
  for (int it = 0; it < max_iterations && rn >= 1e-10; ++it) {
    rep.iterations = it + 1;
    const Eigen::MatrixXd Jc = jacobian_logABC_circle(chain_of(th));
    // rows: chain-order families A, B, C; columns alpha.., beta.., gamma..
    Eigen::MatrixXd Jr(3 * d - 3, free_idx.size());
    int k = 0;
    for (int f = 0; f < 3; ++f)
      for (int i = 1; i < d; ++i) {
        for (std::size_t c = 0; c < free_idx.size(); ++c)
          Jr(k, c) = Jc(f * d + i, free_idx[c]) - Jc(f * d, free_idx[c]);
        ++k;
      }
    const Eigen::VectorXd step = Jr.colPivHouseholderQr().solve(-r);
    std::vector<double> delta(3 * d, 0.0);
    for (std::size_t c = 0; c < free_idx.size(); ++c) delta[free_idx[c]] = step(c);
    // clip so that no gap between consecutive parameters shrinks below half
    double lam = 1.0;
    for (int m = 0; m < 3 * d; ++m) {
      const int nx = (m + 1) % (3 * d);
      const double gap = (nx ? th[nx] : th[0] + kTwoPi) - th[m];
      const double shrink = delta[m] - delta[nx];
      if (shrink > 0) lam = std::min(lam, 0.5 * gap / shrink);
    }
    bool accepted = false;
    for (int ls = 0; ls < 40; ++ls, lam *= 0.5) {
      std::vector<double> trial = th;
      for (int m = 0; m < 3 * d; ++m) trial[m] += lam * delta[m];
      const Eigen::VectorXd rt = residual(trial);
      if (rt.norm() <= (1 - 1e-4 * lam) * rn) {
        th = trial;
        r = rt;
        rn = rt.norm();
        accepted = true;
        break;
      }
    }
    stagnant = accepted ? 0 : stagnant + 1;
    if (!accepted) break;
  }
  rep.residual = rn;
  if (!(rn < 1e-10)) throw ConvergenceError("no convergence", rn);
  (void)stagnant;
  Genus0Curve g = curve_of(th);
  const auto bt = boundary_map(g);
  g.rho_w = std::copysign(std::exp(tl[0]), target.A[0]) / bt.A[0];
  g.rho_z = bt.B[0] / std::copysign(std::exp(tl[d]), target.B[0]);
  rep.curve = normalized(g);
  return rep;
}

inline Genus0Curve invert_boundary(const BoundaryTriple& target) { return invert_boundary_detailed(target).curve; }

}  // namespace harnack
