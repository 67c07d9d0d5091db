#pragma once
// Isoradial dimers: rhombus angles, edge weights 2|sin((theta_1 - theta_2)/2)|
// (the other diagonal of the unit rhombus, sqrt(4 - l^2)), and the shift point
// zeta that brings a genus-zero curve to prefactor-free form.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "harnack/amoeba.hpp"
#include "harnack/error.hpp"
#include "harnack/genus0.hpp"
#include "harnack/kasteleyn.hpp"
#include "harnack/lattice.hpp"

namespace harnack {

/// Rhombus directions: alpha for the vertical zig-zag paths, beta for the
/// diagonal ones, gamma for the horizontal ones.
struct IsoradialAngles {
  int d = 0;
  std::vector<double> alpha, beta, gamma;
};

inline Chain isoradial_chain(const IsoradialAngles& ang) {
  try {
    return make_chain(ang.d, ang.alpha, ang.beta, ang.gamma);
  } catch (const ValidationError&) {
    throw ValidationError("not isoradial");
  }
}

inline Genus0Curve isoradial_curve(const IsoradialAngles& ang) {
  const Chain ch = isoradial_chain(ang);
  return {ang.d, ch.alpha, ch.beta, ch.gamma, 1.0, 1.0};
}

/// Edge weights of the isoradial embedding. Along the chain order, alpha_c
/// belongs to column c, gamma_r to row r and beta_s to the diagonal r + c = s.
/// Coincident angles within a family are allowed.
inline EdgeWeights isoradial_weights(const IsoradialAngles& ang) {
  const Chain ch = isoradial_chain(ang);
  const int d = ang.d;
  auto rhomb = [](double t1, double t2) { return 2.0 * std::abs(std::sin(0.5 * (t1 - t2))); };
  Grid a(d, 0.0), b(d, 0.0), c(d, 0.0);
  for (int r = 0; r < d; ++r)
    for (int k = 0; k < d; ++k) {
      const int s = (r + k) % d;
      c(r, k) = rhomb(ch.gamma[r], ch.alpha[k]);
      a(r, k) = rhomb(ch.gamma[r], ch.beta[s]);
      b(r, k) = rhomb(ch.alpha[k], ch.beta[s]);
    }
  return EdgeWeights(a, b, c);
}

struct IsoradialReport {
  BivariatePolynomial P;
  double residual = 0.0;  ///< max |P(z, w)| / scale over the samples
  bool pass = false;
};

/// P from the isoradial weights against the sine parametrization with unit
/// prefactors. The spectral curve uses the opposite sign for both coordinates
/// when d is odd, so the samples are (s z(t), s w(t)) with s = (-1)^d.
inline IsoradialReport isoradial_spectral_check(const IsoradialAngles& ang, int samples = 100) {
  const Genus0Curve c = isoradial_curve(ang);
  IsoradialReport rep;
  rep.P = characteristic_polynomial(isoradial_weights(ang));
  const double sgn = ang.d % 2 ? -1.0 : 1.0;
  const Chain ch = make_chain(c);
  const auto v = ch.all();
  const int n = static_cast<int>(v.size());
  for (int k = 0; k < samples; ++k) {
    const int gi = k % n;
    const double lo = v[gi], hi = gi + 1 < n ? v[gi + 1] : v[0] + kTwoPi;
    const double t = lo + (hi - lo) * (0.05 + 0.9 * std::fmod(0.618034 * (k / n + 1), 1.0));
    const auto zw = evaluate_parametrization(c, t);
    const double z = sgn * zw[0], w = sgn * zw[1];
    rep.residual = std::max(rep.residual, std::abs(rep.P.eval(z, w)) / rep.P.scale(std::abs(z), std::abs(w)));
  }
  rep.pass = rep.residual < 1e-8;
  return rep;
}

namespace detail {

/// z and w as rational functions of u = e^{it}, from the stored angles:
/// sin((t - a)/2) / sin((t - b)/2) = e^{i(b - a)/2} (u - e^{ia}) / (u - e^{ib}).
struct DiskForm {
  std::vector<cplx> za, wz, poles;  // zeros of z, zeros of w, poles
  cplx kz, kw;

  explicit DiskForm(const Genus0Curve& c) : kz(c.rho_z), kw(c.rho_w) {
    const cplx I(0, 1);
    for (int j = 0; j < c.d; ++j) {
      za.push_back(std::exp(I * c.alpha[j]));
      wz.push_back(std::exp(I * c.gamma[j]));
      poles.push_back(std::exp(I * c.beta[j]));
      kz *= std::exp(0.5 * I * (c.beta[j] - c.alpha[j]));
      kw *= std::exp(0.5 * I * (c.beta[j] - c.gamma[j]));
    }
  }

  /// (log z, log w) up to branch, and their logarithmic derivatives.
  void eval(cplx u, cplx& lz, cplx& lw, cplx& gz, cplx& gw) const {
    lz = std::log(kz);
    lw = std::log(kw);
    gz = gw = 0.0;
    for (std::size_t j = 0; j < za.size(); ++j) {
      lz += std::log(u - za[j]) - std::log(u - poles[j]);
      lw += std::log(u - wz[j]) - std::log(u - poles[j]);
      gz += 1.0 / (u - za[j]) - 1.0 / (u - poles[j]);
      gw += 1.0 / (u - wz[j]) - 1.0 / (u - poles[j]);
    }
  }
};

}  // namespace detail

struct ShiftResult {
  bool isoradial = false;  ///< false when the origin is outside the amoeba
  cplx zeta = 0.0;
  Genus0Curve shifted;
  double residual = 0.0;
  int iterations = 0;
};

/// Newton for |z(zeta)| = |w(zeta)| = 1 inside the unit disk from one start.
inline ShiftResult solve_shift_from(const Genus0Curve& c, cplx start, int max_iterations = 100) {
  const detail::DiskForm f(c);
  auto F = [&](cplx u, Eigen::Matrix2d* J) {
    cplx lz, lw, gz, gw;
    f.eval(u, lz, lw, gz, gw);
    if (J) *J << gz.real(), -gz.imag(), gw.real(), -gw.imag();
    return Eigen::Vector2d(lz.real(), lw.real());
  };
  ShiftResult out;
  cplx u = start;
  Eigen::Matrix2d J;
  Eigen::Vector2d r = F(u, &J);
  for (int it = 0; it < max_iterations && r.norm() > 1e-14; ++it) {
    out.iterations = it + 1;
    const Eigen::Vector2d step = J.fullPivLu().solve(-r);
    double lam = 1.0;
    bool moved = false;
    for (int ls = 0; ls < 60; ++ls, lam *= 0.5) {
      const cplx trial = u + lam * cplx(step(0), step(1));
      if (std::abs(trial) >= 1.0) continue;
      const Eigen::Vector2d rt = F(trial, nullptr);
      if (rt.norm() < (1 - 1e-4 * lam) * r.norm()) {
        u = trial;
        r = F(u, &J);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  out.residual = r.norm();
  if (!(out.residual < 1e-11)) throw ConvergenceError("shift point did not converge inside the disk", out.residual);
  out.isoradial = true;
  out.zeta = u;
  const cplx zeta = u;
  Genus0Curve g = normalized(transport(c, [zeta](double t) {
    const cplx e = std::exp(cplx(0, t));
    return std::arg((e - zeta) / (1.0 - std::conj(zeta) * e));
  }));
  // a prefactor of -1 is the same as lifting one parameter by 2pi
  const bool fz = g.rho_z < 0, fw = g.rho_w < 0;
  if (fz && fw)
    g.beta.back() += kTwoPi;
  else if (fz)
    g.alpha.back() += kTwoPi;
  else if (fw)
    g.gamma.back() += kTwoPi;
  g.rho_z = std::abs(g.rho_z);
  g.rho_w = std::abs(g.rho_w);
  out.shifted = g;
  return out;
}

/// Shift point zeta with T(u) = (u - zeta)/(1 - conj(zeta) u) taking c to unit
/// prefactors; a sign is absorbed by lifting one angle of the result by 2pi. When the origin is not
/// in the amoeba no such point exists and isoradial is false.
inline ShiftResult find_isoradial_shift(const Genus0Curve& c) {
  validate(c);
  ShiftResult out;
  if (!amoeba_membership(implicitize(c), 0.0, 0.0)) return out;
  // coarse polar search for the start
  const detail::DiskForm f(c);
  cplx best = 0.0;
  double best_val = INFINITY;
  for (int ir = 0; ir < 20; ++ir)
    for (int ia = 0; ia < (ir ? 48 : 1); ++ia) {
      const cplx u = std::polar(0.05 * ir, kTwoPi * ia / 48);
      cplx lz, lw, gz, gw;
      f.eval(u, lz, lw, gz, gw);
      const double val = std::hypot(lz.real(), lw.real());
      if (val < best_val) {
        best_val = val;
        best = u;
      }
    }
  return solve_shift_from(c, best);
}

}  // namespace harnack
