#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "harnack/error.hpp"
#include "harnack/numerics.hpp"

namespace harnack {

/// Real polynomial sum p_ij z^i w^j supported on the Newton triangle i + j <= d.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  explicit BivariatePolynomial(int d) : d_(d), c_(static_cast<std::size_t>(d + 1) * (d + 1), 0.0) {
    if (d < 0) throw ValidationError("BivariatePolynomial: negative degree");
  }

  int degree() const { return d_; }

  double& operator()(int i, int j) { return c_.at(index(i, j)); }
  double operator()(int i, int j) const { return c_.at(index(i, j)); }

  template <class T>
  T eval(T z, T w) const {
    T acc = 0.0;
    for (int j = d_; j >= 0; --j) {
      T row = 0.0;
      for (int i = d_ - j; i >= 0; --i) row = row * z + T((*this)(i, j));
      acc = acc * w + row;
    }
    return acc;
  }

  /// Partial derivatives in z and w.
  cplx dz(cplx z, cplx w) const {
    cplx acc = 0.0;
    for (int i = 1; i <= d_; ++i)
      for (int j = 0; i + j <= d_; ++j) acc += double(i) * (*this)(i, j) * std::pow(z, i - 1) * std::pow(w, j);
    return acc;
  }
  cplx dw(cplx z, cplx w) const {
    cplx acc = 0.0;
    for (int i = 0; i <= d_; ++i)
      for (int j = 1; i + j <= d_; ++j) acc += double(j) * (*this)(i, j) * std::pow(z, i) * std::pow(w, j - 1);
    return acc;
  }

  /// sum |p_ij| |z|^i |w|^j, the natural scale for residuals.
  double scale(double az, double aw) const {
    double s = 0.0;
    for (int i = 0; i <= d_; ++i)
      for (int j = 0; i + j <= d_; ++j) s += std::abs((*this)(i, j)) * std::pow(az, i) * std::pow(aw, j);
    return s;
  }

  /// Coefficients in w (ascending) of P(z, .), degree exactly d when p_0d != 0.
  std::vector<cplx> w_coeffs(cplx z) const {
    std::vector<cplx> q(d_ + 1, 0.0);
    for (int j = 0; j <= d_; ++j) {
      cplx acc = 0.0;
      for (int i = d_ - j; i >= 0; --i) acc = acc * z + (*this)(i, j);
      q[j] = acc;
    }
    return q;
  }

  /// Polynomial with z and w exchanged.
  BivariatePolynomial swapped() const {
    BivariatePolynomial s(d_);
    for (int i = 0; i <= d_; ++i)
      for (int j = 0; i + j <= d_; ++j) s(j, i) = (*this)(i, j);
    return s;
  }

  /// P(lz z, lw w).
  BivariatePolynomial rescaled(double lz, double lw) const {
    BivariatePolynomial s(d_);
    for (int i = 0; i <= d_; ++i)
      for (int j = 0; i + j <= d_; ++j) s(i, j) = (*this)(i, j) * std::pow(lz, i) * std::pow(lw, j);
    return s;
  }

  double max_abs() const {
    double m = 0.0;
    for (int i = 0; i <= d_; ++i)
      for (int j = 0; i + j <= d_; ++j) m = std::max(m, std::abs((*this)(i, j)));
    return m;
  }

  /// Copy scaled so that p_00 = 1.
  BivariatePolynomial normalized() const {
    const double p00 = (*this)(0, 0);
    if (p00 == 0.0) throw ValidationError("normalized: constant term is zero");
    BivariatePolynomial s = *this;
    for (double& x : s.c_) x /= p00;
    return s;
  }

  /// Edge restrictions: P(z, 0), P(0, w) and the leading form in s = z/w.
  ComplexPoly bottom_edge() const {
    std::vector<cplx> q;
    for (int i = 0; i <= d_; ++i) q.emplace_back((*this)(i, 0));
    return ComplexPoly(q);
  }
  ComplexPoly left_edge() const {
    std::vector<cplx> q;
    for (int j = 0; j <= d_; ++j) q.emplace_back((*this)(0, j));
    return ComplexPoly(q);
  }
  ComplexPoly hypotenuse() const {
    std::vector<cplx> q;
    for (int i = 0; i <= d_; ++i) q.emplace_back((*this)(i, d_ - i));
    return ComplexPoly(q);
  }

  bool on_boundary(int i, int j) const { return i == 0 || j == 0 || i + j == d_; }

 private:
  std::size_t index(int i, int j) const {
    if (i < 0 || j < 0 || i + j > d_) throw ValidationError("BivariatePolynomial: index outside Newton triangle");
    return static_cast<std::size_t>(i) * (d_ + 1) + j;
  }
  int d_ = 0;
  std::vector<double> c_;
};

}  // namespace harnack
