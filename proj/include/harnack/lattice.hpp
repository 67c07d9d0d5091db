#pragma once
// Weighted d x d hexagonal fundamental domain.
//
// Convention: white vertex (r, c) is joined to black vertex (r, c) by its
// c-edge, to black (r, c+1) by its a-edge and to black (r+1, c) by its b-edge,
// indices mod d. An a-edge leaving the last column carries the Bloch factor z,
// a b-edge leaving the last row carries w. With this labeling the determinant
// of the d = 1 operator is c + a z + b w.

#include <cmath>
#include <string>
#include <vector>

#include "harnack/error.hpp"

namespace harnack {

/// Square d x d array of reals, row-major.
class Grid {
 public:
  Grid() = default;
  Grid(int d, double fill) : d_(d), v_(static_cast<std::size_t>(d) * d, fill) {}

  int size() const { return d_; }
  double& operator()(int r, int c) { return v_[index(r, c)]; }
  double operator()(int r, int c) const { return v_[index(r, c)]; }
  const std::vector<double>& values() const { return v_; }
  std::vector<double>& values() { return v_; }

 private:
  std::size_t index(int r, int c) const {
    const int rr = ((r % d_) + d_) % d_, cc = ((c % d_) + d_) % d_;
    return static_cast<std::size_t>(rr) * d_ + cc;
  }
  int d_ = 0;
  std::vector<double> v_;
};

/// Positive edge weights of the three families, indexed by white vertex.
struct EdgeWeights {
  int d = 0;
  Grid a, b, c;

  EdgeWeights() = default;
  EdgeWeights(Grid a_, Grid b_, Grid c_) : d(a_.size()), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    validate();
  }

  static EdgeWeights uniform(int d, double value = 1.0) {
    return EdgeWeights(Grid(d, value), Grid(d, value), Grid(d, value));
  }

  void validate() const {
    if (d < 1) throw ValidationError("EdgeWeights: d must be positive");
    if (a.size() != d || b.size() != d || c.size() != d)
      throw ValidationError("EdgeWeights: arrays must be d x d");
    for (const Grid* g : {&a, &b, &c})
      for (double x : g->values())
        if (!(x > 0.0) || !std::isfinite(x)) throw ValidationError("EdgeWeights: weights must be positive");
  }
};

/// Vertex gauge factors; every edge is multiplied by the factors of its endpoints.
struct GaugeVector {
  Grid white, black;
};

enum class ZigZagOrientation { horizontal, nw_se, vertical };

/// A straight periodic chain of edges. Horizontal chains (row `index`) use a- and
/// c-edges, vertical chains (column `index`) use b- and c-edges, nw-se chains
/// (white vertices with r + c = index mod d) use a- and b-edges.
struct ZigZagCycle {
  ZigZagOrientation orientation = ZigZagOrientation::horizontal;
  int index = 0;
};

inline EdgeWeights apply_gauge(const EdgeWeights& w, const GaugeVector& g) {
  const int d = w.d;
  if (g.white.size() != d || g.black.size() != d) throw ValidationError("apply_gauge: gauge has wrong size");
  for (const Grid* x : {&g.white, &g.black})
    for (double v : x->values())
      if (v == 0.0 || !std::isfinite(v)) throw ValidationError("apply_gauge: gauge entries must be nonzero");
  Grid a(d, 0.0), b(d, 0.0), c(d, 0.0);
  for (int r = 0; r < d; ++r)
    for (int q = 0; q < d; ++q) {
      const double gw = g.white(r, q);
      c(r, q) = w.c(r, q) * gw * g.black(r, q);
      a(r, q) = w.a(r, q) * gw * g.black(r, q + 1);
      b(r, q) = w.b(r, q) * gw * g.black(r + 1, q);
      if (!(a(r, q) > 0 && b(r, q) > 0 && c(r, q) > 0)) throw ValidationError("gauge breaks positivity");
    }
  return EdgeWeights(std::move(a), std::move(b), std::move(c));
}

/// Alternating product around the hexagonal face to the lower right of white (r, c):
/// a(r,c)/c(r,c+1) * b(r,c+1)/a(r+1,c) * c(r+1,c)/b(r,c).
inline double face_invariant(const EdgeWeights& w, int r, int c) {
  return w.a(r, c) / w.c(r, c + 1) * w.b(r, c + 1) / w.a(r + 1, c) * w.c(r + 1, c) / w.b(r, c);
}

/// All d^2 face invariants (their product is 1).
inline std::vector<double> face_invariants(const EdgeWeights& w) {
  std::vector<double> out;
  for (int r = 0; r < w.d; ++r)
    for (int c = 0; c < w.d; ++c) out.push_back(face_invariant(w, r, c));
  return out;
}

/// Unsigned alternating product along a zig-zag cycle: prod c/a (horizontal),
/// prod c/b (vertical), prod b/a (nw-se).
inline double alternating_product(const EdgeWeights& w, const ZigZagCycle& z) {
  const int d = w.d;
  if (z.index < 0 || z.index >= d) throw ValidationError("ZigZagCycle: index out of range");
  double p = 1.0;
  for (int k = 0; k < d; ++k) {
    switch (z.orientation) {
      case ZigZagOrientation::horizontal: p *= w.c(z.index, k) / w.a(z.index, k); break;
      case ZigZagOrientation::vertical: p *= w.c(k, z.index) / w.b(k, z.index); break;
      case ZigZagOrientation::nw_se: p *= w.b(k, z.index - k) / w.a(k, z.index - k); break;
    }
  }
  return p;
}

/// Gauge-invariant coordinates: the first d^2 - 1 face invariants followed by the
/// horizontal (row 0) and vertical (column 0) torus cycles, d^2 + 1 values.
inline std::vector<double> loop_invariants(const EdgeWeights& w) {
  auto f = face_invariants(w);
  f.pop_back();
  f.push_back(alternating_product(w, {ZigZagOrientation::horizontal, 0}));
  f.push_back(alternating_product(w, {ZigZagOrientation::vertical, 0}));
  return f;
}

/// Boundary coordinate attached to a zig-zag cycle: (-1)^d times the alternating
/// product. Horizontal cycles give the z-roots on {w = 0}, vertical cycles the
/// w-roots on {z = 0}, nw-se cycles the ratios z/w at the line at infinity.
inline double zigzag_product(const EdgeWeights& w, const ZigZagCycle& z) {
  return (w.d % 2 == 0 ? 1.0 : -1.0) * alternating_product(w, z);
}

inline std::vector<double> zigzag_products(const EdgeWeights& w, ZigZagOrientation o) {
  std::vector<double> out;
  for (int k = 0; k < w.d; ++k) out.push_back(zigzag_product(w, {o, k}));
  return out;
}

/// Rescales a-edges by e^{Bx/d} and b-edges by e^{By/d}. The new characteristic
/// polynomial is P(e^{Bx} z, e^{By} w), so the amoeba moves by (-Bx, -By).
inline EdgeWeights apply_magnetic_field(const EdgeWeights& w, double bx, double by) {
  EdgeWeights out = w;
  const double fx = std::exp(bx / w.d), fy = std::exp(by / w.d);
  for (double& x : out.a.values()) x *= fx;
  for (double& x : out.b.values()) x *= fy;
  return out;
}

}  // namespace harnack
