#pragma once
// Real part of P = 0, traced in log-coordinates separately in each sign
// quadrant (sz e^X, sw e^Y). Compact ovals are the closed traces.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "harnack/amoeba.hpp"
#include "harnack/error.hpp"
#include "harnack/numerics.hpp"
#include "harnack/polynomial.hpp"

namespace harnack {

struct RealOval {
  std::vector<std::array<double, 2>> points;  ///< (z, w), real
  std::vector<std::array<double, 2>> logs;    ///< (log|z|, log|w|)
  std::array<int, 2> quadrant{1, 1};           ///< signs of z and w
  bool closed = false;
  double log_area = 0.0;  ///< area enclosed in log-coordinates (closed traces)
};

struct OvalOptions {
  int columns = 2000;
  double min_area = 0.0;  ///< closed traces below this log-area are not counted
};

namespace detail {

// F(X, Y) = P(sz e^X, sw e^Y) divided by S = sum |p_ij| e^{iX+jY}, together
// with the gradient and Hessian of F / S_0 where S_0 is frozen at the point.
struct QuadrantEval {
  double g, gx, gy, gxx, gxy, gyy;
};

inline QuadrantEval quadrant_eval(const BivariatePolynomial& P, int sz, int sw, double X, double Y) {
  const int d = P.degree();
  double f = 0, fx = 0, fy = 0, fxx = 0, fxy = 0, fyy = 0, s = 0;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) {
      const double m = std::exp(i * X + j * Y);
      const double t = P(i, j) * ((i % 2 && sz < 0) ? -1.0 : 1.0) * ((j % 2 && sw < 0) ? -1.0 : 1.0) * m;
      f += t;
      fx += i * t;
      fy += j * t;
      fxx += i * i * t;
      fxy += i * j * t;
      fyy += j * j * t;
      s += std::abs(P(i, j)) * m;
    }
  return {f / s, fx / s, fy / s, fxx / s, fxy / s, fyy / s};
}

// Newton projection onto F = 0 along the gradient.
inline bool project(const BivariatePolynomial& P, int sz, int sw, double& X, double& Y, int& iters) {
  for (iters = 0; iters < 12; ++iters) {
    const auto e = quadrant_eval(P, sz, sw, X, Y);
    const double n2 = e.gx * e.gx + e.gy * e.gy;
    if (n2 == 0.0) return false;
    if (std::abs(e.g) < 1e-14) return true;
    X -= e.g * e.gx / n2;
    Y -= e.g * e.gy / n2;
  }
  return std::abs(quadrant_eval(P, sz, sw, X, Y).g) < 1e-12;
}

// Spatial hash of seed points for marking the ones already traced.
class SeedIndex {
 public:
  explicit SeedIndex(double cell) : cell_(cell) {}
  void add(double x, double y, int id) { map_[key(x, y)].push_back({x, y, id}); }
  template <class F>
  void near(double x, double y, double r, F&& f) const {
    const long cx = static_cast<long>(std::floor(x / cell_)), cy = static_cast<long>(std::floor(y / cell_));
    for (long i = cx - 1; i <= cx + 1; ++i)
      for (long j = cy - 1; j <= cy + 1; ++j) {
        auto it = map_.find(pack(i, j));
        if (it == map_.end()) continue;
        for (const auto& e : it->second)
          if (std::hypot(e.x - x, e.y - y) < r) f(e.id);
      }
  }

 private:
  struct Entry {
    double x, y;
    int id;
  };
  static long long pack(long i, long j) { return (static_cast<long long>(i) << 32) ^ static_cast<long long>(j & 0xffffffff); }
  long long key(double x, double y) const {
    return pack(static_cast<long>(std::floor(x / cell_)), static_cast<long>(std::floor(y / cell_)));
  }
  double cell_;
  std::unordered_map<long long, std::vector<Entry>> map_;
};

struct TraceResult {
  std::vector<std::array<double, 2>> pts;
  bool closed = false;
};

// Predictor-corrector continuation from a point on the curve in direction dir.
inline TraceResult trace_branch(const BivariatePolynomial& P, int sz, int sw, std::array<double, 2> start, double dir,
                                const Window& w, double hmax) {
  TraceResult tr;
  tr.pts.push_back(start);
  double X = start[0], Y = start[1];
  double h = 0.25 * hmax;
  double travelled = 0.0;
  auto tangent = [&](double x, double y) {
    const auto e = quadrant_eval(P, sz, sw, x, y);
    const double n = std::hypot(e.gx, e.gy);
    return std::array<double, 2>{-e.gy / n * dir, e.gx / n * dir};
  };
  auto t0 = tangent(X, Y);
  const auto t_start = t0;
  const std::size_t cap = 2000000;
  while (tr.pts.size() < cap) {
    double nx = X + h * t0[0], ny = Y + h * t0[1];
    int iters = 0;
    const bool ok = project(P, sz, sw, nx, ny, iters);
    bool accept = ok && iters <= 5;
    std::array<double, 2> t1{};
    if (accept) {
      t1 = tangent(nx, ny);
      const double turn = std::acos(std::clamp(t0[0] * t1[0] + t0[1] * t1[1], -1.0, 1.0));
      const double dist = std::hypot(nx - X, ny - Y);
      accept = turn < 0.15 && dist > 0.5 * h && dist < 1.5 * h;
    }
    if (!accept) {
      h *= 0.5;
      if (h < 1e-9) throw Error("near-node: ambiguous continuation");
      continue;
    }
    travelled += std::hypot(nx - X, ny - Y);
    X = nx;
    Y = ny;
    t0 = t1;
    tr.pts.push_back({X, Y});
    if (X < w.x_min || X > w.x_max || Y < w.y_min || Y > w.y_max) return tr;
    // a U-turn between close parallel branches passes near the start in the
    // opposite direction; only a return in the same direction closes the loop
    if (travelled > 4 * h && std::hypot(X - start[0], Y - start[1]) < 1.01 * h &&
        t0[0] * t_start[0] + t0[1] * t_start[1] > 0.5) {
      tr.closed = true;
      return tr;
    }
    h = std::min(hmax, 1.3 * h);
  }
  throw Error("curve tracing did not terminate");
}

}  // namespace detail

/// All real branches inside `region` (log-coordinates). Seeds are the real
/// roots of P(sz e^X, .) on equally spaced columns; each branch is traced in
/// both directions and the seeds it passes are retired.
inline std::vector<RealOval> trace_real_ovals(const BivariatePolynomial& P, const Window& region,
                                              const OvalOptions& opt = {}) {
  detail::require_curve(P);
  region.validate();
  std::vector<RealOval> out;
  const double span = std::max(region.x_max - region.x_min, region.y_max - region.y_min);
  const double hmax = span / 600.0;
  for (int sz : {1, -1})
    for (int sw : {1, -1}) {
      std::vector<std::array<double, 2>> seeds;
      detail::SeedIndex index(hmax);
      for (int k = 0; k < opt.columns; ++k) {
        const double X = region.x_min + (k + 0.5) * (region.x_max - region.x_min) / opt.columns;
        for (const cplx r : roots(ComplexPoly(P.w_coeffs(cplx(sz * std::exp(X), 0.0))))) {
          if (std::abs(r.imag()) > 1e-7 * std::abs(r) || r.real() * sw <= 0) continue;
          double x = X, y = std::log(std::abs(r.real()));
          if (y < region.y_min || y > region.y_max) continue;
          int it;
          if (!detail::project(P, sz, sw, x, y, it)) continue;
          index.add(x, y, static_cast<int>(seeds.size()));
          seeds.push_back({x, y});
        }
      }
      std::vector<char> used(seeds.size(), 0);
      for (std::size_t s = 0; s < seeds.size(); ++s) {
        if (used[s]) continue;
        auto fwd = detail::trace_branch(P, sz, sw, seeds[s], 1.0, region, hmax);
        std::vector<std::array<double, 2>> pts;
        if (fwd.closed) {
          pts = fwd.pts;
        } else {
          auto back = detail::trace_branch(P, sz, sw, seeds[s], -1.0, region, hmax);
          pts.assign(back.pts.rbegin(), back.pts.rend());
          pts.insert(pts.end(), fwd.pts.begin() + 1, fwd.pts.end());
        }
        for (const auto& p : pts) index.near(p[0], p[1], 0.75 * hmax, [&](int id) { used[id] = 1; });
        used[s] = 1;
        RealOval ov;
        ov.quadrant = {sz, sw};
        ov.closed = fwd.closed;
        ov.logs = pts;
        for (const auto& p : pts) ov.points.push_back({sz * std::exp(p[0]), sw * std::exp(p[1])});
        if (ov.closed) {
          double a = 0.0;
          for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto& p = pts[i];
            const auto& q = pts[(i + 1) % pts.size()];
            a += p[0] * q[1] - q[0] * p[1];
          }
          ov.log_area = 0.5 * std::abs(a);
        }
        out.push_back(std::move(ov));
      }
    }
  return out;
}

inline int compact_oval_count(const std::vector<RealOval>& ovals, double min_area = 0.0) {
  int n = 0;
  for (const auto& o : ovals) n += o.closed && o.log_area > min_area;
  return n;
}

/// Real singular points (P = P_z = P_w = 0) in the window, by Newton on the
/// gradient from grid points where P and its gradient are small.
inline std::vector<std::array<double, 2>> find_real_nodes(const BivariatePolynomial& P, const Window& region,
                                                          int grid = 200) {
  detail::require_curve(P);
  std::vector<std::array<double, 2>> nodes;
  for (int sz : {1, -1})
    for (int sw : {1, -1})
      for (int a = 0; a < grid; ++a)
        for (int b = 0; b < grid; ++b) {
          double X = region.x_min + (a + 0.5) * (region.x_max - region.x_min) / grid;
          double Y = region.y_min + (b + 0.5) * (region.y_max - region.y_min) / grid;
          auto e = detail::quadrant_eval(P, sz, sw, X, Y);
          if (std::abs(e.g) > 0.05 || std::hypot(e.gx, e.gy) > 0.2) continue;
          bool ok = false;
          for (int it = 0; it < 50; ++it) {
            e = detail::quadrant_eval(P, sz, sw, X, Y);
            const double det = e.gxx * e.gyy - e.gxy * e.gxy;
            if (det == 0.0) break;
            const double dx = (e.gyy * e.gx - e.gxy * e.gy) / det, dy = (e.gxx * e.gy - e.gxy * e.gx) / det;
            X -= dx;
            Y -= dy;
            if (std::hypot(dx, dy) < 1e-13) {
              ok = true;
              break;
            }
          }
          if (!ok) continue;
          e = detail::quadrant_eval(P, sz, sw, X, Y);
          if (std::abs(e.g) > 1e-10 || std::hypot(e.gx, e.gy) > 1e-8) continue;
          const std::array<double, 2> zw{sz * std::exp(X), sw * std::exp(Y)};
          bool dup = false;
          for (const auto& n : nodes)
            if (std::hypot(n[0] - zw[0], n[1] - zw[1]) < 1e-6 * (1 + std::hypot(zw[0], zw[1]))) dup = true;
          if (!dup) nodes.push_back(zw);
        }
  return nodes;
}

}  // namespace harnack
