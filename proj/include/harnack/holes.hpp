#pragma once
// Complement components of a rastered amoeba: compact holes with their lattice
// orders, areas and Ronkin intercepts, and the intercepts of unbounded facets.

#include <array>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "harnack/amoeba.hpp"
#include "harnack/error.hpp"
#include "harnack/ronkin.hpp"

namespace harnack {

/// 4-connected component of the amoeba complement.
struct ComplementComponent {
  std::vector<int> pixels;  ///< linear indices iy * nx + ix
  bool bounded = true;
  std::array<double, 2> centroid{};
  std::array<double, 2> deepest{};  ///< pixel farthest from the amoeba
  int depth = 0;                    ///< its chessboard distance in pixels
};

inline std::vector<ComplementComponent> complement_components(const AmoebaGrid& g) {
  const int nx = g.nx, ny = g.ny;
  const std::size_t n = static_cast<std::size_t>(nx) * ny;
  // chessboard distance to the nearest member pixel (multi-source BFS)
  std::vector<int> dist(n, -1);
  std::deque<int> q;
  for (std::size_t i = 0; i < n; ++i)
    if (g.membership[i]) {
      dist[i] = 0;
      q.push_back(static_cast<int>(i));
    }
  while (!q.empty()) {
    const int i = q.front();
    q.pop_front();
    const int ix = i % nx, iy = i / nx;
    for (int ddy = -1; ddy <= 1; ++ddy)
      for (int ddx = -1; ddx <= 1; ++ddx) {
        const int jx = ix + ddx, jy = iy + ddy;
        if (jx < 0 || jy < 0 || jx >= nx || jy >= ny) continue;
        const int j = jy * nx + jx;
        if (dist[j] < 0) {
          dist[j] = dist[i] + 1;
          q.push_back(j);
        }
      }
  }
  std::vector<int> label(n, -1);
  std::vector<ComplementComponent> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (g.membership[s] || label[s] >= 0) continue;
    ComplementComponent c;
    const int id = static_cast<int>(out.size());
    label[s] = id;
    std::vector<int> stack{static_cast<int>(s)};
    double sx = 0, sy = 0;
    int best = static_cast<int>(s);
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      c.pixels.push_back(i);
      const int ix = i % nx, iy = i / nx;
      sx += g.x(ix);
      sy += g.y(iy);
      if (dist[i] > dist[best]) best = i;
      if (ix == 0 || iy == 0 || ix == nx - 1 || iy == ny - 1) c.bounded = false;
      const std::array<std::pair<int, int>, 4> nb = {{{ix - 1, iy}, {ix + 1, iy}, {ix, iy - 1}, {ix, iy + 1}}};
      for (const auto& [jx, jy] : nb) {
        if (jx < 0 || jy < 0 || jx >= nx || jy >= ny) continue;
        const int j = jy * nx + jx;
        if (!g.membership[j] && label[j] < 0) {
          label[j] = id;
          stack.push_back(j);
        }
      }
    }
    const double m = static_cast<double>(c.pixels.size());
    c.centroid = {sx / m, sy / m};
    c.deepest = {g.x(best % nx), g.y(best / nx)};
    c.depth = dist[best];
    out.push_back(std::move(c));
  }
  return out;
}

struct Hole {
  std::array<int, 2> order{};  ///< interior lattice point (i, j)
  double area = 0.0;
  int pixels = 0;
  std::array<double, 2> center{};
  double intercept = 0.0;  ///< R - i x - j y at the center
};

struct HoleReport {
  std::vector<Hole> holes;            ///< area above the threshold
  std::vector<Hole> candidate_nodes;  ///< at most `min_pixels` pixels
  int genus = 0;
};

namespace detail {

inline std::array<int, 2> facet_slope(const BivariatePolynomial& P, double x, double y) {
  const auto gr = ronkin_gradient(P, x, y);
  return {static_cast<int>(std::lround(gr[0])), static_cast<int>(std::lround(gr[1]))};
}

}  // namespace detail

/// Bounded complement components of the raster. Each hole's order is the
/// rounded Ronkin gradient at its centroid (holes are convex, so the centroid
/// lies inside). Components of at most `min_pixels` pixels are candidate nodes.
inline HoleReport detect_holes(const BivariatePolynomial& P, const AmoebaGrid& g, int min_pixels = 4) {
  detail::require_curve(P);
  const int d = P.degree();
  HoleReport rep;
  std::set<std::array<int, 2>> seen;
  for (const auto& c : complement_components(g)) {
    if (!c.bounded) continue;
    Hole h;
    h.pixels = static_cast<int>(c.pixels.size());
    h.area = h.pixels * g.pixel_area();
    h.center = c.centroid;
    h.order = detail::facet_slope(P, h.center[0], h.center[1]);
    h.intercept = ronkin(P, h.center[0], h.center[1]) - h.order[0] * h.center[0] - h.order[1] * h.center[1];
    if (h.pixels <= min_pixels) {
      rep.candidate_nodes.push_back(h);
      continue;
    }
    const auto [i, j] = h.order;
    if (i < 1 || j < 1 || i + j > d - 1 || !seen.insert(h.order).second) throw Error("hole assignment failed");
    rep.holes.push_back(h);
  }
  rep.genus = static_cast<int>(rep.holes.size());
  return rep;
}

/// Intercept of the Ronkin facet of every complement component, keyed by its
/// slope (i, j): R - i x - j y at the pixel deepest inside the component.
inline std::map<std::array<int, 2>, double> facet_intercepts(const BivariatePolynomial& P, const AmoebaGrid& g) {
  detail::require_curve(P);
  std::map<std::array<int, 2>, double> out;
  for (const auto& c : complement_components(g)) {
    const auto [x, y] = c.deepest;
    const auto o = detail::facet_slope(P, x, y);
    out[o] = ronkin(P, x, y) - o[0] * x - o[1] * y;
  }
  return out;
}

/// Same, on an automatic window (boundary logs padded by 3) at 256^2.
inline std::map<std::array<int, 2>, double> facet_intercepts(const BivariatePolynomial& P) {
  return facet_intercepts(P, rasterize_amoeba(P, auto_window(P, 3.0), 256, 256));
}

}  // namespace harnack
