#pragma once
// File formats: JSON for weights, polynomials, angle data and boundary
// triples; binary PGM and SVG for amoeba rasters.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include "json.hpp"
#include <sstream>
#include <string>
#include <vector>

#include "harnack/amoeba.hpp"
#include "harnack/error.hpp"
#include "harnack/genus0.hpp"
#include "harnack/holes.hpp"
#include "harnack/lattice.hpp"
#include "harnack/polynomial.hpp"

namespace harnack::io {

using json = nlohmann::ordered_json;

/// x rounded to 12 significant digits, so that dumps are stable.
inline double r12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

inline json r12(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(r12(x));
  return a;
}

inline json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ValidationError(std::string("bad field \"") + key + "\"");
  }
}

// ---- weights: {"d", "a", "b", "c"}, row-major d x d

inline json to_json(const EdgeWeights& w) {
  json j;
  j["d"] = w.d;
  for (const auto& [name, g] : {std::pair<const char*, const Grid*>{"a", &w.a}, {"b", &w.b}, {"c", &w.c}}) {
    json rows = json::array();
    for (int r = 0; r < w.d; ++r) {
      json row = json::array();
      for (int c = 0; c < w.d; ++c) row.push_back(r12((*g)(r, c)));
      rows.push_back(row);
    }
    j[name] = rows;
  }
  return j;
}

inline EdgeWeights weights_from_json(const json& j) {
  const int d = field<int>(j, "d");
  if (d < 1) throw ValidationError("d must be positive");
  auto grid = [&](const char* key) {
    const auto rows = field<std::vector<std::vector<double>>>(j, key);
    if (static_cast<int>(rows.size()) != d) throw ValidationError(std::string(key) + ": expected d rows");
    Grid g(d, 0.0);
    for (int r = 0; r < d; ++r) {
      if (static_cast<int>(rows[r].size()) != d) throw ValidationError(std::string(key) + ": expected d columns");
      for (int c = 0; c < d; ++c) g(r, c) = rows[r][c];
    }
    return g;
  };
  return EdgeWeights(grid("a"), grid("b"), grid("c"));
}

// ---- polynomial: {"d", "coeffs": [{"i", "j", "v"}, ...]}

inline json to_json(const BivariatePolynomial& p) {
  json j;
  j["d"] = p.degree();
  json cs = json::array();
  for (int i = 0; i <= p.degree(); ++i)
    for (int k = 0; i + k <= p.degree(); ++k) cs.push_back({{"i", i}, {"j", k}, {"v", r12(p(i, k))}});
  j["coeffs"] = cs;
  return j;
}

inline BivariatePolynomial polynomial_from_json(const json& j) {
  const int d = field<int>(j, "d");
  if (d < 0) throw ValidationError("d must be non-negative");
  BivariatePolynomial p(d);
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw ValidationError("missing coeffs");
  for (const auto& c : j["coeffs"]) {
    const int i = field<int>(c, "i"), k = field<int>(c, "j");
    const double v = field<double>(c, "v");
    if (i < 0 || k < 0 || i + k > d) throw ValidationError("coefficient outside the Newton triangle");
    if (!std::isfinite(v)) throw ValidationError("coefficient not finite");
    p(i, k) = v;
  }
  return p;
}

// ---- angles / genus-zero curves: {"d", "alpha", "beta", "gamma", "rho_z", "rho_w"}

inline json to_json(const Genus0Curve& c) {
  return json{{"d", c.d},         {"alpha", r12(c.alpha)},  {"beta", r12(c.beta)},
              {"gamma", r12(c.gamma)}, {"rho_z", r12(c.rho_z)}, {"rho_w", r12(c.rho_w)}};
}

inline Genus0Curve curve_from_json(const json& j) {
  Genus0Curve c;
  c.d = field<int>(j, "d");
  c.alpha = field<std::vector<double>>(j, "alpha");
  c.beta = field<std::vector<double>>(j, "beta");
  c.gamma = field<std::vector<double>>(j, "gamma");
  c.rho_z = j.contains("rho_z") ? field<double>(j, "rho_z") : 1.0;
  c.rho_w = j.contains("rho_w") ? field<double>(j, "rho_w") : 1.0;
  validate(c);
  return c;
}

// ---- boundary triple: {"A", "B", "C"}

inline json to_json(const BoundaryTriple& t) { return json{{"A", r12(t.A)}, {"B", r12(t.B)}, {"C", r12(t.C)}}; }

inline BoundaryTriple triple_from_json(const json& j) {
  return {field<std::vector<double>>(j, "A"), field<std::vector<double>>(j, "B"), field<std::vector<double>>(j, "C")};
}

// ---- rasters

/// Binary PGM, top row at y_max; amoeba pixels black.
inline std::string pgm(const AmoebaGrid& g) {
  std::ostringstream out;
  out << "P5\n" << g.nx << ' ' << g.ny << "\n255\n";
  for (int iy = g.ny - 1; iy >= 0; --iy)
    for (int ix = 0; ix < g.nx; ++ix) out.put(static_cast<char>(g.at(ix, iy) ? 0 : 255));
  return out.str();
}

/// SVG of the raster: amoeba in grey, holes outlined pixel-wise in red and
/// labelled with order, area and intercept.
inline std::string svg(const AmoebaGrid& g, const HoleReport& holes) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << g.nx << "\" height=\"" << g.ny
      << "\" viewBox=\"0 0 " << g.nx << ' ' << g.ny << "\">\n";
  out << "<rect width=\"" << g.nx << "\" height=\"" << g.ny << "\" fill=\"white\"/>\n<g fill=\"#555\">\n";
  for (int iy = 0; iy < g.ny; ++iy) {
    const int row = g.ny - 1 - iy;
    for (int ix = 0; ix < g.nx;) {
      if (!g.at(ix, iy)) {
        ++ix;
        continue;
      }
      int end = ix;
      while (end < g.nx && g.at(end, iy)) ++end;
      out << "<rect x=\"" << ix << "\" y=\"" << row << "\" width=\"" << end - ix << "\" height=\"1\"/>\n";
      ix = end;
    }
  }
  out << "</g>\n<g fill=\"none\" stroke=\"red\" stroke-width=\"0.5\">\n";
  for (const auto& comp : complement_components(g)) {
    if (!comp.bounded) continue;
    for (int idx : comp.pixels) {
      const int ix = idx % g.nx, iy = idx / g.nx, row = g.ny - 1 - iy;
      // edges shared with the amoeba
      auto member = [&](int x, int y) { return x >= 0 && y >= 0 && x < g.nx && y < g.ny && g.at(x, y); };
      if (member(ix - 1, iy)) out << "<line x1=\"" << ix << "\" y1=\"" << row << "\" x2=\"" << ix << "\" y2=\"" << row + 1 << "\"/>\n";
      if (member(ix + 1, iy)) out << "<line x1=\"" << ix + 1 << "\" y1=\"" << row << "\" x2=\"" << ix + 1 << "\" y2=\"" << row + 1 << "\"/>\n";
      if (member(ix, iy + 1)) out << "<line x1=\"" << ix << "\" y1=\"" << row << "\" x2=\"" << ix + 1 << "\" y2=\"" << row << "\"/>\n";
      if (member(ix, iy - 1)) out << "<line x1=\"" << ix << "\" y1=\"" << row + 1 << "\" x2=\"" << ix + 1 << "\" y2=\"" << row + 1 << "\"/>\n";
    }
  }
  out << "</g>\n<g font-family=\"monospace\" font-size=\"10\" fill=\"blue\">\n";
  for (const auto& h : holes.holes) {
    const double px = (h.center[0] - g.window.x_min) / g.dx();
    const double py = g.ny - (h.center[1] - g.window.y_min) / g.dy();
    char label[128];
    std::snprintf(label, sizeof label, "(%d,%d) area %.4g c %.4g", h.order[0], h.order[1], h.area, h.intercept);
    out << "<text x=\"" << px << "\" y=\"" << py << "\">" << label << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace harnack::io
