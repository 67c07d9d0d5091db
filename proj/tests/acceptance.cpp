// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "harnack/harnack.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace harnack;

namespace {

// tolerances
constexpr double kProductTol = 1e-8;       // 1
constexpr double kBoundaryTol = 1e-8;      // 2
constexpr double kAreaTol = 0.02;          // 3
constexpr int kAreaGrid = 600;             // 3
constexpr double kMaTol = 5e-3;            // 4
constexpr double kMaStep = 1e-2;           // 4
constexpr double kOrderRatio = 3.0;        // 4: halving h cuts the plain-FD error at least ~4x
constexpr double kRonkinTol = 1e-6;        // 5
constexpr double kRoundTripTol = 1e-8;     // 8
constexpr int kMaxNewtonSteps = 30;        // 8
constexpr double kSymTol = 1e-12;          // 9
constexpr double kKernelTol = 1e-9;        // 9
constexpr double kFdTol = 1e-6;            // 9
constexpr double kFdStep = 1e-6;           // 9
constexpr double kIsoTol = 1e-8;           // 10
constexpr int kPixelSlack = 1;             // 13

const double pi = std::numbers::pi;
const int kThreads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

BivariatePolynomial line() {
  BivariatePolynomial p(1);
  p(0, 0) = p(1, 0) = p(0, 1) = 1.0;
  return p;
}

// random points well inside the amoeba: the point and a 5 x 5 block around it
std::vector<std::array<double, 2>> interior_points(const BivariatePolynomial& P, int n, std::mt19937_64& g,
                                                   double margin = 0.05) {
  const Window w = auto_window(P, 0.0);
  std::uniform_real_distribution<double> ux(w.x_min, w.x_max), uy(w.y_min, w.y_max);
  std::vector<std::array<double, 2>> out;
  for (int attempt = 0; attempt < 10000 && static_cast<int>(out.size()) < n; ++attempt) {
    const double x = ux(g), y = uy(g);
    bool inside = true;
    for (int i = -2; i <= 2 && inside; ++i)
      for (int j = -2; j <= 2 && inside; ++j) inside = amoeba_membership(P, x + i * margin, y + j * margin);
    if (inside) out.push_back({x, y});
  }
  return out;
}

Genus0Curve random_curve(int d, std::mt19937_64& g, double min_gap = 0.0, bool wrap = true) {
  std::uniform_real_distribution<double> u(0, 1);
  for (;;) {
    std::vector<double> cuts(3 * d);
    for (double& x : cuts) x = u(g) * 2 * pi;
    std::sort(cuts.begin(), cuts.end());
    double gap = cuts.front() + 2 * pi - cuts.back();
    for (int i = 1; i < 3 * d; ++i) gap = std::min(gap, cuts[i] - cuts[i - 1]);
    if (gap < min_gap) continue;
    const double off = u(g) * 2 * pi;
    Genus0Curve c;
    c.d = d;
    for (int i = 0; i < d; ++i) {
      auto put = [&](double x) { return wrap ? std::fmod(x + off, 2 * pi) : x + off; };
      c.alpha.push_back(put(cuts[i]));
      c.beta.push_back(put(cuts[d + i]));
      c.gamma.push_back(put(cuts[2 * d + i]));
    }
    c.rho_z = (u(g) < 0.5 ? -1 : 1) * std::exp(u(g) - 0.5);
    c.rho_w = (u(g) < 0.5 ? -1 : 1) * std::exp(u(g) - 0.5);
    return c;
  }
}

double circ_dist(double a, double b) {
  const double x = std::fmod(std::abs(a - b), 2 * pi);
  return std::min(x, 2 * pi - x);
}

// 1. P(z^d, w^d) = +- prod (eps^i z + eps^j w + 1)
Outcome uniform_product() {
  auto g = harnack::testing::rng(101);
  std::uniform_real_distribution<double> r(0.5, 2.0), ph(0, 2 * pi);
  double worst = 0;
  for (int d = 1; d <= 3; ++d) {
    const auto P = characteristic_polynomial(EdgeWeights::uniform(d));
    double sign = 0;
    for (int k = 0; k < 20; ++k) {
      const cplx z = std::polar(r(g), ph(g)), w = std::polar(r(g), ph(g));
      const cplx lhs = P.eval(std::pow(z, d), std::pow(w, d)), rhs = oracle::uniform_product(d, z, w);
      if (!sign) sign = (lhs / rhs).real() > 0 ? 1 : -1;
      worst = std::max(worst, std::abs(lhs - sign * rhs) / std::abs(rhs));
    }
  }
  return {worst < kProductTol, "max rel err " + fmt("%.2e", worst)};
}

// 2. boundary roots against zig-zag products
Outcome boundary_agreement() {
  auto g = harnack::testing::rng(102);
  double worst = 0;
  auto compare = [&](const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]) / std::abs(b[i]));
    return true;
  };
  bool sizes = true;
  for (int k = 0; k < 50; ++k) {
    const auto wt = harnack::testing::random_weights(1 + k % 4, g);
    const auto bp = boundary_points(characteristic_polynomial(wt));
    const auto zz = oracle::zigzag(wt);
    sizes &= compare(bp.on_w0, zz.on_w0) && compare(bp.on_z0, zz.on_z0) && compare(bp.at_inf, zz.at_inf);
  }
  for (int d = 2; d <= 4; ++d) {
    const auto wt = EdgeWeights::uniform(d);
    const auto bp = boundary_points(characteristic_polynomial(wt));
    const auto zz = oracle::zigzag(wt);
    sizes &= compare(bp.on_w0, zz.on_w0) && compare(bp.on_z0, zz.on_z0) && compare(bp.at_inf, zz.at_inf);
  }
  return {sizes && worst < kBoundaryTol, "max rel err " + fmt("%.2e", worst) + " (50 random + uniform d=2..4)"};
}

// 3. area = pi^2 Area(Delta)
Outcome area_maximality() {
  const auto l = line();
  const auto gl = rasterize_amoeba(l, {-8, 8, -8, 8}, kAreaGrid, kAreaGrid, 0.0, kThreads);
  const double al = amoeba_area(gl, l).area / (pi * pi / 2);
  const auto u = characteristic_polynomial(EdgeWeights::uniform(2));
  const auto gu = rasterize_amoeba(u, {-14, 14, -14, 14}, kAreaGrid, kAreaGrid, 0.0, kThreads);
  const double au = amoeba_area(gu, u).area / (2 * pi * pi);
  return {std::abs(al - 1) < kAreaTol && std::abs(au - 1) < kAreaTol,
          "ratios line " + fmt("%.4f", al) + ", d=2 uniform " + fmt("%.4f", au)};
}

// 4. det Hess R = 1/pi^2 with O(h^2) decay
Outcome monge_ampere() {
  auto g = harnack::testing::rng(104);
  std::vector<BivariatePolynomial> curves{line(), characteristic_polynomial(harnack::testing::random_weights(3, g))};
  Outcome o;
  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    const auto& P = curves[ci];
    std::vector<double> res, coarse, fine;
    for (const auto& pt : interior_points(P, 200, g, 0.1)) {
      if (res.size() == 20) break;
      try {
        const double r = monge_ampere_residual(P, pt[0], pt[1], kMaStep);
        const double rc = monge_ampere_residual(P, pt[0], pt[1], 2 * kMaStep, false);
        const double rf = monge_ampere_residual(P, pt[0], pt[1], kMaStep, false);
        res.push_back(std::abs(r));
        coarse.push_back(std::abs(rc));
        fine.push_back(std::abs(rf));
      } catch (const ValidationError&) {
      }
    }
    const double med = res.size() == 20 ? oracle::median(res) : INFINITY;
    const double ratio = oracle::median(coarse) / oracle::median(fine);
    o.pass &= med < kMaTol && ratio > kOrderRatio;
    o.detail += std::string(ci ? "; d=3" : "line") + " median " + fmt("%.2e", med) + " h2/h ratio " + fmt("%.2f", ratio);
  }
  return o;
}

// 5. R(0, 0) of 1 + z + w
Outcome ronkin_oracle() {
  const double lib = ronkin(line(), 0.0, 0.0);
  const double ref = oracle::ronkin_line_origin();
  return {std::abs(lib - ref) < kRonkinTol, "library " + fmt("%.10f", lib) + " oracle " + fmt("%.10f", ref)};
}

// 6. two torus preimages at interior points
Outcome two_to_one() {
  auto g = harnack::testing::rng(106);
  std::vector<BivariatePolynomial> curves{line(), characteristic_polynomial(EdgeWeights::uniform(2)),
                                          characteristic_polynomial(harnack::testing::random_weights(3, g)),
                                          characteristic_polynomial(harnack::testing::random_weights(4, g))};
  int bad = 0, total = 0;
  for (const auto& P : curves) {
    const auto pts = interior_points(P, 10, g);
    if (pts.size() < 10) ++bad;
    for (const auto& pt : pts) {
      ++total;
      if (two_to_one_check(P, pt[0], pt[1]).count != 2) ++bad;
    }
  }
  return {bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " points with exactly 2 preimages"};
}

// 7. genus in {0, 1}, order (1, 1), ovals = holes
Outcome genus_count() {
  auto g = harnack::testing::rng(107);
  int ok = 0, genus1 = 0;
  std::string why;
  for (int k = 0; k < 30; ++k) {
    const auto P = characteristic_polynomial(harnack::testing::random_weights(3, g));
    const Window w = auto_window(P, 1.0);
    const auto grid = rasterize_amoeba(P, w, 400, 400, 0.0, kThreads);
    const auto holes = detect_holes(P, grid);
    bool good = holes.genus == 0 || holes.genus == 1;
    for (const auto& h : holes.holes) good &= h.order == std::array<int, 2>{1, 1};
    const int ovals = compact_oval_count(trace_real_ovals(P, w), 4 * grid.pixel_area());
    good &= ovals == holes.genus;
    genus1 += holes.genus == 1;
    if (good)
      ++ok;
    else if (why.empty())
      why = " first failure #" + std::to_string(k) + ": genus " + std::to_string(holes.genus) + ", ovals " + std::to_string(ovals);
  }
  return {ok == 30, std::to_string(ok) + "/30 consistent, " + std::to_string(genus1) + " of genus 1" + why};
}

// 8. boundary_map then invert_boundary
Outcome round_trip() {
  auto g = harnack::testing::rng(108);
  double worst = 0;
  int steps = 0;
  for (int k = 0; k < 20; ++k) {
    const auto c = random_curve(1 + k % 5, g);
    const auto rep = invert_boundary_detailed(boundary_map(c));
    const auto ref = gauge_fix(c);
    steps = std::max(steps, rep.iterations);
    for (int i = 0; i < c.d; ++i)
      worst = std::max({worst, circ_dist(ref.alpha[i], rep.curve.alpha[i]), circ_dist(ref.beta[i], rep.curve.beta[i]),
                        circ_dist(ref.gamma[i], rep.curve.gamma[i])});
  }
  return {worst < kRoundTripTol && steps <= kMaxNewtonSteps,
          "max angle err " + fmt("%.2e", worst) + ", max Newton steps " + std::to_string(steps)};
}

// 9. Jacobian structure
Outcome jacobian_structure() {
  auto g = harnack::testing::rng(109);
  double sym = 0, ker = 0, fd = 0, rank = 0;
  bool same_sign = true;
  for (int k = 0; k < 10; ++k) {
    const int d = 1 + k % 5;
    // central differences with step 1e-6 need the parameters apart
    const auto jac = jacobian_logABC(random_curve(d, g, 0.05));
    const auto& J = jac.J;
    sym = std::max(sym, (J - J.transpose()).cwiseAbs().maxCoeff());
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(3 * d);
    const Eigen::VectorXd xs = Eigen::Map<const Eigen::VectorXd>(jac.x.data(), 3 * d);
    ker = std::max({ker, (J * ones).norm() / (J.norm() * ones.norm()), (J * xs).norm() / (J.norm() * xs.norm())});
    for (int m = 0; m < 3 * d; ++m) {
      auto xp = jac.x, xm = jac.x;
      xp[m] += kFdStep;
      xm[m] -= kFdStep;
      const auto fp = oracle::line_log_abc(xp, d), fm = oracle::line_log_abc(xm, d);
      for (int r = 0; r < 3 * d; ++r) {
        const double f = (fp[r] - fm[r]) / (2 * kFdStep);
        fd = std::max(fd, std::abs(J(r, m) - f) / std::max(1.0, std::abs(f)));
      }
    }
    int sign = 0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int l = 0; l < d; ++l) {
          const Eigen::Matrix3d B = elementary_block(jac.x[i], jac.x[d + j], jac.x[2 * d + l]);
          Eigen::JacobiSVD<Eigen::Matrix3d> svd(B);
          rank = std::max(rank, svd.singularValues()(1) / svd.singularValues()(0));
          const int s = B.trace() > 0 ? 1 : -1;
          if (!sign) sign = s;
          same_sign &= s == sign;
        }
  }
  return {sym < kSymTol && ker < kKernelTol && fd < kFdTol && rank < 1e-12 && same_sign,
          "asym " + fmt("%.1e", sym) + ", kernel " + fmt("%.1e", ker) + ", fd " + fmt("%.1e", fd) + ", block s2/s1 " +
              fmt("%.1e", rank) + (same_sign ? ", eigenvalues same sign" : ", MIXED SIGNS")};
}

// 10. sine parametrization on the isoradial spectral curve; origin in amoeba
Outcome isoradial() {
  auto g = harnack::testing::rng(110);
  double worst = 0;
  int origin = 0;
  for (int k = 0; k < 10; ++k) {
    // chain order without wrapping: the sine factors change sign under a 2 pi shift
    const auto c = random_curve(1 + k % 3, g, 0.0, false);
    const IsoradialAngles ang{c.d, c.alpha, c.beta, c.gamma};
    const auto P = characteristic_polynomial(isoradial_weights(ang));
    std::uniform_real_distribution<double> ut(0, 2 * pi);
    for (int s = 0; s < 100; ++s) {
      const double t = ut(g);
      double near = INFINITY;
      for (double b : c.beta) near = std::min(near, circ_dist(t, b));
      if (near < 1e-3) continue;
      const auto zw = oracle::isoradial_point(c.alpha, c.beta, c.gamma, t);
      worst = std::max(worst, std::abs(P.eval(zw[0], zw[1])) / P.scale(std::abs(zw[0]), std::abs(zw[1])));
    }
    origin += amoeba_membership(P, 0.0, 0.0);
  }
  return {worst < kIsoTol && origin == 10, "max residual " + fmt("%.2e", worst) + ", origin in amoeba " +
                                               std::to_string(origin) + "/10"};
}

// 11. standard divisors
Outcome standard_divisor() {
  auto g = harnack::testing::rng(111);
  int good = 0;
  for (int k = 0; k < 10; ++k) {
    const auto wt = harnack::testing::random_weights(3, g);
    bool ok = true;
    for (int v = 0; v < 9 && ok; ++v) {
      const auto rep = divisor_report(wt, v);
      ok = rep.points.size() == 1 && rep.sections.size() == 1 && rep.points[0].oval_id == rep.sections[0].oval_id &&
           is_standard_divisor(rep.points, rep.ovals);
    }
    good += ok;
  }
  bool empty = true;
  for (int k = 0; k < 3; ++k) {
    const auto wt = harnack::testing::random_weights(2, g);
    for (int v = 0; v < 4; ++v) empty &= vertex_divisor(wt, v).empty();
  }
  return {good == 10 && empty, std::to_string(good) + "/10 d=3 models standard at all 9 vertices, d=2 " +
                                   (empty ? "empty" : "NOT EMPTY")};
}

// 12. volume is minimal at the genus-zero curve
Outcome volume_minimization() {
  const auto P0 = characteristic_polynomial(EdgeWeights::uniform(3));
  Outcome o;
  for (double dp : {-1.0, -2.0, 1.0}) {
    auto P = P0;
    P(1, 1) += dp;
    HarnackOptions opt;
    opt.threads = kThreads;
    // a Harnack curve is maximal: compact ovals plus real nodes reach the genus bound
    const Window w = auto_window(P, 1.0);
    const auto grid = rasterize_amoeba(P, w, 400, 400, 0.0, kThreads);
    const int real_cycles =
        compact_oval_count(trace_real_ovals(P, w), 4 * grid.pixel_area()) + static_cast<int>(find_real_nodes(P, w).size());
    const bool admissible = verify_harnack(P, opt).pass && real_cycles == 1;
    const double v = volume_difference(P, P0);
    if (admissible) o.pass &= v > 0;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("dp ") + fmt("%+.0f", dp) + (admissible ? " Harnack" : " not Harnack") + " (ovals+nodes " + std::to_string(real_cycles) + ")" +
                " vol " + fmt("%+.4f", v);
    if (dp < 0) o.pass &= admissible;
  }
  return o;
}

// 13. lowering one intercept shrinks its hole only
Outcome variational() {
  auto g = harnack::testing::rng(113);
  for (int attempt = 0; attempt < 10; ++attempt) {
    const auto P = characteristic_polynomial(harnack::testing::random_weights(4, g));
    const Window w = auto_window(P, 1.0);
    const auto before = detect_holes(P, rasterize_amoeba(P, w, 500, 500, 0.0, kThreads));
    if (before.genus != 3) continue;
    auto Q = P;
    Q(1, 1) *= 0.97;
    const auto after = detect_holes(Q, rasterize_amoeba(Q, w, 500, 500, 0.0, kThreads));
    std::map<std::array<int, 2>, const Hole*> b, a;
    for (const auto& h : before.holes) b[h.order] = &h;
    for (const auto& h : after.holes) a[h.order] = &h;
    const std::array<int, 2> target{1, 1};
    if (!a.count(target) || !b.count(target) || a.size() != 3)
      return {false, "hole structure changed under the perturbation"};
    bool pass = a[target]->intercept < b[target]->intercept && a[target]->pixels < b[target]->pixels;
    std::string detail = "target (1,1) c " + fmt("%.4f", b[target]->intercept) + "->" + fmt("%.4f", a[target]->intercept) +
                         ", px " + std::to_string(b[target]->pixels) + "->" + std::to_string(a[target]->pixels);
    for (const auto& [ord, h] : b) {
      if (ord == target) continue;
      pass &= a[ord]->pixels >= h->pixels - kPixelSlack;
      detail += "; (" + std::to_string(ord[0]) + "," + std::to_string(ord[1]) + ") px " + std::to_string(h->pixels) +
                "->" + std::to_string(a[ord]->pixels);
    }
    return {pass, detail};
  }
  return {false, "no genus-3 instance among 10 draws"};
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IONBF, 0);
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"uniform-weight product formula", uniform_product},
      {"boundary points vs zig-zag products", boundary_agreement},
      {"amoeba area maximality", area_maximality},
      {"Monge-Ampere equation", monge_ampere},
      {"Ronkin value against 2-D quadrature", ronkin_oracle},
      {"2-to-1 amoeba map", two_to_one},
      {"genus count at d=3", genus_count},
      {"genus-zero boundary inversion round trip", round_trip},
      {"Jacobian structure", jacobian_structure},
      {"isoradial consistency", isoradial},
      {"standard divisor", standard_divisor},
      {"volume minimization", volume_minimization},
      {"variational principle", variational},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2zu: %s  %s: %s (%.1f s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str(), secs);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
