#include "nanotube/hill.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "nanotube/detail/optimize.hpp"

namespace nanotube {

namespace {

// one classical RK4 step for U' = A(x) U with A = [[0,1],[w(x),0]],
// advancing the 2x2 fundamental matrix (columns are the c and s solutions)
struct Fundamental {
  // [u_c, u_s; v_c, v_s]
  double uc = 1.0, us = 0.0, vc = 0.0, vs = 1.0;
};

inline void rk4_step(Fundamental& m, double x, double h,
                     const std::function<double(double)>& w) {
  auto deriv = [&](double wx, const Fundamental& s, Fundamental& d) {
    d.uc = s.vc;
    d.us = s.vs;
    d.vc = wx * s.uc;
    d.vs = wx * s.us;
  };
  double w0 = w(x), wm = w(x + 0.5 * h), w1 = w(x + h);
  Fundamental k1, k2, k3, k4, t;
  deriv(w0, m, k1);
  t = {m.uc + 0.5 * h * k1.uc, m.us + 0.5 * h * k1.us,
       m.vc + 0.5 * h * k1.vc, m.vs + 0.5 * h * k1.vs};
  deriv(wm, t, k2);
  t = {m.uc + 0.5 * h * k2.uc, m.us + 0.5 * h * k2.us,
       m.vc + 0.5 * h * k2.vc, m.vs + 0.5 * h * k2.vs};
  deriv(wm, t, k3);
  t = {m.uc + h * k3.uc, m.us + h * k3.us, m.vc + h * k3.vc, m.vs + h * k3.vs};
  deriv(w1, t, k4);
  m.uc += h / 6.0 * (k1.uc + 2 * k2.uc + 2 * k3.uc + k4.uc);
  m.us += h / 6.0 * (k1.us + 2 * k2.us + 2 * k3.us + k4.us);
  m.vc += h / 6.0 * (k1.vc + 2 * k2.vc + 2 * k3.vc + k4.vc);
  m.vs += h / 6.0 * (k1.vs + 2 * k2.vs + 2 * k3.vs + k4.vs);
}

}  // namespace

Monodromy monodromy(const PotentialSpec& spec, double lambda, int steps) {
  if (steps < 16) throw std::invalid_argument("monodromy needs steps >= 16");

  // integrate piecewise between potential breakpoints so the step grid
  // never straddles a kink; allocation is proportional hence symmetric
  std::vector<double> nodes{0.0};
  for (double b : spec.breakpoints())
    if (b > 0.0 && b < 1.0) nodes.push_back(b);
  nodes.push_back(1.0);
  std::sort(nodes.begin(), nodes.end());

  Fundamental m;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    double a = nodes[i], b = nodes[i + 1];
    // evaluate the potential a hair inside the piece: its value exactly at a
    // jump is ambiguous and must not leak into the neighbouring piece
    double eps = 1e-12 * (b - a);
    auto w = std::function<double(double)>([&](double x) {
      return spec(std::clamp(x, a + eps, b - eps)) - lambda;
    });
    int n = std::max(1, (int)std::ceil(steps * (b - a) - 1e-12));
    double h = (b - a) / n;
    for (int j = 0; j < n; ++j) rk4_step(m, a + j * h, h, w);
  }
  return {m.uc, m.us, m.vc, m.vs, lambda};
}

double discriminant(const PotentialSpec& spec, double lambda, int steps) {
  Monodromy m = monodromy(spec, lambda, steps);
  return m.c1 + m.s1p;
}

double eta(const PotentialSpec& spec, double lambda, int steps) {
  return monodromy(spec, lambda, steps).s1p;
}

namespace {

// grid scan + bisection; optionally hunts tangent (double) roots at grid-local
// minima of |f| that never change sign
std::vector<double> scan_roots(const std::function<double(double)>& f, double lo,
                               double hi, double step, bool tangents) {
  std::vector<double> roots;
  if (hi <= lo) return roots;
  int n = std::max(2, (int)std::ceil((hi - lo) / step));
  std::vector<double> xs(n + 1), fs(n + 1);
  for (int i = 0; i <= n; ++i) {
    xs[i] = lo + (hi - lo) * i / n;
    fs[i] = f(xs[i]);
  }
  std::vector<bool> cell_has_root(n, false);
  for (int i = 0; i < n; ++i) {
    if (fs[i] == 0.0 || (fs[i] < 0.0) != (fs[i + 1] < 0.0)) {
      roots.push_back(detail::bisect(f, xs[i], xs[i + 1], fs[i], fs[i + 1], 1e-10));
      cell_has_root[i] = true;
    }
  }
  if (fs[n] == 0.0) roots.push_back(xs[n]);

  if (tangents) {
    for (int i = 1; i < n; ++i) {
      if (cell_has_root[i - 1] || cell_has_root[i]) continue;
      if (std::abs(fs[i]) >= std::abs(fs[i - 1]) || std::abs(fs[i]) > std::abs(fs[i + 1]))
        continue;
      auto absf = [&](double x) { return std::abs(f(x)); };
      auto [xm, fm] = detail::golden_min(absf, xs[i - 1], xs[i + 1], 1e-9);
      if (fm > 1e-7) continue;
      // localize via the sign change of a central-difference derivative
      const double hd = 1e-6;
      auto df = [&](double x) { return f(x + hd) - f(x - hd); };
      double a = xs[i - 1], b = xs[i + 1];
      double da = df(a), db = df(b);
      if ((da < 0.0) != (db < 0.0))
        xm = detail::bisect(df, a, b, da, db, 1e-10);
      roots.push_back(xm);
    }
  }
  std::sort(roots.begin(), roots.end());
  // drop duplicates from roots landing on grid nodes
  std::vector<double> out;
  for (double r : roots)
    if (out.empty() || r - out.back() > 1e-9) out.push_back(r);
  return out;
}

}  // namespace

DirichletSpectrum dirichlet_spectrum(const PotentialSpec& spec, double lambda_max,
                                     const HillScanOptions& opt) {
  if (!(lambda_max > opt.lambda_min))
    throw std::invalid_argument("lambda_max must exceed the scan floor");
  auto f = std::function<double(double)>(
      [&](double l) { return monodromy(spec, l, opt.steps).s1; });
  // Dirichlet eigenvalues are simple zeros of s(1;lambda)
  auto roots = scan_roots(f, opt.lambda_min, lambda_max, opt.grid_step, false);
  return {std::move(roots), lambda_max};
}

std::vector<double> solve_D_equals(const PotentialSpec& spec, double c,
                                   double lambda_max, const HillScanOptions& opt) {
  auto f = std::function<double(double)>(
      [&](double l) { return discriminant(spec, l, opt.steps) - c; });
  return scan_roots(f, opt.lambda_min, lambda_max, opt.grid_step, true);
}

std::vector<BandPiece> band_pieces(const PotentialSpec& spec, double lambda_max,
                                   const HillScanOptions& opt) {
  auto top = solve_D_equals(spec, 2.0, lambda_max, opt);
  auto bot = solve_D_equals(spec, -2.0, lambda_max, opt);
  std::vector<double> cuts{opt.lambda_min, lambda_max};
  cuts.insert(cuts.end(), top.begin(), top.end());
  cuts.insert(cuts.end(), bot.begin(), bot.end());
  std::sort(cuts.begin(), cuts.end());
  std::vector<BandPiece> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double a = cuts[i], b = cuts[i + 1];
    if (b - a < 1e-9) continue;
    double mid = 0.5 * (a + b);
    if (std::abs(discriminant(spec, mid, opt.steps)) >= 2.0) continue;
    bool inc = discriminant(spec, b, opt.steps) > discriminant(spec, a, opt.steps);
    pieces.push_back({a, b, inc});
  }
  return pieces;
}

IntervalSet hill_bands(const PotentialSpec& spec, double lambda_max,
                       const HillScanOptions& opt) {
  std::vector<Interval> out;
  for (const auto& p : band_pieces(spec, lambda_max, opt)) out.push_back({p.lo, p.hi});
  return IntervalSet(std::move(out), 1e-8);
}

}  // namespace nanotube
