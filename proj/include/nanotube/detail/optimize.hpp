#ifndef NANOTUBE_DETAIL_OPTIMIZE_HPP
#define NANOTUBE_DETAIL_OPTIMIZE_HPP

#include <cmath>
#include <utility>

namespace nanotube::detail {

// golden-section minimization on [a,b]; xtol is an absolute width
template <typename F>
std::pair<double, double> golden_min(F f, double a, double b, double xtol) {
  constexpr double invphi = 0.6180339887498949;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > xtol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1; f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2; f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

template <typename F>
std::pair<double, double> golden_max(F f, double a, double b, double xtol) {
  auto r = golden_min([&](double x) { return -f(x); }, a, b, xtol);
  return {r.first, -r.second};
}

// bisection for a bracketed sign change; returns midpoint of final bracket
template <typename F>
double bisect(F f, double a, double b, double fa, double fb, double xtol) {
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  while (b - a > xtol) {
    double m = 0.5 * (a + b);
    double fm = f(m);
    if (fm == 0.0) return m;
    if ((fa < 0.0) == (fm < 0.0)) {
      a = m; fa = fm;
    } else {
      b = m; fb = fm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace nanotube::detail

#endif
