#include "nanotube/dispersion.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nanotube {

namespace {
constexpr double kPi = 3.14159265358979323846;

double wrap(double t) {
  if (t >= -kPi && t <= kPi) return t;
  double r = std::remainder(t, 2.0 * kPi);  // (-pi, pi]
  return r;
}
}  // namespace

Theta::Theta(double a, double b) : t1(wrap(a)), t2(wrap(b)) {}

double RootTriple::operator[](int j) const {
  switch (j) {
    case 1: return f1;
    case 2: return f2;
    case 3: return f3;
  }
  throw std::out_of_range("RootTriple index must be 1, 2 or 3");
}

double theta_zero() { return std::acos(-1.0 / 3.0); }

double dispersion_cubic(const Theta& theta, double x) {
  double c1 = std::cos(theta.t1), c2 = std::cos(theta.t2);
  return 9.0 * x * x * x - x - (c1 + 1.0) * (3.0 * x + c2);
}

// depressed form x^3 + p x + q with p = -(3 cos t1 + 4)/9, q = -(cos t1 + 1) cos t2 / 9;
// p < 0 on all of B, so the three-real-root trigonometric branch always applies
RootTriple solve_F(const Theta& theta) {
  double c1 = std::cos(theta.t1), c2 = std::cos(theta.t2);
  double p = -(3.0 * c1 + 4.0) / 9.0;
  double q = -(c1 + 1.0) * c2 / 9.0;
  double m = 2.0 * std::sqrt(-p / 3.0);
  double arg = 3.0 * q / (p * m);
  arg = std::clamp(arg, -1.0, 1.0);  // absorbs rounding at double roots
  double phi = std::acos(arg);
  std::array<double, 3> r;
  for (int k = 0; k < 3; ++k) r[k] = m * std::cos((phi - 2.0 * kPi * k) / 3.0);
  std::sort(r.begin(), r.end());
  return {r[0], r[1], r[2]};
}

RootTriple solve_F_oracle(const Theta& theta) {
  double c1 = std::cos(theta.t1), c2 = std::cos(theta.t2);
  double p = -(3.0 * c1 + 4.0) / 9.0;
  double q = -(c1 + 1.0) * c2 / 9.0;
  Eigen::Matrix3d comp = Eigen::Matrix3d::Zero();
  comp(0, 2) = -q;
  comp(1, 2) = -p;
  comp(1, 0) = 1.0;
  comp(2, 1) = 1.0;
  Eigen::EigenSolver<Eigen::Matrix3d> es(comp, false);
  std::array<double, 3> r;
  for (int k = 0; k < 3; ++k) {
    double x = es.eigenvalues()[k].real();
    // one Newton polish on the depressed cubic
    double f = x * x * x + p * x + q;
    double df = 3.0 * x * x + p;
    if (std::abs(df) > 1e-6) x -= f / df;
    r[k] = x;
  }
  std::sort(r.begin(), r.end());
  return {r[0], r[1], r[2]};
}

}  // namespace nanotube
