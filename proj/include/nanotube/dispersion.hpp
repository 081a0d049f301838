#ifndef NANOTUBE_DISPERSION_HPP
#define NANOTUBE_DISPERSION_HPP

#include <array>

namespace nanotube {

// quasimomentum in the Brillouin zone B = [-pi,pi]^2; out-of-range input is
// reduced modulo 2*pi on construction
struct Theta {
  Theta() = default;
  Theta(double t1, double t2);
  double t1 = 0.0;
  double t2 = 0.0;
};

// sorted real roots of 9x^3 - x - (cos t1 + 1)(3x + cos t2) = 0
struct RootTriple {
  double f1, f2, f3;
  double operator[](int j) const;  // j = 1,2,3
};

double theta_zero();  // arccos(-1/3)

RootTriple solve_F(const Theta& theta);

// companion-matrix route with one Newton polish; test oracle for solve_F
RootTriple solve_F_oracle(const Theta& theta);

// signed value of the dispersion cubic at x
double dispersion_cubic(const Theta& theta, double x);

}  // namespace nanotube

#endif
