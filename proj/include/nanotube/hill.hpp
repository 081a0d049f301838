#ifndef NANOTUBE_HILL_HPP
#define NANOTUBE_HILL_HPP

#include <vector>

#include "nanotube/interval_set.hpp"
#include "nanotube/potential.hpp"

namespace nanotube {

// Endpoint Cauchy data of the solutions c (c(0)=1, c'(0)=0) and
// s (s(0)=0, s'(0)=1) of -u'' + q0 u = lambda u on [0,1].
// D(lambda) = c1 + s1p, eta(lambda) = s1p.
struct Monodromy {
  double c1, s1, c1p, s1p;
  double lambda;
};

struct DirichletSpectrum {
  std::vector<double> eigenvalues;  // zeros of s(1;lambda), ascending
  double cutoff;
};

struct HillScanOptions {
  double lambda_min = -50.0;
  double grid_step = 0.05;
  int steps = 2048;
};

// half-open monotone stretch of D between consecutive |D|=2 roots
struct BandPiece {
  double lo, hi;
  bool increasing;  // D increasing on [lo,hi]
};

Monodromy monodromy(const PotentialSpec& spec, double lambda, int steps = 2048);
double discriminant(const PotentialSpec& spec, double lambda, int steps = 2048);
double eta(const PotentialSpec& spec, double lambda, int steps = 2048);

DirichletSpectrum dirichlet_spectrum(const PotentialSpec& spec, double lambda_max,
                                     const HillScanOptions& opt = {});

// all roots of D(lambda) = c in [opt.lambda_min, lambda_max]; tangent
// (double) roots at closed gaps are detected and refined as well
std::vector<double> solve_D_equals(const PotentialSpec& spec, double c,
                                   double lambda_max, const HillScanOptions& opt = {});

// {lambda <= lambda_max : |D(lambda)| <= 2}
IntervalSet hill_bands(const PotentialSpec& spec, double lambda_max,
                       const HillScanOptions& opt = {});

// monotone subdivision of the bands; touching bands stay split
std::vector<BandPiece> band_pieces(const PotentialSpec& spec, double lambda_max,
                                   const HillScanOptions& opt = {});

}  // namespace nanotube

#endif
