#ifndef NANOTUBE_SPECTRA_HPP
#define NANOTUBE_SPECTRA_HPP

#include <string>
#include <vector>

#include "nanotube/hill.hpp"
#include "nanotube/interval_set.hpp"
#include "nanotube/potential.hpp"
#include "nanotube/quasimomentum.hpp"
#include "nanotube/ranges.hpp"

namespace nanotube {

struct GapRecord {
  int hill_band_index;
  IntervalSet gaps;
  std::string case_label;  // i | ii | iii | iv | even-p2
};

struct Sigma0Entry {
  double lambda;
  double eta_value;  // -1/3, 0 or 1/3
  std::string family;
};

struct PurePoint {
  std::vector<double> sigma_D;
  std::vector<Sigma0Entry> sigma_0;
};

struct SpectrumReport {
  TubeVector p;
  std::string potential;
  double lambda_min, lambda_max;
  IntervalSet ac_bands;
  IntervalSet hill_band_set;
  std::vector<GapRecord> gaps_per_hill_band;
  std::vector<double> sigma_D;
  std::vector<Sigma0Entry> sigma_0;
  std::vector<std::string> notes;
};

// default scan floor: min(0, min q0) - 1 (spectrum is bounded below)
double default_lambda_floor(const PotentialSpec& spec);

std::string tube_case_label(const TubeVector& p);

IntervalSet ac_spectrum(const TubeVector& p, const PotentialSpec& spec,
                        double lambda_max);

std::vector<GapRecord> gap_report(const TubeVector& p, const PotentialSpec& spec,
                                  double lambda_max);

PurePoint pure_point(const TubeVector& p, const PotentialSpec& spec,
                     double lambda_max);

SpectrumReport full_report(const TubeVector& p, const PotentialSpec& spec,
                           double lambda_min, double lambda_max);

}  // namespace nanotube

#endif
