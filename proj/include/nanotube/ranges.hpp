#ifndef NANOTUBE_RANGES_HPP
#define NANOTUBE_RANGES_HPP

#include <optional>
#include <string>

#include "nanotube/interval_set.hpp"
#include "nanotube/quasimomentum.hpp"

namespace nanotube {

enum class ExtremumKind { F1Min, F2Max };

struct ExtremumWitness {
  ExtremumKind which;
  double value;
  Theta theta;
  int segment_k;
};

struct RangeReport {
  ReducedVector q;
  IntervalSet r1, r2, r3;
  IntervalSet range_union;
  std::string case_label;  // a..e
  std::optional<ExtremumWitness> extremum_witness;
};

// closed-form ranges F_j(V_q)
IntervalSet range_F1(const ReducedVector& q);
IntervalSet range_F2(const ReducedVector& q);
IntervalSet range_F3(const ReducedVector& q);

RangeReport range_union(const ReducedVector& q);

// sampling oracle: dense evaluation on every segment, gap detection with an
// adaptive threshold, golden-section refinement of detected gap edges
IntervalSet brute_force_range(const ReducedVector& q, int j, int samples_per_segment);

// exhaustive extremum search over all segments of V_q
ExtremumWitness find_extremum(const ReducedVector& q, ExtremumKind which);

}  // namespace nanotube

#endif
