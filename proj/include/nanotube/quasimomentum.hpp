#ifndef NANOTUBE_QUASIMOMENTUM_HPP
#define NANOTUBE_QUASIMOMENTUM_HPP

#include <array>
#include <vector>

#include "nanotube/dispersion.hpp"

namespace nanotube {

struct TubeVector {
  int p1 = 0;
  int p2 = 0;
};

struct ReducedVector {
  int q1 = 0;  // non-negative
  int q2 = 0;
};

// part of the line q2*t2 = q1*t1 - 2*k*pi clipped to B = [-pi,pi]^2
struct Segment {
  int k = 0;
  Theta a, b;                          // endpoints on the boundary of B
  std::array<double, 2> direction{};   // unit vector along the line
  bool degenerate = false;             // single corner point
};

struct SegmentFamily {
  ReducedVector q;
  std::vector<Segment> segments;
};

ReducedVector reduce(const TubeVector& p);  // (|p1|,|p2|); throws on (0,0)

SegmentFamily segments(const ReducedVector& q);

// dist(p1*t1 + p2*t2, 2*pi*Z) <= tol
bool contains(const TubeVector& p, const Theta& theta, double tol = 1e-9);

// n equally spaced points including both endpoints (n >= 2)
std::vector<Theta> sample_segment(const Segment& seg, int n);

// point on the segment at parameter t in [0,1]
Theta segment_point(const Segment& seg, double t);

// sign flips mapping a V_q point back to a point of B_p (q = reduce(p))
Theta lift_to_tube(const TubeVector& p, const Theta& theta);

}  // namespace nanotube

#endif
