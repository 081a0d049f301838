#include "nanotube/quasimomentum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nanotube {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ReducedVector reduce(const TubeVector& p) {
  if (p.p1 == 0 && p.p2 == 0)
    throw std::invalid_argument(
        "p must be nonzero: the (0,0) quotient is the full graphyne, not a tube");
  return {std::abs(p.p1), std::abs(p.p2)};
}

SegmentFamily segments(const ReducedVector& q) {
  if (q.q1 < 0 || q.q2 < 0 || (q.q1 == 0 && q.q2 == 0))
    throw std::invalid_argument("reduced vector must be nonzero with q1,q2 >= 0");

  SegmentFamily fam;
  fam.q = q;
  int kmax = (q.q2 == 0) ? q.q1 / 2 : (q.q1 + q.q2) / 2;
  for (int k = 0; k <= kmax; ++k) {
    Segment seg;
    seg.k = k;
    if (q.q2 == 0) {
      // vertical line t1 = 2k pi / q1
      double t1 = 2.0 * k * kPi / q.q1;
      if (t1 > kPi + 1e-15) continue;
      t1 = std::min(t1, kPi);
      seg.a = Theta{};
      seg.a.t1 = t1; seg.a.t2 = -kPi;
      seg.b.t1 = t1; seg.b.t2 = kPi;
      seg.direction = {0.0, 1.0};
    } else if (q.q1 == 0) {
      // horizontal line t2 = -2k pi / q2
      double t2 = -2.0 * k * kPi / q.q2;
      if (t2 < -kPi - 1e-15) continue;
      t2 = std::max(t2, -kPi);
      seg.a.t1 = -kPi; seg.a.t2 = t2;
      seg.b.t1 = kPi;  seg.b.t2 = t2;
      seg.direction = {1.0, 0.0};
    } else {
      // t2 = (q1 t1 - 2k pi)/q2, clipped to B
      double lo = std::max(-kPi, (2.0 * k * kPi - kPi * q.q2) / q.q1);
      double hi = std::min(kPi, (2.0 * k * kPi + kPi * q.q2) / q.q1);
      if (lo > hi + 1e-15) continue;
      auto t2_of = [&](double t1) { return (q.q1 * t1 - 2.0 * k * kPi) / q.q2; };
      seg.a.t1 = lo; seg.a.t2 = std::clamp(t2_of(lo), -kPi, kPi);
      seg.b.t1 = hi; seg.b.t2 = std::clamp(t2_of(hi), -kPi, kPi);
      double norm = std::hypot((double)q.q2, (double)q.q1);
      seg.direction = {q.q2 / norm, q.q1 / norm};
    }
    seg.degenerate = (seg.a.t1 == seg.b.t1 && seg.a.t2 == seg.b.t2);
    fam.segments.push_back(seg);
  }
  return fam;
}

bool contains(const TubeVector& p, const Theta& theta, double tol) {
  double v = p.p1 * theta.t1 + p.p2 * theta.t2;
  double d = std::abs(std::remainder(v, 2.0 * kPi));
  return d <= tol;
}

Theta segment_point(const Segment& seg, double t) {
  Theta th;
  th.t1 = seg.a.t1 + t * (seg.b.t1 - seg.a.t1);
  th.t2 = seg.a.t2 + t * (seg.b.t2 - seg.a.t2);
  return th;
}

std::vector<Theta> sample_segment(const Segment& seg, int n) {
  if (n < 2) throw std::invalid_argument("sample_segment needs n >= 2");
  std::vector<Theta> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i)
    pts.push_back(segment_point(seg, (double)i / (n - 1)));
  return pts;
}

Theta lift_to_tube(const TubeVector& p, const Theta& theta) {
  double s1 = (p.p1 < 0) ? -1.0 : 1.0;
  double s2 = (p.p2 > 0) ? -1.0 : 1.0;
  Theta th;
  th.t1 = s1 * theta.t1;
  th.t2 = s2 * theta.t2;
  return th;
}

}  // namespace nanotube
