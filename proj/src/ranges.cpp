#include "nanotube/ranges.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "nanotube/detail/optimize.hpp"
#include "nanotube/dispersion.hpp"

namespace nanotube {

namespace {

constexpr double kPi = 3.14159265358979323846;

double F_at(int j, const Theta& th) { return solve_F(th)[j]; }

double segment_length(const Segment& s) {
  return std::hypot(s.b.t1 - s.a.t1, s.b.t2 - s.a.t2);
}

void check_q(const ReducedVector& q) {
  if (q.q1 < 0 || q.q2 < 0 || (q.q1 == 0 && q.q2 == 0))
    throw std::invalid_argument("invalid reduced vector");
}

}  // namespace

ExtremumWitness find_extremum(const ReducedVector& q, ExtremumKind which) {
  check_q(q);
  const int j = (which == ExtremumKind::F1Min) ? 1 : 2;
  const double sign = (which == ExtremumKind::F1Min) ? 1.0 : -1.0;  // minimize sign*F_j

  auto fam = segments(q);
  const int m = 2000;
  double best = 1e300;
  double best_t = 0.0;
  const Segment* best_seg = nullptr;
  for (const auto& seg : fam.segments) {
    int n = seg.degenerate ? 1 : m;
    for (int i = 0; i < n; ++i) {
      double t = (n == 1) ? 0.0 : (double)i / (n - 1);
      double v = sign * F_at(j, segment_point(seg, t));
      if (v < best) {
        best = v;
        best_t = t;
        best_seg = &seg;
      }
    }
  }
  if (!best_seg) throw std::logic_error("empty segment family");

  double t_lo = std::max(0.0, best_t - 2.0 / (m - 1));
  double t_hi = std::min(1.0, best_t + 2.0 / (m - 1));
  double len = segment_length(*best_seg);
  if (!best_seg->degenerate && len > 0.0) {
    auto f = [&](double t) { return sign * F_at(j, segment_point(*best_seg, t)); };
    auto [t_star, v_star] = detail::golden_min(f, t_lo, t_hi, 1e-10 / len);
    best = v_star;
    best_t = t_star;
  }
  return {which, sign * best, segment_point(*best_seg, best_t), best_seg->k};
}

IntervalSet range_F1(const ReducedVector& q) {
  check_q(q);
  const double th0 = theta_zero();
  if (q.q2 == 0) {
    if (q.q1 == 1) return IntervalSet::single(-1.0, -2.0 / 3.0);
    int l0 = (int)std::floor(q.q1 * th0 / (2.0 * kPi));
    double a1 = F_at(1, Theta(2.0 * l0 * kPi / q.q1, 0.0));
    double a2 = F_at(1, Theta(2.0 * (l0 + 1) * kPi / q.q1, kPi));
    return IntervalSet({{-1.0, a1}, {a2, -1.0 / 3.0}});
  }
  if (q.q2 % 2 == 0) return IntervalSet::single(-1.0, -1.0 / 3.0);
  // q2 odd
  double a;
  if (q.q1 == 0) {
    a = F_at(1, Theta(0.0, -2.0 * (q.q2 / 2) * kPi / q.q2));
  } else {
    a = find_extremum(q, ExtremumKind::F1Min).value;
  }
  return IntervalSet::single(a, -1.0 / 3.0);
}

IntervalSet range_F2(const ReducedVector& q) {
  check_q(q);
  if (q.q1 <= 1 && q.q2 % 2 == 1) {
    double a = find_extremum(q, ExtremumKind::F2Max).value;
    return IntervalSet::single(-1.0 / 3.0, a);
  }
  return IntervalSet::single(-1.0 / 3.0, 1.0 / 3.0);
}

IntervalSet range_F3(const ReducedVector& q) {
  check_q(q);
  const double th0 = theta_zero();
  if (q.q2 == 0) {
    if (q.q1 == 1) return IntervalSet::single(2.0 / 3.0, 1.0);
    int l0 = (int)std::floor(q.q1 * th0 / (2.0 * kPi));
    double b1 = F_at(3, Theta(2.0 * (l0 + 1) * kPi / q.q1, 0.0));
    double b2 = F_at(3, Theta(2.0 * l0 * kPi / q.q1, kPi));
    return IntervalSet({{1.0 / 3.0, b1}, {b2, 1.0}});
  }
  return IntervalSet::single(1.0 / 3.0, 1.0);
}

RangeReport range_union(const ReducedVector& q) {
  check_q(q);
  RangeReport rep;
  rep.q = q;
  rep.r1 = range_F1(q);
  rep.r2 = range_F2(q);
  rep.r3 = range_F3(q);
  rep.range_union = rep.r1.unite(rep.r2).unite(rep.r3);
  if (q.q2 != 0 && q.q2 % 2 == 0)
    rep.case_label = "a";
  else if (q.q2 == 0 && q.q1 == 1)
    rep.case_label = "b";
  else if (q.q2 == 0)
    rep.case_label = "c";
  else if (q.q1 <= 1)
    rep.case_label = "d";
  else
    rep.case_label = "e";
  if (q.q2 % 2 == 1)
    rep.extremum_witness = find_extremum(q, ExtremumKind::F1Min);
  return rep;
}

IntervalSet brute_force_range(const ReducedVector& q, int j, int samples_per_segment) {
  check_q(q);
  if (j < 1 || j > 3) throw std::invalid_argument("j must be 1, 2 or 3");
  if (samples_per_segment < 100)
    throw std::invalid_argument("brute_force_range needs >= 100 samples per segment");

  auto fam = segments(q);
  struct Sample {
    double value;
    int seg;
    int idx;
  };
  std::vector<Sample> samples;
  double max_jump = 0.0;
  for (std::size_t si = 0; si < fam.segments.size(); ++si) {
    const auto& seg = fam.segments[si];
    int n = seg.degenerate ? 1 : samples_per_segment;
    double prev = 0.0;
    for (int i = 0; i < n; ++i) {
      double t = (n == 1) ? 0.0 : (double)i / (n - 1);
      double v = F_at(j, segment_point(seg, t));
      if (i > 0) max_jump = std::max(max_jump, std::abs(v - prev));
      prev = v;
      samples.push_back({v, (int)si, i});
    }
  }
  std::sort(samples.begin(), samples.end(),
            [](const Sample& a, const Sample& b) { return a.value < b.value; });
  double threshold = std::max(3.0 * max_jump, 1e-12);

  // split sorted values at jumps larger than the continuity scale
  std::vector<std::pair<Sample, Sample>> pieces;  // (lo sample, hi sample)
  Sample lo = samples.front(), hi = samples.front();
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i].value - hi.value > threshold) {
      pieces.emplace_back(lo, hi);
      lo = samples[i];
    }
    hi = samples[i];
  }
  pieces.emplace_back(lo, hi);

  // refine each edge by extremizing F_j along its segment near the sample
  auto refine = [&](const Sample& s, bool maximize) {
    const auto& seg = fam.segments[s.seg];
    if (seg.degenerate) return s.value;
    int n = samples_per_segment;
    double t_lo = std::max(0.0, (s.idx - 2.0) / (n - 1));
    double t_hi = std::min(1.0, (s.idx + 2.0) / (n - 1));
    double len = segment_length(seg);
    if (len <= 0.0) return s.value;
    auto f = [&](double t) { return F_at(j, segment_point(seg, t)); };
    double tol = 1e-8 / len;
    auto r = maximize ? detail::golden_max(f, t_lo, t_hi, tol)
                      : detail::golden_min(f, t_lo, t_hi, tol);
    return maximize ? std::max(r.second, s.value) : std::min(r.second, s.value);
  };

  std::vector<Interval> out;
  for (const auto& [plo, phi] : pieces)
    out.push_back({refine(plo, false), refine(phi, true)});
  return IntervalSet(std::move(out), 1e-9);
}

}  // namespace nanotube
