#ifndef NANOTUBE_INTERVAL_SET_HPP
#define NANOTUBE_INTERVAL_SET_HPP

#include <vector>
#include <utility>

namespace nanotube {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

// Normalized finite union of closed intervals: sorted by lo, pairwise
// disjoint with gaps of positive length. Degenerate points [a,a] allowed.
class IntervalSet {
public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> pieces, double merge_tol = 1e-12);

  static IntervalSet single(double lo, double hi, double merge_tol = 1e-12);

  const std::vector<Interval>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  std::size_t size() const { return pieces_.size(); }

  double min() const;
  double max() const;

  bool contains(double x, double tol = 0.0) const;
  double distance(double x) const;  // distance to the set, +inf if empty

  IntervalSet unite(const IntervalSet& other, double merge_tol = 1e-12) const;
  IntervalSet intersect(double lo, double hi) const;
  // closure of [lo,hi] \ this
  IntervalSet complement_within(double lo, double hi) const;

  // is this a subset of other, allowing endpoints to stick out by tol
  bool subset_of(const IntervalSet& other, double tol = 0.0) const;

  // exact Hausdorff distance between two finite interval unions
  double hausdorff(const IntervalSet& other) const;

private:
  std::vector<Interval> pieces_;
};

}  // namespace nanotube

#endif
