#include "nanotube/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nanotube {

IntervalSet::IntervalSet(std::vector<Interval> pieces, double merge_tol) {
  for (auto& iv : pieces) {
    if (!(iv.lo <= iv.hi)) throw std::invalid_argument("interval with lo > hi");
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (const auto& iv : pieces) {
    if (!pieces_.empty() && iv.lo <= pieces_.back().hi + merge_tol) {
      pieces_.back().hi = std::max(pieces_.back().hi, iv.hi);
    } else {
      pieces_.push_back(iv);
    }
  }
}

IntervalSet IntervalSet::single(double lo, double hi, double merge_tol) {
  return IntervalSet({Interval{lo, hi}}, merge_tol);
}

double IntervalSet::min() const {
  if (pieces_.empty()) throw std::logic_error("min of empty IntervalSet");
  return pieces_.front().lo;
}

double IntervalSet::max() const {
  if (pieces_.empty()) throw std::logic_error("max of empty IntervalSet");
  return pieces_.back().hi;
}

bool IntervalSet::contains(double x, double tol) const {
  for (const auto& iv : pieces_)
    if (x >= iv.lo - tol && x <= iv.hi + tol) return true;
  return false;
}

double IntervalSet::distance(double x) const {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& iv : pieces_) {
    if (x < iv.lo)
      d = std::min(d, iv.lo - x);
    else if (x > iv.hi)
      d = std::min(d, x - iv.hi);
    else
      return 0.0;
  }
  return d;
}

IntervalSet IntervalSet::unite(const IntervalSet& other, double merge_tol) const {
  std::vector<Interval> all = pieces_;
  all.insert(all.end(), other.pieces_.begin(), other.pieces_.end());
  return IntervalSet(std::move(all), merge_tol);
}

IntervalSet IntervalSet::intersect(double lo, double hi) const {
  std::vector<Interval> out;
  for (const auto& iv : pieces_) {
    double a = std::max(iv.lo, lo), b = std::min(iv.hi, hi);
    if (a <= b) out.push_back({a, b});
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::complement_within(double lo, double hi) const {
  std::vector<Interval> out;
  double cur = lo;
  for (const auto& iv : pieces_) {
    if (iv.hi < lo || iv.lo > hi) continue;
    if (iv.lo > cur) out.push_back({cur, std::min(iv.lo, hi)});
    cur = std::max(cur, iv.hi);
    if (cur >= hi) break;
  }
  if (cur < hi) out.push_back({cur, hi});
  return IntervalSet(std::move(out));
}

bool IntervalSet::subset_of(const IntervalSet& other, double tol) const {
  for (const auto& iv : pieces_) {
    // every point of iv must be within tol of other; for interval unions it
    // suffices to find one piece of other covering iv up to tol
    bool covered = false;
    for (const auto& jv : other.pieces_) {
      if (iv.lo >= jv.lo - tol && iv.hi <= jv.hi + tol) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

double IntervalSet::hausdorff(const IntervalSet& other) const {
  if (pieces_.empty() && other.pieces_.empty()) return 0.0;
  if (pieces_.empty() || other.pieces_.empty())
    return std::numeric_limits<double>::infinity();

  // sup over x in A of dist(x,B) is attained at an endpoint of A or at a
  // gap midpoint of B lying inside A
  auto one_sided = [](const IntervalSet& A, const IntervalSet& B) {
    double worst = 0.0;
    for (const auto& iv : A.pieces_) {
      worst = std::max(worst, B.distance(iv.lo));
      worst = std::max(worst, B.distance(iv.hi));
    }
    for (std::size_t i = 0; i + 1 < B.pieces_.size(); ++i) {
      double mid = 0.5 * (B.pieces_[i].hi + B.pieces_[i + 1].lo);
      if (A.contains(mid)) worst = std::max(worst, B.distance(mid));
    }
    return worst;
  };
  return std::max(one_sided(*this, other), one_sided(other, *this));
}

}  // namespace nanotube
