#include "nanotube/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nanotube/detail/optimize.hpp"

namespace nanotube {

namespace {

HillScanOptions scan_options(const PotentialSpec& spec) {
  HillScanOptions opt;
  opt.lambda_min = default_lambda_floor(spec);
  return opt;
}

// D^{-1}(t) on a monotone band piece, clamped to the piece
double invert_on_piece(const PotentialSpec& spec, const BandPiece& piece, double t,
                       int steps) {
  double da = discriminant(spec, piece.lo, steps);
  double db = discriminant(spec, piece.hi, steps);
  double dmin = std::min(da, db), dmax = std::max(da, db);
  if (t <= dmin) return (da <= db) ? piece.lo : piece.hi;
  if (t >= dmax) return (da <= db) ? piece.hi : piece.lo;
  auto f = [&](double l) { return discriminant(spec, l, steps) - t; };
  return detail::bisect(f, piece.lo, piece.hi, da - t, db - t, 1e-10);
}

}  // namespace

double default_lambda_floor(const PotentialSpec& spec) {
  return std::min(0.0, spec.min_value()) - 1.0;
}

std::string tube_case_label(const TubeVector& p) {
  int a1 = std::abs(p.p1), a2 = std::abs(p.p2);
  if (a2 != 0 && a2 % 2 == 0) return "even-p2";
  if (a2 == 0) return (a1 == 1) ? "i" : "ii";
  return (a1 <= 1) ? "iii" : "iv";
}

IntervalSet ac_spectrum(const TubeVector& p, const PotentialSpec& spec,
                        double lambda_max) {
  auto q = reduce(p);  // throws on (0,0)
  auto opt = scan_options(spec);
  auto rep = range_union(q);
  auto pieces = band_pieces(spec, lambda_max, opt);

  std::vector<Interval> out;
  for (const auto& piece : pieces) {
    double da = discriminant(spec, piece.lo, opt.steps);
    double db = discriminant(spec, piece.hi, opt.steps);
    double dmin = std::min(da, db), dmax = std::max(da, db);
    for (const auto& iv : rep.range_union.pieces()) {
      double u = 2.0 * iv.lo, v = 2.0 * iv.hi;
      if (v < dmin || u > dmax) continue;
      double lu = invert_on_piece(spec, piece, u, opt.steps);
      double lv = invert_on_piece(spec, piece, v, opt.steps);
      if (lu > lv) std::swap(lu, lv);
      out.push_back({lu, lv});
    }
  }
  return IntervalSet(std::move(out), 1e-9);
}

std::vector<GapRecord> gap_report(const TubeVector& p, const PotentialSpec& spec,
                                  double lambda_max) {
  auto bands = hill_bands(spec, lambda_max, scan_options(spec));
  auto ac = ac_spectrum(p, spec, lambda_max);
  std::string label = tube_case_label(p);
  std::vector<GapRecord> records;
  int idx = 0;
  for (const auto& band : bands.pieces()) {
    auto raw = ac.complement_within(band.lo, band.hi);
    // bands touching within 1e-8 are not counted as open gaps
    std::vector<Interval> kept;
    for (const auto& g : raw.pieces())
      if (g.length() > 1e-8) kept.push_back(g);
    records.push_back({idx++, IntervalSet(std::move(kept)), label});
  }
  return records;
}

PurePoint pure_point(const TubeVector& p, const PotentialSpec& spec,
                     double lambda_max) {
  reduce(p);  // validity check
  auto opt = scan_options(spec);
  PurePoint pp;
  pp.sigma_D = dirichlet_spectrum(spec, lambda_max, opt).eigenvalues;

  std::vector<std::pair<double, std::string>> targets;
  if (p.p2 == 0 && p.p1 % 2 == 0) {
    targets = {{0.0, "rhombus-bracelet"},
               {-1.0 / 3.0, "hexagon-bracelet-a"},
               {1.0 / 3.0, "hexagon-bracelet-b"}};
  } else if (p.p1 == 0) {
    int n = std::abs(p.p2);
    if (n % 2 == 1) {
      targets = {{-1.0 / 3.0, "flower"}};
    } else if (n % 4 == 2) {
      targets = {{-1.0 / 3.0, "flower"}, {1.0 / 3.0, "mushroom"}};
    } else {
      targets = {{-1.0 / 3.0, "flower"}, {0.0, "double-band"}, {1.0 / 3.0, "mushroom"}};
    }
  }
  for (const auto& [c, family] : targets) {
    for (double l : solve_D_equals(spec, 2.0 * c, lambda_max, opt))
      pp.sigma_0.push_back({l, c, family});
  }
  std::sort(pp.sigma_0.begin(), pp.sigma_0.end(),
            [](const Sigma0Entry& a, const Sigma0Entry& b) { return a.lambda < b.lambda; });
  return pp;
}

SpectrumReport full_report(const TubeVector& p, const PotentialSpec& spec,
                           double lambda_min, double lambda_max) {
  reduce(p);
  SpectrumReport rep;
  rep.p = p;
  rep.potential = spec.describe();
  rep.lambda_min = std::isnan(lambda_min) ? default_lambda_floor(spec) : lambda_min;
  rep.lambda_max = lambda_max;
  rep.ac_bands = ac_spectrum(p, spec, lambda_max).intersect(rep.lambda_min, lambda_max);
  rep.hill_band_set =
      hill_bands(spec, lambda_max, scan_options(spec)).intersect(rep.lambda_min, lambda_max);
  rep.gaps_per_hill_band = gap_report(p, spec, lambda_max);
  auto pp = pure_point(p, spec, lambda_max);
  rep.sigma_D = std::move(pp.sigma_D);
  for (auto& e : pp.sigma_0) {
    if (e.lambda >= rep.lambda_min)
      rep.sigma_0.push_back(e);
    else
      rep.notes.push_back("sigma_0 eigenvalue below window floor omitted");
  }
  rep.notes.push_back("singular continuous spectrum empty");
  rep.notes.push_back("all pure point eigenvalues have infinite multiplicity");
  return rep;
}

}  // namespace nanotube
