#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "nanotube/spectra.hpp"

using namespace nanotube;

namespace {
constexpr double kPi = 3.14159265358979323846;
double acos2(double c) { return std::acos(c) * std::acos(c); }
}

TEST_CASE("case labels") {
  CHECK(tube_case_label({1, 0}) == "i");
  CHECK(tube_case_label({-1, 0}) == "i");
  CHECK(tube_case_label({3, 0}) == "ii");
  CHECK(tube_case_label({0, 2}) == "even-p2");
  CHECK(tube_case_label({5, -4}) == "even-p2");
  CHECK(tube_case_label({0, 1}) == "iii");
  CHECK(tube_case_label({1, 3}) == "iii");
  CHECK(tube_case_label({2, 1}) == "iv");
}

TEST_CASE("free ac spectrum for p=(1,0) and p=(2,0)") {
  // up to pi^2 the three bands are exact arccos^2 inversions
  auto ac = ac_spectrum({1, 0}, PotentialSpec::zero(), kPi * kPi);
  REQUIRE(ac.size() == 3);
  CHECK(ac.pieces()[0].lo == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(ac.pieces()[0].hi == doctest::Approx(acos2(2.0 / 3.0)).epsilon(1e-6));
  CHECK(ac.pieces()[1].lo == doctest::Approx(acos2(1.0 / 3.0)).epsilon(1e-6));
  CHECK(ac.pieces()[1].hi == doctest::Approx(acos2(-1.0 / 3.0)).epsilon(1e-6));
  CHECK(ac.pieces()[2].lo == doctest::Approx(acos2(-2.0 / 3.0)).epsilon(1e-6));
  CHECK(ac.pieces()[2].hi == doctest::Approx(kPi * kPi).epsilon(1e-6));

  auto ac2 = ac_spectrum({2, 0}, PotentialSpec::zero(), kPi * kPi);
  CHECK(ac.hausdorff(ac2) <= 1e-7);
}

TEST_CASE("even p2 gives the full Hill spectrum") {
  auto ac = ac_spectrum({0, 2}, PotentialSpec::zero(), 10.0);
  REQUIRE(ac.size() == 1);
  CHECK(ac.min() == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(ac.max() == doctest::Approx(10.0).epsilon(1e-6));

  auto spec = PotentialSpec::cosine(4.0);
  auto even_ac = ac_spectrum({0, 2}, spec, 50.0);
  auto hill = hill_bands(spec, 50.0);
  CHECK(even_ac.hausdorff(hill) <= 1e-7);
}

TEST_CASE("ac is always inside the Hill bands") {
  for (auto p : {TubeVector{1, 0}, TubeVector{2, 1}, TubeVector{0, 3}})
    for (auto& spec : {PotentialSpec::zero(), PotentialSpec::cosine(4.0)}) {
      auto ac = ac_spectrum(p, spec, 40.0);
      CHECK(ac.subset_of(hill_bands(spec, 40.0), 1e-7));
    }
}

TEST_CASE("gap report for the free potential") {
  auto records = gap_report({1, 0}, PotentialSpec::zero(), 10.0);
  REQUIRE(records.size() == 1);
  CHECK(records[0].case_label == "i");
  REQUIRE(records[0].gaps.size() == 2);
  CHECK(records[0].gaps.pieces()[0].lo == doctest::Approx(acos2(2.0 / 3.0)).epsilon(1e-5));
  CHECK(records[0].gaps.pieces()[0].hi == doctest::Approx(acos2(1.0 / 3.0)).epsilon(1e-5));
  CHECK(records[0].gaps.pieces()[1].lo ==
        doctest::Approx(acos2(-1.0 / 3.0)).epsilon(1e-5));
  CHECK(records[0].gaps.pieces()[1].hi ==
        doctest::Approx(acos2(-2.0 / 3.0)).epsilon(1e-5));

  records = gap_report({0, 2}, PotentialSpec::zero(), 50.0);
  for (const auto& r : records) {
    CHECK(r.case_label == "even-p2");
    CHECK(r.gaps.empty());
  }

  // p=(0,1): eta range [-2/3,0] u [1/3,1]
  records = gap_report({0, 1}, PotentialSpec::zero(), 10.0);
  REQUIRE(records.size() == 1);
  CHECK(records[0].case_label == "iii");
  REQUIRE(records[0].gaps.size() == 2);
  CHECK(records[0].gaps.pieces()[0].lo == doctest::Approx(acos2(1.0 / 3.0)).epsilon(1e-5));
  CHECK(records[0].gaps.pieces()[0].hi == doctest::Approx(acos2(0.0)).epsilon(1e-5));
  CHECK(records[0].gaps.pieces()[1].lo ==
        doctest::Approx(acos2(-2.0 / 3.0)).epsilon(1e-5));

  // p=(3,0): gap edges at (1+sqrt7)/6 and 2/3 through arccos^2
  double r7 = (1.0 + std::sqrt(7.0)) / 6.0;
  records = gap_report({3, 0}, PotentialSpec::zero(), 10.0);
  REQUIRE(records.size() == 1);
  CHECK(records[0].case_label == "ii");
  REQUIRE(records[0].gaps.size() == 2);
  CHECK(records[0].gaps.pieces()[0].lo == doctest::Approx(acos2(2.0 / 3.0)).epsilon(1e-5));
  CHECK(records[0].gaps.pieces()[0].hi == doctest::Approx(acos2(r7)).epsilon(1e-5));
  CHECK(records[0].gaps.pieces()[1].lo == doctest::Approx(acos2(-r7)).epsilon(1e-5));
  CHECK(records[0].gaps.pieces()[1].hi ==
        doctest::Approx(acos2(-2.0 / 3.0)).epsilon(1e-5));
}

TEST_CASE("gap counts match the case battery") {
  auto count_gaps = [](const TubeVector& p) {
    std::size_t n = 0;
    for (const auto& r : gap_report(p, PotentialSpec::zero(), 10.0)) n += r.gaps.size();
    return n;
  };
  CHECK(count_gaps({1, 0}) == 2);
  CHECK(count_gaps({0, 1}) == 2);
  CHECK(count_gaps({1, 1}) == 2);
  CHECK(count_gaps({-1, 3}) == 2);
  CHECK(count_gaps({2, 1}) == 1);
  CHECK(count_gaps({0, 2}) == 0);
  CHECK(count_gaps({4, 2}) == 0);
}

TEST_CASE("pure point spectrum") {
  auto pp = pure_point({2, 0}, PotentialSpec::zero(), 6.0);
  CHECK(pp.sigma_D.empty());
  REQUIRE(pp.sigma_0.size() == 3);
  CHECK(pp.sigma_0[0].lambda == doctest::Approx(acos2(1.0 / 3.0)).epsilon(1e-6));
  CHECK(pp.sigma_0[0].family == "hexagon-bracelet-b");
  CHECK(pp.sigma_0[1].lambda == doctest::Approx(acos2(0.0)).epsilon(1e-6));
  CHECK(pp.sigma_0[1].family == "rhombus-bracelet");
  CHECK(pp.sigma_0[2].lambda == doctest::Approx(acos2(-1.0 / 3.0)).epsilon(1e-6));
  CHECK(pp.sigma_0[2].family == "hexagon-bracelet-a");

  CHECK(pure_point({1, 1}, PotentialSpec::zero(), 100.0).sigma_0.empty());

  pp = pure_point({0, 3}, PotentialSpec::zero(), 6.0);
  REQUIRE(pp.sigma_0.size() == 1);
  CHECK(pp.sigma_0[0].lambda == doctest::Approx(acos2(-1.0 / 3.0)).epsilon(1e-6));
  CHECK(pp.sigma_0[0].family == "flower");
}

TEST_CASE("pure point family tables for p=(0,N)") {
  auto family_set = [](int n) {
    std::vector<std::string> out;
    for (const auto& e : pure_point({0, n}, PotentialSpec::zero(), 4.0).sigma_0)
      out.push_back(e.family);
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(family_set(5) == std::vector<std::string>{"flower"});
  CHECK(family_set(6) == std::vector<std::string>{"flower", "mushroom"});
  CHECK(family_set(4) == std::vector<std::string>{"double-band", "flower", "mushroom"});
}

TEST_CASE("sigma_0 values hit their eta targets") {
  for (auto& spec : {PotentialSpec::zero(), PotentialSpec::cosine(1.0)}) {
    auto pp = pure_point({4, 0}, spec, 30.0);
    for (const auto& e : pp.sigma_0)
      CHECK(std::abs(eta(spec, e.lambda) - e.eta_value) <= 1e-8);
  }
}

TEST_CASE("direct-integral consistency at random restricted quasimomenta") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  TubeVector p{2, 3};
  auto spec = PotentialSpec::cosine(1.0);
  auto ac = ac_spectrum(p, spec, 40.0);
  auto fam = segments(reduce(p));
  for (int trial = 0; trial < 50; ++trial) {
    const auto& seg = fam.segments[rng() % fam.segments.size()];
    Theta th = lift_to_tube(p, segment_point(seg, uni(rng)));
    auto roots = solve_F(th);
    for (int j = 1; j <= 3; ++j)
      for (double l : solve_D_equals(spec, 2.0 * roots[j], 40.0))
        CHECK(ac.distance(l) <= 1e-7);
  }
}

TEST_CASE("full report aggregates consistently") {
  auto rep = full_report({1, 0}, PotentialSpec::zero(), 0.0, 10.0);
  CHECK(rep.potential == "zero");
  CHECK(rep.ac_bands.size() == 3);
  CHECK(rep.ac_bands.subset_of(rep.hill_band_set, 1e-7));
  REQUIRE(rep.gaps_per_hill_band.size() == 1);
  CHECK(rep.gaps_per_hill_band[0].gaps.size() == 2);
  bool has_sc_note = false;
  for (const auto& n : rep.notes)
    if (n.find("singular continuous") != std::string::npos) has_sc_note = true;
  CHECK(has_sc_note);

  auto even = full_report({0, 2}, PotentialSpec::cosine(4.0), 0.0, 50.0);
  CHECK(even.ac_bands.hausdorff(even.hill_band_set) <= 1e-7);

  CHECK_THROWS_AS(full_report({0, 0}, PotentialSpec::zero(), 0.0, 10.0),
                  std::invalid_argument);
}
