#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "nanotube/graph_oracle.hpp"

using namespace nanotube;

namespace {

constexpr double kPi = 3.14159265358979323846;

double cubic4(const Theta& th, double x) {
  return 4.0 * (9.0 * x * x * x - x -
                (std::cos(th.t1) + 1.0) * (3.0 * x + std::cos(th.t2)));
}

bool contains_value(const std::vector<double>& v, double target, double tol) {
  return std::any_of(v.begin(), v.end(),
                     [&](double x) { return std::abs(x - target) <= tol; });
}

}  // namespace

TEST_CASE("shipped config degrees") {
  auto deg = graphyne_config().degrees();
  REQUIRE(deg.size() == 3);
  CHECK(deg[0] == 4);
  CHECK(deg[1] == 3);
  CHECK(deg[2] == 3);
}

TEST_CASE("characteristic polynomial special values") {
  auto cfg = graphyne_config();
  CHECK(std::abs(char_poly(cfg, Theta(0.0, 0.0), 1.0)) <= 1e-12);
  CHECK(std::abs(char_poly(cfg, Theta(kPi, kPi), 0.0)) <= 1e-12);
  CHECK(char_poly(cfg, Theta(0.0, 0.0), 0.0) == doctest::Approx(-8.0).epsilon(1e-12));
  CHECK(std::abs(char_poly(cfg, Theta(0.0, 0.0), -1.0 / 3.0)) <= 1e-12);
  CHECK(char_poly(cfg, Theta(0.0, 0.0), 1.0 / 3.0) == doctest::Approx(-16.0).epsilon(1e-12));
  CHECK(std::abs(char_poly(cfg, Theta(0.0, kPi), -1.0)) <= 1e-12);

  // double root at the Dirac point: value and x-derivative both vanish
  Theta dirac(theta_zero(), 0.0);
  CHECK(std::abs(char_poly(cfg, dirac, -1.0 / 3.0)) <= 1e-10);
  double deriv = 4.0 * (27.0 / 9.0 - 1.0 - 3.0 * (std::cos(dirac.t1) + 1.0));
  CHECK(std::abs(deriv) <= 1e-10);
}

TEST_CASE("characteristic polynomial identity at random points") {
  auto cfg = graphyne_config();
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> ang(-kPi, kPi), val(-2.0, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    Theta th(ang(rng), ang(rng));
    for (int k = 0; k < 5; ++k) {
      double x = val(rng);
      worst = std::max(worst, std::abs(char_poly(cfg, th, x) - cubic4(th, x)));
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("finite-difference eigenvalues at the zone center and corner") {
  auto cfg = graphyne_config();
  auto evs = fd_eigenvalues(cfg, Theta(0.0, 0.0), PotentialSpec::zero(), 200, 10.0);
  double th0 = theta_zero();
  CHECK(contains_value(evs, 0.0, 5e-3));
  CHECK(contains_value(evs, th0 * th0, 5e-3));
  CHECK(contains_value(evs, std::acos(-2.0 / 3.0) * std::acos(-2.0 / 3.0), 5e-3));
  CHECK(contains_value(evs, kPi * kPi, 5e-3));  // Dirichlet flat branch

  evs = fd_eigenvalues(cfg, Theta(kPi, kPi), PotentialSpec::zero(), 200, 6.0);
  CHECK(contains_value(evs, std::acos(1.0 / 3.0) * std::acos(1.0 / 3.0), 5e-3));
  CHECK(contains_value(evs, kPi * kPi / 4.0, 5e-3));
  CHECK(contains_value(evs, th0 * th0, 5e-3));

  CHECK_THROWS(fd_eigenvalues(cfg, Theta(0.0, 0.0), PotentialSpec::zero(), 10, 10.0));
}

TEST_CASE("flat Dirichlet branch present away from symmetry points") {
  auto cfg = graphyne_config();
  for (auto th : {Theta(0.7, -1.9), Theta(2.2, 0.4)}) {
    auto evs = fd_eigenvalues(cfg, th, PotentialSpec::zero(), 200, 10.5);
    CHECK(contains_value(evs, kPi * kPi, 5e-3));
  }
}

TEST_CASE("dispersion check on a small run") {
  auto rep = dispersion_check(graphyne_config(), {1, 0}, PotentialSpec::zero(), 4, 100,
                              2e-2, 8.0);
  CHECK(rep.pass);
  CHECK(rep.eigenvalues_checked > 0);
  CHECK(rep.failures.empty());
}

TEST_CASE("compact eigenfunctions: bracelet cases") {
  double l0 = kPi * kPi / 4.0;  // eta = 0 for the free potential

  auto res = build_compact_eigenfunction({2, 0}, 0.0, l0, 1, PotentialSpec::zero());
  CHECK(res.dimension >= 1);
  REQUIRE(!res.basis.empty());
  CHECK(res.constraint_residual <= 1e-8);
  CHECK(res.basis[0].pieces.size() == 10);  // 2 cells x 5 edges

  // height dichotomy for p=(0,4)
  CHECK(build_compact_eigenfunction({0, 4}, 0.0, l0, 1, PotentialSpec::zero()).dimension ==
        0);
  CHECK(build_compact_eigenfunction({0, 4}, 0.0, l0, 2, PotentialSpec::zero()).dimension >=
        1);

  // no mushroom for odd N
  double l13 = std::acos(1.0 / 3.0) * std::acos(1.0 / 3.0);
  CHECK(build_compact_eigenfunction({0, 3}, 1.0 / 3.0, l13, 2, PotentialSpec::zero())
            .dimension == 0);
}

TEST_CASE("compact eigenfunction preconditions") {
  CHECK_THROWS_AS(
      build_compact_eigenfunction({2, 0}, 0.0, 1.0, 1, PotentialSpec::zero()),
      std::invalid_argument);
  CHECK_THROWS_AS(build_compact_eigenfunction({2, 0}, 0.0, kPi * kPi / 4.0, 0,
                                              PotentialSpec::zero()),
                  std::invalid_argument);
}

TEST_CASE("nullspace table spot checks") {
  double l_flower = theta_zero() * theta_zero();  // eta = -1/3
  CHECK(build_compact_eigenfunction({0, 1}, -1.0 / 3.0, l_flower, 2,
                                    PotentialSpec::zero())
            .dimension >= 1);
  CHECK(build_compact_eigenfunction({1, 1}, -1.0 / 3.0, l_flower, 2,
                                    PotentialSpec::zero())
            .dimension == 0);
  CHECK(build_compact_eigenfunction({3, 0}, 0.0, kPi * kPi / 4.0, 2,
                                    PotentialSpec::zero())
            .dimension == 0);
}
