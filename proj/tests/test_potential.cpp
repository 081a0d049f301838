#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "nanotube/potential.hpp"

using nanotube::PotentialSpec;

TEST_CASE("analytic kinds evaluate") {
  CHECK(PotentialSpec::zero()(0.37) == 0.0);
  CHECK(PotentialSpec::cosine(1.0)(0.25) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(PotentialSpec::cosine(2.0)(0.5) == doctest::Approx(-2.0));
  auto well = PotentialSpec::square_well(5.0, 0.4);
  CHECK(well(0.5) == 5.0);
  CHECK(well(0.1) == 0.0);
  CHECK(well(0.3) == 5.0);  // window edge included
}

TEST_CASE("domain errors off [0,1]") {
  CHECK_THROWS_AS(PotentialSpec::zero()(-0.1), std::domain_error);
  CHECK_THROWS_AS(PotentialSpec::cosine(1.0)(1.1), std::domain_error);
}

TEST_CASE("evenness of analytic kinds") {
  for (auto spec : {PotentialSpec::cosine(3.0), PotentialSpec::square_well(-2.0, 0.7)})
    for (int i = 0; i <= 100; ++i) {
      double x = i / 100.0;
      CHECK(spec(x) == doctest::Approx(spec(1.0 - x)).epsilon(1e-14));
    }
}

TEST_CASE("sampled potential interpolates and validates") {
  auto spec = PotentialSpec::sampled({{0.0, 1.0}, {0.5, 3.0}, {1.0, 1.0}});
  CHECK(spec(0.25) == doctest::Approx(2.0));
  CHECK(spec(0.75) == doctest::Approx(2.0));

  CHECK_THROWS(PotentialSpec::sampled({{0.0, 1.0}, {1.0, 2.0}}));          // uneven
  CHECK_THROWS(PotentialSpec::sampled({{0.1, 1.0}, {1.0, 1.0}}));          // no x=0
  CHECK_THROWS(PotentialSpec::sampled({{0.0, 1.0}, {0.0, 1.0}, {1.0, 1.0}}));  // not increasing
}

TEST_CASE("csv ingestion with optional header") {
  const char* path = "potential_test_tmp.csv";
  {
    std::ofstream f(path);
    f << "x,value\n0,2\n0.5,4\n1,2\n";
  }
  auto spec = PotentialSpec::from_csv(path);
  CHECK(spec(0.5) == doctest::Approx(4.0));
  CHECK(spec.describe() == "sampled[3]");
  std::remove(path);

  CHECK_THROWS(PotentialSpec::from_csv("no_such_file.csv"));
}

TEST_CASE("breakpoints and min_value") {
  auto well = PotentialSpec::square_well(5.0, 0.4);
  auto b = well.breakpoints();
  REQUIRE(b.size() == 2);
  CHECK(b[0] == doctest::Approx(0.3));
  CHECK(b[1] == doctest::Approx(0.7));
  CHECK(well.min_value() == 0.0);
  CHECK(PotentialSpec::square_well(-5.0, 0.4).min_value() == -5.0);
  CHECK(PotentialSpec::cosine(4.0).min_value() == -4.0);
  CHECK(PotentialSpec::zero().breakpoints().empty());
}

TEST_CASE("describe strings") {
  CHECK(PotentialSpec::zero().describe() == "zero");
  CHECK(PotentialSpec::cosine(4.0).describe() == "cosine:4");
  CHECK(PotentialSpec::square_well(5.0, 0.4).describe() == "well:5:0.4");
}
