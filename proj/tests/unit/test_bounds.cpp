#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "circlepack/bounds.hpp"
#include "support.hpp"

using namespace circlepack;
using std::numbers::pi;

TEST_SUITE("bounds") {

TEST_CASE("delta golden values") {
  CHECK(testing::near(bounds::delta(0.15), 0.47123, 1e-5));
  CHECK(testing::near(bounds::delta(0.4), 0.6489, 1e-4));
  CHECK(testing::near(bounds::delta(1.0 / (3.0 * std::sqrt(3.0))), 0.6046, 1e-4));
  CHECK(bounds::delta(0.5) == doctest::Approx(pi / 4).epsilon(1e-14));
  CHECK(testing::near(bounds::delta(0.168261), 0.528607, 1e-6));
}

TEST_CASE("delta is continuous and nondecreasing") {
  const double a = 1.0 / (3.0 * std::sqrt(3.0)), b = 1.0 / 3.0;
  CHECK(std::abs(bounds::delta(std::nextafter(a, 0.0)) - bounds::delta(a)) <= 1e-12);
  CHECK(std::abs(bounds::delta(std::nextafter(b, 1.0)) - bounds::delta(b)) <= 1e-12);
  double prev = 0.0;
  for (int k = 1; k <= 5000; ++k) {
    const double d = bounds::delta(0.5 * k / 5000.0);
    CHECK(d >= prev - 1e-15);
    prev = d;
  }
}

TEST_CASE("delta domain") {
  CHECK_THROWS_AS(bounds::delta(0.0), std::domain_error);
  CHECK_THROWS_AS(bounds::delta(0.5000001), std::domain_error);
  CHECK_THROWS_AS(bounds::delta(-0.1), std::domain_error);
}

TEST_CASE("area helpers") {
  CHECK(bounds::rect_area(2.0, 0.5) == 1.0);
  CHECK(bounds::semicircle(1.0) == doctest::Approx(pi / 2));
  CHECK(bounds::semicircle(0.0) == 0.0);
}

TEST_CASE("min_slp") {
  CHECK(bounds::min_slp(0.2, 1.0, 0.1, 0.5) == doctest::Approx(0.0314159).epsilon(1e-6));
  const double z = 0.168261, dl = bounds::delta(z);
  const double want = (1.0 - 2 * z) * dl + pi * z * z;
  CHECK(bounds::min_slp(1.0, 1.0, z, dl) == doctest::Approx(want).epsilon(1e-14));
  CHECK(testing::near(want, 0.439663, 1e-6));
  CHECK(bounds::min_slp(0.1, 1.0, 0.1, 0.5) == doctest::Approx(pi * 0.01));
  double prev = 0.0;
  for (double p = 0.2; p < 5.0; p += 0.01) {
    const double v = bounds::min_slp(p, 1.0, 0.1, 0.5);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("sparse_lower") {
  CHECK(bounds::sparse_lower(0.25, 1.0, 0.25, 0.6) == doctest::Approx(bounds::semicircle(0.25)));
  CHECK(testing::near(bounds::sparse_lower(0.5, 1.0, 0.25, 0.6), 0.15 + pi / 2 * 0.0625, 1e-15));
  CHECK(testing::near(bounds::sparse_lower(0.5, 1.0, 0.25, 0.6), 0.2482, 1e-4));
  CHECK_THROWS(bounds::sparse_lower(0.1, 1.0, 0.25, 0.6));
  testing::Gen g(1);
  for (int k = 0; k < 200; ++k) {
    const double z = g.uniform(0.01, 0.25), p = g.uniform(2 * z, 5), w = g.uniform(0.1, 1), d = g.uniform(0.3, 0.8);
    CHECK(bounds::min_slp(p, w, z, d) ==
          doctest::Approx(bounds::sparse_lower(p - z, w, z, d) + bounds::semicircle(z)).epsilon(1e-12));
  }
}

TEST_CASE("min_dslp") {
  const double z = 0.0841305;
  const double constant = pi / 16 + 2 * pi * z * z;
  CHECK(bounds::min_dslp(0.5 + 2 * z, 0.5 + 2 * z, 1.0, z, 0.5) == doctest::Approx(constant).epsilon(1e-14));
  CHECK(testing::near(constant, 0.2408216, 1e-6));
  CHECK(bounds::min_dslp(0.0, 0.0, 1.0, z, 0.5) == doctest::Approx(constant));
  testing::Gen g(2);
  for (int k = 0; k < 200; ++k) {
    const double a = g.uniform(0, 5), b = g.uniform(0, 5);
    CHECK(bounds::min_dslp(a, b, 1.0, z, 0.528607) == bounds::min_dslp(b, a, 1.0, z, 0.528607));
  }
}

TEST_CASE("rectangle linear form from the DSLP bound") {
  // With both combined lengths summing to 2b - 1/2, the DSLP bound minus
  // the overhead reproduces the linear guarantee.
  const double q2 = 0.168261, dh = bounds::kDeltaHat;
  for (double b = 1.0; b <= 10.0; b += 0.01) {
    const double reconstructed = (b - 0.75 - q2) * dh + pi / 16 + pi / 2 * q2 * q2 - 0.213297;
    CHECK(std::abs(reconstructed - (0.528607 * b - 0.457876)) <= 5e-6);
    const double via_bound = bounds::min_dslp(b, b - 0.5, 1.0, q2 / 2, dh) - bounds::overhead_bound(1.0);
    CHECK(via_bound == doctest::Approx(reconstructed).epsilon(1e-12));
  }
}

TEST_CASE("overhead") {
  CHECK(bounds::overhead_bound(1.0) == 0.213297);
  CHECK(bounds::overhead_bound(0.5) == doctest::Approx(0.05332425).epsilon(1e-14));
  CHECK(bounds::overhead_bound(0.0) == 0.0);
}

TEST_CASE("guarantees") {
  CHECK(bounds::guarantee_rect(3.0) == doctest::Approx(pi / 4).epsilon(1e-15));
  CHECK(testing::near(bounds::guarantee_rect(1.0), 0.070731, 1e-12));
  const double crossover = (pi / 4 + 0.457876) / 0.528607;
  CHECK(crossover <= 2.36);
  CHECK(testing::near(crossover, 2.35198, 1e-5));
  CHECK(bounds::guarantee_rect(crossover - 1e-6) < pi / 4);
  CHECK(bounds::guarantee_rect(2.36) == doctest::Approx(pi / 4).epsilon(1e-15));
  CHECK_THROWS(bounds::guarantee_rect(0.99));

  CHECK(bounds::guarantee_square(SquareMode::general) == 0.350389);
  CHECK(bounds::guarantee_square(SquareMode::no_tiny) == 0.375898);
  const double offline = pi / (3 + 2 * std::sqrt(2.0));
  CHECK(testing::near(offline, 0.5390, 1e-4));
  CHECK(bounds::guarantee_square(SquareMode::general) < offline);
  CHECK(bounds::guarantee_square(SquareMode::no_tiny) < offline);
}

}
