#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "circlepack/audit.hpp"
#include "circlepack/containers.hpp"
#include "circlepack/genseq.hpp"
#include "support.hpp"

using namespace circlepack;
using std::numbers::pi;

namespace {

bool same(const PackResult& a, const PackResult& b) {
  if (a.placements.size() != b.placements.size() || a.status != b.status) return false;
  for (std::size_t k = 0; k < a.placements.size(); ++k) {
    const PlacedCircle &p = a.placements[k].circle, &q = b.placements[k].circle;
    if (p.center.x != q.center.x || p.center.y != q.center.y || p.r != q.r || p.lane_id != q.lane_id) return false;
  }
  return a.total_packed_area == b.total_packed_area;
}

}  // namespace

TEST_SUITE("containers") {

TEST_CASE("square layout") {
  const SquareLayout s = square_layout(kSquareWidthGeneral);
  const Rect l1 = s.medium[0].rect();
  CHECK(l1.y0 == doctest::Approx(0.71152));
  CHECK(l1.y1 == doctest::Approx(1.0));
  CHECK(l1.x1 == doctest::Approx(1.0));
  CHECK(s.l0.rect().height() == doctest::Approx(0.71152));
  CHECK(s.l0.width() == doctest::Approx(1 - kSquareWidthGeneral));
  CHECK(s.l0.orientation() == Orientation::leftwards);
  CHECK(s.medium[0].orientation() == Orientation::rightwards);
  CHECK(s.medium[1].orientation() == Orientation::downwards);
  CHECK(s.medium[2].orientation() == Orientation::rightwards);
  CHECK(s.medium[3].orientation() == Orientation::upwards);
  for (const Frame& f : s.medium) CHECK(f.width() == doctest::Approx(kSquareWidthGeneral));
  CHECK_THROWS(square_layout(0.5));
  CHECK_THROWS(square_layout(0.0));
}

TEST_CASE("lane rectangles cover the unit square") {
  for (double w : {kSquareWidthGeneral, kSquareWidthNoTiny}) {
    const SquareLayout s = square_layout(w);
    std::vector<Rect> boxes{s.l0.rect()};
    for (const Frame& f : s.medium) boxes.push_back(f.rect());
    testing::Gen g(1);
    int missed = 0;
    for (int k = 0; k < 1000000; ++k) {
      const double x = g.uniform(0, 1), y = g.uniform(0, 1);
      bool in = false;
      for (const Rect& r : boxes) in = in || (x >= r.x0 && x <= r.x1 && y >= r.y0 && y <= r.y1);
      missed += !in;
    }
    CHECK(missed == 0);
  }
}

TEST_CASE("square examples") {
  const std::vector<double> fits{0.35};
  PackResult r = pack_square_online(SquareMode::general, fits);
  CHECK(r.status == PackStatus::all_packed);
  REQUIRE(r.placements.size() == 1);
  CHECK(r.placements[0].circle.lane_id == "L0");
  CHECK(r.placements[0].class_index == 0);
  CHECK(r.guarantee == 0.350389);

  const std::vector<double> big{0.36};
  r = pack_square_online(SquareMode::general, big);
  CHECK(r.status == PackStatus::rejected);
  CHECK(r.rejected_index == std::optional<std::size_t>(0));
  CHECK(r.reason == RejectReason::too_large);
  CHECK(pi * 0.36 * 0.36 > bounds::guarantee_square(SquareMode::general));

  r = pack_square_online(SquareMode::no_tiny, fits);
  CHECK(r.guarantee == 0.375898);
  CHECK(r.w == kSquareWidthNoTiny);
}

TEST_CASE("rectangle examples") {
  const std::vector<double> half{0.5};
  PackResult r = pack_rect_online(2.36, half);
  CHECK(r.status == PackStatus::all_packed);
  CHECK(r.placements[0].circle.center.x == doctest::Approx(0.5));

  const std::vector<double> over{0.501};
  r = pack_rect_online(3.0, over);
  CHECK(r.status == PackStatus::rejected);
  CHECK(r.rejected_index == std::optional<std::size_t>(0));
  CHECK(pi * 0.501 * 0.501 > pi / 4);
  CHECK(pi * 0.501 * 0.501 == doctest::Approx(0.7886).epsilon(1e-4));

  CHECK_THROWS_AS(RectPacker(0.9), ConfigError);
}

TEST_CASE("small budgets always fit the 1 x 1 rectangle") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenSpec g;
    g.seed = seed;
    g.threshold = bounds::guarantee_rect(1.0);
    g.r_min = 0.002;
    g.r_max = 0.15;
    const auto radii = greedy_adversary(g);
    CHECK(pack_rect_online(1.0, radii).status == PackStatus::all_packed);
  }
}

TEST_CASE("input errors") {
  const std::vector<double> bad{0.1, -0.2};
  CHECK_THROWS_AS(pack_rect_online(2.0, bad), InputError);
  try {
    pack_rect_online(2.0, bad);
  } catch (const InputError& e) {
    CHECK(e.index() == 1);
  }
  const std::vector<double> nan{std::nan("")};
  CHECK_THROWS_AS(pack_square_online(SquareMode::general, nan), InputError);
  const std::vector<double> tiny{0.1, 0.02};
  CHECK_THROWS_AS(pack_square_online(SquareMode::no_tiny, tiny), InputError);
  CHECK_NOTHROW(pack_square_online(SquareMode::general, tiny));
}

TEST_CASE("online contract: halt at the first rejection, prefix placements unchanged") {
  testing::Gen g(31);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<double> radii;
    for (int k = 0; k < 400; ++k) radii.push_back(std::exp(g.uniform(std::log(0.002), std::log(0.3))));
    const bool square = g.coin();
    const double b = g.uniform(1, 3);
    auto run = [&](std::span<const double> in) {
      return square ? pack_square_online(SquareMode::general, in) : pack_rect_online(b, in);
    };
    const PackResult full = run(radii);
    const std::size_t n = full.placements.size();
    if (full.status == PackStatus::rejected) {
      CHECK(*full.rejected_index == n);
      CHECK(*full.rejected_radius == radii[n]);
    } else {
      CHECK(n == radii.size());
    }
    const std::size_t cut = n / 2;
    const PackResult prefix = run(std::span<const double>(radii).first(cut));
    REQUIRE(prefix.placements.size() == cut);
    for (std::size_t k = 0; k < cut; ++k) {
      CHECK(prefix.placements[k].circle.center.x == full.placements[k].circle.center.x);
      CHECK(prefix.placements[k].circle.center.y == full.placements[k].circle.center.y);
    }
    double area = 0.0;
    for (const Placement& p : full.placements) area += pi * p.circle.r * p.circle.r;
    CHECK(full.total_packed_area == doctest::Approx(area).epsilon(1e-12));
    CHECK(validate(full, full.container_rect(), 1e-9).valid);
    CHECK(same(full, run(radii)));
  }
}

TEST_CASE("stopped packers ignore further input") {
  RectPacker p(1.0);
  CHECK_FALSE(p.pack(0.6));
  CHECK(p.stopped());
  CHECK_FALSE(p.pack(0.1));
  CHECK(p.result().placements.empty());
  CHECK(p.result().reason == RejectReason::too_large);
}

TEST_CASE("closed medium lanes are skipped") {
  SquarePacker p(SquareMode::general);
  const double w = kSquareWidthGeneral;
  // Mediums until one spills past L1, then class-3 circles until L1 closes.
  for (int k = 0; k < 100; ++k) {
    REQUIRE(p.pack(w / 2 * 0.99));
    if (p.result().placements.back().circle.lane_id != "L1") break;
  }
  for (int k = 0; k < 2000 && !p.medium_lanes()[0].closed(); ++k) REQUIRE(p.pack(0.02));
  REQUIRE(p.medium_lanes()[0].closed());
  const std::size_t mark = p.result().placements.size();
  for (double r : {w / 2 * 0.9, 0.05, 0.02, 0.01, 0.004}) {
    if (!p.pack(r)) break;
  }
  const PackResult r = p.result();
  for (std::size_t k = mark; k < r.placements.size(); ++k) {
    CHECK_FALSE(r.placements[k].circle.lane_id.starts_with("L1"));
  }
  CHECK(validate(r, r.container_rect(), 1e-9).valid);
}

}
