#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "circlepack/audit.hpp"
#include "circlepack/dslp.hpp"
#include "support.hpp"

using namespace circlepack;

namespace {

struct Bench {
  DslpLane lane;
  ObstacleSet world;
  std::size_t seq = 0;

  explicit Bench(double len, Orientation o = Orientation::rightwards)
      : lane("R", Frame::make({0, 0, len, 1}, o), build_class_table(1.0)), world(Rect{0, 0, len, 1}) {}

  DslpOutcome put(double r) {
    DslpOutcome o = dslp_pack(lane, r, world, seq);
    if (o.circle) {
      world.add(*o.circle);
      ++seq;
    }
    return o;
  }
};

}  // namespace

TEST_SUITE("dslp") {

TEST_CASE("small circles alternate between the two small lanes") {
  Bench b(3.0);
  const DslpOutcome first = b.put(0.1);
  REQUIRE(first.status == DslpStatus::placed);
  CHECK(first.circle->lane_id == "R/bottom");
  CHECK(first.circle->center.x == doctest::Approx(2.9));
  CHECK(first.circle->center.y == doctest::Approx(0.1));

  const DslpOutcome second = b.put(0.1);
  REQUIRE(second.status == DslpStatus::placed);
  CHECK(second.circle->lane_id == "R/top");
  CHECK(second.circle->center.x == doctest::Approx(2.9));
  CHECK(metrics(b.lane.small_top()).packing_length == doctest::Approx(0.2));
}

TEST_CASE("metrics") {
  Bench b(3.0);
  DslpMetrics m = dslp_metrics(b.lane);
  CHECK(m.p_t == 0.0);
  CHECK(m.p_b == 0.0);
  CHECK(m.f_t == doctest::Approx(3.0));

  // r = w/4 itself is small (lower bounds are exclusive), so step just above it.
  const double medium = std::nextafter(0.25, 1.0);
  REQUIRE(b.put(medium).status == DslpStatus::placed);
  CHECK(b.lane.host().packed().size() == 1);
  m = dslp_metrics(b.lane);
  CHECK(m.p_t == doctest::Approx(0.5));
  CHECK(m.p_b == doctest::Approx(0.5));

  Bench c(3.0);
  c.put(0.3);
  c.put(0.3);
  c.put(0.2);
  c.put(0.2);
  c.put(0.2);
  const double host = host_metrics(c.lane).packing_length;
  const double top = metrics(c.lane.small_top()).packing_length;
  const double bottom = metrics(c.lane.small_bottom()).packing_length;
  CHECK(top > 0.0);
  m = dslp_metrics(c.lane);
  CHECK(m.p_t == doctest::Approx(host + top));
  CHECK(m.p_b == doctest::Approx(host + bottom));
  CHECK(m.f_b == doctest::Approx(3.0 - host - bottom));
}

TEST_CASE("closed host rejects everything") {
  Bench b(1.0);
  REQUIRE(b.put(0.5).status == DslpStatus::placed);
  DslpOutcome o = b.put(0.07);
  CHECK(o.status == DslpStatus::lane_closed);
  CHECK(b.lane.closed());
  CHECK(b.put(0.3).status == DslpStatus::rejected);
  CHECK(b.put(0.1).status == DslpStatus::rejected);
}

TEST_CASE("a small circle that fits neither lane leaves the host open") {
  Bench b(1.5);
  REQUIRE(b.put(0.5).status == DslpStatus::placed);
  CHECK(b.put(0.2).status == DslpStatus::placed);
  bool rejected = false;
  for (int k = 0; k < 50 && !rejected; ++k) rejected = b.put(0.2).status == DslpStatus::rejected;
  CHECK(rejected);
  CHECK_FALSE(b.lane.closed());
}

TEST_CASE("routing, opposite fronts and validity on random sequences") {
  testing::Gen g(2718);
  for (int trial = 0; trial < 200; ++trial) {
    const double len = g.uniform(1.0, 6.0);
    const Orientation o = g.coin() ? Orientation::rightwards : Orientation::leftwards;
    Bench b(len, o);
    const double rmax = g.uniform(0.05, 0.5);
    for (int k = 0; k < 300; ++k) {
      const double r = std::exp(g.uniform(std::log(0.004), std::log(rmax)));
      if (b.put(r).status != DslpStatus::placed) break;
    }
    const ClassTable& t = b.lane.table();
    for (const LaneCircle& c : b.lane.host().packed()) CHECK(classify(c.r, t).id->value == 1);
    for (const Lane* small : {&b.lane.small_top(), &b.lane.small_bottom()}) {
      double prev = 1e9;
      for (const LaneCircle& c : small->packed()) {
        CHECK(classify(c.r, t).id->value == 2);
        const double host_u = b.lane.host().frame().to_local(small->frame().to_parent(c.u, c.v)).x;
        CHECK(host_u <= prev + 1e-12);
        prev = host_u;
      }
    }
    for (const VerticalLane& v : b.lane.ledger().vlanes()) {
      for (const LaneCircle& c : v.lane.packed()) CHECK(classify(c.r, t).id->value == v.class_index);
    }
    const auto all = b.world.circles();
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(circle_in_rect(all[i], Rect{0, 0, len, 1}, 1e-9));
      for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(circles_overlap(all[i], all[j], 1e-9));
    }
  }
}

TEST_CASE("bound audit with one medium") {
  Bench b(3.0);
  REQUIRE(b.put(std::nextafter(0.25, 1.0)).status == DslpStatus::placed);
  const BoundCheck c = check_dslp_lane(b.lane, b.world.circles());
  CHECK(c.applicable);
  CHECK(c.passed());
  CHECK(c.bound < c.occupied);
}

TEST_CASE("bound audit verdict is the same for the mirrored lane") {
  testing::Gen g(8);
  for (int trial = 0; trial < 40; ++trial) {
    Bench a(3.0), m(3.0);
    m.lane = DslpLane("R", Frame::make({0, 0, 3, 1}, Orientation::rightwards, true), build_class_table(1.0));
    for (int k = 0; k < 100; ++k) {
      const double r = std::exp(g.uniform(std::log(0.01), std::log(0.5)));
      const bool pa = a.put(r).status == DslpStatus::placed;
      const bool pm = m.put(r).status == DslpStatus::placed;
      CHECK(pa == pm);
      if (!pa || !pm) break;
    }
    const auto ca = check_dslp_lane(a.lane, a.world.circles());
    const auto cm = check_dslp_lane(m.lane, m.world.circles());
    CHECK(ca.passed() == cm.passed());
    CHECK(ca.occupied == doctest::Approx(cm.occupied));
  }
}

TEST_CASE("host row and small lanes never pass each other") {
  testing::Gen g(21);
  auto far = [](const Lane& l) {
    double e = 0.0;
    for (const LaneCircle& c : l.packed()) e = std::max(e, c.u + c.r);
    return e;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const double len = g.uniform(1.0, 4.0);
    Bench b(len);
    for (int k = 0; k < 300; ++k) {
      const double r = std::exp(g.uniform(std::log(0.02), std::log(0.5)));
      if (b.put(r).status != DslpStatus::placed) break;
    }
    const DslpMetrics m = dslp_metrics(b.lane);
    CHECK(m.p_t <= len + 1e-9);
    CHECK(m.p_b <= len + 1e-9);
    const double host = std::max(far(b.lane.host()), b.lane.ledger().frontier());
    CHECK(host + far(b.lane.small_top()) <= len + 1e-9);
    CHECK(host + far(b.lane.small_bottom()) <= len + 1e-9);
  }
}

}
