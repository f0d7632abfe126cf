#include "circlepack/audit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "circlepack/bounds.hpp"

namespace circlepack {

using std::numbers::pi;

const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::overlap: return "overlap";
    case ViolationKind::out_of_container: return "out_of_container";
    case ViolationKind::class_mismatch: return "class_mismatch";
    case ViolationKind::order: return "order";
    case ViolationKind::bound: return "bound";
  }
  return "?";
}

namespace {

// Area of the disk of radius r centred at the origin below y = b, for x in [x0, x1].
double strip_area(double r, double x0, double x1, double b) {
  x0 = std::max(x0, -r);
  x1 = std::min(x1, r);
  if (x0 >= x1 || b <= -r) return 0.0;
  auto prim = [r](double x) {  // antiderivative of sqrt(r^2 - x^2)
    const double s = std::sqrt(std::max(0.0, r * r - x * x));
    return 0.5 * (x * s + r * r * std::asin(std::clamp(x / r, -1.0, 1.0)));
  };
  auto arc = [&](double a, double c) { return a < c ? prim(c) - prim(a) : 0.0; };
  if (b >= r) return 2.0 * arc(x0, x1);
  // Inside |x| < t the cap is cut by the line; outside it is either whole
  // (b >= 0) or empty (b < 0).
  const double t = std::sqrt(r * r - b * b);
  const double in0 = std::max(x0, -t), in1 = std::min(x1, t);
  double area = 0.0;
  if (in0 < in1) area += b * (in1 - in0) + arc(in0, in1);
  if (b > 0.0) {
    area += 2.0 * arc(x0, std::min(x1, -t));
    area += 2.0 * arc(std::max(x0, t), x1);
  }
  return area;
}

}  // namespace

double disk_rect_area(const Disk& d, const Rect& region) {
  const double x0 = region.x0 - d.center.x, x1 = region.x1 - d.center.x;
  const double y0 = region.y0 - d.center.y, y1 = region.y1 - d.center.y;
  if (x0 >= d.r || x1 <= -d.r || y0 >= d.r || y1 <= -d.r) return 0.0;
  if (x0 <= -d.r && x1 >= d.r && y0 <= -d.r && y1 >= d.r) return pi * d.r * d.r;
  return std::max(0.0, strip_area(d.r, x0, x1, y1) - strip_area(d.r, x0, x1, y0));
}

double occupied(const Rect& region, std::span<const PlacedCircle> circles) {
  double total = 0.0;
  for (const PlacedCircle& c : circles) total += disk_rect_area(c.disk(), region);
  return total;
}

namespace {

int expected_class(const LaneRecord& lane) {
  switch (lane.kind) {
    case LaneKind::large: return 0;
    case LaneKind::medium: return 1;
    case LaneKind::small: return 2;
    case LaneKind::vertical: return lane.class_index;
  }
  return -1;
}

std::string describe(std::size_t i, const PlacedCircle& c) {
  std::ostringstream os;
  os.precision(17);
  os << "#" << i << " (" << c.center.x << ", " << c.center.y << ", r=" << c.r << ")";
  return os.str();
}

void check_overlaps(const std::vector<Placement>& ps, double eps, AuditReport& rep) {
  // Sweep over x so every intersecting pair is compared exactly once.
  std::vector<std::size_t> order(ps.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  auto left = [&](std::size_t k) { return ps[k].circle.center.x - ps[k].circle.r; };
  auto right = [&](std::size_t k) { return ps[k].circle.center.x + ps[k].circle.r; };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return left(a) < left(b); });
  for (std::size_t a = 0; a < order.size(); ++a) {
    const std::size_t i = order[a];
    for (std::size_t b = a + 1; b < order.size() && left(order[b]) < right(i); ++b) {
      const std::size_t j = order[b];
      if (circles_overlap(ps[i].circle, ps[j].circle, eps)) {
        rep.violations.push_back({ViolationKind::overlap,
                                  describe(i, ps[i].circle) + " overlaps " + describe(j, ps[j].circle),
                                  {std::min(i, j), std::max(i, j)}});
      }
    }
  }
}

void check_lane_sequence(const LaneRecord& lane, const std::vector<std::size_t>& members,
                         const std::vector<Placement>& ps, double eps, AuditReport& rep) {
  const double w = lane.frame.width();
  for (std::size_t k = 0; k < members.size(); ++k) {
    const PlacedCircle& c = ps[members[k]].circle;
    const Point local = lane.frame.to_local(c.center);
    const double want_v = k % 2 == 0 ? c.r : w - c.r;
    if (std::abs(local.y - want_v) > eps) {
      rep.violations.push_back({ViolationKind::order,
                                lane.id + ": " + describe(members[k], c) + " breaks side alternation",
                                {members[k]}});
    }
    if (k == 0) continue;
    const PlacedCircle& prev = ps[members[k - 1]].circle;
    const double du = local.x - lane.frame.to_local(prev.center).x;
    if (du < -eps) {
      rep.violations.push_back({ViolationKind::order,
                                lane.id + ": " + describe(members[k], c) + " moves backwards",
                                {members[k - 1], members[k]}});
    } else if (lane.strategy == Strategy::slp && du < std::min(c.r, prev.r) - eps) {
      rep.violations.push_back({ViolationKind::order,
                                lane.id + ": " + describe(members[k], c) + " violates the min{r, r'} gap",
                                {members[k - 1], members[k]}});
    }
  }
}

}  // namespace

AuditReport validate(const PackResult& result, const Rect& container, double eps) {
  AuditReport rep;
  const auto& ps = result.placements;

  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (ps[k].circle.seq != k) {
      rep.violations.push_back({ViolationKind::order, "placement " + std::to_string(k) +
                                                          " has arrival index " +
                                                          std::to_string(ps[k].circle.seq),
                                {k}});
    }
  }
  const bool rejected = result.status == PackStatus::rejected;
  if (rejected != result.rejected_index.has_value() ||
      (rejected && *result.rejected_index != ps.size())) {
    rep.violations.push_back({ViolationKind::order, "rejection does not follow the packed prefix", {}});
  }

  std::unordered_map<std::string, std::size_t> lane_of;
  for (std::size_t k = 0; k < result.lanes.size(); ++k) lane_of.emplace(result.lanes[k].id, k);
  std::vector<std::vector<std::size_t>> members(result.lanes.size());

  const ClassTable table = result.class_table();
  for (std::size_t k = 0; k < ps.size(); ++k) {
    const PlacedCircle& c = ps[k].circle;
    rep.per_lane_occ[c.lane_id] += pi * c.r * c.r;
    rep.density += pi * c.r * c.r;
    if (!circle_in_rect(c, container, eps)) {
      rep.violations.push_back({ViolationKind::out_of_container, describe(k, c) + " leaves the container", {k}});
    }
    auto it = lane_of.find(c.lane_id);
    if (it == lane_of.end()) {
      rep.violations.push_back({ViolationKind::class_mismatch, describe(k, c) + " names unknown lane " + c.lane_id, {k}});
      continue;
    }
    const LaneRecord& lane = result.lanes[it->second];
    members[it->second].push_back(k);
    if (!circle_in_rect(c, lane.frame.rect(), eps)) {
      rep.violations.push_back({ViolationKind::out_of_container, describe(k, c) + " leaves lane " + lane.id, {k}});
    }
    const Classification cls = classify(c.r, table);
    const int want = expected_class(lane);
    if (!cls || cls.id->value != want || ps[k].class_index != want) {
      rep.violations.push_back({ViolationKind::class_mismatch,
                                describe(k, c) + " of class " +
                                    (cls ? std::to_string(cls.id->value) : std::string("none")) +
                                    " recorded in " + lane.id + " (class " + std::to_string(want) + ")",
                                {k}});
    }
  }
  for (std::size_t l = 0; l < result.lanes.size(); ++l) {
    check_lane_sequence(result.lanes[l], members[l], ps, eps, rep);
  }
  check_overlaps(ps, eps, rep);

  rep.density /= container.area();
  rep.valid = rep.violations.empty();
  return rep;
}

BoundCheck check_slp_lane(const Lane& lane, double q, double w) {
  if (lane.empty()) return {false, 0.0, 0.0};
  const LaneMetrics m = metrics(lane);
  return {true, m.occupied_area, bounds::min_slp(m.packing_length, w, q * w, bounds::delta(q))};
}

bool audit_slp_lane(const Lane& lane, double q, double w) { return check_slp_lane(lane, q, w).passed(); }

BoundCheck check_dslp_lane(const DslpLane& d, std::span<const PlacedCircle> world) {
  if (d.host().empty()) return {false, 0.0, 0.0};
  const DslpMetrics m = dslp_metrics(d);
  const double w = d.host().width();
  const ClassRow& small = d.table().row(2);
  const double bound = bounds::min_dslp(m.p_t, m.p_b, w, small.lower_bound(), bounds::delta(small.q)) -
                       bounds::overhead_bound(w);
  return {true, occupied(d.host().frame().rect(), world), bound};
}

bool audit_dslp_lane(const DslpLane& d, std::span<const PlacedCircle> world) {
  return check_dslp_lane(d, world).passed();
}

std::vector<DenseBlockAudit> audit_dense_blocks(const DslpLane& d,
                                                std::span<const PlacedCircle> world) {
  std::vector<DenseBlockAudit> out;
  const Lane& host = d.host();
  for (const DenseBlock& b : d.ledger().dense()) {
    DenseBlockAudit a{b, true, 0.0};
    for (const VerticalLane& v : d.ledger().vlanes()) {
      if (v.span.lo >= b.x_left && v.span.hi <= b.x_right && v.open()) a.lanes_closed = false;
    }
    const Rect region = host.frame().local_to_parent({b.x_left, 0.0, b.x_right, host.width()});
    a.density = region.area() > 0.0 ? occupied(region, world) / region.area() : 1.0;
    out.push_back(a);
  }
  return out;
}

}  // namespace circlepack
