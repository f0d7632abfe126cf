#include "circlepack/dslp.hpp"

#include <algorithm>
#include <numbers>

namespace circlepack {

namespace {

Frame small_lane_frame(const Frame& host, double v0, double v1) {
  return host.compose(Frame::make({0.0, v0, host.length(), v1}, Orientation::leftwards));
}

double packing_length_with(const Lane& lane, const Candidate& c, double r) {
  ExtentTracker ext;
  for (const LaneCircle& k : lane.packed()) ext.add(k.u, k.r);
  ext.add(c.u, r);
  return ext.length();
}

double far_edge(const Lane& lane) {
  double e = 0.0;
  for (const LaneCircle& k : lane.packed()) e = std::max(e, k.u + k.r);
  return e;
}

}  // namespace

void DslpLane::sync_limits() {
  const double l = host_.length();
  double host_edge = std::max(far_edge(host_), ledger_.frontier());
  for (const Interval& s : host_.exclusions()) host_edge = std::max(host_edge, s.hi);
  top_.set_limit(l - host_edge);
  bottom_.set_limit(l - host_edge);
  host_.set_limit(l - std::max(far_edge(top_), far_edge(bottom_)));
}

DslpLane::DslpLane(std::string id, const Frame& frame, ClassTable table)
    : table_(std::move(table)),
      host_(id, frame, Strategy::slp),
      top_(id + "/top", small_lane_frame(frame, frame.width() / 2.0, frame.width()), Strategy::slp),
      bottom_(id + "/bottom", small_lane_frame(frame, 0.0, frame.width() / 2.0), Strategy::slp) {}

DslpOutcome dslp_pack(DslpLane& d, double r, const ObstacleSet& world, std::size_t seq) {
  if (d.host_.closed()) return {DslpStatus::rejected, std::nullopt, -1};
  const Classification cls = classify(r, d.table_);
  if (!cls || cls.id->value < 1) return {DslpStatus::rejected, std::nullopt, -1};
  const int i = cls.id->value;
  d.sync_limits();

  if (i == 1) {
    auto p = slp_place(d.host_, r, world, seq);
    if (!p) return {DslpStatus::rejected, std::nullopt, i};
    d.ledger_.on_medium_packed(d.host_, d.host_.packed().back());
    return {DslpStatus::placed, std::move(p), i};
  }

  if (i == 2) {
    const auto top = d.top_.probe(r, world);
    const auto bottom = d.bottom_.probe(r, world);
    if (!top && !bottom) return {DslpStatus::rejected, std::nullopt, i};
    bool use_top = top && !bottom;
    if (top && bottom) {
      use_top = packing_length_with(d.top_, *top, r) < packing_length_with(d.bottom_, *bottom, r);
    }
    PlacedCircle p = use_top ? d.top_.commit(*top, r, seq) : d.bottom_.commit(*bottom, r, seq);
    return {DslpStatus::placed, std::move(p), i};
  }

  SmallPackResult res = d.ledger_.pack_small_class(d.host_, r, i, d.table_, world, seq);
  if (!res.placed) return {DslpStatus::lane_closed, std::nullopt, i};
  return {DslpStatus::placed, std::move(res.placed), i};
}

LaneMetrics host_metrics(const DslpLane& d) {
  const Lane& host = d.host();
  ExtentTracker ext;
  double occ = 0.0;
  for (const LaneCircle& c : host.packed()) {
    ext.add(c.u, c.r);
    occ += std::numbers::pi * c.r * c.r;
  }
  for (const VerticalLane& v : d.ledger().vlanes()) {
    for (const LaneCircle& c : v.lane.packed()) {
      const Point world = v.lane.frame().to_parent(c.u, c.v);
      ext.add(host.frame().to_local(world).x, c.r);
      occ += std::numbers::pi * c.r * c.r;
    }
  }
  return {ext.length(), host.length() - ext.length(), occ};
}

DslpMetrics dslp_metrics(const DslpLane& d) {
  const double p = host_metrics(d).packing_length;
  const double p_t = p + metrics(d.small_top()).packing_length;
  const double p_b = p + metrics(d.small_bottom()).packing_length;
  const double l = d.host().length();
  return {p_t, p_b, l - p_t, l - p_b};
}

}  // namespace circlepack
