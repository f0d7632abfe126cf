#include "circlepack/containers.hpp"

#include <cmath>
#include <numbers>

namespace circlepack {

const char* to_string(ContainerKind k) { return k == ContainerKind::square ? "square" : "rect"; }
const char* to_string(PackStatus s) { return s == PackStatus::all_packed ? "all_packed" : "rejected"; }

const char* to_string(RejectReason r) {
  switch (r) {
    case RejectReason::none: return "none";
    case RejectReason::too_large: return "too_large";
    case RejectReason::too_small: return "too_small";
    case RejectReason::no_space: return "no_space";
  }
  return "?";
}

const char* to_string(LaneKind k) {
  switch (k) {
    case LaneKind::large: return "large";
    case LaneKind::medium: return "medium";
    case LaneKind::small: return "small";
    case LaneKind::vertical: return "vertical";
  }
  return "?";
}

Rect PackResult::container_rect() const {
  return container == ContainerKind::square ? Rect{0.0, 0.0, 1.0, 1.0} : Rect{0.0, 0.0, b, 1.0};
}

ClassTable PackResult::class_table() const {
  if (container == ContainerKind::rect) return build_class_table(w);
  if (mode == SquareMode::no_tiny) return build_class_table(w, q2, min_radius, true);
  return build_class_table(w, std::nullopt, std::nullopt, true);
}

SquareLayout square_layout(double w) {
  if (!(w > 0.0 && w < 0.5)) throw ConfigError("square lane width must lie in (0, 0.5)");
  const double h = 1.0 - w;
  SquareLayout s;
  s.w = w;
  s.l0 = Frame::make({0.0, 0.0, 1.0, h}, Orientation::leftwards);
  s.medium[0] = Frame::make({0.0, h, 1.0, 1.0}, Orientation::rightwards);
  s.medium[1] = Frame::make({h, 0.0, 1.0, h}, Orientation::downwards);
  s.medium[2] = Frame::make({0.0, 0.0, h, w}, Orientation::rightwards);
  s.medium[3] = Frame::make({0.0, w, w, h}, Orientation::upwards);
  return s;
}

Packer::Packer(const Rect& bounds) : world_(bounds) {}

void Packer::check_input(std::size_t index, double r) const {
  if (!std::isfinite(r) || !(r > 0.0)) {
    throw InputError(index, "radius must be positive and finite");
  }
}

bool Packer::pack(double r) {
  if (stopped_) return false;
  const std::size_t seq = placements_.size();
  check_input(seq, r);
  Attempt a = place(r, seq);
  if (!a.circle) {
    stopped_ = true;
    rejected_index_ = seq;
    rejected_radius_ = r;
    reason_ = a.reason == RejectReason::none ? RejectReason::no_space : a.reason;
    return false;
  }
  world_.add(*a.circle);
  placements_.push_back({std::move(*a.circle), a.class_index});
  return true;
}

PackResult Packer::result() const {
  PackResult out;
  out.status = stopped_ ? PackStatus::rejected : PackStatus::all_packed;
  out.placements = placements_;
  out.rejected_index = rejected_index_;
  out.rejected_radius = rejected_radius_;
  out.reason = reason_;
  for (const Placement& p : placements_) {
    out.total_packed_area += std::numbers::pi * p.circle.r * p.circle.r;
  }
  describe(out);
  return out;
}

namespace {

LaneRecord record_of(const Lane& lane, LaneKind kind, int class_index) {
  const LaneMetrics m = metrics(lane);
  return {lane.id(), kind, lane.strategy(), class_index, lane.frame(), lane.closed(),
          lane.packed().size(), m.packing_length, m.occupied_area};
}

RejectReason reason_of(Rejection r) {
  return r == Rejection::too_small ? RejectReason::too_small : RejectReason::too_large;
}

}  // namespace

void append_lane_records(const DslpLane& d, std::vector<LaneRecord>& out) {
  LaneRecord host = record_of(d.host(), LaneKind::medium, 1);
  host.packing_length = host_metrics(d).packing_length;
  out.push_back(std::move(host));
  out.push_back(record_of(d.small_top(), LaneKind::small, 2));
  out.push_back(record_of(d.small_bottom(), LaneKind::small, 2));
  for (const VerticalLane& v : d.ledger().vlanes()) {
    out.push_back(record_of(v.lane, LaneKind::vertical, v.class_index));
  }
}

namespace {

Rect rect_container(double b) {
  if (!(b >= 1.0) || !std::isfinite(b)) throw ConfigError("rectangle length b must be >= 1");
  return {0.0, 0.0, b, 1.0};
}

}  // namespace

RectPacker::RectPacker(double b)
    : Packer(rect_container(b)),
      b_(b),
      lane_("R", Frame::make({0.0, 0.0, b, 1.0}, Orientation::rightwards), build_class_table(1.0)) {}

Packer::Attempt RectPacker::place(double r, std::size_t seq) {
  const Classification cls = classify(r, lane_.table());
  if (!cls) return {std::nullopt, -1, reason_of(cls.rejection)};
  DslpOutcome o = dslp_pack(lane_, r, world_, seq);
  return {std::move(o.circle), cls.id->value, RejectReason::no_space};
}

void RectPacker::describe(PackResult& out) const {
  out.container = ContainerKind::rect;
  out.b = b_;
  out.mode = SquareMode::general;
  out.w = 1.0;
  out.q2 = kSmallQ;
  out.guarantee = bounds::guarantee_rect(b_);
  append_lane_records(lane_, out.lanes);
}

namespace {

ClassTable square_table(SquareMode mode) {
  if (mode == SquareMode::no_tiny) {
    return build_class_table(kSquareWidthNoTiny, kSmallQNoTiny, kNoTinyMinRadius, true);
  }
  return build_class_table(kSquareWidthGeneral, std::nullopt, std::nullopt, true);
}

}  // namespace

SquarePacker::SquarePacker(SquareMode mode)
    : Packer(Rect{0.0, 0.0, 1.0, 1.0}),
      mode_(mode),
      layout_(square_layout(mode == SquareMode::general ? kSquareWidthGeneral : kSquareWidthNoTiny)),
      table_(square_table(mode)),
      l0_("L0", layout_.l0, Strategy::tlp) {
  for (std::size_t k = 0; k < layout_.medium.size(); ++k) {
    mediums_.emplace_back("L" + std::to_string(k + 1), layout_.medium[k], table_);
  }
}

void SquarePacker::check_input(std::size_t index, double r) const {
  Packer::check_input(index, r);
  if (mode_ == SquareMode::no_tiny && r < kNoTinyMinRadius) {
    throw InputError(index, "no-tiny mode needs radii of at least 0.026623");
  }
}

Packer::Attempt SquarePacker::place(double r, std::size_t seq) {
  const Classification cls = classify(r, table_);
  if (!cls) return {std::nullopt, -1, reason_of(cls.rejection)};
  const int i = cls.id->value;
  if (i == 0) return {tlp_place(l0_, r, world_, seq), 0, RejectReason::no_space};
  for (DslpLane& d : mediums_) {
    if (d.closed()) continue;
    DslpOutcome o = dslp_pack(d, r, world_, seq);
    if (o.status == DslpStatus::placed) return {std::move(o.circle), i, RejectReason::none};
  }
  return {std::nullopt, i, RejectReason::no_space};
}

void SquarePacker::describe(PackResult& out) const {
  out.container = ContainerKind::square;
  out.b = 1.0;
  out.mode = mode_;
  out.w = layout_.w;
  out.q2 = table_.row(2).q;
  if (mode_ == SquareMode::no_tiny) out.min_radius = kNoTinyMinRadius;
  out.guarantee = bounds::guarantee_square(mode_);
  out.lanes.push_back(record_of(l0_, LaneKind::large, 0));
  for (const DslpLane& d : mediums_) append_lane_records(d, out.lanes);
}

namespace {

PackResult run(Packer& p, std::span<const double> radii) {
  for (std::size_t k = 0; k < radii.size(); ++k) p.check_input(k, radii[k]);
  for (double r : radii) {
    if (!p.pack(r)) break;
  }
  return p.result();
}

}  // namespace

PackResult pack_square_online(SquareMode mode, std::span<const double> radii) {
  SquarePacker p(mode);
  return run(p, radii);
}

PackResult pack_rect_online(double b, std::span<const double> radii) {
  RectPacker p(b);
  return run(p, radii);
}

}  // namespace circlepack
