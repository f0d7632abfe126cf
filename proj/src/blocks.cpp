#include "circlepack/blocks.hpp"

#include <algorithm>

namespace circlepack {

const char* to_string(BlockState s) {
  switch (s) {
    case BlockState::free: return "free";
    case BlockState::reserved_3: return "reserved_3";
    case BlockState::reserved_4: return "reserved_4";
    case BlockState::reserved_ge5: return "reserved_ge5";
    case BlockState::closed: return "closed";
  }
  return "?";
}

bool fit_in_block(const SparseBlock& s, double lane_width) {
  return std::max(s.x_left, s.fill) + lane_width <= s.x_cap;
}

namespace {

bool accepts(BlockState s, int i) {
  switch (s) {
    case BlockState::free: return true;
    case BlockState::reserved_3: return i == 3;
    case BlockState::reserved_4: return i == 4;
    case BlockState::reserved_ge5: return i >= 5;
    case BlockState::closed: return false;
  }
  return false;
}

BlockState reservation_for(int i) {
  if (i == 3) return BlockState::reserved_3;
  if (i == 4) return BlockState::reserved_4;
  return BlockState::reserved_ge5;
}

}  // namespace

void BlockLedger::on_medium_packed(Lane& host, const LaneCircle& c) {
  if (last_sparse_) {
    SparseBlock& s = sparse_[*last_sparse_];
    const bool has_vlanes = std::any_of(vlanes_.begin(), vlanes_.end(), [&](const VerticalLane& v) {
      return v.span.lo >= s.x_left && v.span.hi <= c.u;
    });
    if (!has_vlanes) {
      dense_.push_back({s.x_left, c.u, false});
      sparse_.pop_back();
    } else {
      s.x_cap = std::min(s.x_cap, c.u - c.r);
      dense_.push_back({s.x_left, c.u, true});
    }
  }
  SparseBlock s;
  s.x_left = c.u;
  s.x_cap = std::min(c.u + c.r, host.length());
  s.fill = c.u;
  s.owner_r = c.r;
  s.owner_seq = c.seq;
  s.half_side = c.v < host.width() / 2.0 ? Side::bottom : Side::top;
  sparse_.push_back(std::move(s));
  last_sparse_ = sparse_.size() - 1;
  frontier_ = std::max(frontier_, c.u + c.r);
}

std::optional<PlacedCircle> BlockLedger::open_lane(Lane& host, Interval span, int class_index,
                                                   Orientation o,
                                                   std::optional<std::size_t> block, double r,
                                                   const ObstacleSet& world, std::size_t seq) {
  const Frame local = Frame::make({span.lo, 0.0, span.hi, host.width()}, o);
  std::string id = host.id() + "/v" + std::to_string(vlanes_.size());
  Lane lane(std::move(id), host.frame().compose(local), Strategy::slp);
  auto cand = lane.probe(r, world);
  if (!cand) return std::nullopt;
  PlacedCircle placed = lane.commit(*cand, r, seq);
  vlanes_.push_back({class_index, span, std::move(lane), block});
  host.add_exclusion(span);
  frontier_ = std::max(frontier_, span.hi);
  return placed;
}

SmallPackResult BlockLedger::pack_small_class(Lane& host, double r, int i, const ClassTable& table,
                                              const ObstacleSet& world, std::size_t seq) {
  const double wi = table.lane_width(i);

  // Step 1: the open lane of this class, closed for good if C does not fit.
  for (VerticalLane& v : vlanes_) {
    if (v.class_index != i || !v.open()) continue;
    if (auto p = slp_place(v.lane, r, world, seq)) return {std::move(p), 1};
    v.lane.close();
    break;
  }

  // Step 2.
  for (SparseBlock& s : sparse_) {
    if (accepts(s.state, i) && !fit_in_block(s, wi)) s.state = BlockState::closed;
  }

  // Step 3: first open block, left to right, that takes a class-i lane. The
  // lane starts on the long side away from the owner's half circle.
  for (std::size_t k = 0; k < sparse_.size(); ++k) {
    SparseBlock& s = sparse_[k];
    if (!accepts(s.state, i) || !fit_in_block(s, wi)) continue;
    const double at = std::max(s.x_left, s.fill);
    const Orientation o = s.half_side == Side::bottom ? Orientation::downwards : Orientation::upwards;
    if (auto p = open_lane(host, {at, at + wi}, i, o, k, r, world, seq)) {
      SparseBlock& b = sparse_[k];
      b.fill = at + wi;
      b.vlanes.push_back(vlanes_.size() - 1);
      if (b.state == BlockState::free) b.state = reservation_for(i);
      return {std::move(p), 3};
    }
  }

  // Step 4: free area right of everything packed so far.
  const double at = frontier_;
  if (at + wi <= std::min(host.length(), host.limit())) {
    if (auto p = open_lane(host, {at, at + wi}, i, Orientation::upwards, std::nullopt, r, world, seq)) {
      return {std::move(p), 4};
    }
  }

  // Step 5.
  host.close();
  return {std::nullopt, 5};
}

}  // namespace circlepack
