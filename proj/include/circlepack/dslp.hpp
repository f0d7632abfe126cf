#pragma once

#include <optional>
#include <string>

#include "circlepack/blocks.hpp"
#include "circlepack/classification.hpp"
#include "circlepack/lane.hpp"

namespace circlepack {

enum class DslpStatus { placed, rejected, lane_closed };

struct DslpOutcome {
  DslpStatus status = DslpStatus::rejected;
  std::optional<PlacedCircle> circle;
  int class_index = -1;
};

/// A medium lane packed by extended SLP in its own direction, plus two
/// half-width small lanes packed from the far end back towards it.
class DslpLane {
 public:
  DslpLane(std::string id, const Frame& frame, ClassTable table);

  const std::string& id() const { return host_.id(); }
  const Lane& host() const { return host_; }
  const Lane& small_top() const { return top_; }
  const Lane& small_bottom() const { return bottom_; }
  const BlockLedger& ledger() const { return ledger_; }
  const ClassTable& table() const { return table_; }
  bool closed() const { return host_.closed(); }

 private:
  // Neither front may pass the other: small lanes stop at the host's far
  // edge and the host stops at the deeper small lane.
  void sync_limits();

  friend DslpOutcome dslp_pack(DslpLane& d, double r, const ObstacleSet& world, std::size_t seq);

  ClassTable table_;
  Lane host_;
  Lane top_;
  Lane bottom_;
  BlockLedger ledger_;
};

/// Routes by class: medium into the host row, small into whichever small lane
/// ends up shorter (bottom on ties), tiny and smaller through the block
/// engine. A closed host rejects everything.
DslpOutcome dslp_pack(DslpLane& d, double r, const ObstacleSet& world, std::size_t seq);

struct DslpMetrics {
  double p_t = 0.0;
  double p_b = 0.0;
  double f_t = 0.0;
  double f_b = 0.0;
};

/// Host packing length including circles in its vertical lanes.
LaneMetrics host_metrics(const DslpLane& d);
DslpMetrics dslp_metrics(const DslpLane& d);

}  // namespace circlepack
