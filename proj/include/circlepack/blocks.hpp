#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circlepack/classification.hpp"
#include "circlepack/geometry.hpp"
#include "circlepack/lane.hpp"

namespace circlepack {

enum class BlockState { free, reserved_3, reserved_4, reserved_ge5, closed };

const char* to_string(BlockState s);

/// A vertical sub-lane of class >= 3 inside a medium lane. `span` is the
/// u-interval it occupies in the host's canonical frame; the inner lane's
/// frame maps straight to container coordinates.
struct VerticalLane {
  int class_index = 0;
  Interval span;
  Lane lane;
  std::optional<std::size_t> block;  // owning sparse block, none for free-area lanes

  bool open() const { return !lane.closed(); }
};

/// Half of a medium circle: x_left is the owner's centre, x_cap starts at
/// its right tangent and moves left to the next medium's left tangent when
/// that one arrives. All coordinates are host-canonical u.
struct SparseBlock {
  double x_left = 0.0;
  double x_cap = 0.0;
  double fill = 0.0;  // right edge of the last vertical lane, x_left when none
  double owner_r = 0.0;
  std::size_t owner_seq = 0;
  Side half_side = Side::bottom;
  BlockState state = BlockState::free;
  std::vector<std::size_t> vlanes;
};

/// Centre-to-centre block between consecutive medium circles.
struct DenseBlock {
  double x_left = 0.0;
  double x_right = 0.0;
  bool mixed = false;
};

bool fit_in_block(const SparseBlock& s, double lane_width);

struct SmallPackResult {
  std::optional<PlacedCircle> placed;
  int step = 0;  // 1, 3 or 4 on success; 5 when the host was closed
};

/// Dense/sparse/free bookkeeping of one medium lane and the vertical lanes
/// packed into it.
class BlockLedger {
 public:
  /// Call right after a medium circle was committed to `host`.
  void on_medium_packed(Lane& host, const LaneCircle& c);

  /// Packs a class >= 3 circle by Steps 1-5. Step 5 closes `host`.
  SmallPackResult pack_small_class(Lane& host, double r, int class_index, const ClassTable& table,
                                   const ObstacleSet& world, std::size_t seq);

  const std::vector<SparseBlock>& sparse() const { return sparse_; }
  const std::vector<DenseBlock>& dense() const { return dense_; }
  const std::vector<VerticalLane>& vlanes() const { return vlanes_; }
  /// Right edge of every medium circle and vertical lane; free area starts here.
  double frontier() const { return frontier_; }

 private:
  std::optional<PlacedCircle> open_lane(Lane& host, Interval span, int class_index,
                                        Orientation o, std::optional<std::size_t> block,
                                        double r, const ObstacleSet& world, std::size_t seq);

  std::vector<SparseBlock> sparse_;
  std::vector<DenseBlock> dense_;
  std::vector<VerticalLane> vlanes_;
  std::optional<std::size_t> last_sparse_;
  double frontier_ = 0.0;
};

}  // namespace circlepack
