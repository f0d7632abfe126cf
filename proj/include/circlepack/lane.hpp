#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "circlepack/geometry.hpp"

namespace circlepack {

enum class Strategy { slp, tlp };
enum class Side { bottom, top };

const char* to_string(Strategy s);

/// A packed circle in its lane's canonical frame.
struct LaneCircle {
  double u = 0.0;
  double v = 0.0;
  double r = 0.0;
  std::size_t seq = 0;
};

struct LaneMetrics {
  double packing_length = 0.0;
  double circle_free_length = 0.0;
  double occupied_area = 0.0;
};

/// A feasible position found by Lane::probe, not yet committed.
struct Candidate {
  double u = 0.0;
  double v = 0.0;
  Point center;  // container coordinates
};

/// One lane: its frame, strategy, alternation parity and packed circles.
///
/// Circles alternate between the canonical bottom and top sides, starting at
/// the bottom, and advance monotonically along u. SLP additionally keeps a
/// gap of min(r, r') to the previously packed circle and stays right of every
/// exclusion interval (the vertical sub-lanes packed into it). TLP drops both
/// restrictions.
class Lane {
 public:
  Lane(std::string id, Frame frame, Strategy strategy);

  const std::string& id() const { return id_; }
  const Frame& frame() const { return frame_; }
  Strategy strategy() const { return strategy_; }
  double width() const { return frame_.width(); }
  double length() const { return frame_.length(); }
  Side next_side() const { return next_; }
  std::span<const LaneCircle> packed() const { return packed_; }
  bool empty() const { return packed_.empty(); }

  bool closed() const { return closed_; }
  void close() { closed_ = true; }

  std::span<const Interval> exclusions() const { return exclusions_; }
  void add_exclusion(Interval span);

  /// Far edge of any new circle stays at or below this u.
  double limit() const { return limit_; }
  void set_limit(double u) { limit_ = u; }

  /// Leftmost admissible position for a circle of radius r against every
  /// circle in `world`; never mutates.
  std::optional<Candidate> probe(double r, const ObstacleSet& world) const;
  PlacedCircle commit(const Candidate& c, double r, std::size_t seq);

 private:
  double floor_for(double r) const;

  std::string id_;
  Frame frame_;
  Strategy strategy_;
  Side next_ = Side::bottom;
  std::vector<LaneCircle> packed_;
  std::vector<Interval> exclusions_;
  double exclusion_right_ = 0.0;
  double limit_ = std::numeric_limits<double>::infinity();
  bool closed_ = false;
};

/// Structured lane packing; nothing changes when no position exists.
std::optional<PlacedCircle> slp_place(Lane& lane, double r, const ObstacleSet& world,
                                      std::size_t seq);
/// Tight lane packing: SLP without the gap rule and sub-lane avoidance.
std::optional<PlacedCircle> tlp_place(Lane& lane, double r, const ObstacleSet& world,
                                      std::size_t seq);

LaneMetrics metrics(const Lane& lane);

/// Packing length of an arbitrary set of u-extents; 0 when empty.
struct ExtentTracker {
  double lo = 0.0;
  double hi = 0.0;
  bool any = false;

  void add(double u, double r);
  double length() const { return any ? hi - lo : 0.0; }
};

}  // namespace circlepack
