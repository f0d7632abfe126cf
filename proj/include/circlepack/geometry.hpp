#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace circlepack {

/// Global contact tolerance in container units. Circles may touch; a
/// penetration shallower than this is not reported as an overlap.
inline constexpr double kDefaultEps = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Disk {
  Point center;
  double r = 0.0;
};

/// An input radius as it arrives in the online sequence.
struct CircleSpec {
  double r = 0.0;
};

struct PlacedCircle {
  Point center;
  double r = 0.0;
  std::size_t seq = 0;   // arrival index
  std::string lane_id;   // owning lane

  Disk disk() const { return {center, r}; }
};

struct Rect {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const { return width() * height(); }
  bool intersects(const Rect& o) const {
    return x0 <= o.x1 && o.x0 <= x1 && y0 <= o.y1 && o.y0 <= y1;
  }
};

Rect make_rect(double x0, double y0, double x1, double y1);

/// Closed or open x-interval depending on context; see the functions below.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

enum class Orientation { rightwards, leftwards, upwards, downwards };

const char* to_string(Orientation o);
std::optional<Orientation> orientation_from_string(std::string_view s);

/// Isometry between a lane's canonical frame and its parent coordinates.
///
/// Canonical coordinates are (u, v): u runs along the lane in packing
/// direction from 0 to length(), v runs across it from the "bottom" long side
/// (0) to the "top" long side (width()). For horizontal lanes the canonical
/// bottom is the lower side; for vertical lanes it is the left side. A
/// mirrored frame swaps which long side is the canonical bottom; composed
/// frames (a vertical sub-lane inside a downwards lane, say) can end up
/// mirrored.
class Frame {
 public:
  Frame() = default;

  /// `rect` is in parent coordinates; the long side must run along the
  /// orientation's axis.
  static Frame make(const Rect& rect, Orientation o, bool mirrored = false);

  /// `child` is expressed in this frame's canonical coordinates; the result
  /// maps the child's canonical coordinates straight to this frame's parent.
  Frame compose(const Frame& child) const;

  Point to_parent(double u, double v) const;
  Point to_local(Point p) const;
  Rect local_to_parent(const Rect& local) const;
  Rect rect() const;

  Orientation orientation() const;
  bool mirrored() const;
  double length() const { return length_; }
  double width() const { return width_; }

 private:
  Point origin_;
  int ux_ = 1, uy_ = 0;  // parent direction of +u
  int vx_ = 0, vy_ = 1;  // parent direction of +v
  double length_ = 0.0;
  double width_ = 0.0;
};

/// True iff the two disks penetrate by more than eps; touching is legal.
bool circles_overlap(const Disk& a, const Disk& b, double eps);
bool circles_overlap(const PlacedCircle& a, const PlacedCircle& b, double eps);

/// True iff the disk lies inside `rect`, allowing it to poke out by eps.
bool circle_in_rect(const Disk& c, const Rect& rect, double eps);
bool circle_in_rect(const PlacedCircle& c, const Rect& rect, double eps);

/// Open interval of centre x-values at height y where a disk of radius r would
/// intersect `obstacle`, or nothing if the heights are too far apart.
std::optional<Interval> forbidden_interval(const Disk& obstacle, double y, double r);

struct FeasibilityQuery {
  double x_min = 0.0;
  double x_max = 0.0;
  double y = 0.0;
  double r = 0.0;
  double floor = 0.0;
  std::span<const Disk> obstacles;
  std::span<const Interval> exclusions;  // closed intervals the disk must not enter
};

/// Smallest centre x in [max(x_min, floor), x_max] at height y where a disk
/// of radius r touches no obstacle's interior and stays out of every
/// exclusion interval's interior. Obstacles and exclusions are in the same
/// frame as the query.
std::optional<double> leftmost_feasible(const FeasibilityQuery& q);

/// Uniform-grid index over placed circles, keyed on bounding boxes.
class ObstacleSet {
 public:
  explicit ObstacleSet(const Rect& bounds, std::size_t cells_per_side = 64);

  void add(PlacedCircle c);
  std::span<const PlacedCircle> circles() const { return circles_; }
  std::size_t size() const { return circles_.size(); }

  /// Indices (ascending, unique) of circles whose bounding box meets `query`.
  void query(const Rect& query, std::vector<std::uint32_t>& out) const;

 private:
  std::size_t cell_x(double x) const;
  std::size_t cell_y(double y) const;

  Rect bounds_;
  std::size_t nx_ = 1;
  std::size_t ny_ = 1;
  double cell_ = 1.0;
  std::vector<std::vector<std::uint32_t>> cells_;
  std::vector<PlacedCircle> circles_;
};

}  // namespace circlepack
