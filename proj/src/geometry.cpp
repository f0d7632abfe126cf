#include "circlepack/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace circlepack {

Rect make_rect(double x0, double y0, double x1, double y1) {
  if (!(x0 < x1) || !(y0 < y1)) {
    throw std::invalid_argument("rectangle needs positive width and height");
  }
  return {x0, y0, x1, y1};
}

const char* to_string(Orientation o) {
  switch (o) {
    case Orientation::rightwards: return "rightwards";
    case Orientation::leftwards: return "leftwards";
    case Orientation::upwards: return "upwards";
    case Orientation::downwards: return "downwards";
  }
  return "?";
}

std::optional<Orientation> orientation_from_string(std::string_view s) {
  if (s == "rightwards") return Orientation::rightwards;
  if (s == "leftwards") return Orientation::leftwards;
  if (s == "upwards") return Orientation::upwards;
  if (s == "downwards") return Orientation::downwards;
  return std::nullopt;
}

Frame Frame::make(const Rect& rect, Orientation o, bool mirrored) {
  Frame f;
  const bool horizontal = o == Orientation::rightwards || o == Orientation::leftwards;
  f.length_ = horizontal ? rect.width() : rect.height();
  f.width_ = horizontal ? rect.height() : rect.width();
  if (!(f.width_ > 0.0) || !(f.length_ > 0.0)) {
    throw std::invalid_argument("lane frame needs a non-degenerate rectangle");
  }
  switch (o) {
    case Orientation::rightwards:
      f.origin_ = {rect.x0, mirrored ? rect.y1 : rect.y0};
      f.ux_ = 1, f.uy_ = 0, f.vx_ = 0, f.vy_ = mirrored ? -1 : 1;
      break;
    case Orientation::leftwards:
      f.origin_ = {rect.x1, mirrored ? rect.y1 : rect.y0};
      f.ux_ = -1, f.uy_ = 0, f.vx_ = 0, f.vy_ = mirrored ? -1 : 1;
      break;
    case Orientation::upwards:
      f.origin_ = {mirrored ? rect.x1 : rect.x0, rect.y0};
      f.ux_ = 0, f.uy_ = 1, f.vx_ = mirrored ? -1 : 1, f.vy_ = 0;
      break;
    case Orientation::downwards:
      f.origin_ = {mirrored ? rect.x1 : rect.x0, rect.y1};
      f.ux_ = 0, f.uy_ = -1, f.vx_ = mirrored ? -1 : 1, f.vy_ = 0;
      break;
  }
  return f;
}

Frame Frame::compose(const Frame& child) const {
  Frame f;
  f.origin_ = to_parent(child.origin_.x, child.origin_.y);
  f.ux_ = child.ux_ * ux_ + child.uy_ * vx_;
  f.uy_ = child.ux_ * uy_ + child.uy_ * vy_;
  f.vx_ = child.vx_ * ux_ + child.vy_ * vx_;
  f.vy_ = child.vx_ * uy_ + child.vy_ * vy_;
  f.length_ = child.length_;
  f.width_ = child.width_;
  return f;
}

Point Frame::to_parent(double u, double v) const {
  return {origin_.x + u * ux_ + v * vx_, origin_.y + u * uy_ + v * vy_};
}

Point Frame::to_local(Point p) const {
  const double dx = p.x - origin_.x;
  const double dy = p.y - origin_.y;
  return {dx * ux_ + dy * uy_, dx * vx_ + dy * vy_};
}

Rect Frame::local_to_parent(const Rect& local) const {
  const Point a = to_parent(local.x0, local.y0);
  const Point b = to_parent(local.x1, local.y1);
  return {std::min(a.x, b.x), std::min(a.y, b.y), std::max(a.x, b.x), std::max(a.y, b.y)};
}

Rect Frame::rect() const { return local_to_parent({0.0, 0.0, length_, width_}); }

Orientation Frame::orientation() const {
  if (ux_ == 1) return Orientation::rightwards;
  if (ux_ == -1) return Orientation::leftwards;
  if (uy_ == 1) return Orientation::upwards;
  return Orientation::downwards;
}

bool Frame::mirrored() const { return ux_ != 0 ? vy_ < 0 : vx_ < 0; }

bool circles_overlap(const Disk& a, const Disk& b, double eps) {
  const double d = std::hypot(a.center.x - b.center.x, a.center.y - b.center.y);
  return d < a.r + b.r - eps;
}

bool circles_overlap(const PlacedCircle& a, const PlacedCircle& b, double eps) {
  return circles_overlap(a.disk(), b.disk(), eps);
}

bool circle_in_rect(const Disk& c, const Rect& rect, double eps) {
  return c.center.x - c.r >= rect.x0 - eps && c.center.x + c.r <= rect.x1 + eps &&
         c.center.y - c.r >= rect.y0 - eps && c.center.y + c.r <= rect.y1 + eps;
}

bool circle_in_rect(const PlacedCircle& c, const Rect& rect, double eps) {
  return circle_in_rect(c.disk(), rect, eps);
}

std::optional<Interval> forbidden_interval(const Disk& obstacle, double y, double r) {
  const double reach = r + obstacle.r;
  const double dy = y - obstacle.center.y;
  const double s = reach * reach - dy * dy;
  if (!(std::abs(dy) < reach) || s <= 0.0) return std::nullopt;
  const double d = std::sqrt(s);
  return Interval{obstacle.center.x - d, obstacle.center.x + d};
}

std::optional<double> leftmost_feasible(const FeasibilityQuery& q) {
  const double lo = std::max(q.x_min, q.floor);
  if (lo > q.x_max) return std::nullopt;

  std::vector<Interval> blocked;
  blocked.reserve(q.obstacles.size() + q.exclusions.size());
  for (const Disk& o : q.obstacles) {
    if (auto iv = forbidden_interval(o, q.y, q.r)) blocked.push_back(*iv);
  }
  for (const Interval& e : q.exclusions) blocked.push_back({e.lo - q.r, e.hi + q.r});
  std::sort(blocked.begin(), blocked.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

  // Blocked intervals are open, so an endpoint is itself feasible.
  double x = lo;
  for (const Interval& iv : blocked) {
    if (iv.hi <= x) continue;
    if (iv.lo >= x) break;
    x = iv.hi;
    if (x > q.x_max) return std::nullopt;
  }
  return x;
}

ObstacleSet::ObstacleSet(const Rect& bounds, std::size_t cells_per_side) : bounds_(bounds) {
  cells_per_side = std::max<std::size_t>(cells_per_side, 1);
  cell_ = std::max(bounds.width(), bounds.height()) / static_cast<double>(cells_per_side);
  nx_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(bounds.width() / cell_)));
  ny_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(bounds.height() / cell_)));
  cells_.resize(nx_ * ny_);
}

std::size_t ObstacleSet::cell_x(double x) const {
  const double c = std::floor((x - bounds_.x0) / cell_);
  if (!(c > 0.0)) return 0;
  return std::min(nx_ - 1, static_cast<std::size_t>(c));
}

std::size_t ObstacleSet::cell_y(double y) const {
  const double c = std::floor((y - bounds_.y0) / cell_);
  if (!(c > 0.0)) return 0;
  return std::min(ny_ - 1, static_cast<std::size_t>(c));
}

void ObstacleSet::add(PlacedCircle c) {
  const auto idx = static_cast<std::uint32_t>(circles_.size());
  const std::size_t cx0 = cell_x(c.center.x - c.r), cx1 = cell_x(c.center.x + c.r);
  const std::size_t cy0 = cell_y(c.center.y - c.r), cy1 = cell_y(c.center.y + c.r);
  for (std::size_t j = cy0; j <= cy1; ++j) {
    for (std::size_t i = cx0; i <= cx1; ++i) cells_[j * nx_ + i].push_back(idx);
  }
  circles_.push_back(std::move(c));
}

void ObstacleSet::query(const Rect& q, std::vector<std::uint32_t>& out) const {
  out.clear();
  const std::size_t cx0 = cell_x(q.x0), cx1 = cell_x(q.x1);
  const std::size_t cy0 = cell_y(q.y0), cy1 = cell_y(q.y1);
  for (std::size_t j = cy0; j <= cy1; ++j) {
    for (std::size_t i = cx0; i <= cx1; ++i) {
      for (std::uint32_t idx : cells_[j * nx_ + i]) {
        const PlacedCircle& c = circles_[idx];
        const Rect box{c.center.x - c.r, c.center.y - c.r, c.center.x + c.r, c.center.y + c.r};
        if (box.intersects(q)) out.push_back(idx);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

}  // namespace circlepack
