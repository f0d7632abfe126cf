#include "circlepack/lane.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace circlepack {

const char* to_string(Strategy s) { return s == Strategy::slp ? "SLP" : "TLP"; }

Lane::Lane(std::string id, Frame frame, Strategy strategy)
    : id_(std::move(id)), frame_(frame), strategy_(strategy) {
  if (frame_.width() > frame_.length() * (1.0 + 1e-12)) {
    throw std::invalid_argument("lane width exceeds its length: " + id_);
  }
}

void Lane::add_exclusion(Interval span) {
  exclusions_.push_back(span);
  exclusion_right_ = std::max(exclusion_right_, span.hi);
}

double Lane::floor_for(double r) const {
  if (strategy_ == Strategy::tlp) return packed_.empty() ? 0.0 : packed_.back().u;
  double f = 0.0;
  if (!packed_.empty()) f = packed_.back().u + std::min(r, packed_.back().r);
  // Sub-lanes always sit behind the frontier, so later circles pass them.
  if (!exclusions_.empty()) f = std::max(f, exclusion_right_ + r);
  return f;
}

std::optional<Candidate> Lane::probe(double r, const ObstacleSet& world) const {
  if (closed_ || !(r > 0.0) || 2.0 * r > width() * (1.0 + 1e-12)) return std::nullopt;
  const double v = next_ == Side::bottom ? r : width() - r;
  const double x_max = std::min(length(), limit_) - r;
  double lo = std::max(r, floor_for(r));
  if (lo > x_max) return std::nullopt;

  const std::span<const Interval> excl =
      strategy_ == Strategy::slp ? std::span<const Interval>(exclusions_) : std::span<const Interval>();

  // Grow the search window geometrically; a window that is fully blocked
  // lets the next one start at its right end.
  std::vector<std::uint32_t> hits;
  std::vector<Disk> local;
  double span = std::max(4.0 * r, width());
  while (true) {
    const double hi = std::min(x_max, lo + span);
    world.query(frame_.local_to_parent({lo - r, v - r, hi + r, v + r}), hits);
    local.clear();
    for (std::uint32_t idx : hits) {
      const PlacedCircle& c = world.circles()[idx];
      local.push_back({frame_.to_local(c.center), c.r});
    }
    FeasibilityQuery q{lo, hi, v, r, lo, local, excl};
    if (auto x = leftmost_feasible(q)) {
      return Candidate{*x, v, frame_.to_parent(*x, v)};
    }
    if (hi >= x_max) return std::nullopt;
    lo = hi;
    span *= 2.0;
  }
}

PlacedCircle Lane::commit(const Candidate& c, double r, std::size_t seq) {
  packed_.push_back({c.u, c.v, r, seq});
  next_ = next_ == Side::bottom ? Side::top : Side::bottom;
  return PlacedCircle{c.center, r, seq, id_};
}

namespace {

std::optional<PlacedCircle> place(Lane& lane, Strategy expected, double r,
                                  const ObstacleSet& world, std::size_t seq) {
  if (lane.strategy() != expected) throw std::logic_error("lane strategy mismatch: " + lane.id());
  auto c = lane.probe(r, world);
  if (!c) return std::nullopt;
  return lane.commit(*c, r, seq);
}

}  // namespace

std::optional<PlacedCircle> slp_place(Lane& lane, double r, const ObstacleSet& world,
                                      std::size_t seq) {
  return place(lane, Strategy::slp, r, world, seq);
}

std::optional<PlacedCircle> tlp_place(Lane& lane, double r, const ObstacleSet& world,
                                      std::size_t seq) {
  return place(lane, Strategy::tlp, r, world, seq);
}

void ExtentTracker::add(double u, double r) {
  if (!any) {
    lo = u - r, hi = u + r, any = true;
    return;
  }
  lo = std::min(lo, u - r);
  hi = std::max(hi, u + r);
}

LaneMetrics metrics(const Lane& lane) {
  ExtentTracker ext;
  double occ = 0.0;
  for (const LaneCircle& c : lane.packed()) {
    ext.add(c.u, c.r);
    occ += std::numbers::pi * c.r * c.r;
  }
  return {ext.length(), lane.length() - ext.length(), occ};
}

}  // namespace circlepack
