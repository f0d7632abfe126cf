#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "circlepack/containers.hpp"
#include "circlepack/dslp.hpp"
#include "circlepack/geometry.hpp"
#include "circlepack/lane.hpp"

namespace circlepack {

enum class ViolationKind { overlap, out_of_container, class_mismatch, order, bound };

const char* to_string(ViolationKind k);

struct Violation {
  ViolationKind kind = ViolationKind::overlap;
  std::string detail;
  std::vector<std::size_t> indices;  // placement indices involved
};

struct AuditReport {
  bool valid = true;
  std::vector<Violation> violations;
  double density = 0.0;
  std::map<std::string, double> per_lane_occ;
};

/// Checks a finished run using only what the result records: pairwise
/// overlaps, containment in the container and in the recorded lane, class
/// against the lane kind, and per-lane alternation, ordering and SLP gaps.
AuditReport validate(const PackResult& result, const Rect& container, double eps);

/// Exact area of a disk clipped to an axis-aligned rectangle.
double disk_rect_area(const Disk& d, const Rect& region);

/// Sum of circle areas inside `region`, clipping circles that straddle it.
double occupied(const Rect& region, std::span<const PlacedCircle> circles);

struct BoundCheck {
  bool applicable = true;
  double occupied = 0.0;
  double bound = 0.0;

  bool passed() const { return !applicable || occupied >= bound - 1e-9; }
};

/// Single-class SLP lane against min_SLP(p, w, q w, delta(q)).
BoundCheck check_slp_lane(const Lane& lane, double q, double w);
bool audit_slp_lane(const Lane& lane, double q, double w);

/// DSLP lane against min_DSLP(p_t, p_b, w, q2 w2, delta(q2)) minus the open
/// vertical-lane overhead. Not applicable while the host row is empty.
BoundCheck check_dslp_lane(const DslpLane& d, std::span<const PlacedCircle> world);
bool audit_dslp_lane(const DslpLane& d, std::span<const PlacedCircle> world);

struct DenseBlockAudit {
  DenseBlock block;
  bool lanes_closed = true;  // every vertical lane inside is closed
  double density = 0.0;
};

std::vector<DenseBlockAudit> audit_dense_blocks(const DslpLane& d,
                                                std::span<const PlacedCircle> world);

}  // namespace circlepack
