#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "circlepack/bounds.hpp"
#include "circlepack/classification.hpp"
#include "circlepack/dslp.hpp"
#include "circlepack/geometry.hpp"
#include "circlepack/lane.hpp"

namespace circlepack {

inline constexpr double kSquareWidthGeneral = 0.288480;
inline constexpr double kSquareWidthNoTiny = 0.277927;
inline constexpr double kNoTinyMinRadius = 0.026623;

enum class ContainerKind { square, rect };
enum class PackStatus { all_packed, rejected };
enum class RejectReason { none, too_large, too_small, no_space };
enum class LaneKind { large, medium, small, vertical };

const char* to_string(ContainerKind k);
const char* to_string(PackStatus s);
const char* to_string(RejectReason r);
const char* to_string(LaneKind k);

/// Thrown for radii the algorithms are not defined on (non-positive,
/// non-finite, or below the no-tiny minimum).
class InputError : public std::invalid_argument {
 public:
  InputError(std::size_t index, const std::string& what)
      : std::invalid_argument(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

struct LaneRecord {
  std::string id;
  LaneKind kind = LaneKind::medium;
  Strategy strategy = Strategy::slp;
  int class_index = 1;
  Frame frame;  // canonical -> container coordinates
  bool closed = false;
  std::size_t count = 0;
  double packing_length = 0.0;
  double occupied_area = 0.0;
};

struct Placement {
  PlacedCircle circle;
  int class_index = 0;
};

struct PackResult {
  PackStatus status = PackStatus::all_packed;
  ContainerKind container = ContainerKind::rect;
  double b = 1.0;  // rectangle length; 1 for the square
  SquareMode mode = SquareMode::general;
  double w = 1.0;  // medium lane width the classes are relative to
  double q2 = kSmallQ;
  std::optional<double> min_radius;
  std::vector<Placement> placements;
  std::optional<std::size_t> rejected_index;
  std::optional<double> rejected_radius;
  RejectReason reason = RejectReason::none;
  double total_packed_area = 0.0;
  double guarantee = 0.0;
  std::vector<LaneRecord> lanes;

  Rect container_rect() const;
  /// The class table the run classified against.
  ClassTable class_table() const;
};

struct SquareLayout {
  double w = 0.0;
  Frame l0;                     // large lane, TLP
  std::array<Frame, 4> medium;  // L1..L4, DSLP
};

/// L1 top strip rightwards, L2 right strip downwards, L3 bottom strip
/// rightwards, L4 left strip upwards; L0 is the slab below L1, leftwards.
SquareLayout square_layout(double w);

/// Shared online driver: feeds one radius at a time and stops for good at
/// the first circle that cannot be packed.
class Packer {
 public:
  virtual ~Packer() = default;

  /// Returns false when the circle was rejected (or the run already stopped).
  bool pack(double r);
  bool stopped() const { return stopped_; }
  const ObstacleSet& world() const { return world_; }
  PackResult result() const;
  /// Throws InputError when the radius is outside the algorithm's domain.
  virtual void check_input(std::size_t index, double r) const;

 protected:
  struct Attempt {
    std::optional<PlacedCircle> circle;
    int class_index = -1;
    RejectReason reason = RejectReason::none;
  };

  explicit Packer(const Rect& bounds);
  virtual Attempt place(double r, std::size_t seq) = 0;
  virtual void describe(PackResult& out) const = 0;

  ObstacleSet world_;
  std::vector<Placement> placements_;
  bool stopped_ = false;
  std::optional<std::size_t> rejected_index_;
  std::optional<double> rejected_radius_;
  RejectReason reason_ = RejectReason::none;
};

/// DSLP over a single 1 x b lane; classes relative to width 1.
class RectPacker : public Packer {
 public:
  explicit RectPacker(double b);
  const DslpLane& lane() const { return lane_; }
  double b() const { return b_; }

 protected:
  Attempt place(double r, std::size_t seq) override;
  void describe(PackResult& out) const override;

 private:
  double b_;
  DslpLane lane_;
};

class SquarePacker : public Packer {
 public:
  explicit SquarePacker(SquareMode mode);
  void check_input(std::size_t index, double r) const override;
  const Lane& large_lane() const { return l0_; }
  std::span<const DslpLane> medium_lanes() const { return mediums_; }
  const SquareLayout& layout() const { return layout_; }
  const ClassTable& table() const { return table_; }

 protected:
  Attempt place(double r, std::size_t seq) override;
  void describe(PackResult& out) const override;

 private:
  SquareMode mode_;
  SquareLayout layout_;
  ClassTable table_;
  Lane l0_;
  std::vector<DslpLane> mediums_;
};

/// Whole-sequence entry points. All radii are checked before packing starts.
PackResult pack_square_online(SquareMode mode, std::span<const double> radii);
PackResult pack_rect_online(double b, std::span<const double> radii);

void append_lane_records(const DslpLane& d, std::vector<LaneRecord>& out);

}  // namespace circlepack
