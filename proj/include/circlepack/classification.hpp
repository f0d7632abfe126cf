#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace circlepack {

/// Relative lower bounds of the class schedule. Row 1 is the medium class,
/// row 2 the small class; rows past the table continue with kTailQ.
inline constexpr double kMediumQ = 0.25;
inline constexpr double kSmallQ = 0.168261;
inline constexpr double kSmallQNoTiny = 0.191578;
inline constexpr double kTailQ = 0.168262;
inline constexpr double kFixedQ[] = {0.371446, 0.190657, 0.175592, 0.170699, 0.169078, 0.168354,
                                     0.168293, 0.168272, 0.168265, 0.168263, 0.168262};  // q3..q13
inline constexpr int kMaxClassDepth = 40;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ClassRow {
  int index = 0;
  double q = 0.0;  // relative lower bound
  double w = 0.0;  // lane width

  double lower_bound() const { return q * w; }
};

struct LargeClass {
  double q0 = 0.0;  // absolute lower bound (half the medium width)
  double w0 = 0.0;  // large lane width
};

/// Class 0 is large, 1 medium, 2 small, 3-4 tiny, 5 and up very tiny.
struct ClassId {
  int value = 0;
  friend bool operator==(ClassId, ClassId) = default;
};

enum class Rejection { none, too_large, too_small };

struct Classification {
  std::optional<ClassId> id;
  Rejection rejection = Rejection::none;

  explicit operator bool() const { return id.has_value(); }
};

class ClassTable {
 public:
  double base_width() const { return w_; }
  const std::vector<ClassRow>& rows() const { return rows_; }
  const std::optional<LargeClass>& large() const { return large_; }

  /// Row for class i >= 1.
  const ClassRow& row(int i) const { return rows_.at(static_cast<std::size_t>(i - 1)); }
  int depth() const { return static_cast<int>(rows_.size()); }
  double lane_width(int i) const { return row(i).w; }
  /// Largest radius accepted at all.
  double max_radius() const;
  /// Radii at or below this are too small for the table.
  double min_radius_exclusive() const { return rows_.back().lower_bound(); }

  friend ClassTable build_class_table(double w, std::optional<double> q2_override,
                                      std::optional<double> min_radius, bool large);

 private:
  double w_ = 0.0;
  std::vector<ClassRow> rows_;
  std::optional<LargeClass> large_;
};

/// Rows follow w_{i+1} = 2 q_i w_i until the lower bound q_i w_i drops below
/// min_radius, or kMaxClassDepth rows when min_radius is absent.
ClassTable build_class_table(double w, std::optional<double> q2_override = std::nullopt,
                             std::optional<double> min_radius = std::nullopt, bool large = false);

/// Upper-inclusive, lower-exclusive: class i holds q_{i-1} w_{i-1} >= r > q_i w_i.
Classification classify(double r, const ClassTable& t);

std::string to_string(Rejection r);

}  // namespace circlepack
