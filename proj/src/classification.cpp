#include "circlepack/classification.hpp"

#include <cmath>
#include <iterator>

namespace circlepack {

ClassTable build_class_table(double w, std::optional<double> q2_override,
                             std::optional<double> min_radius, bool large) {
  if (!(w > 0.0) || !(w <= 1.0)) throw ConfigError("base lane width must lie in (0, 1]");
  if (q2_override && !(*q2_override > 0.0 && *q2_override < 0.5)) {
    throw ConfigError("q2 override must lie in (0, 0.5)");
  }
  if (min_radius && !(*min_radius > 0.0)) throw ConfigError("minimum radius must be positive");

  auto q_of = [&](int i) {
    if (i == 1) return kMediumQ;
    if (i == 2) return q2_override.value_or(kSmallQ);
    const auto k = static_cast<std::size_t>(i - 3);
    return k < std::size(kFixedQ) ? kFixedQ[k] : kTailQ;
  };

  ClassTable t;
  t.w_ = w;
  double wi = w;
  for (int i = 1; i <= kMaxClassDepth; ++i) {
    const ClassRow row{i, q_of(i), wi};
    t.rows_.push_back(row);
    if (min_radius && row.lower_bound() < *min_radius) break;
    wi = 2.0 * row.q * row.w;
  }
  if (large) t.large_ = LargeClass{w / 2.0, 1.0 - w};
  return t;
}

double ClassTable::max_radius() const { return large_ ? large_->w0 / 2.0 : w_ / 2.0; }

Classification classify(double r, const ClassTable& t) {
  if (r > t.max_radius()) return {std::nullopt, Rejection::too_large};
  if (t.large() && r > t.large()->q0) return {ClassId{0}, Rejection::none};
  if (r > t.base_width() / 2.0) return {std::nullopt, Rejection::too_large};
  for (const ClassRow& row : t.rows()) {
    if (r > row.lower_bound()) return {ClassId{row.index}, Rejection::none};
  }
  return {std::nullopt, Rejection::too_small};
}

std::string to_string(Rejection r) {
  switch (r) {
    case Rejection::none: return "none";
    case Rejection::too_large: return "too_large";
    case Rejection::too_small: return "too_small";
  }
  return "?";
}

}  // namespace circlepack
