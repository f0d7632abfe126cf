#include "circlepack/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace circlepack {

const char* to_string(SquareMode m) { return m == SquareMode::general ? "general" : "no_tiny"; }

namespace bounds {

using std::numbers::pi;

double rect_area(double a, double b) { return a * b; }

double semicircle(double r) { return pi / 2.0 * r * r; }

double delta(double q) {
  if (!(q > 0.0) || q > 0.5) throw std::domain_error("delta is defined on (0, 1/2]");
  const double knee = 1.0 / (3.0 * std::sqrt(3.0));
  if (q < knee) return pi * q;
  if (q <= 1.0 / 3.0) return pi * knee;
  return pi * q * q / std::sqrt(4.0 * q - 1.0);
}

double min_slp(double p, double w, double z, double delta_min) {
  return rect_area(std::max(0.0, p - 2.0 * z), w) * delta_min + 2.0 * semicircle(z);
}

double sparse_lower(double len, double w, double z, double delta_min) {
  if (len < z) throw std::invalid_argument("sparse block shorter than its lower bound");
  return rect_area(len - z, w) * delta_min + semicircle(z);
}

double min_dslp(double p_t, double p_b, double w, double z, double delta_min) {
  const double len = std::max(0.0, p_t + p_b - w - 4.0 * z);
  return rect_area(len, w / 2.0) * delta_min + 2.0 * semicircle(w / 4.0) + 4.0 * semicircle(z);
}

double overhead_bound(double w) { return kOverheadFactor * w * w; }

double guarantee_rect(double b) {
  if (!(b >= 1.0)) throw std::domain_error("rectangle length must be at least 1");
  return std::min(kRectSlope * b - kRectOffset, pi / 4.0);
}

double guarantee_square(SquareMode mode) {
  return mode == SquareMode::general ? kSquareGeneral : kSquareNoTiny;
}

}  // namespace bounds
}  // namespace circlepack
