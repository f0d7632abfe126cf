#pragma once

#include <string_view>

namespace circlepack {

enum class SquareMode { general, no_tiny };

const char* to_string(SquareMode m);

namespace bounds {

inline constexpr double kOverheadFactor = 0.213297;
inline constexpr double kRectSlope = 0.528607;
inline constexpr double kRectOffset = 0.457876;
inline constexpr double kSquareGeneral = 0.350389;
inline constexpr double kSquareNoTiny = 0.375898;
/// Common dense-block density for classes >= 2, to printed precision.
inline constexpr double kDeltaHat = 0.528607;

double rect_area(double a, double b);
/// Area of a semicircle of radius r.
double semicircle(double r);

/// Density lower bound of a dense block whose two half circles have radii at
/// least q times the lane width. Piecewise: pi q, then the constant
/// pi / (3 sqrt 3), then pi q^2 / sqrt(4q - 1). Throws std::domain_error
/// outside (0, 1/2].
double delta(double q);

/// Lower bound on the occupied area of a single-class SLP lane of packing
/// length p. The rectangle term is clamped at zero for p < 2z.
double min_slp(double p, double w, double z, double delta_min);

/// Lower bound on the occupied area of a sparse block of length len >= z.
double sparse_lower(double len, double w, double z, double delta_min);

/// Lower bound for a DSLP lane from its two combined packing lengths; the
/// rectangle term uses the small-lane width w/2 and is clamped at zero.
double min_dslp(double p_t, double p_b, double w, double z, double delta_min);

/// Bound on the area unaccounted for by open vertical lanes.
double overhead_bound(double w);

/// Area budget that always fits into a 1 x b rectangle, b >= 1.
double guarantee_rect(double b);
double guarantee_square(SquareMode mode);

}  // namespace bounds
}  // namespace circlepack
