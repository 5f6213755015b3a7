#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "heiskakeya/hgroup.hpp"

namespace heiskakeya::hlines {

using hgroup::HPoint;

enum class Chart { X_PARAM, Y_PARAM };

/// Code (a, b, d, eps) of a unit horizontal segment.
///
/// X_PARAM chart: s -> (s, b s + a, -a s / 2 + d) for s in the open interval
/// (eps, eps + 1/sqrt(b^2 + 1)).  Y_PARAM swaps the roles of x and y (it is
/// the image under the isometric automorphism (x, y, t) -> (y, x, -t)):
/// s -> (b s + a, s, a s / 2 + d) over the same parameter interval.
struct SegmentCode {
  double a = 0.0;
  double b = 0.0;
  double d = 0.0;
  double eps = 0.0;
  Chart chart = Chart::X_PARAM;

  friend constexpr bool operator==(const SegmentCode&, const SegmentCode&) = default;
};

/// A finite family of segment codes standing in for the segments of a set.
struct CodeFamily {
  std::vector<SegmentCode> codes;
  std::string label;
};

/// Euclidean length 1/sqrt(b^2 + 1) of the parameter interval.
double param_interval_length(const SegmentCode& code);

/// Point of the coded line at parameter s (either chart).
HPoint line_point(const SegmentCode& code, double s);

/// Code of the left translate of the unit segment with planar slope b through
/// q.  X_PARAM: a = q2 - b q1, d = q3 + a q1 / 2, eps = q1 - 1/(2 sqrt(b^2+1)).
SegmentCode code_from_translation(const HPoint& q, double b,
                                  Chart chart = Chart::X_PARAM);

/// Endpoints of the open segment; their Koranyi distance is 1.
std::pair<HPoint, HPoint> segment_endpoints(const SegmentCode& code);

/// Open x-interval covered by an X_PARAM segment.  Throws on Y_PARAM codes.
std::pair<double, double> x_projection_interval(const SegmentCode& code);

/// Unoriented planar direction of the segment, in [0, pi).
double direction_angle(const SegmentCode& code);

/// Finite-difference test of the horizontality ODE t' = (x y' - y x') / 2.
/// Samples are (parameter, point) pairs with strictly increasing parameter;
/// at least 3 are required.
bool is_horizontal(std::span<const std::pair<double, HPoint>> samples,
                   double tol);

enum class SlabCrossing { LEFT, RIGHT, BOTH, NONE };

/// Whether the open x-interval of the segment contains c0 - 1/4 (LEFT),
/// c0 + 1/4 (RIGHT), both or neither.  Never NONE when the interval contains
/// c0 and |b| < sqrt(3).
SlabCrossing slab_crossing(const SegmentCode& code, double c0);

}  // namespace heiskakeya::hlines
