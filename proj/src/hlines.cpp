#include "heiskakeya/hlines.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace heiskakeya::hlines {

double param_interval_length(const SegmentCode& code) {
  return 1.0 / std::sqrt(code.b * code.b + 1.0);
}

HPoint line_point(const SegmentCode& code, double s) {
  if (code.chart == Chart::X_PARAM) {
    return {s, code.b * s + code.a, -0.5 * code.a * s + code.d};
  }
  return {code.b * s + code.a, s, 0.5 * code.a * s + code.d};
}

SegmentCode code_from_translation(const HPoint& q, double b, Chart chart) {
  const double half_len = 0.5 / std::sqrt(b * b + 1.0);
  if (chart == Chart::X_PARAM) {
    const double a = q.y - b * q.x;
    return {a, b, q.t + 0.5 * a * q.x, q.x - half_len, chart};
  }
  const double a = q.x - b * q.y;
  return {a, b, q.t - 0.5 * a * q.y, q.y - half_len, chart};
}

std::pair<HPoint, HPoint> segment_endpoints(const SegmentCode& code) {
  const double len = param_interval_length(code);
  return {line_point(code, code.eps), line_point(code, code.eps + len)};
}

std::pair<double, double> x_projection_interval(const SegmentCode& code) {
  if (code.chart != Chart::X_PARAM) {
    throw std::invalid_argument(
        "hlines::x_projection_interval: code must be in the X_PARAM chart");
  }
  return {code.eps, code.eps + param_interval_length(code)};
}

double direction_angle(const SegmentCode& code) {
  if (code.chart == Chart::X_PARAM) {
    // direction (1, b)
    const double ang = std::atan(code.b);
    return ang < 0.0 ? ang + std::numbers::pi : ang;
  }
  // direction (b, 1), already in (0, pi)
  return std::atan2(1.0, code.b);
}

bool is_horizontal(std::span<const std::pair<double, HPoint>> samples,
                   double tol) {
  if (samples.size() < 3) {
    throw std::invalid_argument("hlines::is_horizontal: need >= 3 samples");
  }
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!(samples[i].first > samples[i - 1].first)) {
      throw std::invalid_argument(
          "hlines::is_horizontal: parameters must be strictly increasing");
    }
  }
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
    const auto& [s_prev, p_prev] = samples[i - 1];
    const auto& [s_next, p_next] = samples[i + 1];
    const HPoint& p = samples[i].second;
    const double h = s_next - s_prev;
    const double dx = (p_next.x - p_prev.x) / h;
    const double dy = (p_next.y - p_prev.y) / h;
    const double dt = (p_next.t - p_prev.t) / h;
    if (std::abs(dt - 0.5 * (p.x * dy - p.y * dx)) > tol) {
      return false;
    }
  }
  return true;
}

SlabCrossing slab_crossing(const SegmentCode& code, double c0) {
  const auto [lo, hi] = x_projection_interval(code);
  const bool left = lo < c0 - 0.25 && c0 - 0.25 < hi;
  const bool right = lo < c0 + 0.25 && c0 + 0.25 < hi;
  if (left && right) return SlabCrossing::BOTH;
  if (left) return SlabCrossing::LEFT;
  if (right) return SlabCrossing::RIGHT;
  return SlabCrossing::NONE;
}

}  // namespace heiskakeya::hlines
