#include "heiskakeya/duality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace heiskakeya::duality {

namespace {
constexpr double kCoordTol = 1e-12;
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;
}  // namespace

bool meets_plane(const SegmentCode& code, double c) {
  const auto [lo, hi] = hlines::x_projection_interval(code);
  return lo < c && c < hi;
}

CodeFamily restrict_family(const CodeFamily& family, double c) {
  CodeFamily restricted;
  restricted.label = family.label;
  for (const auto& code : family.codes) {
    if (code.chart != hlines::Chart::X_PARAM) continue;
    if (!(code.b * code.b < kMaxSlopeSq)) continue;
    if (meets_plane(code, c)) restricted.codes.push_back(code);
  }
  return restricted;
}

std::vector<Vec3> project_family_p123(const CodeFamily& family) {
  std::vector<Vec3> out;
  out.reserve(family.codes.size());
  for (const auto& code : family.codes) {
    out.push_back({code.a, code.b, code.d});
  }
  std::sort(out.begin(), out.end(), [](const Vec3& u, const Vec3& v) {
    if (u.x != v.x) return u.x < v.x;
    if (u.y != v.y) return u.y < v.y;
    return u.z < v.z;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<double> project_family_p2(const CodeFamily& family) {
  std::vector<double> out;
  out.reserve(family.codes.size());
  for (const auto& code : family.codes) out.push_back(code.b);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<HPoint> slice_points(std::span<const Vec3> B, double c) {
  std::vector<HPoint> out;
  out.reserve(B.size());
  for (const Vec3& v : B) {
    out.push_back({c, v.y * c + v.x, -0.5 * v.x * c + v.z});
  }
  return out;
}

std::vector<HPoint> translate_to_yot(std::span<const HPoint> points, double c) {
  const HPoint shift{-c, 0.0, 0.0};
  std::vector<HPoint> out;
  out.reserve(points.size());
  for (const HPoint& p : points) {
    if (std::abs(p.x - c) > kCoordTol) {
      throw std::invalid_argument(
          "duality::translate_to_yot: input point is not on {x = c}");
    }
    out.push_back(hgroup::mul(shift, p));
  }
  return out;
}

std::vector<double> phi_heights(std::span<const HPoint> points) {
  std::vector<double> out;
  out.reserve(points.size());
  for (const HPoint& p : points) {
    if (std::abs(p.x) > kCoordTol) {
      throw std::invalid_argument(
          "duality::phi_heights: input point is not on {x = 0}");
    }
    out.push_back(p.t);
  }
  return out;
}

double dual_height(const Vec3& v, double c) {
  return -c * v.x - 0.5 * c * c * v.y + v.z;
}

Vec3 height_direction(double c) { return {-c, -0.5 * c * c, 1.0}; }

double scalar_proj(const Vec3& u, const Vec3& w) {
  if (std::abs(norm(u) - 1.0) > kCoordTol) {
    throw std::invalid_argument("duality::scalar_proj: direction is not unit");
  }
  return dot(w, u);
}

Vec3 gamma_theta(double theta) {
  return {kInvSqrt2 * std::cos(theta), kInvSqrt2 * std::sin(theta), kInvSqrt2};
}

double theta_of_c(double c) {
  const double denom = 2.0 + c * c;
  const double cos_th = -2.0 * std::numbers::sqrt2 * c / denom;
  const double sin_th = (2.0 - c * c) / denom;
  double theta = std::atan2(sin_th, cos_th);
  if (theta < 0.0) theta += 2.0 * std::numbers::pi;
  return theta;
}

Vec3 rotation_R(const Vec3& p) {
  return {p.x, kInvSqrt2 * (p.y + p.z), kInvSqrt2 * (p.z - p.y)};
}

double verify_projection_identity(double c, const Vec3& w) {
  const Vec3 hd = height_direction(c);
  const Vec3 u1 = (1.0 / (1.0 + 0.5 * c * c)) * hd;
  const double lhs = scalar_proj(u1, w);
  const double rhs = scalar_proj(gamma_theta(theta_of_c(c)), rotation_R(w));
  return std::abs(lhs - rhs);
}

}  // namespace heiskakeya::duality
