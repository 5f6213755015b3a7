#pragma once

#include <algorithm>
#include <cmath>

namespace heiskakeya {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
  friend constexpr Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr Vec3 operator*(double s, const Vec3& v) {
    return {s * v.x, s * v.y, s * v.z};
  }
};

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

/// Axis-aligned box; z is the vertical (t) coordinate of H.
struct Box3 {
  Vec3 lo{};
  Vec3 hi{};

  void expand(const Vec3& p) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    lo.z = std::min(lo.z, p.z);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
    hi.z = std::max(hi.z, p.z);
  }

  static Box3 of_point(const Vec3& p) { return {p, p}; }

  /// Largest |(x, y)| over the box, bounding the twist term of the group law.
  double max_xy_radius() const {
    const double ax = std::max(std::abs(lo.x), std::abs(hi.x));
    const double ay = std::max(std::abs(lo.y), std::abs(hi.y));
    return std::hypot(ax, ay);
  }
};

}  // namespace heiskakeya
