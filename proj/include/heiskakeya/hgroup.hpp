#pragma once

#include <cmath>
#include <stdexcept>

namespace heiskakeya::hgroup {

/// A point (x, y, t) of the first Heisenberg group in exponential coordinates.
struct HPoint {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;

  friend constexpr bool operator==(const HPoint&, const HPoint&) = default;
};

/// Group law: (x, y) adds, t picks up half the signed xy-area.
constexpr HPoint mul(const HPoint& p, const HPoint& q) {
  return {p.x + q.x, p.y + q.y, p.t + q.t + 0.5 * (p.x * q.y - q.x * p.y)};
}

constexpr HPoint inv(const HPoint& p) { return {-p.x, -p.y, -p.t}; }

/// Koranyi gauge ((x^2 + y^2)^2 + 16 t^2)^(1/4).
inline double knorm(const HPoint& p) {
  const double r2 = p.x * p.x + p.y * p.y;
  return std::sqrt(std::sqrt(r2 * r2 + 16.0 * p.t * p.t));
}

/// Left-invariant Koranyi distance d(p, q) = knorm(q^-1 p).
inline double dist(const HPoint& p, const HPoint& q) {
  return knorm(mul(inv(q), p));
}

/// Anisotropic dilation (r x, r y, r^2 t); knorm is 1-homogeneous under it
/// and it is a group automorphism.
inline HPoint dilate(double r, const HPoint& p) {
  if (!(r > 0.0)) {
    throw std::invalid_argument("hgroup::dilate: scale must be positive");
  }
  return {r * p.x, r * p.y, r * r * p.t};
}

}  // namespace heiskakeya::hgroup
