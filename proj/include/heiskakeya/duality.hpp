#pragma once

#include <span>
#include <vector>

#include "heiskakeya/geometry.hpp"
#include "heiskakeya/hgroup.hpp"
#include "heiskakeya/hlines.hpp"

namespace heiskakeya::duality {

using hgroup::HPoint;
using hlines::CodeFamily;
using hlines::SegmentCode;

/// Slope band |b| < sqrt(3) admitted by the line-space machinery.
inline constexpr double kMaxSlopeSq = 3.0;

/// True iff the coded segment meets the plane {x = c}, i.e. c lies in the
/// open x-interval.  X_PARAM codes only.
bool meets_plane(const SegmentCode& code, double c);

/// Subfamily of X_PARAM codes with b^2 < 3 whose segment meets {x = c}.
CodeFamily restrict_family(const CodeFamily& family, double c);

/// (a, b, d) triples of the family, duplicates removed, sorted.
std::vector<Vec3> project_family_p123(const CodeFamily& family);

/// Slopes b of the family, duplicates removed, sorted.
std::vector<double> project_family_p2(const CodeFamily& family);

/// Points (c, b c + a, -a c / 2 + d) of the lines coded by B on {x = c}.
std::vector<HPoint> slice_points(std::span<const Vec3> B, double c);

/// Left translation by (-c, 0, 0); inputs must have x = c (within 1e-12),
/// outputs lie in the {x = 0} plane.
std::vector<HPoint> translate_to_yot(std::span<const HPoint> points, double c);

/// Vertical coordinates of points of the {x = 0} plane (the 1-Lipschitz
/// height map onto the t-axis).
std::vector<double> phi_heights(std::span<const HPoint> points);

/// <(-c, -c^2/2, 1), (a, b, d)>: the height of the translated slice point of
/// the line coded by v = (a, b, d).
double dual_height(const Vec3& v, double c);

/// The direction (-c, -c^2/2, 1); its Euclidean norm is 1 + c^2/2.
Vec3 height_direction(double c);

/// Signed coordinate <w, u> of the orthogonal projection of w onto the unit
/// vector u.  Throws unless |u| = 1 within 1e-12.
double scalar_proj(const Vec3& u, const Vec3& w);

/// (cos theta, sin theta, 1) / sqrt(2); unit norm.
Vec3 gamma_theta(double theta);

/// The angle in [0, 2 pi) with cos = -2 sqrt(2) c / (2 + c^2) and
/// sin = (2 - c^2) / (2 + c^2).
double theta_of_c(double c);

/// The rotation (x, y, z) -> (x, (y + z)/sqrt(2), (z - y)/sqrt(2)); maps the
/// cone {x^2 = -2 y z} onto {x^2 + y^2 = z^2}.
Vec3 rotation_R(const Vec3& p);

/// Residual |proj onto (-c,-c^2/2,1)/|.| of w  -  proj onto
/// gamma(theta(c)) of R(w)|; identically zero up to rounding.
double verify_projection_identity(double c, const Vec3& w);

}  // namespace heiskakeya::duality
