#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "heiskakeya/geometry.hpp"
#include "heiskakeya/hlines.hpp"
#include "heiskakeya/random.hpp"

namespace heiskakeya::setgen {

using hlines::CodeFamily;

using DrawFn = std::function<Vec3(Rng&)>;

/// Thrown by conditional draw functions that run out of candidates (for
/// example a rejection-sampled slab that the set never hits).  Packing
/// routines treat it as "no further candidates".
struct SamplerExhausted {};

/// Exact-point sampler of a subset of R^3 = H.
///
/// draw returns members of the set up to representation error <= 1e-12,
/// always inside bounds.  slab_x, when set, returns an exact sampler of the
/// subset with x in the open interval (lo, hi); a null DrawFn means the slab
/// misses the set.  Draw functions are pure in the rng argument: callers that
/// need independent streams pass independent generators.
struct SetSampler {
  std::string label;
  Box3 bounds{};
  std::uint64_t seed = 0;  // stream id, mixed into every run seed
  DrawFn draw;
  std::function<DrawFn(double lo, double hi)> slab_x;
};

enum class Primitive { PLANE_DISC, T_AXIS, X_AXIS_SEGMENT, CUBE };

/// Calibration sets: the disc {t = 0, x^2 + y^2 <= size^2}, the vertical
/// segment {(0, 0, u) : u in [0, size]}, the segment {(u, 0, 0)}, and the
/// cube [0, size]^3.
SetSampler primitive_sampler(Primitive kind, double size);

/// Uniform code, then uniform parameter in its open interval.
SetSampler union_sampler(const CodeFamily& family);

enum class Placement { ORIGIN, RANDOM, PLANE };

/// One unit horizontal segment per direction i*pi/m, i = 0..m-1.  Directions
/// closer to vertical than pi/3 are coded in the Y_PARAM chart.  ORIGIN
/// translates by the identity, RANDOM by a uniform point of [0,1]^3, PLANE by
/// a point chosen so the segment lies in {t = 0}.
CodeFamily kakeya_union_builder(int m, Placement placement,
                                std::uint64_t rng_seed);

struct KakeyaReport {
  int angles = 0;
  double ang_tol = 0.0;
  int covered = 0;
  std::vector<double> missing;  // unmatched direction angles in [0, pi)
};

/// For each direction j*pi/angles, checks whether some code of the family has
/// that unoriented planar direction within ang_tol (mod pi).
KakeyaReport verify_kakeya(const CodeFamily& family, int angles,
                           double ang_tol);

struct SimilarityMap {
  double ratio = 0.0;
  Vec3 offset{};
};

/// Contracting similarities x -> ratio * x + offset; the sampler draws depth-
/// long random words applied to the fixed point of the first map.
struct IfsSpec {
  std::vector<SimilarityMap> maps;
  int depth = 40;
};

/// Bundled attractors with known similarity dimension: CANTOR2 (two maps of
/// ratio 1/3 at opposite corners of the unit cube diagonal, dim log2/log3)
/// and CANTOR4 (four maps of ratio 1/3 at strongly separated corners,
/// dim log4/log3).
IfsSpec ifs_preset(std::string_view name);

/// Solution s of the Moran equation sum ratio_i^s = 1.
double similarity_dimension(const IfsSpec& spec);

SetSampler ifs_sampler(const IfsSpec& spec, std::uint64_t rng_seed);

}  // namespace heiskakeya::setgen
