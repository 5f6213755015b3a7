#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "heiskakeya/geometry.hpp"
#include "heiskakeya/setgen.hpp"

namespace heiskakeya::dimest {

using setgen::SetSampler;

enum class Metric { EUCLIDEAN, HEISENBERG };

double metric_dist(Metric metric, const Vec3& p, const Vec3& q);

/// Strictly decreasing scales with consecutive ratio in [1.2, 2.0].
struct ScaleLadder {
  std::vector<double> deltas;

  static ScaleLadder geometric(double delta_max, double delta_min, int levels);
  void validate() const;  // throws std::invalid_argument on violation
};

/// 0.3 * 2^(-k/2), k = 0..6.
ScaleLadder default_ladder();

struct DimEstimate {
  std::vector<double> deltas;
  std::vector<std::size_t> counts;
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 1.0;
  Metric metric = Metric::EUCLIDEAN;
  std::string label;
  std::uint64_t seed = 0;
};

struct PackingResult {
  std::size_t count = 0;
  std::vector<Vec3> points;
};

/// Monte Carlo greedy maximal delta-separated subset: candidates come from
/// the sampler and are accepted iff their distance to every accepted point is
/// >= delta; stops after stop_k consecutive rejections (or when the sampler
/// throws SamplerExhausted).  seed_points (from a run at a larger delta) are
/// pre-accepted.
PackingResult greedy_packing_count(const SetSampler& sampler, double delta,
                                   Metric metric, int stop_k,
                                   std::uint64_t rng_seed,
                                   std::span<const Vec3> seed_points = {});

/// Least-squares line through (log2(1/delta_i), log2 count_i).  Requires at
/// least 4 scales and positive counts.  r2 is 1 for an exact fit, including
/// the constant-count case.
DimEstimate fit_scaling_exponent(std::span<const double> deltas,
                                 std::span<const std::size_t> counts);

struct EstimateParams {
  int stop_k = 2000;
  std::uint64_t seed = 0;
};

/// Runs greedy packing per scale from largest to smallest, seeding each run
/// with the previous accepted set (counts are therefore nondecreasing as
/// delta decreases), then fits the scaling exponent.
DimEstimate estimate_dimension(const SetSampler& sampler,
                               const ScaleLadder& ladder, Metric metric,
                               const EstimateParams& params);

/// Empirical Euclidean/Koranyi comparability bound on a box: twice the
/// maximum of d_E / d_H over n_pairs random pairs.
double comparability_constant(const Box3& box, int n_pairs,
                              std::uint64_t seed);

}  // namespace heiskakeya::dimest
