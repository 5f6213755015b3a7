#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "heiskakeya/dimest.hpp"
#include "heiskakeya/hlines.hpp"
#include "heiskakeya/setgen.hpp"

namespace heiskakeya::experiments {

struct ExperimentParams {
  int stop_k = 2000;
  std::uint64_t seed = 0;
  int threads = 0;              // 0 = HEISKAKEYA_THREADS, else hardware
  int slab_reject_cap = 200000; // rejection budget when no exact slab sampler
};

/// Midpoint grid (k + 1/2) * 2 pi / n on [0, 2 pi).
std::vector<double> theta_grid(int n);

struct ThetaEstimate {
  double theta = 0.0;
  dimest::DimEstimate dim;
};

/// For each theta, estimates the Euclidean dimension of the projection of K
/// onto the line through gamma(theta).  Projected values are rescaled to unit
/// range before packing (the exponent is affine-invariant); degenerate
/// directions yield a single point and slope 0.
std::vector<ThetaEstimate> marstrand_experiment(
    const setgen::SetSampler& K, std::span<const double> thetas,
    const dimest::ScaleLadder& ladder, const ExperimentParams& params);

struct CoareaResult {
  double lhs = 0.0;
  double rhs = 0.0;
  std::size_t bulk_count = 0;
  std::vector<std::size_t> slice_counts;

  double ratio() const { return rhs > 0.0 ? lhs / rhs : 0.0; }
};

/// Discrete slice-vs-bulk comparison under the Koranyi metric:
///   lhs = sum_j P_delta(F in {|x - y_j| < delta^2 / 2}) * delta^alpha * dy
///   rhs = P_delta(F) * delta^(alpha + 1)
/// over n_slices midpoints y_j of the slab interval.
CoareaResult coarea_check(const setgen::SetSampler& F, double alpha,
                          double delta, std::pair<double, double> slab,
                          int n_slices, const ExperimentParams& params);

struct PerC {
  double c = 0.0;
  dimest::DimEstimate height_dim;
  double slice_dim_bound = 0.0;  // 2 * height_dim.slope
};

struct PipelineReport {
  double c0 = 0.0;
  hlines::SlabCrossing side = hlines::SlabCrossing::RIGHT;
  double crossing_ratio = 0.0;
  double slope_cover = 0.0;  // covered slope length at the chosen c0
  std::size_t restricted = 0;
  std::size_t kept = 0;
  std::size_t b_points = 0;
  std::vector<PerC> per_c;
  double final_bound = 0.0;
  int c_grid = 0;
  int stop_k = 0;
  std::uint64_t seed = 0;
};

/// The duality -> projection -> slice pipeline: picks the plane {x = c0}
/// whose restriction covers the most slope length, keeps the larger crossing
/// side, projects it to (a, b, d) space, estimates the Euclidean dimension of
/// the dual heights on a c-grid of the quarter interval, and assembles
/// final_bound = 1 + median of the doubled height slopes.
PipelineReport kakeya_dimension_pipeline(const hlines::CodeFamily& family,
                                         int c_grid,
                                         const dimest::ScaleLadder& ladder,
                                         const ExperimentParams& params);

}  // namespace heiskakeya::experiments
