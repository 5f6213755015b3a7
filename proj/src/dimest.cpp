#include "heiskakeya/dimest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "heiskakeya/hgroup.hpp"
#include "heiskakeya/random.hpp"

namespace heiskakeya::dimest {

namespace {

inline double heis_dist4(const Vec3& p, const Vec3& q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  const double dt = p.z - q.z + 0.5 * (q.y * p.x - q.x * p.y);
  const double r2 = dx * dx + dy * dy;
  return r2 * r2 + 16.0 * dt * dt;
}

inline double eucl_dist2(const Vec3& p, const Vec3& q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  const double dz = p.z - q.z;
  return dx * dx + dy * dy + dz * dz;
}

/// Cell list over the sampler's bounding box.  Cell extents cover the
/// coordinate reach of a Koranyi delta-ball, so any pair closer than delta
/// lands in adjacent cells:
///   |dx|, |dy| <= delta,
///   |dt_raw|   <= delta^2/4 + R_xy * delta / 2
/// (the twist term is bounded by the xy-radius R_xy of the box).  Euclidean
/// mode uses isotropic delta cells.
class CellGrid {
 public:
  CellGrid(const Box3& box, double delta, Metric metric) : metric_(metric) {
    delta4_ = delta * delta * delta * delta;
    delta2_ = delta * delta;
    double hx = delta, hy = delta, hz = delta;
    if (metric == Metric::HEISENBERG) {
      hz = 0.25 * delta * delta + 0.5 * box.max_xy_radius() * delta;
    }
    origin_ = box.lo;
    nx_ = axis_cells(box.hi.x - box.lo.x, hx);
    ny_ = axis_cells(box.hi.y - box.lo.y, hy);
    nz_ = axis_cells(box.hi.z - box.lo.z, hz);
    // cap the table size; growing cells keeps the adjacency guarantee
    while (static_cast<std::uint64_t>(nx_) * ny_ * nz_ > (1u << 22)) {
      if (nx_ >= ny_ && nx_ >= nz_) {
        hx *= 2.0;
        nx_ = axis_cells(box.hi.x - box.lo.x, hx);
      } else if (ny_ >= nz_) {
        hy *= 2.0;
        ny_ = axis_cells(box.hi.y - box.lo.y, hy);
      } else {
        hz *= 2.0;
        nz_ = axis_cells(box.hi.z - box.lo.z, hz);
      }
    }
    inv_hx_ = 1.0 / hx;
    inv_hy_ = 1.0 / hy;
    inv_hz_ = 1.0 / hz;
    heads_.assign(static_cast<std::size_t>(nx_) * ny_ * nz_, -1);
  }

  void insert(const Vec3& p, const std::vector<Vec3>& points) {
    const std::size_t idx = points.size() - 1;  // p == points.back()
    const std::size_t cell = cell_of(p);
    next_.push_back(heads_[cell]);
    heads_[cell] = static_cast<std::int64_t>(idx);
  }

  /// True iff some stored point lies at distance < delta from p.
  bool blocked(const Vec3& p, const std::vector<Vec3>& points) const {
    const int cx = coord(p.x, origin_.x, inv_hx_, nx_);
    const int cy = coord(p.y, origin_.y, inv_hy_, ny_);
    const int cz = coord(p.z, origin_.z, inv_hz_, nz_);
    static constexpr int kOff[3] = {0, -1, 1};  // own cell first
    for (int iz : kOff) {
      const int z = cz + iz;
      if (z < 0 || z >= nz_) continue;
      for (int iy : kOff) {
        const int y = cy + iy;
        if (y < 0 || y >= ny_) continue;
        for (int ix : kOff) {
          const int x = cx + ix;
          if (x < 0 || x >= nx_) continue;
          const std::size_t cell =
              (static_cast<std::size_t>(z) * ny_ + y) * nx_ + x;
          for (std::int64_t i = heads_[cell]; i >= 0; i = next_[i]) {
            const Vec3& q = points[static_cast<std::size_t>(i)];
            if (metric_ == Metric::HEISENBERG) {
              if (heis_dist4(p, q) < delta4_) return true;
            } else {
              if (eucl_dist2(p, q) < delta2_) return true;
            }
          }
        }
      }
    }
    return false;
  }

 private:
  static int axis_cells(double range, double h) {
    if (!(range > 0.0)) return 1;
    const double n = std::ceil(range / h);
    if (!(n >= 1.0)) return 1;
    return n >= 4194304.0 ? 4194304 : static_cast<int>(n);  // 2^22 per axis
  }

  int coord(double v, double origin, double inv_h, int n) const {
    const int c = static_cast<int>(std::floor((v - origin) * inv_h));
    return std::clamp(c, 0, n - 1);
  }

  std::size_t cell_of(const Vec3& p) const {
    const int cx = coord(p.x, origin_.x, inv_hx_, nx_);
    const int cy = coord(p.y, origin_.y, inv_hy_, ny_);
    const int cz = coord(p.z, origin_.z, inv_hz_, nz_);
    return (static_cast<std::size_t>(cz) * ny_ + cy) * nx_ + cx;
  }

  Metric metric_;
  double delta2_ = 0, delta4_ = 0;
  Vec3 origin_;
  int nx_ = 1, ny_ = 1, nz_ = 1;
  double inv_hx_ = 1, inv_hy_ = 1, inv_hz_ = 1;
  std::vector<std::int64_t> heads_;
  std::vector<std::int64_t> next_;
};

}  // namespace

double metric_dist(Metric metric, const Vec3& p, const Vec3& q) {
  if (metric == Metric::HEISENBERG) {
    return std::sqrt(std::sqrt(heis_dist4(p, q)));
  }
  return std::sqrt(eucl_dist2(p, q));
}

ScaleLadder ScaleLadder::geometric(double delta_max, double delta_min,
                                   int levels) {
  if (levels < 2) {
    throw std::invalid_argument("dimest::ScaleLadder: need >= 2 levels");
  }
  ScaleLadder ladder;
  ladder.deltas.reserve(static_cast<std::size_t>(levels));
  const double log_ratio = std::log(delta_min / delta_max) / (levels - 1);
  for (int k = 0; k < levels; ++k) {
    ladder.deltas.push_back(delta_max * std::exp(log_ratio * k));
  }
  ladder.validate();
  return ladder;
}

void ScaleLadder::validate() const {
  if (deltas.empty()) {
    throw std::invalid_argument("dimest::ScaleLadder: empty");
  }
  for (double d : deltas) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw std::invalid_argument("dimest::ScaleLadder: scales must be positive");
    }
  }
  for (std::size_t i = 1; i < deltas.size(); ++i) {
    const double ratio = deltas[i - 1] / deltas[i];
    if (!(ratio >= 1.2 && ratio <= 2.0)) {
      throw std::invalid_argument(
          "dimest::ScaleLadder: consecutive ratio must lie in [1.2, 2.0]");
    }
  }
}

ScaleLadder default_ladder() {
  ScaleLadder ladder;
  for (int k = 0; k <= 6; ++k) {
    ladder.deltas.push_back(0.3 * std::pow(2.0, -0.5 * k));
  }
  return ladder;
}

PackingResult greedy_packing_count(const SetSampler& sampler, double delta,
                                   Metric metric, int stop_k,
                                   std::uint64_t rng_seed,
                                   std::span<const Vec3> seed_points) {
  if (!(delta > 0.0)) {
    throw std::invalid_argument("dimest::greedy_packing_count: delta must be > 0");
  }
  if (stop_k < 1) {
    throw std::invalid_argument("dimest::greedy_packing_count: stop_k must be >= 1");
  }
  if (!sampler.draw) {
    throw std::invalid_argument("dimest::greedy_packing_count: sampler has no draw");
  }

  CellGrid grid(sampler.bounds, delta, metric);
  PackingResult result;
  result.points.reserve(seed_points.size() + 1024);
  for (const Vec3& p : seed_points) {  // pre-accepted by contract
    result.points.push_back(p);
    grid.insert(p, result.points);
  }

  Rng rng(mix_seed(rng_seed, sampler.seed));
  int consecutive_rejects = 0;
  while (consecutive_rejects < stop_k) {
    Vec3 candidate;
    try {
      candidate = sampler.draw(rng);
    } catch (const setgen::SamplerExhausted&) {
      break;
    }
    if (grid.blocked(candidate, result.points)) {
      ++consecutive_rejects;
    } else {
      result.points.push_back(candidate);
      grid.insert(candidate, result.points);
      consecutive_rejects = 0;
    }
  }
  result.count = result.points.size();
  return result;
}

DimEstimate fit_scaling_exponent(std::span<const double> deltas,
                                 std::span<const std::size_t> counts) {
  if (deltas.size() != counts.size()) {
    throw std::invalid_argument("dimest::fit_scaling_exponent: size mismatch");
  }
  if (deltas.size() < 4) {
    throw std::invalid_argument("dimest::fit_scaling_exponent: need >= 4 scales");
  }
  const std::size_t n = deltas.size();
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (counts[i] == 0) {
      throw std::invalid_argument("dimest::fit_scaling_exponent: zero count");
    }
    xs[i] = std::log2(1.0 / deltas[i]);
    ys[i] = std::log2(static_cast<double>(counts[i]));
  }
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    syy += (ys[i] - mean_y) * (ys[i] - mean_y);
  }
  DimEstimate est;
  est.deltas.assign(deltas.begin(), deltas.end());
  est.counts.assign(counts.begin(), counts.end());
  est.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  est.intercept = mean_y - est.slope * mean_x;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - (est.intercept + est.slope * xs[i]);
    ss_res += r * r;
  }
  est.r2 = syy > 0.0 ? std::max(0.0, 1.0 - ss_res / syy) : 1.0;
  return est;
}

DimEstimate estimate_dimension(const SetSampler& sampler,
                               const ScaleLadder& ladder, Metric metric,
                               const EstimateParams& params) {
  ladder.validate();
  std::vector<std::size_t> counts;
  counts.reserve(ladder.deltas.size());
  std::vector<Vec3> carried;
  for (std::size_t k = 0; k < ladder.deltas.size(); ++k) {
    PackingResult run =
        greedy_packing_count(sampler, ladder.deltas[k], metric, params.stop_k,
                             mix_seed(params.seed, k), carried);
    counts.push_back(run.count);
    carried = std::move(run.points);
  }
  DimEstimate est = fit_scaling_exponent(ladder.deltas, counts);
  est.metric = metric;
  est.label = sampler.label;
  est.seed = params.seed;
  return est;
}

double comparability_constant(const Box3& box, int n_pairs,
                              std::uint64_t seed) {
  if (n_pairs < 1) {
    throw std::invalid_argument("dimest::comparability_constant: n_pairs >= 1");
  }
  Rng rng(mix_seed(seed, 0x5eedULL));
  auto draw = [&](void) -> Vec3 {
    return {uniform(rng, box.lo.x, box.hi.x), uniform(rng, box.lo.y, box.hi.y),
            uniform(rng, box.lo.z, box.hi.z)};
  };
  double worst = 1.0;
  for (int i = 0; i < n_pairs; ++i) {
    const Vec3 p = draw();
    const Vec3 q = draw();
    const double dh = metric_dist(Metric::HEISENBERG, p, q);
    if (dh <= 0.0) continue;
    worst = std::max(worst, metric_dist(Metric::EUCLIDEAN, p, q) / dh);
  }
  return 2.0 * worst;
}

}  // namespace heiskakeya::dimest
