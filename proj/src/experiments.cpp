#include "heiskakeya/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "heiskakeya/duality.hpp"
#include "heiskakeya/parallel.hpp"
#include "heiskakeya/random.hpp"

namespace heiskakeya::experiments {

namespace {

using dimest::DimEstimate;
using dimest::Metric;
using setgen::DrawFn;
using setgen::SetSampler;

/// 1-D sampler over a fixed list of values, rescaled to [0, 1] (range 0 maps
/// everything to 0).  The scaling exponent is invariant under the rescale;
/// without it a fixed ladder under-resolves small-diameter value sets.
SetSampler finite_value_sampler(std::string label, std::vector<double> values) {
  if (values.empty()) {
    throw std::invalid_argument("experiments: empty value set");
  }
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it, range = *hi_it - *lo_it;
  if (range > 1e-12) {
    for (double& v : values) v = (v - lo) / range;
  } else {
    for (double& v : values) v = 0.0;
  }
  auto data = std::make_shared<std::vector<double>>(std::move(values));
  SetSampler s;
  s.label = std::move(label);
  s.bounds = {{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}};
  s.draw = [data](Rng& rng) {
    return Vec3{(*data)[uniform_index(rng, data->size())], 0.0, 0.0};
  };
  return s;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2]
                    : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

/// Length of the union of (b - r, b + r) over the given slopes.
double covered_length(const std::vector<double>& slopes, double r) {
  double total = 0.0;
  double cur_lo = 0.0, cur_hi = 0.0;
  bool open = false;
  for (double b : slopes) {  // sorted by project_family_p2
    if (!open) {
      cur_lo = b - r;
      cur_hi = b + r;
      open = true;
    } else if (b - r <= cur_hi) {
      cur_hi = b + r;
    } else {
      total += cur_hi - cur_lo;
      cur_lo = b - r;
      cur_hi = b + r;
    }
  }
  if (open) total += cur_hi - cur_lo;
  return total;
}

}  // namespace

std::vector<double> theta_grid(int n) {
  if (n < 1) throw std::invalid_argument("experiments::theta_grid: n >= 1");
  std::vector<double> thetas;
  thetas.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    thetas.push_back((k + 0.5) * 2.0 * std::numbers::pi / n);
  }
  return thetas;
}

std::vector<ThetaEstimate> marstrand_experiment(
    const setgen::SetSampler& K, std::span<const double> thetas,
    const dimest::ScaleLadder& ladder, const ExperimentParams& params) {
  if (thetas.empty()) {
    throw std::invalid_argument("experiments::marstrand_experiment: no thetas");
  }
  ladder.validate();

  std::vector<ThetaEstimate> results(thetas.size());
  parallel_for(thetas.size(), params.threads, [&](std::size_t i) {
    const double theta = thetas[i];
    const Vec3 dir = duality::gamma_theta(theta);

    // empirical projected range from a warm-up pass; the projection sampler
    // rescales every draw by it
    Rng warm(mix_seed(params.seed, 0xA000 + i));
    double lo = 0.0, hi = 0.0;
    for (int k = 0; k < 4096; ++k) {
      const double h = dot(dir, K.draw(warm));
      if (k == 0) {
        lo = hi = h;
      } else {
        lo = std::min(lo, h);
        hi = std::max(hi, h);
      }
    }
    const double range = hi - lo;

    SetSampler proj;
    proj.label = "proj_" + K.label;
    proj.seed = K.seed;
    proj.bounds = {{-0.1, 0.0, 0.0}, {1.1, 0.0, 0.0}};
    if (range > 1e-12) {
      const DrawFn base = K.draw;
      const double inv = 1.0 / range;
      proj.draw = [base, dir, lo, inv](Rng& rng) {
        return Vec3{(dot(dir, base(rng)) - lo) * inv, 0.0, 0.0};
      };
    } else {
      proj.draw = [](Rng&) { return Vec3{0.0, 0.0, 0.0}; };
    }

    dimest::EstimateParams est_params;
    est_params.stop_k = params.stop_k;
    est_params.seed = mix_seed(params.seed, i);
    results[i].theta = theta;
    results[i].dim =
        dimest::estimate_dimension(proj, ladder, Metric::EUCLIDEAN, est_params);
  });
  return results;
}

CoareaResult coarea_check(const setgen::SetSampler& F, double alpha,
                          double delta, std::pair<double, double> slab,
                          int n_slices, const ExperimentParams& params) {
  if (!(alpha >= 0.0)) {
    throw std::invalid_argument("experiments::coarea_check: alpha must be >= 0");
  }
  if (!(delta > 0.0)) {
    throw std::invalid_argument("experiments::coarea_check: delta must be > 0");
  }
  if (n_slices < 2) {
    throw std::invalid_argument("experiments::coarea_check: n_slices must be >= 2");
  }
  if (!(slab.first < slab.second)) {
    throw std::invalid_argument("experiments::coarea_check: empty slab");
  }

  CoareaResult result;
  result.slice_counts.assign(static_cast<std::size_t>(n_slices), 0);

  const double dy = (slab.second - slab.first) / n_slices;
  const double width = delta * delta;

  parallel_for(static_cast<std::size_t>(n_slices) + 1, params.threads,
               [&](std::size_t task) {
    if (task == 0) {  // bulk packing
      result.bulk_count =
          dimest::greedy_packing_count(F, delta, Metric::HEISENBERG,
                                       params.stop_k, mix_seed(params.seed, 0))
              .count;
      return;
    }
    const std::size_t j = task - 1;
    const double yj = slab.first + (static_cast<double>(j) + 0.5) * dy;
    const double lo = yj - 0.5 * width;
    const double hi = yj + 0.5 * width;

    DrawFn slice_draw;
    if (F.slab_x) {
      slice_draw = F.slab_x(lo, hi);
      if (!slice_draw) return;  // slab misses the set: count 0
    } else {
      const DrawFn base = F.draw;
      const int cap = params.slab_reject_cap;
      slice_draw = [base, lo, hi, cap](Rng& rng) -> Vec3 {
        for (int attempt = 0; attempt < cap; ++attempt) {
          const Vec3 p = base(rng);
          if (p.x > lo && p.x < hi) return p;
        }
        throw setgen::SamplerExhausted{};
      };
    }

    SetSampler slice;
    slice.label = F.label + "_slice";
    slice.seed = F.seed;
    slice.bounds = F.bounds;
    slice.bounds.lo.x = std::max(F.bounds.lo.x, lo);
    slice.bounds.hi.x = std::min(F.bounds.hi.x, hi);
    if (slice.bounds.lo.x > slice.bounds.hi.x) {
      slice.bounds.lo.x = slice.bounds.hi.x = yj;
    }
    slice.draw = std::move(slice_draw);
    result.slice_counts[j] =
        dimest::greedy_packing_count(slice, delta, Metric::HEISENBERG,
                                     params.stop_k, mix_seed(params.seed, j + 1))
            .count;
  });

  double slice_sum = 0.0;
  for (std::size_t count : result.slice_counts) {
    slice_sum += static_cast<double>(count);
  }
  result.lhs = slice_sum * std::pow(delta, alpha) * dy;
  result.rhs = static_cast<double>(result.bulk_count) * std::pow(delta, alpha + 1.0);
  return result;
}

PipelineReport kakeya_dimension_pipeline(const hlines::CodeFamily& family,
                                         int c_grid,
                                         const dimest::ScaleLadder& ladder,
                                         const ExperimentParams& params) {
  if (c_grid < 1) {
    throw std::invalid_argument("experiments::kakeya_dimension_pipeline: c_grid >= 1");
  }
  ladder.validate();

  // x-range of the admissible codes
  bool any = false;
  double x_lo = 0.0, x_hi = 0.0;
  for (const auto& code : family.codes) {
    if (code.chart != hlines::Chart::X_PARAM) continue;
    if (!(code.b * code.b < duality::kMaxSlopeSq)) continue;
    const auto [lo, hi] = hlines::x_projection_interval(code);
    if (!any) {
      x_lo = lo;
      x_hi = hi;
      any = true;
    } else {
      x_lo = std::min(x_lo, lo);
      x_hi = std::max(x_hi, hi);
    }
  }
  if (!any) {
    throw std::runtime_error(
        "experiments::kakeya_dimension_pipeline: no codes with |b| < sqrt(3)");
  }

  // step (i): pick the plane whose restriction covers the most slope length
  const double nbhd =
      2.0 * std::sqrt(3.0) / std::max<std::size_t>(64, family.codes.size());
  double best_cover = -1.0;
  double c0 = x_lo;
  for (int g = 0; g < c_grid; ++g) {
    const double c = x_lo + (g + 0.5) * (x_hi - x_lo) / c_grid;
    const auto restricted = duality::restrict_family(family, c);
    if (restricted.codes.empty()) continue;
    const double cover =
        covered_length(duality::project_family_p2(restricted), nbhd);
    if (cover > best_cover) {
      best_cover = cover;
      c0 = c;
    }
  }
  if (best_cover < 0.0) {
    throw std::runtime_error(
        "experiments::kakeya_dimension_pipeline: restriction empty at every grid plane");
  }

  PipelineReport report;
  report.c0 = c0;
  report.slope_cover = best_cover;
  report.c_grid = c_grid;
  report.stop_k = params.stop_k;
  report.seed = params.seed;

  // step (ii): split by quarter-slab crossing, keep the larger side
  const auto restricted = duality::restrict_family(family, c0);
  report.restricted = restricted.codes.size();
  hlines::CodeFamily left, right;
  left.label = right.label = restricted.label;
  for (const auto& code : restricted.codes) {
    switch (hlines::slab_crossing(code, c0)) {
      case hlines::SlabCrossing::BOTH:
        left.codes.push_back(code);
        right.codes.push_back(code);
        break;
      case hlines::SlabCrossing::LEFT:
        left.codes.push_back(code);
        break;
      case hlines::SlabCrossing::RIGHT:
        right.codes.push_back(code);
        break;
      case hlines::SlabCrossing::NONE:
        break;
    }
  }
  const bool go_right = right.codes.size() >= left.codes.size();
  const hlines::CodeFamily& kept = go_right ? right : left;
  report.side = go_right ? hlines::SlabCrossing::RIGHT : hlines::SlabCrossing::LEFT;
  report.kept = kept.codes.size();
  report.crossing_ratio =
      restricted.codes.empty()
          ? 0.0
          : static_cast<double>(kept.codes.size()) / restricted.codes.size();
  if (kept.codes.empty()) {
    throw std::runtime_error(
        "experiments::kakeya_dimension_pipeline: crossing split left no codes");
  }

  // step (iii): the dual point set B
  const std::vector<Vec3> B = duality::project_family_p123(kept);
  report.b_points = B.size();

  // steps (iv)-(v): height dimensions on the quarter interval
  const int n_c = c_grid;
  report.per_c.resize(static_cast<std::size_t>(n_c));
  parallel_for(static_cast<std::size_t>(n_c), params.threads, [&](std::size_t j) {
    const double offset = 0.25 * (static_cast<double>(j) + 0.5) / n_c;
    const double c = go_right ? c0 + offset : c0 - offset;
    std::vector<double> heights;
    heights.reserve(B.size());
    for (const Vec3& v : B) heights.push_back(duality::dual_height(v, c));

    dimest::EstimateParams est_params;
    est_params.stop_k = params.stop_k;
    est_params.seed = mix_seed(params.seed, 0x2000 + j);
    DimEstimate est = dimest::estimate_dimension(
        finite_value_sampler("heights", std::move(heights)), ladder,
        Metric::EUCLIDEAN, est_params);
    report.per_c[j] = {c, std::move(est), 0.0};
    report.per_c[j].slice_dim_bound = 2.0 * report.per_c[j].height_dim.slope;
  });

  std::vector<double> bounds;
  bounds.reserve(report.per_c.size());
  for (const auto& entry : report.per_c) bounds.push_back(entry.slice_dim_bound);
  report.final_bound = 1.0 + median(std::move(bounds));
  return report;
}

}  // namespace heiskakeya::experiments
