#include "heiskakeya/setgen.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "heiskakeya/hgroup.hpp"

namespace heiskakeya::setgen {

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 to_vec(const hgroup::HPoint& p) { return {p.x, p.y, p.t}; }

/// Open sub-interval (lo, hi) clipped to (a, b); empty when degenerate.
bool clip_open(double lo, double hi, double a, double b, double& out_lo,
               double& out_hi) {
  out_lo = std::max(lo, a);
  out_hi = std::min(hi, b);
  return out_lo < out_hi;
}

}  // namespace

SetSampler primitive_sampler(Primitive kind, double size) {
  if (!(size > 0.0)) {
    throw std::invalid_argument("setgen::primitive_sampler: size must be > 0");
  }
  SetSampler s;
  switch (kind) {
    case Primitive::PLANE_DISC: {
      s.label = "plane_disc";
      s.bounds = {{-size, -size, 0.0}, {size, size, 0.0}};
      s.draw = [size](Rng& rng) {
        const double r = size * std::sqrt(uniform01(rng));
        const double phi = 2.0 * kPi * uniform01(rng);
        return Vec3{r * std::cos(phi), r * std::sin(phi), 0.0};
      };
      s.slab_x = [size](double lo, double hi) -> DrawFn {
        double a, b;
        if (!clip_open(lo, hi, -size, size, a, b)) return nullptr;
        return [size, a, b](Rng& rng) {
          const double x = uniform_open(rng, a, b);
          const double ymax = std::sqrt(std::max(0.0, size * size - x * x));
          return Vec3{x, uniform(rng, -ymax, ymax), 0.0};
        };
      };
      break;
    }
    case Primitive::T_AXIS: {
      s.label = "t_axis";
      s.bounds = {{0.0, 0.0, 0.0}, {0.0, 0.0, size}};
      s.draw = [size](Rng& rng) { return Vec3{0.0, 0.0, size * uniform01(rng)}; };
      s.slab_x = [size](double lo, double hi) -> DrawFn {
        if (!(lo < 0.0 && 0.0 < hi)) return nullptr;
        return [size](Rng& rng) { return Vec3{0.0, 0.0, size * uniform01(rng)}; };
      };
      break;
    }
    case Primitive::X_AXIS_SEGMENT: {
      s.label = "x_axis_segment";
      s.bounds = {{0.0, 0.0, 0.0}, {size, 0.0, 0.0}};
      s.draw = [size](Rng& rng) { return Vec3{size * uniform01(rng), 0.0, 0.0}; };
      s.slab_x = [size](double lo, double hi) -> DrawFn {
        double a, b;
        if (!clip_open(lo, hi, 0.0, size, a, b)) return nullptr;
        return [a, b](Rng& rng) { return Vec3{uniform_open(rng, a, b), 0.0, 0.0}; };
      };
      break;
    }
    case Primitive::CUBE: {
      s.label = "cube";
      s.bounds = {{0.0, 0.0, 0.0}, {size, size, size}};
      s.draw = [size](Rng& rng) {
        const double x = size * uniform01(rng);
        const double y = size * uniform01(rng);
        const double t = size * uniform01(rng);
        return Vec3{x, y, t};
      };
      s.slab_x = [size](double lo, double hi) -> DrawFn {
        double a, b;
        if (!clip_open(lo, hi, 0.0, size, a, b)) return nullptr;
        return [size, a, b](Rng& rng) {
          const double x = uniform_open(rng, a, b);
          const double y = size * uniform01(rng);
          const double t = size * uniform01(rng);
          return Vec3{x, y, t};
        };
      };
      break;
    }
  }
  return s;
}

SetSampler union_sampler(const CodeFamily& family) {
  if (family.codes.empty()) {
    throw std::invalid_argument("setgen::union_sampler: empty family");
  }
  auto codes = std::make_shared<std::vector<hlines::SegmentCode>>(family.codes);

  Box3 bounds = Box3::of_point(to_vec(hlines::line_point((*codes)[0], (*codes)[0].eps)));
  for (const auto& code : *codes) {
    const auto [p0, p1] = hlines::segment_endpoints(code);
    bounds.expand(to_vec(p0));  // all coordinates are linear in s
    bounds.expand(to_vec(p1));
  }

  SetSampler s;
  s.label = family.label.empty() ? "union" : family.label;
  s.bounds = bounds;
  s.draw = [codes](Rng& rng) {
    const auto& code = (*codes)[uniform_index(rng, codes->size())];
    const double len = hlines::param_interval_length(code);
    const double sp = uniform_open(rng, code.eps, code.eps + len);
    return to_vec(hlines::line_point(code, sp));
  };
  s.slab_x = [codes](double lo, double hi) -> DrawFn {
    // per-code parameter range whose image has x in (lo, hi)
    struct Piece {
      hlines::SegmentCode code;
      double s_lo, s_hi;
    };
    auto pieces = std::make_shared<std::vector<Piece>>();
    for (const auto& code : *codes) {
      const double len = hlines::param_interval_length(code);
      double s_lo = code.eps, s_hi = code.eps + len;
      if (code.chart == hlines::Chart::X_PARAM) {
        if (!clip_open(s_lo, s_hi, lo, hi, s_lo, s_hi)) continue;
      } else if (code.b == 0.0) {
        // x constant = a along the segment
        if (!(lo < code.a && code.a < hi)) continue;
      } else {
        double u = (lo - code.a) / code.b;
        double v = (hi - code.a) / code.b;
        if (u > v) std::swap(u, v);
        if (!clip_open(s_lo, s_hi, u, v, s_lo, s_hi)) continue;
      }
      pieces->push_back({code, s_lo, s_hi});
    }
    if (pieces->empty()) return nullptr;
    return [pieces](Rng& rng) {
      const auto& piece = (*pieces)[uniform_index(rng, pieces->size())];
      const double sp = uniform_open(rng, piece.s_lo, piece.s_hi);
      return to_vec(hlines::line_point(piece.code, sp));
    };
  };
  return s;
}

CodeFamily kakeya_union_builder(int m, Placement placement,
                                std::uint64_t rng_seed) {
  if (m < 4) {
    throw std::invalid_argument("setgen::kakeya_union_builder: m must be >= 4");
  }
  Rng rng(mix_seed(rng_seed, 0));
  CodeFamily family;
  family.codes.reserve(static_cast<std::size_t>(m));
  const char* tag = placement == Placement::ORIGIN   ? "origin"
                    : placement == Placement::RANDOM ? "random"
                                                     : "plane";
  family.label = "kakeya_m" + std::to_string(m) + "_" + tag;

  for (int i = 0; i < m; ++i) {
    const double theta = i * kPi / m;
    const bool steep = std::abs(theta - kPi / 2.0) < kPi / 6.0;
    const auto chart = steep ? hlines::Chart::Y_PARAM : hlines::Chart::X_PARAM;
    const double b = steep ? std::cos(theta) / std::sin(theta) : std::tan(theta);

    hgroup::HPoint q{};
    switch (placement) {
      case Placement::ORIGIN:
        break;
      case Placement::RANDOM:
        q = {uniform01(rng), uniform01(rng), uniform01(rng)};
        break;
      case Placement::PLANE: {
        const double u = uniform01(rng);
        q = steep ? hgroup::HPoint{b * u, u, 0.0} : hgroup::HPoint{u, b * u, 0.0};
        break;
      }
    }
    family.codes.push_back(hlines::code_from_translation(q, b, chart));
  }
  return family;
}

KakeyaReport verify_kakeya(const CodeFamily& family, int angles,
                           double ang_tol) {
  if (angles < 1) {
    throw std::invalid_argument("setgen::verify_kakeya: angles must be >= 1");
  }
  std::vector<double> dirs;
  dirs.reserve(family.codes.size());
  for (const auto& code : family.codes) {
    dirs.push_back(hlines::direction_angle(code));
  }
  std::sort(dirs.begin(), dirs.end());

  auto matched = [&](double theta) {
    if (dirs.empty()) return false;
    auto it = std::lower_bound(dirs.begin(), dirs.end(), theta);
    double best = kPi;
    if (it != dirs.end()) best = std::min(best, *it - theta);
    if (it != dirs.begin()) best = std::min(best, theta - *std::prev(it));
    // wrap around pi (directions are unoriented)
    best = std::min(best, dirs.front() + kPi - theta);
    best = std::min(best, theta + kPi - dirs.back());
    return best <= ang_tol;
  };

  KakeyaReport report;
  report.angles = angles;
  report.ang_tol = ang_tol;
  for (int j = 0; j < angles; ++j) {
    const double theta = j * kPi / angles;
    if (matched(theta)) {
      ++report.covered;
    } else {
      report.missing.push_back(theta);
    }
  }
  return report;
}

IfsSpec ifs_preset(std::string_view name) {
  const double r = 1.0 / 3.0;
  if (name == "CANTOR2" || name == "cantor2") {
    return {{{r, {0.0, 0.0, 0.0}}, {r, {2.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0}}}, 40};
  }
  if (name == "CANTOR4" || name == "cantor4") {
    return {{{r, {0.0, 0.0, 0.0}},
             {r, {2.0 / 3.0, 0.0, 0.0}},
             {r, {0.0, 2.0 / 3.0, 0.0}},
             {r, {0.0, 0.0, 2.0 / 3.0}}},
            40};
  }
  throw std::invalid_argument("setgen::ifs_preset: unknown preset '" +
                              std::string(name) + "'");
}

double similarity_dimension(const IfsSpec& spec) {
  if (spec.maps.empty()) {
    throw std::invalid_argument("setgen::similarity_dimension: no maps");
  }
  auto moran = [&](double s) {
    double sum = 0.0;
    for (const auto& map : spec.maps) sum += std::pow(map.ratio, s);
    return sum - 1.0;
  };
  double lo = 0.0, hi = 16.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (moran(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

SetSampler ifs_sampler(const IfsSpec& spec, std::uint64_t rng_seed) {
  if (spec.depth < 1) {
    throw std::invalid_argument("setgen::ifs_sampler: depth must be >= 1");
  }
  if (spec.maps.empty()) {
    throw std::invalid_argument("setgen::ifs_sampler: no maps");
  }
  for (const auto& map : spec.maps) {
    if (!(map.ratio > 0.0 && map.ratio < 1.0)) {
      throw std::invalid_argument("setgen::ifs_sampler: ratios must be in (0,1)");
    }
  }

  // attractor bounding box: per-axis fixed point of lo -> min_i(r lo + o_i);
  // iterate until stationary (rate is the largest ratio)
  auto axis_bound = [&](auto pick, bool want_min) {
    double v = pick(spec.maps[0].offset) / (1.0 - spec.maps[0].ratio);
    for (int it = 0; it < 100000; ++it) {
      double next = want_min ? 1e300 : -1e300;
      for (const auto& map : spec.maps) {
        const double image = map.ratio * v + pick(map.offset);
        next = want_min ? std::min(next, image) : std::max(next, image);
      }
      if (std::abs(next - v) <= 1e-15 * std::max(1.0, std::abs(v))) {
        return next;
      }
      v = next;
    }
    return v;
  };
  Box3 bounds;
  bounds.lo = {axis_bound([](const Vec3& v) { return v.x; }, true),
               axis_bound([](const Vec3& v) { return v.y; }, true),
               axis_bound([](const Vec3& v) { return v.z; }, true)};
  bounds.hi = {axis_bound([](const Vec3& v) { return v.x; }, false),
               axis_bound([](const Vec3& v) { return v.y; }, false),
               axis_bound([](const Vec3& v) { return v.z; }, false)};

  auto maps = std::make_shared<std::vector<SimilarityMap>>(spec.maps);
  const auto& first = spec.maps[0];
  const Vec3 start = (1.0 / (1.0 - first.ratio)) * first.offset;
  const int depth = spec.depth;

  SetSampler s;
  s.label = "ifs" + std::to_string(spec.maps.size());
  s.bounds = bounds;
  s.seed = rng_seed;
  s.draw = [maps, start, depth](Rng& rng) {
    Vec3 p = start;
    for (int k = 0; k < depth; ++k) {
      const auto& map = (*maps)[uniform_index(rng, maps->size())];
      p = map.ratio * p + map.offset;
    }
    return p;
  };
  return s;
}

}  // namespace heiskakeya::setgen
