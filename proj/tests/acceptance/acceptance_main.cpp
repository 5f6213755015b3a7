// Acceptance suite: one function per criterion, each printing a PASS/FAIL
// line with the measured numbers.  Run all or a single one:
//   acceptance [--criterion N]
// Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "heiskakeya/cli.hpp"
#include "heiskakeya/dimest.hpp"
#include "heiskakeya/duality.hpp"
#include "heiskakeya/experiments.hpp"
#include "heiskakeya/hgroup.hpp"
#include "heiskakeya/hlines.hpp"
#include "heiskakeya/json_io.hpp"
#include "heiskakeya/random.hpp"
#include "heiskakeya/setgen.hpp"

using namespace heiskakeya;
using hgroup::HPoint;

namespace {

constexpr std::uint64_t kSeed = 2026;

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

// --- criterion 1: algebraic identity suite ----------------------------------

bool criterion1() {
  Rng rng(mix_seed(kSeed, 1));
  auto coord = [&rng]() { return uniform(rng, -10.0, 10.0); };

  double worst = 0.0;
  auto track = [&worst](double r) { worst = std::max(worst, r); };

  const int n = 1000000;
  for (int i = 0; i < n; ++i) {
    const HPoint p{coord(), coord(), coord()};
    const HPoint q{coord(), coord(), coord()};
    const HPoint g{coord(), coord(), coord()};

    // group: associativity, inverse
    const HPoint pq_g = hgroup::mul(hgroup::mul(p, q), g);
    const HPoint p_qg = hgroup::mul(p, hgroup::mul(q, g));
    track(std::abs(pq_g.x - p_qg.x));
    track(std::abs(pq_g.y - p_qg.y));
    track(std::abs(pq_g.t - p_qg.t));
    const HPoint unit = hgroup::mul(hgroup::inv(p), p);
    track(std::abs(unit.x));
    track(std::abs(unit.y));
    track(std::abs(unit.t));

    // metric axioms and left-invariance
    track(std::abs(hgroup::dist(p, q) - hgroup::dist(q, p)));
    track(hgroup::dist(p, g) - hgroup::dist(p, q) - hgroup::dist(q, g));
    track(hgroup::dist(p, p));
    track(std::abs(hgroup::dist(hgroup::mul(g, p), hgroup::mul(g, q)) -
                   hgroup::dist(p, q)));

    // dilation homogeneity (relative)
    const double r = uniform(rng, 0.1, 5.0);
    const double kn = hgroup::knorm(p);
    track(std::abs(hgroup::knorm(hgroup::dilate(r, p)) - r * kn) /
          std::max(1e-300, r * kn));

    // duality identities
    const double c = uniform(rng, -10.0, 10.0);
    const Vec3 v{coord(), coord(), coord()};
    const Vec3 w{coord(), coord(), coord()};
    const Vec3 hd = duality::height_direction(c);
    track(std::abs(norm(hd) - (1.0 + 0.5 * c * c)));
    track(std::abs(norm(duality::gamma_theta(duality::theta_of_c(c))) - 1.0));
    track(std::abs(dot(duality::rotation_R(v), duality::rotation_R(w)) -
                   dot(v, w)));

    // rotation maps the cone {x^2 = -2yz} onto {x^2 + y^2 = z^2}
    const double u = uniform(rng, -2.0, 2.0);
    const double s = uniform(rng, -2.5, 2.5);
    const Vec3 image = duality::rotation_R(s * Vec3{-u, -0.5 * u * u, 1.0});
    track(std::abs(image.x * image.x + image.y * image.y - image.z * image.z));

    const Vec3 u1 = (1.0 / (1.0 + 0.5 * c * c)) * hd;
    const Vec3 ru1 = duality::rotation_R(u1);
    const Vec3 gam = duality::gamma_theta(duality::theta_of_c(c));
    track(std::max({std::abs(ru1.x - gam.x), std::abs(ru1.y - gam.y),
                    std::abs(ru1.z - gam.z)}));
    track(duality::verify_projection_identity(c, w));
  }

  const bool ok = worst <= 1e-12;
  std::printf(
      "[%s] criterion 1: algebraic identities over 10^6 samples, max residual "
      "%s (tolerance 1e-12)\n",
      ok ? "PASS" : "FAIL", num(worst).c_str());
  return ok;
}

// --- criterion 2: unit-segment coding suite ----------------------------------

bool criterion2() {
  Rng rng(mix_seed(kSeed, 2));
  Check check;

  double worst_len = 0.0, worst_translate = 0.0;
  bool interval_exact = true, threshold_ok = true;
  for (int i = 0; i < 10000; ++i) {
    const hlines::SegmentCode code{uniform(rng, -10, 10), uniform(rng, -5, 5),
                                   uniform(rng, -10, 10), uniform(rng, -10, 10)};
    const auto [a, b] = hlines::segment_endpoints(code);
    worst_len = std::max(worst_len, std::abs(hgroup::dist(a, b) - 1.0));

    const auto [lo, hi] = hlines::x_projection_interval(code);
    const double len = hlines::param_interval_length(code);
    interval_exact = interval_exact && lo == code.eps && hi == code.eps + len &&
                     len == 1.0 / std::sqrt(code.b * code.b + 1.0);
    threshold_ok = threshold_ok && ((len > 0.5) == (code.b * code.b < 3.0));

    const HPoint q{uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5)};
    const double slope = uniform(rng, -4, 4);
    const double tau = uniform(rng, -2, 2);
    const auto coded = hlines::code_from_translation(q, slope);
    const HPoint direct = hgroup::mul(q, {tau, slope * tau, 0.0});
    const HPoint via = hlines::line_point(coded, q.x + tau);
    worst_translate = std::max({worst_translate, std::abs(direct.x - via.x),
                                std::abs(direct.y - via.y),
                                std::abs(direct.t - via.t)});
  }
  check.require(worst_len <= 1e-12,
                "endpoint distance residual " + num(worst_len));
  check.require(interval_exact, "x-interval is not the exact closed form");
  check.require(threshold_ok, "length > 1/2 iff b^2 < 3 failed");
  check.require(worst_translate <= 1e-12,
                "translation residual " + num(worst_translate));

  // quarter-slab crossing is total on a 200 x 200 qualifying grid
  const double c0 = 0.3;
  const double sqrt3 = std::sqrt(3.0);
  int none_count = 0;
  for (int i = 0; i < 200; ++i) {
    const double b = -sqrt3 + (i + 0.5) * (2.0 * sqrt3 / 200.0);
    const double len = 1.0 / std::sqrt(b * b + 1.0);
    for (int j = 0; j < 200; ++j) {
      const double eps = c0 - len + (j + 0.5) * (len / 200.0);
      if (hlines::slab_crossing({0, b, 0, eps}, c0) ==
          hlines::SlabCrossing::NONE) {
        ++none_count;
      }
    }
  }
  check.require(none_count == 0, "slab crossing returned NONE " +
                                     std::to_string(none_count) + " times");

  std::printf(
      "[%s] criterion 2: segment coding; endpoint residual %s, translation "
      "residual %s, slab grid 200x200 total%s%s\n",
      check.ok ? "PASS" : "FAIL", num(worst_len).c_str(),
      num(worst_translate).c_str(), check.ok ? "" : " — ",
      check.detail.c_str());
  return check.ok;
}

// --- criterion 3: dimension calibration --------------------------------------

bool criterion3() {
  using dimest::Metric;
  using setgen::Primitive;
  const auto ladder = dimest::ScaleLadder::geometric(0.3, 0.053, 6);

  struct Calibration {
    const char* name;
    Primitive kind;
    double size;
    Metric metric;
    double expect, tol;
  };
  const Calibration runs[] = {
      {"xseg(10)/E", Primitive::X_AXIS_SEGMENT, 10.0, Metric::EUCLIDEAN, 1.0, 0.15},
      {"taxis(1)/H", Primitive::T_AXIS, 1.0, Metric::HEISENBERG, 2.0, 0.2},
      {"plane(2)/E", Primitive::PLANE_DISC, 2.0, Metric::EUCLIDEAN, 2.0, 0.15},
      {"plane(2)/H", Primitive::PLANE_DISC, 2.0, Metric::HEISENBERG, 3.0, 0.3},
      {"cube(1)/H", Primitive::CUBE, 1.0, Metric::HEISENBERG, 4.0, 0.3},
  };

  Check check;
  std::string measured;
  for (const auto& run : runs) {
    const auto sampler = setgen::primitive_sampler(run.kind, run.size);
    const auto est =
        dimest::estimate_dimension(sampler, ladder, run.metric, {2000, kSeed});
    if (!measured.empty()) measured += ", ";
    measured += std::string(run.name) + "=" + num(est.slope);
    check.require(std::abs(est.slope - run.expect) <= run.tol,
                  std::string(run.name) + " slope " + num(est.slope) +
                      " outside " + num(run.expect) + "+-" + num(run.tol));
    check.require(est.r2 >= 0.98,
                  std::string(run.name) + " r2 " + num(est.r2) + " < 0.98");
  }
  std::printf("[%s] criterion 3: calibration slopes %s (all r2 >= 0.98)%s%s\n",
              check.ok ? "PASS" : "FAIL", measured.c_str(),
              check.ok ? "" : " — ", check.detail.c_str());
  return check.ok;
}

// --- criterion 4: projection sweeps -------------------------------------------

bool criterion4() {
  const auto ladder =
      dimest::ScaleLadder::geometric(0.15, 0.15 * std::pow(2.0, -7.0), 15);
  experiments::ExperimentParams params;
  params.stop_k = 3000;
  params.seed = kSeed;
  const auto thetas = experiments::theta_grid(32);

  Check check;
  std::string measured;
  const struct {
    const char* preset;
    double target;
  } sweeps[] = {{"CANTOR2", std::log(2.0) / std::log(3.0)}, {"CANTOR4", 1.0}};
  for (const auto& sweep : sweeps) {
    const auto K = setgen::ifs_sampler(setgen::ifs_preset(sweep.preset), kSeed);
    const auto results =
        experiments::marstrand_experiment(K, thetas, ladder, params);
    int within = 0;
    for (const auto& r : results) {
      if (std::abs(r.dim.slope - sweep.target) <= 0.15) ++within;
    }
    if (!measured.empty()) measured += ", ";
    measured += std::string(sweep.preset) + ": " + std::to_string(within) +
                "/32 within 0.15 of " + num(sweep.target);
    check.require(within >= 29, std::string(sweep.preset) + " only " +
                                    std::to_string(within) + "/32 (need >= 29)");
  }
  std::printf("[%s] criterion 4: projection sweeps %s%s%s\n",
              check.ok ? "PASS" : "FAIL", measured.c_str(),
              check.ok ? "" : " — ", check.detail.c_str());
  return check.ok;
}

// --- criterion 5: slice-vs-bulk comparison ------------------------------------

bool criterion5() {
  using setgen::Primitive;
  const auto ladder = dimest::ScaleLadder::geometric(0.3, 0.053, 6);

  Check check;
  std::string measured;
  const struct {
    const char* name;
    Primitive kind;
    double alpha;
    std::pair<double, double> slab;
  } cases[] = {{"cube(1) alpha=3", Primitive::CUBE, 3.0, {0.0, 1.0}},
               {"plane(1) alpha=2", Primitive::PLANE_DISC, 2.0, {-1.0, 1.0}}};
  for (const auto& entry : cases) {
    const auto F = setgen::primitive_sampler(entry.kind, 1.0);
    double ratio_lo = 1e300, ratio_hi = 0.0;
    for (std::size_t k = 0; k < ladder.deltas.size(); ++k) {
      experiments::ExperimentParams params;
      params.stop_k = 2000;
      params.seed = mix_seed(kSeed, 100 + k);
      const auto res = experiments::coarea_check(
          F, entry.alpha, ladder.deltas[k], entry.slab, 8, params);
      ratio_lo = std::min(ratio_lo, res.ratio());
      ratio_hi = std::max(ratio_hi, res.ratio());
      check.require(res.ratio() >= 1.0 / 8.0 && res.ratio() <= 8.0,
                    std::string(entry.name) + " ratio " + num(res.ratio()) +
                        " at delta " + num(ladder.deltas[k]));
    }
    if (!measured.empty()) measured += ", ";
    measured += std::string(entry.name) + " ratios in [" + num(ratio_lo) +
                ", " + num(ratio_hi) + "]";
  }
  std::printf("[%s] criterion 5: slice-vs-bulk %s (band [1/8, 8])%s%s\n",
              check.ok ? "PASS" : "FAIL", measured.c_str(),
              check.ok ? "" : " — ", check.detail.c_str());
  return check.ok;
}

// --- criterion 6: pipeline headline -------------------------------------------

bool criterion6() {
  const auto ladder =
      dimest::ScaleLadder::geometric(0.25, 0.25 * std::pow(2.0, -4.0), 9);
  experiments::ExperimentParams params;
  params.stop_k = 2000;
  params.seed = kSeed;

  Check check;
  const auto family =
      setgen::kakeya_union_builder(4096, setgen::Placement::PLANE, kSeed);
  const auto report =
      experiments::kakeya_dimension_pipeline(family, 16, ladder, params);
  check.require(std::abs(report.final_bound - 3.0) <= 0.3,
                "plane-family final bound " + num(report.final_bound));
  check.require(report.crossing_ratio >= 0.5 - 1.0 / 4096.0,
                "crossing ratio " + num(report.crossing_ratio));

  hlines::CodeFamily control;
  control.label = "single";
  control.codes.push_back({0.2, 0.5, -0.1, -0.4});
  const auto degenerate =
      experiments::kakeya_dimension_pipeline(control, 16, ladder, params);
  check.require(std::abs(degenerate.final_bound - 1.0) <= 0.05,
                "single-code final bound " + num(degenerate.final_bound));

  std::printf(
      "[%s] criterion 6: pipeline final_bound %s (3.0 +- 0.3), crossing_ratio "
      "%s, degenerate control %s%s%s\n",
      check.ok ? "PASS" : "FAIL", num(report.final_bound).c_str(),
      num(report.crossing_ratio).c_str(), num(degenerate.final_bound).c_str(),
      check.ok ? "" : " — ", check.detail.c_str());
  return check.ok;
}

// --- criterion 7: determinism ---------------------------------------------------

bool criterion7() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "heiskakeya_acceptance7";
  fs::remove_all(dir);
  fs::create_directories(dir);

  const std::string family = (dir / "family.json").string();
  const std::vector<std::vector<std::string>> commands = {
      {"kakeya", "build", "--m", "128", "--placement", "plane", "--seed", "9",
       "--out", family},
      {"kakeya", "verify", "--family", family, "--angles", "128", "--out",
       (dir / "verify.json").string()},
      {"dim", "--set", "xseg", "--size", "4", "--metric", "euclidean", "--seed",
       "9", "--delta-max", "0.3", "--delta-min", "0.11", "--levels", "4",
       "--stop-k", "500", "--out", (dir / "dim.csv").string()},
      {"duality", "verify", "--samples", "100000", "--seed", "9", "--out",
       (dir / "duality.json").string()},
      {"marstrand", "--set", "cantor2", "--thetas", "4", "--seed", "9",
       "--delta-max", "0.3", "--delta-min", "0.11", "--levels", "4", "--stop-k",
       "500", "--out", (dir / "marstrand.csv").string()},
      {"coarea", "--set", "cube", "--alpha", "3", "--seed", "9", "--delta-max",
       "0.3", "--delta-min", "0.15", "--levels", "3", "--stop-k", "500",
       "--out", (dir / "coarea.csv").string()},
      {"pipeline", "--family", family, "--c-grid", "6", "--seed", "9",
       "--delta-max", "0.3", "--delta-min", "0.11", "--levels", "4", "--stop-k",
       "500", "--out", (dir / "pipeline.json").string()},
  };

  Check check;
  std::vector<std::pair<std::string, std::string>> first_pass;  // path, bytes
  for (int round = 0; round < 2; ++round) {
    for (const auto& command : commands) {
      if (cli::run(command) != 0) {
        check.require(false, "command '" + command[0] + "' failed");
      }
    }
    if (round == 0) {
      for (const auto& entry : fs::directory_iterator(dir)) {
        first_pass.emplace_back(entry.path().string(),
                                io::read_file(entry.path()));
      }
    }
  }
  std::size_t rechecked = 0;
  for (const auto& [path, bytes] : first_pass) {
    check.require(io::read_file(path) == bytes,
                  "output " + path + " changed between identical runs");
    ++rechecked;
  }
  // family + verify + dim(csv+json) + duality + marstrand(csv+json)
  // + coarea(csv+json) + pipeline(json+csv)
  check.require(rechecked == 11,
                "expected 11 output files, saw " + std::to_string(rechecked));
  std::printf(
      "[%s] criterion 7: %zu output files byte-identical across reruns%s%s\n",
      check.ok ? "PASS" : "FAIL", rechecked, check.ok ? "" : " — ",
      check.detail.c_str());
  fs::remove_all(dir);
  return check.ok;
}

}  // namespace

int main(int argc, char** argv) {
  int which = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      which = std::atoi(argv[i + 1]);
    }
  }

  bool (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                          criterion5, criterion6, criterion7};
  int failures = 0;
  for (int i = 0; i < 7; ++i) {
    if (which != 0 && which != i + 1) continue;
    const auto t0 = std::chrono::steady_clock::now();
    const bool ok = criteria[i]();
    const auto t1 = std::chrono::steady_clock::now();
    std::printf("       criterion %d finished in %.1f s\n", i + 1,
                std::chrono::duration<double>(t1 - t0).count());
    if (!ok) ++failures;
  }
  return failures;
}
