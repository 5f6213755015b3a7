#include "heiskakeya/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "heiskakeya/dimest.hpp"
#include "heiskakeya/duality.hpp"
#include "heiskakeya/experiments.hpp"
#include "heiskakeya/json_io.hpp"
#include "heiskakeya/parallel.hpp"
#include "heiskakeya/random.hpp"
#include "heiskakeya/setgen.hpp"

namespace heiskakeya::cli {

namespace {

namespace fs = std::filesystem;

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

hlines::CodeFamily load_family_src(const std::string& src) {
  if (!src.empty() && src.front() == '{') {
    return io::family_from_json(io::Json::parse(src));
  }
  return io::load_family(src);
}

setgen::IfsSpec load_ifs_src(const std::string& src) {
  if (!src.empty() && src.front() == '{') {
    return io::ifs_from_json(io::Json::parse(src));
  }
  return io::load_ifs(src);
}

struct CommandSpec {
  Command command;
  std::vector<std::string> words;
  std::set<std::string> config_keys;
};

const std::vector<CommandSpec>& command_table() {
  static const std::vector<CommandSpec> table = {
      {Command::DIM,
       {"dim"},
       {"set", "size", "family", "ifs", "metric", "seed", "out", "delta-max",
        "delta-min", "levels", "stop-k"}},
      {Command::KAKEYA_BUILD, {"kakeya", "build"}, {"m", "placement", "seed", "out"}},
      {Command::KAKEYA_VERIFY,
       {"kakeya", "verify"},
       {"family", "angles", "ang-tol", "seed", "out"}},
      {Command::DUALITY_VERIFY, {"duality", "verify"}, {"samples", "seed", "out"}},
      {Command::MARSTRAND,
       {"marstrand"},
       {"set", "size", "family", "ifs", "thetas", "seed", "out", "delta-max",
        "delta-min", "levels", "stop-k"}},
      {Command::COAREA,
       {"coarea"},
       {"set", "size", "family", "ifs", "alpha", "slices", "slab-lo", "slab-hi",
        "seed", "out", "delta-max", "delta-min", "levels", "stop-k"}},
      {Command::PIPELINE,
       {"pipeline"},
       {"family", "c-grid", "seed", "out", "delta-max", "delta-min", "levels",
        "stop-k"}},
  };
  return table;
}

bool is_flag_token(const std::string& token) {
  return token.size() >= 2 && token[0] == '-';
}

const CommandSpec* detect_command(const std::vector<std::string>& args) {
  std::vector<std::string> words;
  for (const auto& token : args) {
    if (is_flag_token(token)) break;  // flags end the command words
    words.push_back(token);
    if (words.size() == 2) break;
  }
  const CommandSpec* best = nullptr;
  for (const auto& spec : command_table()) {
    if (words.size() < spec.words.size()) continue;
    bool match = true;
    for (std::size_t i = 0; i < spec.words.size(); ++i) {
      if (words[i] != spec.words[i]) match = false;
    }
    if (match && (!best || spec.words.size() > best->words.size())) best = &spec;
  }
  return best;
}

/// Pulls --config <path> (or --config=<path>) out of the token stream.
std::string extract_config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ParseError("--config: missing value");
      return args[i + 1];
    }
    if (args[i].rfind("--config=", 0) == 0) {
      return args[i].substr(std::string("--config=").size());
    }
  }
  return {};
}

bool token_sets_key(const std::vector<std::string>& args, const std::string& key) {
  const std::string flag = "--" + key;
  for (const auto& token : args) {
    if (token == flag || token.rfind(flag + "=", 0) == 0) return true;
  }
  return false;
}

std::string json_scalar_to_string(const io::Json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return v.dump();
  throw ParseError("config: key '" + key + "' must be a scalar");
}

/// Config file values fill flags the user did not pass.
std::vector<std::string> merge_config(const std::vector<std::string>& args,
                                      const CommandSpec& spec) {
  const std::string path = extract_config_path(args);
  if (path.empty()) return args;

  io::Json config;
  try {
    config = io::Json::parse(io::read_file(path));
  } catch (const std::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (!config.is_object()) throw ParseError("config: top level must be an object");

  std::vector<std::string> merged = args;
  for (const auto& [key, value] : config.items()) {
    if (!spec.config_keys.count(key)) {
      throw ParseError("config: unknown key '" + key + "' for command '" +
                       spec.words[0] + "'");
    }
    if (token_sets_key(args, key)) continue;  // flags win
    merged.push_back("--" + key + "=" + json_scalar_to_string(value, key));
  }
  return merged;
}

dimest::ScaleLadder make_ladder(const RunConfig& cfg, int min_levels) {
  if (!(cfg.delta_max > 0.0) || !(cfg.delta_min > 0.0)) {
    throw ParseError("delta-max/delta-min: scales must be positive");
  }
  if (!(cfg.delta_min < cfg.delta_max)) {
    throw ParseError("delta-min/delta-max: ladder not decreasing");
  }
  if (cfg.levels < min_levels) {
    throw ParseError("levels: need at least " + std::to_string(min_levels));
  }
  try {
    return dimest::ScaleLadder::geometric(cfg.delta_max, cfg.delta_min, cfg.levels);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("delta-min/delta-max/levels: ") + e.what());
  }
}

setgen::SetSampler resolve_sampler(const RunConfig& cfg) {
  const int sources = (!cfg.set_name.empty() ? 1 : 0) +
                      (!cfg.family_src.empty() ? 1 : 0) +
                      (!cfg.ifs_src.empty() ? 1 : 0);
  if (sources != 1) {
    throw ParseError("set/family/ifs: exactly one source is required");
  }
  if (!cfg.set_name.empty()) {
    if (cfg.set_name == "plane") {
      return setgen::primitive_sampler(setgen::Primitive::PLANE_DISC, cfg.size);
    }
    if (cfg.set_name == "taxis") {
      return setgen::primitive_sampler(setgen::Primitive::T_AXIS, cfg.size);
    }
    if (cfg.set_name == "xseg") {
      return setgen::primitive_sampler(setgen::Primitive::X_AXIS_SEGMENT, cfg.size);
    }
    if (cfg.set_name == "cube") {
      return setgen::primitive_sampler(setgen::Primitive::CUBE, cfg.size);
    }
    if (cfg.set_name == "cantor2" || cfg.set_name == "cantor4") {
      return setgen::ifs_sampler(setgen::ifs_preset(cfg.set_name), cfg.seed);
    }
    throw ParseError("set: unknown set '" + cfg.set_name + "'");
  }
  if (!cfg.family_src.empty()) {
    return setgen::union_sampler(load_family_src(cfg.family_src));
  }
  return setgen::ifs_sampler(load_ifs_src(cfg.ifs_src), cfg.seed);
}

fs::path sidecar(const fs::path& out) {
  fs::path other = out;
  other.replace_extension(out.extension() == ".json" ? ".csv" : ".json");
  return other;
}

int exec_dim(const RunConfig& cfg) {
  const auto sampler = resolve_sampler(cfg);
  const auto ladder = make_ladder(cfg, 4);
  const auto metric = cfg.metric == "heisenberg" ? dimest::Metric::HEISENBERG
                                                 : dimest::Metric::EUCLIDEAN;
  dimest::EstimateParams params{cfg.stop_k, cfg.seed};
  const auto est = dimest::estimate_dimension(sampler, ladder, metric, params);

  const fs::path out = cfg.out.empty() ? fs::path("dim.csv") : fs::path(cfg.out);
  io::write_file_atomic(out, io::csv_dim(est));
  io::write_file_atomic(sidecar(out), io::to_json(est).dump(2) + "\n");
  std::cout << "dim label=" << est.label << " metric=" << cfg.metric
            << " slope=" << fmt("%.2f", est.slope) << " r2=" << fmt("%.3f", est.r2)
            << " out=" << out.string() << "\n";
  return 0;
}

int exec_kakeya_build(const RunConfig& cfg) {
  setgen::Placement placement;
  if (cfg.placement == "origin") {
    placement = setgen::Placement::ORIGIN;
  } else if (cfg.placement == "random") {
    placement = setgen::Placement::RANDOM;
  } else if (cfg.placement == "plane") {
    placement = setgen::Placement::PLANE;
  } else {
    throw ParseError("placement: must be origin|random|plane");
  }
  const auto family = setgen::kakeya_union_builder(cfg.m, placement, cfg.seed);
  const fs::path out = cfg.out.empty() ? fs::path("family.json") : fs::path(cfg.out);
  io::write_file_atomic(out, io::to_json(family).dump(2) + "\n");
  std::cout << "kakeya build m=" << cfg.m << " placement=" << cfg.placement
            << " codes=" << family.codes.size() << " out=" << out.string() << "\n";
  return 0;
}

int exec_kakeya_verify(const RunConfig& cfg) {
  if (cfg.family_src.empty()) throw ParseError("family: required");
  const auto family = load_family_src(cfg.family_src);
  const auto report = setgen::verify_kakeya(family, cfg.angles, cfg.ang_tol);
  const fs::path out =
      cfg.out.empty() ? fs::path("kakeya_verify.json") : fs::path(cfg.out);
  io::write_file_atomic(out, io::to_json(report).dump(2) + "\n");
  std::cout << "kakeya verify angles=" << cfg.angles << " covered=" << report.covered
            << " missing=" << report.missing.size() << " out=" << out.string()
            << "\n";
  return 0;
}

int exec_duality_verify(const RunConfig& cfg) {
  Rng rng(mix_seed(cfg.seed, 0xD0A1ULL));
  double norm_identity = 0.0, theta_unit = 0.0, rotation_isometry = 0.0;
  double cone_map = 0.0, rotation_alignment = 0.0, projection_identity = 0.0;

  for (long long i = 0; i < cfg.samples; ++i) {
    const double c = uniform(rng, -10.0, 10.0);
    const Vec3 w{uniform(rng, -10.0, 10.0), uniform(rng, -10.0, 10.0),
                 uniform(rng, -10.0, 10.0)};
    const Vec3 p{uniform(rng, -10.0, 10.0), uniform(rng, -10.0, 10.0),
                 uniform(rng, -10.0, 10.0)};

    const Vec3 hd = duality::height_direction(c);
    norm_identity = std::max(norm_identity,
                             std::abs(norm(hd) - (1.0 + 0.5 * c * c)));
    theta_unit = std::max(
        theta_unit,
        std::abs(norm(duality::gamma_theta(duality::theta_of_c(c))) - 1.0));
    rotation_isometry =
        std::max(rotation_isometry,
                 std::abs(dot(duality::rotation_R(p), duality::rotation_R(w)) -
                          dot(p, w)));

    // point of the cone {x^2 = -2 y z}: s * (-u, -u^2/2, 1)
    const double u = uniform(rng, -2.0, 2.0);
    const double s = uniform(rng, -2.5, 2.5);
    const Vec3 cone_pt = s * Vec3{-u, -0.5 * u * u, 1.0};
    const Vec3 image = duality::rotation_R(cone_pt);
    cone_map = std::max(cone_map, std::abs(image.x * image.x +
                                           image.y * image.y -
                                           image.z * image.z));

    const Vec3 u1 = (1.0 / (1.0 + 0.5 * c * c)) * hd;
    const Vec3 ru1 = duality::rotation_R(u1);
    const Vec3 gam = duality::gamma_theta(duality::theta_of_c(c));
    rotation_alignment = std::max(
        rotation_alignment,
        std::max({std::abs(ru1.x - gam.x), std::abs(ru1.y - gam.y),
                  std::abs(ru1.z - gam.z)}));
    projection_identity =
        std::max(projection_identity, duality::verify_projection_identity(c, w));
  }
  const double max_residual =
      std::max({norm_identity, theta_unit, rotation_isometry, cone_map,
                rotation_alignment, projection_identity});

  io::Json j;
  j["samples"] = cfg.samples;
  j["residuals"] = {{"norm_identity", norm_identity},
                    {"theta_unit", theta_unit},
                    {"rotation_isometry", rotation_isometry},
                    {"cone_map", cone_map},
                    {"rotation_alignment", rotation_alignment},
                    {"projection_identity", projection_identity}};
  j["max_residual"] = max_residual;
  j["seed"] = cfg.seed;

  const fs::path out =
      cfg.out.empty() ? fs::path("duality_verify.json") : fs::path(cfg.out);
  io::write_file_atomic(out, j.dump(2) + "\n");
  if (max_residual <= 1e-12) {
    std::cout << "duality verify samples=" << cfg.samples
              << " max_residual<=1e-12 out=" << out.string() << "\n";
    return 0;
  }
  std::cout << "duality verify samples=" << cfg.samples
            << " max_residual=" << fmt("%.3g", max_residual)
            << " out=" << out.string() << "\n";
  return 1;
}

int exec_marstrand(const RunConfig& cfg) {
  const auto sampler = resolve_sampler(cfg);
  const auto ladder = make_ladder(cfg, 4);
  if (cfg.thetas < 1) throw ParseError("thetas: must be >= 1");

  experiments::ExperimentParams params;
  params.stop_k = cfg.stop_k;
  params.seed = cfg.seed;
  const auto thetas = experiments::theta_grid(cfg.thetas);
  const auto results = experiments::marstrand_experiment(sampler, thetas, ladder, params);

  std::vector<std::pair<double, dimest::DimEstimate>> rows;
  std::vector<double> slopes;
  io::Json jr = io::Json::array();
  for (const auto& r : results) {
    rows.emplace_back(r.theta, r.dim);
    slopes.push_back(r.dim.slope);
    io::Json e;
    e["theta"] = r.theta;
    e["slope"] = r.dim.slope;
    e["r2"] = r.dim.r2;
    e["n_counts"] = r.dim.counts.size();
    jr.push_back(e);
  }
  std::sort(slopes.begin(), slopes.end());
  const double med = slopes.empty()
                         ? 0.0
                         : (slopes.size() % 2 == 1
                                ? slopes[slopes.size() / 2]
                                : 0.5 * (slopes[slopes.size() / 2 - 1] +
                                         slopes[slopes.size() / 2]));

  io::Json j;
  j["label"] = sampler.label;
  j["thetas"] = cfg.thetas;
  j["median_slope"] = med;
  j["seed"] = cfg.seed;
  j["results"] = jr;

  const fs::path out = cfg.out.empty() ? fs::path("marstrand.csv") : fs::path(cfg.out);
  io::write_file_atomic(out, io::csv_param_rows(rows));
  io::write_file_atomic(sidecar(out), j.dump(2) + "\n");
  std::cout << "marstrand label=" << sampler.label << " thetas=" << cfg.thetas
            << " median_slope=" << fmt("%.3f", med) << " out=" << out.string()
            << "\n";
  return 0;
}

int exec_coarea(const RunConfig& cfg) {
  const auto sampler = resolve_sampler(cfg);
  const auto ladder = make_ladder(cfg, 2);
  if (!(cfg.alpha >= 0.0)) throw ParseError("alpha: must be >= 0");
  if (cfg.slices < 2) throw ParseError("slices: must be >= 2");

  std::pair<double, double> slab{sampler.bounds.lo.x, sampler.bounds.hi.x};
  if (cfg.slab_set) slab = {cfg.slab_lo, cfg.slab_hi};
  if (!(slab.first < slab.second)) throw ParseError("slab-lo/slab-hi: empty slab");

  std::ostringstream csv;
  csv << "delta,lhs,rhs,ratio\n";
  io::Json rows = io::Json::array();
  double ratio_min = 0.0, ratio_max = 0.0;
  for (std::size_t k = 0; k < ladder.deltas.size(); ++k) {
    experiments::ExperimentParams params;
    params.stop_k = cfg.stop_k;
    params.seed = mix_seed(cfg.seed, k);
    const auto res = experiments::coarea_check(sampler, cfg.alpha, ladder.deltas[k],
                                               slab, cfg.slices, params);
    const double ratio = res.ratio();
    if (k == 0) {
      ratio_min = ratio_max = ratio;
    } else {
      ratio_min = std::min(ratio_min, ratio);
      ratio_max = std::max(ratio_max, ratio);
    }
    csv << io::format_double(ladder.deltas[k]) << ',' << io::format_double(res.lhs)
        << ',' << io::format_double(res.rhs) << ',' << io::format_double(ratio)
        << '\n';
    io::Json row;
    row["delta"] = ladder.deltas[k];
    row["lhs"] = res.lhs;
    row["rhs"] = res.rhs;
    row["ratio"] = ratio;
    row["bulk_count"] = res.bulk_count;
    row["slice_counts"] = res.slice_counts;
    rows.push_back(row);
  }

  io::Json j;
  j["label"] = sampler.label;
  j["alpha"] = cfg.alpha;
  j["slab"] = {slab.first, slab.second};
  j["slices"] = cfg.slices;
  j["seed"] = cfg.seed;
  j["ratio_min"] = ratio_min;
  j["ratio_max"] = ratio_max;
  j["rows"] = rows;

  const fs::path out = cfg.out.empty() ? fs::path("coarea.csv") : fs::path(cfg.out);
  io::write_file_atomic(out, csv.str());
  io::write_file_atomic(sidecar(out), j.dump(2) + "\n");
  std::cout << "coarea label=" << sampler.label << " alpha=" << fmt("%.3g", cfg.alpha)
            << " ratio_min=" << fmt("%.3g", ratio_min)
            << " ratio_max=" << fmt("%.3g", ratio_max) << " out=" << out.string()
            << "\n";
  return 0;
}

int exec_pipeline(const RunConfig& cfg) {
  if (cfg.family_src.empty()) throw ParseError("family: required");
  const auto family = load_family_src(cfg.family_src);
  const auto ladder = make_ladder(cfg, 4);
  if (cfg.c_grid < 1) throw ParseError("c-grid: must be >= 1");

  experiments::ExperimentParams params;
  params.stop_k = cfg.stop_k;
  params.seed = cfg.seed;
  const auto report =
      experiments::kakeya_dimension_pipeline(family, cfg.c_grid, ladder, params);

  std::vector<std::pair<double, dimest::DimEstimate>> rows;
  for (const auto& entry : report.per_c) rows.emplace_back(entry.c, entry.height_dim);

  const fs::path out = cfg.out.empty() ? fs::path("pipeline.json") : fs::path(cfg.out);
  io::write_file_atomic(out, io::to_json(report).dump(2) + "\n");
  io::write_file_atomic(sidecar(out), io::csv_param_rows(rows));
  std::cout << "pipeline c0=" << fmt("%.4f", report.c0)
            << " crossing_ratio=" << fmt("%.3f", report.crossing_ratio)
            << " final_bound=" << fmt("%.3f", report.final_bound)
            << " out=" << out.string() << "\n";
  return 0;
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
  RunConfig cfg;

  CLI::App app{"Heisenberg-Kakeya geometry toolkit"};
  app.option_defaults()->always_capture_default(true);
  app.set_help_flag("");
  app.set_help_all_flag("--help,-h", "Print help for every command");
  app.require_subcommand(0, 1);

  std::string config_path;  // parsed but handled by merge_config

  auto add_common = [&](CLI::App* cmd) {
    cmd->option_defaults()->always_capture_default(true);
    cmd->add_option("--seed", cfg.seed, "Deterministic run seed");
    cmd->add_option("--out", cfg.out, "Output path");
    cmd->add_option("--config", config_path, "JSON config file (flags override)");
  };
  auto add_ladder = [&](CLI::App* cmd) {
    cmd->add_option("--delta-max", cfg.delta_max, "Largest scale");
    cmd->add_option("--delta-min", cfg.delta_min, "Smallest scale");
    cmd->add_option("--levels", cfg.levels, "Number of scales");
    cmd->add_option("--stop-k", cfg.stop_k, "Consecutive rejections to stop");
  };
  auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("--set", cfg.set_name, "plane|taxis|xseg|cube|cantor2|cantor4");
    cmd->add_option("--size", cfg.size, "Primitive set size");
    cmd->add_option("--family", cfg.family_src, "Code family (path or inline JSON)");
    cmd->add_option("--ifs", cfg.ifs_src, "IFS spec (path or inline JSON)");
  };

  auto* dim = app.add_subcommand("dim", "Packing-dimension estimate of a set");
  add_source(dim);
  dim->add_option("--metric", cfg.metric, "euclidean|heisenberg");
  add_ladder(dim);
  add_common(dim);

  auto* kakeya = app.add_subcommand("kakeya", "Kakeya family tools");
  auto* build = kakeya->add_subcommand("build", "Build a direction-complete family");
  build->add_option("--m", cfg.m, "Number of directions (>= 4)");
  build->add_option("--placement", cfg.placement, "origin|random|plane");
  add_common(build);
  auto* verify = kakeya->add_subcommand("verify", "Check direction coverage");
  verify->add_option("--family", cfg.family_src, "Code family (path or inline JSON)");
  verify->add_option("--angles", cfg.angles, "Directions to check");
  verify->add_option("--ang-tol", cfg.ang_tol, "Angular tolerance (rad)");
  add_common(verify);

  auto* duality_cmd = app.add_subcommand("duality", "Line-space duality tools");
  auto* dverify = duality_cmd->add_subcommand("verify", "Residuals of the projection identities");
  dverify->add_option("--samples", cfg.samples, "Random samples");
  add_common(dverify);

  auto* marstrand = app.add_subcommand("marstrand", "Projection dimension sweep");
  add_source(marstrand);
  marstrand->add_option("--thetas", cfg.thetas, "Number of directions");
  add_ladder(marstrand);
  add_common(marstrand);

  auto* coarea = app.add_subcommand("coarea", "Slice-vs-bulk packing comparison");
  add_source(coarea);
  coarea->add_option("--alpha", cfg.alpha, "Slice exponent");
  coarea->add_option("--slices", cfg.slices, "Number of slices");
  auto* slab_lo = coarea->add_option("--slab-lo", cfg.slab_lo, "Slab lower x");
  auto* slab_hi = coarea->add_option("--slab-hi", cfg.slab_hi, "Slab upper x");
  add_ladder(coarea);
  add_common(coarea);

  auto* pipeline = app.add_subcommand("pipeline", "Duality -> projection -> slice bound");
  pipeline->add_option("--family", cfg.family_src, "Code family (path or inline JSON)");
  pipeline->add_option("--c-grid", cfg.c_grid, "Grid points for c0 scan and c sweep");
  add_ladder(pipeline);
  add_common(pipeline);

  const CommandSpec* spec = detect_command(args);
  std::vector<std::string> tokens = args;
  if (spec) tokens = merge_config(args, *spec);

  std::vector<const char*> argv;
  argv.push_back("heiskakeya");
  for (const auto& token : tokens) argv.push_back(token.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    cfg.help = true;
    return cfg;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    cfg.help = true;
    return cfg;
  } catch (const CLI::ParseError& e) {
    throw ParseError(e.what());
  }

  if (dim->parsed()) cfg.command = Command::DIM;
  if (build->parsed()) cfg.command = Command::KAKEYA_BUILD;
  if (verify->parsed()) cfg.command = Command::KAKEYA_VERIFY;
  if (dverify->parsed()) cfg.command = Command::DUALITY_VERIFY;
  if (marstrand->parsed()) cfg.command = Command::MARSTRAND;
  if (coarea->parsed()) cfg.command = Command::COAREA;
  if (pipeline->parsed()) cfg.command = Command::PIPELINE;

  if (cfg.command == Command::NONE) {
    if (args.empty()) {
      std::cout << app.help("", CLI::AppFormatMode::All);
      cfg.help = true;
      return cfg;
    }
    throw ParseError("expected a command: dim, kakeya build, kakeya verify, "
                     "duality verify, marstrand, coarea, pipeline");
  }

  cfg.slab_set = slab_lo->count() > 0 || slab_hi->count() > 0;
  if (cfg.slab_set && (slab_lo->count() == 0 || slab_hi->count() == 0)) {
    throw ParseError("slab-lo/slab-hi: both must be given");
  }

  // validate ladder invariants at parse time for ladder-using commands
  switch (cfg.command) {
    case Command::DIM:
    case Command::MARSTRAND:
    case Command::PIPELINE:
      make_ladder(cfg, 4);
      break;
    case Command::COAREA:
      make_ladder(cfg, 2);
      break;
    default:
      break;
  }
  if (cfg.metric != "euclidean" && cfg.metric != "heisenberg") {
    throw ParseError("metric: must be euclidean or heisenberg");
  }
  return cfg;
}

int execute(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::DIM:
      return exec_dim(cfg);
    case Command::KAKEYA_BUILD:
      return exec_kakeya_build(cfg);
    case Command::KAKEYA_VERIFY:
      return exec_kakeya_verify(cfg);
    case Command::DUALITY_VERIFY:
      return exec_duality_verify(cfg);
    case Command::MARSTRAND:
      return exec_marstrand(cfg);
    case Command::COAREA:
      return exec_coarea(cfg);
    case Command::PIPELINE:
      return exec_pipeline(cfg);
    case Command::NONE:
      return 0;
  }
  return 0;
}

int run(const std::vector<std::string>& args) {
  try {
    const RunConfig cfg = parse_config(args);
    if (cfg.help) return 0;
    return execute(cfg);
  } catch (const ParseError& e) {
    std::cerr << "heiskakeya: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "heiskakeya: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace heiskakeya::cli
