#include "heiskakeya/json_io.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace heiskakeya::io {

namespace {

const char* metric_name(dimest::Metric metric) {
  return metric == dimest::Metric::HEISENBERG ? "heisenberg" : "euclidean";
}

Json code_to_json(const hlines::SegmentCode& code) {
  Json j;
  j["a"] = code.a;
  j["b"] = code.b;
  j["d"] = code.d;
  j["eps"] = code.eps;
  j["chart"] = code.chart == hlines::Chart::X_PARAM ? "x" : "y";
  return j;
}

hlines::SegmentCode code_from_json(const Json& j) {
  hlines::SegmentCode code;
  code.a = j.at("a").get<double>();
  code.b = j.at("b").get<double>();
  code.d = j.at("d").get<double>();
  code.eps = j.at("eps").get<double>();
  const std::string chart = j.at("chart").get<std::string>();
  if (chart == "x") {
    code.chart = hlines::Chart::X_PARAM;
  } else if (chart == "y") {
    code.chart = hlines::Chart::Y_PARAM;
  } else {
    throw std::invalid_argument("io: chart must be \"x\" or \"y\"");
  }
  return code;
}

}  // namespace

Json to_json(const hlines::CodeFamily& family) {
  Json j;
  j["label"] = family.label;
  j["codes"] = Json::array();
  for (const auto& code : family.codes) j["codes"].push_back(code_to_json(code));
  return j;
}

hlines::CodeFamily family_from_json(const Json& j) {
  hlines::CodeFamily family;
  family.label = j.at("label").get<std::string>();
  std::set<std::array<double, 5>> seen;
  for (const auto& item : j.at("codes")) {
    const auto code = code_from_json(item);
    const std::array<double, 5> key{code.a, code.b, code.d, code.eps,
                                    code.chart == hlines::Chart::X_PARAM ? 0.0 : 1.0};
    if (!seen.insert(key).second) {
      throw std::invalid_argument("io: duplicate code in family");
    }
    family.codes.push_back(code);
  }
  return family;
}

hlines::CodeFamily load_family(const std::filesystem::path& path) {
  return family_from_json(Json::parse(read_file(path)));
}

Json to_json(const setgen::IfsSpec& spec) {
  Json j;
  j["maps"] = Json::array();
  for (const auto& map : spec.maps) {
    Json m;
    m["ratio"] = map.ratio;
    m["offset"] = {map.offset.x, map.offset.y, map.offset.z};
    j["maps"].push_back(m);
  }
  j["depth"] = spec.depth;
  return j;
}

setgen::IfsSpec ifs_from_json(const Json& j) {
  setgen::IfsSpec spec;
  for (const auto& item : j.at("maps")) {
    setgen::SimilarityMap map;
    map.ratio = item.at("ratio").get<double>();
    const auto& offset = item.at("offset");
    if (!offset.is_array() || offset.size() != 3) {
      throw std::invalid_argument("io: offset must be [x, y, z]");
    }
    map.offset = {offset[0].get<double>(), offset[1].get<double>(),
                  offset[2].get<double>()};
    spec.maps.push_back(map);
  }
  spec.depth = j.at("depth").get<int>();
  return spec;
}

setgen::IfsSpec load_ifs(const std::filesystem::path& path) {
  return ifs_from_json(Json::parse(read_file(path)));
}

Json to_json(const dimest::DimEstimate& est) {
  Json j;
  j["slope"] = est.slope;
  j["intercept"] = est.intercept;
  j["r2"] = est.r2;
  j["metric"] = metric_name(est.metric);
  j["label"] = est.label;
  j["seed"] = est.seed;
  return j;
}

Json to_json(const setgen::KakeyaReport& report) {
  Json j;
  j["angles"] = report.angles;
  j["ang_tol"] = report.ang_tol;
  j["covered"] = report.covered;
  j["missing"] = report.missing;
  return j;
}

Json to_json(const experiments::PipelineReport& report) {
  Json j;
  j["c0"] = report.c0;
  j["side"] = report.side == hlines::SlabCrossing::RIGHT ? "right" : "left";
  j["crossing_ratio"] = report.crossing_ratio;
  j["slope_cover"] = report.slope_cover;
  j["restricted"] = report.restricted;
  j["kept"] = report.kept;
  j["b_points"] = report.b_points;
  j["per_c"] = Json::array();
  for (const auto& entry : report.per_c) {
    Json e;
    e["c"] = entry.c;
    e["height_dim"] = to_json(entry.height_dim);
    e["slice_dim_bound"] = entry.slice_dim_bound;
    j["per_c"].push_back(e);
  }
  j["final_bound"] = report.final_bound;
  j["params"] = {{"c_grid", report.c_grid}, {"stop_k", report.stop_k}};
  j["seed"] = report.seed;
  return j;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_dim(const dimest::DimEstimate& est) {
  std::ostringstream out;
  out << "delta,count,log2_inv_delta,log2_count\n";
  for (std::size_t i = 0; i < est.deltas.size(); ++i) {
    const double count = static_cast<double>(est.counts[i]);
    out << format_double(est.deltas[i]) << ',' << est.counts[i] << ','
        << format_double(std::log2(1.0 / est.deltas[i])) << ','
        << format_double(std::log2(count)) << '\n';
  }
  return out.str();
}

std::string csv_param_rows(
    const std::vector<std::pair<double, dimest::DimEstimate>>& rows) {
  std::ostringstream out;
  out << "param,slope,r2,n_counts\n";
  for (const auto& [param, est] : rows) {
    out << format_double(param) << ',' << format_double(est.slope) << ','
        << format_double(est.r2) << ',' << est.counts.size() << '\n';
  }
  return out.str();
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content) {
  const auto parent = path.parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("io: cannot write " + tmp);
    out << content;
    if (!out.good()) throw std::runtime_error("io: short write to " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("io: cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace heiskakeya::io
