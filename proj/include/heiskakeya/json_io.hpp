#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "heiskakeya/dimest.hpp"
#include "heiskakeya/experiments.hpp"
#include "heiskakeya/hlines.hpp"
#include "heiskakeya/setgen.hpp"

namespace heiskakeya::io {

using Json = nlohmann::ordered_json;

// Code families: {"label": str, "codes": [{"a","b","d","eps","chart":"x"|"y"}]}
Json to_json(const hlines::CodeFamily& family);
hlines::CodeFamily family_from_json(const Json& j);
hlines::CodeFamily load_family(const std::filesystem::path& path);

// IFS specs: {"maps": [{"ratio": num, "offset": [x, y, z]}], "depth": int}
Json to_json(const setgen::IfsSpec& spec);
setgen::IfsSpec ifs_from_json(const Json& j);
setgen::IfsSpec load_ifs(const std::filesystem::path& path);

Json to_json(const dimest::DimEstimate& est);
Json to_json(const setgen::KakeyaReport& report);
Json to_json(const experiments::PipelineReport& report);

/// "%.17g" rendering, round-trip exact.
std::string format_double(double v);

std::string csv_dim(const dimest::DimEstimate& est);
std::string csv_param_rows(
    const std::vector<std::pair<double, dimest::DimEstimate>>& rows);

/// Writes content to path via a temp file + rename; creates parent dirs.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

std::string read_file(const std::filesystem::path& path);

}  // namespace heiskakeya::io
