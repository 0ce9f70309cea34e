// Shared CLI plumbing: series loading with optional log transform, result
// emission (JSON document or aligned table), run manifests.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ck/adf.hpp"
#include "ck/timeseries.hpp"

namespace cli {

// Set once in main; recorded in run manifests.
extern std::vector<std::string> g_argv;

ck::TimeSeries load_series(const std::string& path, const std::string& column,
                           bool log_transform);

ck::SigLevel to_level(int pct);  // 1, 5, or 10

// Prints the JSON document, or a two-column table of its scalar leaves.
void emit_result(const nlohmann::ordered_json& doc, bool table);

// Writes <dir>/manifest.json; `outputs` lists files the command produced.
// Deliberately carries no timestamp: identical invocations must produce
// byte-identical directories.
void write_manifest(const std::string& dir, const std::string& command,
                    const std::vector<std::string>& outputs,
                    std::optional<std::uint64_t> seed);

std::string join_path(const std::string& dir, const std::string& name);
void ensure_dir(const std::string& dir);

}  // namespace cli
