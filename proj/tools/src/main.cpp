// consensus-kinetics: synthetic data, cointegration testing, and calibration
// and simulation of the consensus interaction model, one subcommand each.
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ck/errors.hpp"
#include "common.hpp"

namespace cli {

std::vector<std::string> g_argv;

void register_synth(CLI::App& app);
void register_econ(CLI::App& app);
void register_model(CLI::App& app);

ck::TimeSeries load_series(const std::string& path, const std::string& column,
                           bool log_transform) {
  ck::TimeSeries ts = ck::load_csv(path, "date", column);
  return log_transform ? ck::log_series(ts) : ts;
}

ck::SigLevel to_level(int pct) {
  switch (pct) {
    case 1: return ck::SigLevel::pct1;
    case 5: return ck::SigLevel::pct5;
    case 10: return ck::SigLevel::pct10;
  }
  ck::fail(ck::errc::invalid_parameter, "level must be 1, 5, or 10");
}

namespace {

void flatten(const nlohmann::ordered_json& node, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items())
      flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
  } else if (node.is_array()) {
    std::size_t i = 0;
    for (const auto& value : node) flatten(value, prefix + "[" + std::to_string(i++) + "]", rows);
  } else {
    rows.emplace_back(prefix, node.dump());
  }
}

}  // namespace

void emit_result(const nlohmann::ordered_json& doc, bool table) {
  if (!table) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows)
    std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) ck::fail(ck::errc::invalid_parameter, "cannot create '" + dir + "'");
}

void write_manifest(const std::string& dir, const std::string& command,
                    const std::vector<std::string>& outputs,
                    std::optional<std::uint64_t> seed) {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["argv"] = g_argv;
  if (seed) doc["seed"] = *seed;
  nlohmann::ordered_json files = nlohmann::ordered_json::array();
  for (const auto& f : outputs)
    files.push_back(std::filesystem::path(f).filename().string());
  doc["outputs"] = files;
  std::ofstream out(join_path(dir, "manifest.json"));
  if (!out) ck::fail(ck::errc::invalid_parameter, "cannot write manifest in '" + dir + "'");
  out << doc.dump(2) << "\n";
}

}  // namespace cli

int main(int argc, char** argv) {
  cli::g_argv.assign(argv, argv + argc);

  CLI::App app{"consensus interaction model toolkit: synthetic series, "
               "cointegration tests, calibration, forecasting, simulation"};
  app.require_subcommand(1);
  cli::register_synth(app);
  cli::register_econ(app);
  cli::register_model(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const ck::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ck::classify(e.code()));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
