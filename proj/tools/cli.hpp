#pragma once

// Experiment orchestration: a flat registry of named experiments, JSON
// configs, deterministic seeding and CSV / JSON artifacts.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace multlab::cli {

using Json = nlohmann::json;

/// Bad configuration; field() names the offending key ("experiment",
/// "seed", "params.s", ...).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message);
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

enum class Format { csv, json };

struct ExperimentConfig {
  std::string experiment;
  std::optional<std::uint64_t> seed;
  Json params = Json::object();
  std::optional<std::string> out;
  std::optional<Format> format;
};

using Cell = std::variant<double, std::string>;

struct Table {
  std::string name;  // empty for the main table
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Result {
  std::string experiment;
  std::optional<std::uint64_t> seed;
  Json params = Json::object();  // every parameter, defaults filled in
  std::vector<Table> tables;
  Json summary = Json::object();
};

struct Artifact {
  std::string filename;
  std::string content;
};

struct ExperimentInfo {
  std::string name;
  std::string subcommand;
  bool randomized;
  std::string description;
};

const std::vector<ExperimentInfo>& registry();
const std::vector<std::string>& subcommands();
/// Experiment run by a subcommand when no config names one.
std::string default_experiment(const std::string& subcommand);

ExperimentConfig parse_config(const Json& j);
ExperimentConfig parse_config_text(const std::string& text);

/// Validates parameters before any computation; throws ConfigError.
/// Module exceptions propagate unchanged.
Result run(const ExperimentConfig& cfg);

/// Every registered experiment with default parameters.
std::vector<Result> run_report(std::optional<std::uint64_t> seed);

std::vector<Artifact> render(const Result& r, Format fmt);
std::vector<Artifact> render_report(const std::vector<Result>& results, Format fmt);

/// %.17g, with inf / -inf / nan spelled out.
std::string format_number(double v);

/// Writes every artifact to a temporary name first, then renames them all.
void write_artifacts(const std::string& dir, const std::vector<Artifact>& artifacts);

/// Command-line entry point; returns the process exit status
/// (0 ok, 2 configuration error, 3 runtime error).
int run_main(int argc, char** argv);

}  // namespace multlab::cli
