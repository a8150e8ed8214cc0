#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using namespace multlab::cli;
using Catch::Approx;
namespace fs = std::filesystem;

namespace {

std::string field_of(const Json& j) {
  try {
    run(parse_config(j));
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "";
}

// column `name` of the CSV row whose first cell equals `key`
double csv_lookup(const std::string& csv, const std::string& key, const std::string& name) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(s);
    while (std::getline(ss, cell, ',')) {
      out.push_back(cell);
    }
    return out;
  };
  const auto header = split(line);
  std::size_t col = 0;
  while (col < header.size() && header[col] != name) {
    ++col;
  }
  REQUIRE(col < header.size());
  while (std::getline(in, line)) {
    const auto row = split(line);
    if (std::stod(row[0]) == std::stod(key)) {
      return std::stod(row[col]);
    }
  }
  FAIL("row not found");
  return 0.0;
}

fs::path fresh_dir(const std::string& name) {
  const auto d = fs::temp_directory_path() / ("multlab_cli_test_" + name);
  fs::remove_all(d);
  return d;
}

int call(std::vector<std::string> args) {
  args.insert(args.begin(), "multlab_cli");
  std::vector<char*> argv;
  for (auto& a : args) {
    argv.push_back(a.data());
  }
  return run_main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("psi-majorant row") {
  const auto r = run(parse_config(Json{{"experiment", "psi-majorant"}, {"params", {{"s", 0.5}}}}));
  const auto art = render(r, Format::csv);
  REQUIRE(art.size() == 1);
  CHECK(art[0].filename == "psi-majorant.csv");
  CHECK(csv_lookup(art[0].content, "0.5", "psi_1_0") == Approx(std::sqrt(2.0)).margin(1e-8));
}

TEST_CASE("interp-limits json") {
  const auto r = run(parse_config(Json{{"experiment", "interp-limits"}, {"params", {{"lambda", 7}}}}));
  const auto art = render(r, Format::json);
  REQUIRE(art.size() == 1);
  const auto j = Json::parse(art[0].content);
  CHECK(j["summary"]["lim_h_over_theta"].get<double>() == Approx(2.0).margin(1e-3));
  CHECK(j["summary"]["lim_H"].get<double>() == Approx(1.0).margin(1e-3));
  CHECK(j["params"]["lambda"][0].get<double>() == 7.0);
}

TEST_CASE("config errors name the field") {
  CHECK(field_of(Json{{"params", Json::object()}}) == "experiment");
  CHECK(field_of(Json{{"experiment", "nope"}}) == "experiment");
  CHECK(field_of(Json{{"experiment", 3}}) == "experiment");
  CHECK(field_of(Json{{"experiment", "psi-majorant"}, {"colour", 1}}) == "colour");
  CHECK(field_of(Json{{"experiment", "psi-majorant"}, {"seed", -1}}) == "seed");
  CHECK(field_of(Json{{"experiment", "psi-majorant"}, {"params", {{"s", "half"}}}}) == "params.s");
  CHECK(field_of(Json{{"experiment", "psi-majorant"}, {"params", {{"s", 1.5}}}}) == "params.s");
  CHECK(field_of(Json{{"experiment", "psi-majorant"}, {"params", {{"foo", 1}}}}) == "params.foo");
  CHECK(field_of(Json{{"experiment", "mult-norm"}}) == "seed");
  CHECK(field_of(Json{{"experiment", "mult-norm"}, {"seed", 1}, {"params", {{"weight", "odd"}}}}) ==
        "params.weight");
  CHECK(field_of(Json{{"experiment", "moment-growth"}, {"params", {{"N", 4096}}}}) == "params.N");
  CHECK(field_of(Json{{"experiment", "extremal"}, {"params", {{"points", 2.5}}}}) == "params.points");
  CHECK_THROWS_AS(parse_config_text("{\"experiment\": "), ConfigError);
  CHECK(field_of(Json{{"experiment", "psi-majorant"}, {"format", "xml"}}) == "format");
}

TEST_CASE("seeded experiments are deterministic") {
  for (const auto& [name, params] :
       std::vector<std::pair<std::string, Json>>{{"mult-norm", {{"symbol", "random-real"}, {"size", 64}}},
                                                 {"growth-converse", {{"trials", 5}}}}) {
    ExperimentConfig cfg;
    cfg.experiment = name;
    cfg.seed = 1234;
    cfg.params = params;
    for (auto fmt : {Format::csv, Format::json}) {
      const auto a = render(run(cfg), fmt);
      const auto b = render(run(cfg), fmt);
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].filename == b[i].filename);
        CHECK(a[i].content == b[i].content);
      }
    }
    auto other = cfg;
    other.seed = 99;
    CHECK(render(run(other), Format::csv)[0].content != render(run(cfg), Format::csv)[0].content);
  }
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(2.0) == "2");
  CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_number(std::nan("")) == "nan");
}

TEST_CASE("registry covers every subcommand") {
  for (const auto& sub : subcommands()) {
    if (sub == "report") {
      continue;
    }
    bool found = false;
    for (const auto& e : registry()) {
      found = found || e.subcommand == sub;
    }
    CHECK(found);
    CHECK_NOTHROW(default_experiment(sub));
  }
}

TEST_CASE("command line") {
  SECTION("artifacts are written without leftovers") {
    const auto dir = fresh_dir("ok");
    CHECK(call({"counterexample", "--out", dir.string()}) == 0);
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(dir)) {
      names.push_back(e.path().filename().string());
    }
    std::sort(names.begin(), names.end());
    CHECK(names == std::vector<std::string>{"counterexample.csv", "counterexample_summary.json",
                                            "counterexample_unboundedness.csv"});
  }

  SECTION("malformed config leaves nothing behind") {
    const auto dir = fresh_dir("bad");
    const auto cfg = fs::temp_directory_path() / "multlab_cli_bad.json";
    std::ofstream(cfg) << "{\"experiment\": \"psi-majorant\", \"params\": {\"s\": \"x\"}}";
    CHECK(call({"psi", "--config", cfg.string(), "--out", dir.string()}) == 2);
    CHECK(!fs::exists(dir));
    std::ofstream(cfg) << "not json";
    CHECK(call({"psi", "--config", cfg.string(), "--out", dir.string()}) == 2);
    CHECK(!fs::exists(dir));
  }

  SECTION("experiment must match the subcommand") {
    const auto dir = fresh_dir("mismatch");
    CHECK(call({"psi", "--experiment", "moment-growth", "--out", dir.string()}) == 2);
    CHECK(call({"mult-norm", "--out", dir.string()}) == 2);  // no seed
    CHECK(call({"report", "--out", dir.string()}) == 2);     // no seed
    CHECK(call({"frobnicate"}) == 2);
    CHECK(!fs::exists(dir));
  }

  SECTION("runtime errors exit with 3") {
    const auto dir = fresh_dir("runtime");
    const auto cfg = fs::temp_directory_path() / "multlab_cli_runtime.json";
    // a constant curve is degenerate for the fit
    std::ofstream(cfg) << "{\"experiment\": \"growth-fit\", \"params\": {\"c\": 1e-9, \"A\": 1e-12}}";
    CHECK(call({"growth", "--config", cfg.string(), "--out", dir.string()}) == 3);
  }
}
