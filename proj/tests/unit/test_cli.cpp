// Copyright 2026 The sombor-rg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "unit/helpers.hpp"
#include "sombor/cli.hpp"
#include "sombor/io.hpp"

using namespace sombor;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_rows(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> rows;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.starts_with("#")) continue;
    if (!header) {
      header = true;
      continue;
    }
    if (!line.empty()) rows.push_back(line);
  }
  return rows;
}

std::string field(const std::string& row, std::size_t index) {
  std::istringstream in(row);
  std::string cell;
  for (std::size_t i = 0; i <= index; ++i) std::getline(in, cell, ',');
  return cell;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "sombor_cli_tests";
  fs::create_directories(dir);
  fs::remove(dir / name);
  return dir / name;
}

}  // namespace

TEST_CASE("sweep writes one CSV row per grid point and index") {
  const auto r = run_cli({"sweep", "--model", "er", "--n", "125", "--index", "sombor", "--grid",
                          "log:0.5:20:20", "--replicas", "5", "--seed", "3"});
  REQUIRE(r.code == cli::kExitOk);
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line) && line.starts_with("#")) {}
  CHECK(line == io::kCsvHeader);
  CHECK(data_rows(r.out).size() == 20);
}

TEST_CASE("out-of-range control is a config error and writes nothing") {
  const auto path = scratch("bad.csv");
  const auto r = run_cli({"sweep", "--model", "er", "--n", "50", "--index", "sombor",
                          "--grid-axis", "control", "--grid", "0.5,1.5", "--out", path.string()});
  CHECK(r.code == cli::kExitConfigError);
  CHECK_FALSE(fs::exists(path));
  CHECK(r.err.find("config error") != std::string::npos);
}

TEST_CASE("config errors") {
  CHECK(run_cli({}).code == cli::kExitConfigError);
  CHECK(run_cli({"explode"}).code == cli::kExitConfigError);
  CHECK(run_cli({"sweep", "--n", "10", "--grid", "1,2"}).code == cli::kExitConfigError);
  CHECK(run_cli({"sweep", "--n", "10", "--index", "nope", "--grid", "1"}).code ==
        cli::kExitConfigError);
  CHECK(run_cli({"sweep", "--model", "ws", "--n", "10", "--index", "sombor", "--grid", "1"})
            .code == cli::kExitConfigError);
  CHECK(run_cli({"sweep", "--n", "10", "--index", "sombor", "--grid", "3,1"}).code ==
        cli::kExitConfigError);
  CHECK(run_cli({"sweep", "--n", "10", "--index", "sombor", "--grid", "1", "--format", "xml"})
            .code == cli::kExitConfigError);
  CHECK(run_cli({"sweep", "--n", "10", "--index", "ka1", "--alpha", "1", "--grid", "1"}).code ==
        cli::kExitConfigError);
}

TEST_CASE("I/O failure is a runtime error") {
  const auto r = run_cli({"sweep", "--n", "10", "--index", "sombor", "--grid", "1", "--replicas",
                          "2", "--out", "/nonexistent-dir/out.csv"});
  CHECK(r.code == cli::kExitRuntimeError);
}

TEST_CASE("sweep reports the modified Sombor dense constant") {
  const auto r = run_cli({"sweep", "--model", "er", "--n", "500", "--index", "mso", "--grid",
                          "20", "--replicas", "500", "--seed", "11"});
  REQUIRE(r.code == cli::kExitOk);
  const auto rows = data_rows(r.out);
  REQUIRE(rows.size() == 1);
  const double normalized = io::parse_number(field(rows[0], 15));
  CHECK(normalized == testing::Rel(0.35355).epsilon(0.02));
}

TEST_CASE("JSON config with flag overrides") {
  const auto config = scratch("config.json");
  const auto out = scratch("from_config.json");
  std::ofstream(config) << R"({"model": "rg", "n": 40, "grid": "lin:1:5:3", "index": ["sombor"],
                              "replicas": 3, "seed": 5, "format": "json"})";
  const auto r = run_cli({"sweep", "--config", config.string(), "--n", "60", "--out", out.string()});
  REQUIRE(r.code == cli::kExitOk);
  const auto result = io::load_result(out);
  CHECK(result.shape == ModelShape::rg(60));
  CHECK(result.points.size() == 3);
  CHECK(result.replicas == 3);
  CHECK(result.master_seed == 5);

  std::ofstream(config) << R"({"model": "er", "bogus": 1})";
  CHECK(run_cli({"sweep", "--config", config.string()}).code == cli::kExitConfigError);
  std::ofstream(config) << "{not json";
  CHECK(run_cli({"sweep", "--config", config.string()}).code == cli::kExitConfigError);
}

TEST_CASE("collapse of identical files passes and of a scaled copy fails") {
  const auto a = scratch("a.json");
  const auto b = scratch("b.json");
  REQUIRE(run_cli({"sweep", "--n", "60", "--index", "sombor,bso", "--grid", "log:1:20:5",
                   "--replicas", "10", "--format", "json", "--out", a.string()})
              .code == cli::kExitOk);
  fs::copy_file(a, b);
  auto r = run_cli({"collapse", "--inputs", a.string(), "--inputs", b.string()});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.find("sombor distance=0 ") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  auto scaled = io::load_result(a);
  for (auto& point : scaled.points) {
    for (auto& stats : point.indices) {
      stats = EnsembleStats::from_moments(stats.count(), stats.mean() * 1.1, stats.m2());
    }
  }
  io::save_result(b, scaled, io::Format::kCsv);
  const auto merged = scratch("merged.csv");
  r = run_cli({"collapse", "--inputs", a.string(), "--inputs", b.string(), "--merged-out",
               merged.string()});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.find("PASS") == std::string::npos);
  CHECK(r.out.find("FAIL") != std::string::npos);
  CHECK(fs::exists(merged));
}

TEST_CASE("collapse rejects inputs with different indices") {
  const auto a = scratch("spec_a.csv");
  const auto b = scratch("spec_b.csv");
  REQUIRE(run_cli({"sweep", "--n", "30", "--index", "sombor", "--grid", "1,2", "--replicas", "2",
                   "--out", a.string()})
              .code == cli::kExitOk);
  REQUIRE(run_cli({"sweep", "--n", "30", "--index", "bso", "--grid", "1,2", "--replicas", "2",
                   "--out", b.string()})
              .code == cli::kExitOk);
  CHECK(run_cli({"collapse", "--inputs", a.string(), "--inputs", b.string()}).code ==
        cli::kExitConfigError);
  CHECK(run_cli({"collapse", "--inputs", a.string()}).code == cli::kExitConfigError);
}

TEST_CASE("inline cross-model collapse at matched mean degree") {
  const auto r = run_cli({"collapse", "--members", "er:500,rg:500,br:250:250", "--index",
                          "sombor,mso,bso", "--grid", "10,15,20", "--replicas", "40", "--seed",
                          "9"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("banhatti_sombor") != std::string::npos);
}

TEST_CASE("correlate") {
  CHECK(run_cli({"correlate", "--n", "30", "--grid", "log:0.1:10:4", "--alpha", "0"}).code ==
        cli::kExitConfigError);
  const auto degenerate = run_cli({"correlate", "--n", "30", "--grid", "15,20", "--alpha", "2",
                                   "--replicas", "4", "--spectral-replicas", "2"});
  REQUIRE(degenerate.code == cli::kExitOk);
  CHECK(degenerate.out.find("undefined") != std::string::npos);

  const auto curves = scratch("curves.csv");
  const auto scatter = scratch("scatter.csv");
  const auto r = run_cli({"correlate", "--n", "40", "--grid", "log:0.05:20:6", "--alpha", "-1,2",
                          "--replicas", "10", "--out", curves.string(), "--scatter-out",
                          scatter.string()});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.find("alpha=-1 rho=") != std::string::npos);
  CHECK(r.out.find("alpha=2 rho=") != std::string::npos);
  std::ifstream in(curves);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (!line.starts_with("#") && !line.starts_with("mean_k")) ++rows;
  }
  CHECK(rows == 12);
  CHECK(fs::file_size(scatter) > 0);
}

TEST_CASE("predict") {
  auto r = run_cli({"predict", "--n", "500", "--grid", "10", "--index", "sombor"});
  REQUIRE(r.code == cli::kExitOk);
  auto rows = data_rows(r.out);
  REQUIRE(rows.size() == 1);
  CHECK(io::parse_number(field(rows[0], 7)) == testing::Rel(500 * 70.7107).epsilon(1e-6));
  CHECK(io::parse_number(field(rows[0], 8)) == testing::Rel(70.7107).epsilon(1e-6));
  CHECK(field(rows[0], 9) == "dense");

  r = run_cli({"predict", "--model", "br", "--n1", "250", "--n2", "250", "--grid-axis",
               "control", "--grid", "0.04", "--index", "mso"});
  REQUIRE(r.code == cli::kExitOk);
  rows = data_rows(r.out);
  REQUIRE(rows.size() == 1);
  CHECK(io::parse_number(field(rows[0], 7)) == testing::Rel(176.7767).epsilon(1e-6));

  CHECK(run_cli({"predict", "--n", "100", "--grid", "10", "--index", "alpha_sombor", "--alpha",
                 "0"})
            .code == cli::kExitConfigError);
}

TEST_CASE("version flag") {
  const auto r = run_cli({"--version"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find(SOMBOR_VERSION) != std::string::npos);
}

TEST_CASE("installed binary maps exit codes") {
  const std::string exe = SOMBOR_CLI_PATH;
  auto status = [](const std::string& command) {
    const int raw = std::system((command + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status(exe + " predict --n 100 --grid 10 --index sombor") == 0);
  CHECK(status(exe + " sweep --n 100") == 2);
  CHECK(status(exe + " sweep --n 10 --index sombor --grid 1 --replicas 1 --out /nonexistent/x") ==
        3);
}
