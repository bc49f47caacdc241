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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sombor/ensemble.hpp"
#include "sombor/io.hpp"

namespace sombor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitRuntimeError = 3;

enum class GridAxis { kMeanDegree, kControl };

// Everything a subcommand needs. Filled from defaults, then an optional JSON
// config file, then command-line flags (flags win).
struct RunConfig {
  std::string command;
  std::string model = "er";
  std::size_t n = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::string grid;
  std::string grid_axis = "k";
  std::vector<double> alphas;
  std::optional<double> beta;
  std::vector<std::string> indices;
  std::size_t replicas = 0;           // 0: ceil(1e7 / n) capped at replica_cap
  std::size_t replica_cap = 2000;
  std::size_t spectral_replicas = 0;  // 0: replicas / 10, at least 1
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "csv";
  unsigned threads = 0;
  // collapse
  std::vector<std::string> inputs;
  std::vector<std::string> members;  // "er:500", "rg:500", "br:250:250"
  double threshold = 0.05;
  std::string merged_out;
  // correlate
  std::string scatter_out;
};

// Applies keys of a JSON object onto `config`. Unknown keys are an error.
void apply_json(RunConfig& config, const nlohmann::json& doc);

// "log:lo:hi:count", "lin:lo:hi:count" or a comma-separated list.
std::vector<double> parse_grid(const std::string& text);

// Parses "er:500" / "rg:500" / "br:250:250".
ModelShape parse_member(const std::string& text);

ModelShape shape_of(const RunConfig& config);
std::vector<IndexSpec> specs_of(const RunConfig& config);

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_collapse(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_correlate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_predict(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full command line, excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sombor::cli
