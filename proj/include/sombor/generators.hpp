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
#include <string>
#include <variant>

#include "sombor/graph.hpp"
#include "sombor/seed.hpp"

namespace sombor {

// Erdos-Renyi G(n, p).
struct ErParams {
  std::size_t n = 1;
  double p = 0.0;
};

// Random geometric graph: n uniform points on the closed unit square,
// connected when their distance is <= r.
struct RgParams {
  std::size_t n = 1;
  double r = 0.0;
};

// Bipartite random graph: only the n1*n2 cross pairs are candidate edges.
struct BrParams {
  std::size_t n1 = 1;
  std::size_t n2 = 1;
  double p = 0.0;
};

using ModelParams = std::variant<ErParams, RgParams, BrParams>;

inline constexpr double kMaxRadius = 1.4142135623730951;  // sqrt(2)

void validate(const ModelParams& params);
std::size_t vertex_count(const ModelParams& params);
std::string describe(const ModelParams& params);

enum class ModelFamily { kEr, kRg, kBr };

// A model family with its structural sizes fixed; the control parameter
// (p for ER/BR, r for RG) is supplied per grid point.
struct ModelShape {
  ModelFamily family = ModelFamily::kEr;
  std::size_t n = 1;   // ER/RG vertex count; n1 + n2 for BR.
  std::size_t n1 = 0;  // BR only.
  std::size_t n2 = 0;  // BR only.

  static ModelShape er(std::size_t n) { return {ModelFamily::kEr, n, 0, 0}; }
  static ModelShape rg(std::size_t n) { return {ModelFamily::kRg, n, 0, 0}; }
  static ModelShape br(std::size_t n1, std::size_t n2) {
    return {ModelFamily::kBr, n1 + n2, n1, n2};
  }

  ModelParams at(double control) const;
  std::string family_name() const;

  friend bool operator==(const ModelShape&, const ModelShape&) = default;
};

// "er", "rg" or "br"; throws ArgumentError otherwise.
ModelFamily parse_family(const std::string& name);

Graph sample_er(std::size_t n, double p, const SeedSpec& seed);
Graph sample_rg(std::size_t n, double r, const SeedSpec& seed);

struct BipartiteGraph {
  Graph graph;
  BipartitePartition partition;
};
BipartiteGraph sample_br(std::size_t n1, std::size_t n2, double p, const SeedSpec& seed);

Graph sample(const ModelParams& params, const SeedSpec& seed);

}  // namespace sombor
