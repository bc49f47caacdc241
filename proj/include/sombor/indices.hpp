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

#include <string>

#include "sombor/graph.hpp"

namespace sombor {

// A point (alpha, beta) of the first (alpha, beta)-KA family,
//   KA(G) = sum over edges uv of (k_u^alpha + k_v^alpha)^beta.
// The named constructors cover the Sombor-type special cases.
struct IndexSpec {
  double alpha = 2.0;
  double beta = 0.5;

  // Throws ArgumentError on non-finite parameters.
  static IndexSpec general(double alpha, double beta);

  static IndexSpec sombor() { return {2.0, 0.5}; }
  static IndexSpec modified_sombor() { return {2.0, -0.5}; }
  static IndexSpec banhatti_sombor() { return {-2.0, 0.5}; }
  // (alpha, 1/alpha); alpha must be nonzero.
  static IndexSpec alpha_sombor(double alpha);
  // General sum-connectivity index chi_beta = (1, beta).
  static IndexSpec sum_connectivity(double beta) { return general(1.0, beta); }
  // (alpha, -1/alpha): bounded in the dense limit; alpha must be nonzero.
  static IndexSpec complexity(double alpha);

  // Short stable name: "sombor", "modified_sombor", "banhatti_sombor" for the
  // fixed points, otherwise "ka1(alpha;beta)".
  std::string label() const;

  friend bool operator==(const IndexSpec&, const IndexSpec&) = default;
};

enum class Summation { kPlain, kKahan };

// k^exponent: repeated multiplication for integral exponents, exp(e ln k)
// otherwise.
double degree_power(std::uint32_t degree, double exponent) noexcept;

// Throws NumericError when the sum is not finite. kKahan always runs the
// scalar compensated loop; kPlain uses the active SIMD kernels.
double ka1_index(const Graph& graph, const IndexSpec& spec, Summation mode = Summation::kPlain);

double sombor(const Graph& graph);
double modified_sombor(const Graph& graph);
double banhatti_sombor(const Graph& graph);
double alpha_sombor(const Graph& graph, double alpha);
double sum_connectivity(const Graph& graph, double beta);

}  // namespace sombor
