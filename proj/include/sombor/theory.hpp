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
#include <utility>

#include "sombor/generators.hpp"
#include "sombor/indices.hpp"

// Closed-form mean degrees and dense-limit (<k> >> 1) predictions for the
// ER, RG and BR ensembles. Every function evaluates its formula for any
// valid input; whether the dense-limit regime applies is up to the caller.
namespace sombor::theory {

enum class Regime { kDenseLimit };

// Mean degree from which dense-limit predictions are expected to hold.
inline constexpr double kDenseThreshold = 10.0;

struct Prediction {
  double value = 0.0;
  Regime regime = Regime::kDenseLimit;
};

double er_mean_degree(std::size_t n, double p);

// Probability that two uniform points of the unit square lie within r.
double rg_connection_probability(double r);
double rg_mean_degree(std::size_t n, double r);

// (<k1>, <k2>) = (n2 p, n1 p).
std::pair<double, double> br_mean_degrees(std::size_t n1, std::size_t n2, double p);

// Mean degree over all n1 + n2 vertices, 2 n1 n2 p / (n1 + n2). Equals
// n2 p when n1 == n2.
double br_overall_mean_degree(std::size_t n1, std::size_t n2, double p);

double analytic_mean_degree(const ModelParams& params);

// <X>/n ~ 2^(beta-1) <k>^(1 + alpha beta) for ER, RG and BR with n1 == n2.
// Throws ArgumentError for mean_k <= 0.
Prediction predict_scaled_uniform(const IndexSpec& spec, double mean_k);

// <X> ~ n1 n2 p [(n1 p)^alpha + (n2 p)^alpha]^beta.
Prediction predict_br_dense(const IndexSpec& spec, std::size_t n1, std::size_t n2, double p);

// Named BR forms, written out independently of predict_br_dense.
double br_dense_sombor(std::size_t n1, std::size_t n2, double p);
double br_dense_modified_sombor(std::size_t n1, std::size_t n2);
double br_dense_banhatti_sombor(std::size_t n1, std::size_t n2);

// Total <X> for any model: n * predict_scaled_uniform for ER/RG, the BR
// dense form otherwise.
Prediction predict_dense(const ModelParams& params, const IndexSpec& spec);

// p* such that curves against p / p* coincide across (n1, n2); defined for
// the modified and Banhatti-Sombor indices only.
double br_scaling_parameter(const IndexSpec& spec, std::size_t n1, std::size_t n2);

// Inverse of g on [0, sqrt(2)] by bisection (g is nondecreasing).
double rg_radius_for_probability(double probability, double tolerance = 1e-12);

double er_probability_for_mean_degree(std::size_t n, double mean_k);
double rg_radius_for_mean_degree(std::size_t n, double mean_k);
double br_probability_for_mean_degree(std::size_t n1, std::size_t n2, double mean_k);

// Control value (p or r) at which the shape reaches the given analytic
// mean degree. For BR this is the overall mean degree.
double control_for_mean_degree(const ModelShape& shape, double mean_k);

}  // namespace sombor::theory
