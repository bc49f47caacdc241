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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sombor/generators.hpp"
#include "sombor/graph.hpp"
#include "sombor/seed.hpp"

namespace sombor {

// Dense symmetric matrix with the graph's sparsity pattern: N(0, 1) on the
// whole diagonal, N(0, 1/2) on each edge (mirrored), zero elsewhere. An
// empty graph gives a random diagonal (Poisson) matrix, a complete graph a
// GOE matrix.
class WeightedAdjacency {
 public:
  explicit WeightedAdjacency(Eigen::MatrixXd entries);

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  const Eigen::MatrixXd& matrix() const noexcept { return entries_; }
  double operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

 private:
  Eigen::MatrixXd entries_;
};

inline constexpr double kDiagonalVariance = 1.0;
inline constexpr double kEdgeVariance = 0.5;

WeightedAdjacency build_weighted_adjacency(const Graph& graph, const SeedSpec& seed);

// Orthonormal eigenbasis; column i of `vectors` pairs with values[i].
struct Eigenbasis {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

// Throws NumericError if the solver does not converge.
Eigenbasis diagonalize(const WeightedAdjacency& matrix);

// -sum a_j^2 ln a_j^2 in nats, with 0 ln 0 = 0. Throws ArgumentError unless
// sum a_j^2 = 1 within 1e-8.
double shannon_entropy(std::span<const double> amplitudes);

std::vector<double> eigenvector_entropies(const Eigenbasis& basis);

// Mean eigenvector entropy of a GOE matrix of dimension n, ln(n / 2.07).
double goe_entropy(std::size_t n);

struct EntropyResult {
  double mean_entropy = 0.0;  // nats
  double normalized = 0.0;    // mean_entropy / goe_entropy(n)
  std::size_t n = 0;
  std::size_t replica_count = 0;
};

// Average of S_i over all eigenvectors of `replicas` independent weighted
// adjacency matrices. Replica r samples its graph from
// SeedSpec{master_seed, r}; the weights use a separate stream of that seed.
EntropyResult mean_eigenvector_entropy(const ModelParams& params, std::size_t replicas,
                                       std::uint64_t master_seed, unsigned threads = 1);

// Sample Pearson coefficient. Throws ArgumentError on mismatched or short
// input and UndefinedCorrelation when either sequence is constant.
double pearson_correlation(std::span<const double> xs, std::span<const double> ys);

// Connectivity regimes of the scaled complexity index.
enum class ConnectivityRegime { kIsolated, kTransition, kConnected };

// < 1/10 isolated, > 10 connected, transition in between.
ConnectivityRegime classify_regime(double mean_k) noexcept;

struct CorrelationPlan {
  ModelShape shape;
  std::vector<double> mean_degrees;  // analytic <k> per grid point
  std::vector<double> alphas;        // each must be nonzero
  std::size_t index_replicas = 100;
  std::size_t spectral_replicas = 10;
  std::uint64_t master_seed = 0;
  unsigned threads = 0;
};

struct AlphaCorrelation {
  double alpha = 0.0;
  std::vector<double> scaled_index;  // 2^(1+1/alpha) <KA(alpha, -1/alpha)> / n
  std::optional<double> rho;         // empty when the correlation is undefined
  std::string note;
};

struct CorrelationReport {
  ModelShape shape;
  std::vector<double> mean_degrees;
  std::vector<double> controls;
  std::vector<double> normalized_entropy;  // <S> / S_GOE
  std::vector<AlphaCorrelation> per_alpha;
};

// Grids with fewer than this many points yield no correlation.
inline constexpr std::size_t kMinCorrelationPoints = 3;

CorrelationReport index_entropy_correlation(const CorrelationPlan& plan);

}  // namespace sombor
