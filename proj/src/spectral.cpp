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

#include "sombor/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "sombor/error.hpp"
#include "sombor/indices.hpp"
#include "sombor/parallel.hpp"
#include "sombor/simd/kernels.hpp"
#include "sombor/theory.hpp"

namespace sombor {
namespace {

constexpr double kNormTolerance = 1e-8;
constexpr double kGoeEntropyScale = 2.07;

double mean_entropy_of(const Graph& graph, const SeedSpec& seed) {
  Eigenbasis basis;
  try {
    basis = diagonalize(build_weighted_adjacency(graph, seed));
  } catch (const NumericError& e) {
    throw NumericError(std::string(e.what()) + " (master_seed=" +
                       std::to_string(seed.master_seed) +
                       ", replica=" + std::to_string(seed.replica_index) + ")");
  }
  const auto entropies = eigenvector_entropies(basis);
  return simd::active_kernels().sum(entropies.data(), entropies.size()) /
         static_cast<double>(entropies.size());
}

}  // namespace

WeightedAdjacency::WeightedAdjacency(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw ArgumentError("adjacency must be square");
}

WeightedAdjacency build_weighted_adjacency(const Graph& graph, const SeedSpec& seed) {
  const auto n = static_cast<Eigen::Index>(graph.vertex_count());
  std::mt19937_64 engine(stream_seed(seed, Stream::kWeights));
  std::normal_distribution<double> diagonal(0.0, std::sqrt(kDiagonalVariance));
  std::normal_distribution<double> off_diagonal(0.0, std::sqrt(kEdgeVariance));

  Eigen::MatrixXd entries = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) entries(i, i) = diagonal(engine);
  for (const Edge& e : graph.edges()) {
    const double w = off_diagonal(engine);
    entries(e.u, e.v) = w;
    entries(e.v, e.u) = w;
  }
  return WeightedAdjacency(std::move(entries));
}

Eigenbasis diagonalize(const WeightedAdjacency& matrix) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix.matrix(),
                                                        Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NumericError("symmetric eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double shannon_entropy(std::span<const double> amplitudes) {
  const auto& kernels = simd::active_kernels();
  const double norm = kernels.dot(amplitudes.data(), amplitudes.data(), amplitudes.size());
  if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
    throw ArgumentError("eigenvector is not unit norm (sum of squares " + std::to_string(norm) +
                        ")");
  }
  double entropy = 0.0;
  for (const double a : amplitudes) {
    const double weight = a * a;
    if (weight > 0.0) entropy -= weight * std::log(weight);
  }
  // Weights a hair above 1 round to tiny negative terms.
  return std::clamp(entropy, 0.0, std::log(static_cast<double>(amplitudes.size())));
}

std::vector<double> eigenvector_entropies(const Eigenbasis& basis) {
  const Eigen::Index n = basis.vectors.rows();
  std::vector<double> entropies(static_cast<std::size_t>(basis.vectors.cols()));
  for (Eigen::Index i = 0; i < basis.vectors.cols(); ++i) {
    // Columns of a column-major matrix are contiguous.
    entropies[static_cast<std::size_t>(i)] = shannon_entropy(
        std::span<const double>(basis.vectors.col(i).data(), static_cast<std::size_t>(n)));
  }
  return entropies;
}

double goe_entropy(std::size_t n) {
  return std::log(static_cast<double>(n) / kGoeEntropyScale);
}

EntropyResult mean_eigenvector_entropy(const ModelParams& params, std::size_t replicas,
                                       std::uint64_t master_seed, unsigned threads) {
  if (replicas == 0) throw ArgumentError("need at least one replica");
  validate(params);
  std::vector<double> per_replica(replicas);
  parallel_for(replicas, threads, [&](std::size_t r) {
    const SeedSpec seed{master_seed, r};
    per_replica[r] = mean_entropy_of(sample(params, seed), seed);
  });

  EntropyResult result;
  result.n = vertex_count(params);
  result.replica_count = replicas;
  result.mean_entropy = simd::active_kernels().sum(per_replica.data(), replicas) /
                        static_cast<double>(replicas);
  result.normalized = result.mean_entropy / goe_entropy(result.n);
  return result;
}

double pearson_correlation(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw ArgumentError("pearson: sequences differ in length");
  if (xs.size() < 2) throw ArgumentError("pearson: need at least two points");
  const auto& kernels = simd::active_kernels();
  const auto count = static_cast<double>(xs.size());
  const double mean_x = kernels.sum(xs.data(), xs.size()) / count;
  const double mean_y = kernels.sum(ys.data(), ys.size()) / count;

  std::vector<double> dx(xs.size());
  std::vector<double> dy(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    dx[i] = xs[i] - mean_x;
    dy[i] = ys[i] - mean_y;
  }
  const double sxx = kernels.dot(dx.data(), dx.data(), dx.size());
  const double syy = kernels.dot(dy.data(), dy.data(), dy.size());
  const double sxy = kernels.dot(dx.data(), dy.data(), dx.size());

  // Deviations at rounding level of the mean count as constant.
  constexpr double kRelativeFloor = 1e-12;
  const double floor_x = kRelativeFloor * (std::abs(mean_x) + 1e-300);
  const double floor_y = kRelativeFloor * (std::abs(mean_y) + 1e-300);
  if (std::sqrt(sxx / count) <= floor_x || std::sqrt(syy / count) <= floor_y) {
    throw UndefinedCorrelation("pearson: a sequence is constant");
  }
  const double rho = sxy / std::sqrt(sxx * syy);
  return std::clamp(rho, -1.0, 1.0);
}

ConnectivityRegime classify_regime(double mean_k) noexcept {
  if (mean_k < 0.1) return ConnectivityRegime::kIsolated;
  if (mean_k > 10.0) return ConnectivityRegime::kConnected;
  return ConnectivityRegime::kTransition;
}

CorrelationReport index_entropy_correlation(const CorrelationPlan& plan) {
  if (plan.mean_degrees.empty()) throw ArgumentError("correlation grid is empty");
  if (plan.alphas.empty()) throw ArgumentError("no alpha values requested");
  if (plan.index_replicas == 0 || plan.spectral_replicas == 0) {
    throw ArgumentError("replica counts must be >= 1");
  }
  std::vector<IndexSpec> specs;
  for (const double alpha : plan.alphas) specs.push_back(IndexSpec::complexity(alpha));

  CorrelationReport report;
  report.shape = plan.shape;
  report.mean_degrees = plan.mean_degrees;
  for (const double k : plan.mean_degrees) {
    report.controls.push_back(theory::control_for_mean_degree(plan.shape, k));
  }

  const std::size_t points = plan.mean_degrees.size();
  const std::size_t per_point = std::max(plan.index_replicas, plan.spectral_replicas);
  // [point][replica][spec] and [point][replica]
  std::vector<double> index_values(points * plan.index_replicas * specs.size());
  std::vector<double> entropy_values(points * plan.spectral_replicas);

  parallel_for(points * per_point, plan.threads, [&](std::size_t task) {
    const std::size_t point = task / per_point;
    const std::size_t replica = task % per_point;
    const SeedSpec seed{combine_seed(plan.master_seed, point), replica};
    const Graph graph = sample(plan.shape.at(report.controls[point]), seed);
    if (replica < plan.index_replicas) {
      double* slot = &index_values[(point * plan.index_replicas + replica) * specs.size()];
      for (std::size_t s = 0; s < specs.size(); ++s) slot[s] = ka1_index(graph, specs[s]);
    }
    if (replica < plan.spectral_replicas) {
      entropy_values[point * plan.spectral_replicas + replica] = mean_entropy_of(graph, seed);
    }
  });

  const double n = static_cast<double>(plan.shape.n);
  const double s_goe = goe_entropy(plan.shape.n);
  for (std::size_t point = 0; point < points; ++point) {
    double total = 0.0;
    for (std::size_t r = 0; r < plan.spectral_replicas; ++r) {
      total += entropy_values[point * plan.spectral_replicas + r];
    }
    report.normalized_entropy.push_back(total / static_cast<double>(plan.spectral_replicas) /
                                        s_goe);
  }

  for (std::size_t s = 0; s < specs.size(); ++s) {
    AlphaCorrelation entry;
    entry.alpha = plan.alphas[s];
    const double scale = std::exp2(1.0 + 1.0 / entry.alpha);
    for (std::size_t point = 0; point < points; ++point) {
      double total = 0.0;
      for (std::size_t r = 0; r < plan.index_replicas; ++r) {
        total += index_values[(point * plan.index_replicas + r) * specs.size() + s];
      }
      entry.scaled_index.push_back(scale * total / static_cast<double>(plan.index_replicas) / n);
    }
    if (points < kMinCorrelationPoints) {
      entry.note = "undefined: fewer than " + std::to_string(kMinCorrelationPoints) +
                   " grid points";
    } else {
      try {
        entry.rho = pearson_correlation(entry.scaled_index, report.normalized_entropy);
      } catch (const UndefinedCorrelation&) {
        entry.note = "undefined: constant curve";
      }
    }
    report.per_alpha.push_back(std::move(entry));
  }
  return report;
}

}  // namespace sombor
