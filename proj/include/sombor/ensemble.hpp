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
#include <span>
#include <string>
#include <vector>

#include "sombor/generators.hpp"
#include "sombor/indices.hpp"

namespace sombor {

// Single-pass mean/variance accumulator (Welford), mergeable (Chan et al.).
class EnsembleStats {
 public:
  EnsembleStats() = default;
  static EnsembleStats from_moments(std::size_t count, double mean, double m2);

  void add(double value) noexcept;
  void merge(const EnsembleStats& other) noexcept;

  std::size_t count() const noexcept { return count_; }
  double mean() const noexcept { return mean_; }
  // Sum of squared deviations from the mean.
  double m2() const noexcept { return m2_; }
  // Unbiased sample variance; 0 below two samples.
  double variance() const noexcept;
  double std_error() const noexcept;

  friend bool operator==(const EnsembleStats&, const EnsembleStats&) = default;

 private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

// Replicas per point: ceil(1e7 / n), capped.
std::size_t default_replicas(std::size_t n, std::size_t cap = 2000);

// count points, log-spaced on [lo, hi]; lo must be positive.
std::vector<double> log_grid(double lo, double hi, std::size_t count);
std::vector<double> linear_grid(double lo, double hi, std::size_t count);

struct SweepPlan {
  ModelShape shape;
  std::vector<double> controls;  // p or r, strictly increasing
  std::vector<IndexSpec> specs;
  std::size_t replicas = 1;
  std::uint64_t master_seed = 0;
  unsigned threads = 0;

  // Controls obtained by inverting the analytic mean degree.
  static SweepPlan over_mean_degrees(const ModelShape& shape, std::span<const double> mean_degrees,
                                     std::vector<IndexSpec> specs, std::size_t replicas,
                                     std::uint64_t master_seed);

  // Throws ArgumentError describing the first violated constraint.
  void validate() const;
};

struct SweepPoint {
  double control = 0.0;
  double mean_k = 0.0;   // analytic; overall mean degree for BR
  double mean_k1 = 0.0;  // BR set 1 (n2 p); equals mean_k otherwise
  double mean_k2 = 0.0;  // BR set 2 (n1 p); equals mean_k otherwise
  EnsembleStats degree;  // empirical mean degree per replica
  std::vector<EnsembleStats> indices;  // parallel to SweepResult::specs

  friend bool operator==(const SweepPoint&, const SweepPoint&) = default;
};

struct SweepResult {
  ModelShape shape;
  std::vector<IndexSpec> specs;
  std::vector<SweepPoint> points;
  std::size_t replicas = 0;
  std::uint64_t master_seed = 0;
  double wall_seconds = 0.0;
  std::string tool_version;

  // Throws ArgumentError if the index is absent.
  std::size_t spec_position(const IndexSpec& spec) const;

  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

// Replica r of point i is sampled from SeedSpec{combine_seed(master, i), r}.
// Per-replica values are accumulated in replica order, so results are
// bit-identical for any thread count.
SweepResult run_sweep(const SweepPlan& plan);

struct Curve {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct CollapseAxes {
  double x = 0.0;
  double y = 0.0;
};

// Collapse coordinates of one mean value <X> at a grid point.
//   ER, RG, BR(n1 == n2): (<k>, <X>/n).
//   BR(n1 != n2): Sombor (<k1><k2>, <X>/h); modified Sombor (p h, <X> h/(n1 n2));
//   Banhatti-Sombor (p n1 n2/h, <X>/h) with h = sqrt(n1^2 + n2^2); any other
//   index (<k>, <X>/n).
CollapseAxes collapse_axes(const ModelShape& shape, const SweepPoint& point,
                           const IndexSpec& spec, double mean_value);

Curve normalize_for_collapse(const SweepResult& result, const IndexSpec& spec);

// Largest relative spread (max - min) / mean across curves, evaluated on
// the union of the curves' x values inside their common range, with linear
// interpolation in log x. Points with x <= 0 are ignored. Throws
// ArgumentError for fewer than two curves or disjoint ranges.
double collapse_distance(std::span<const Curve> curves);

}  // namespace sombor
