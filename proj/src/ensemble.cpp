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

#include "sombor/ensemble.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

#include "sombor/error.hpp"
#include "sombor/parallel.hpp"
#include "sombor/theory.hpp"

namespace sombor {

EnsembleStats EnsembleStats::from_moments(std::size_t count, double mean, double m2) {
  EnsembleStats stats;
  stats.count_ = count;
  stats.mean_ = mean;
  stats.m2_ = m2;
  return stats;
}

void EnsembleStats::add(double value) noexcept {
  ++count_;
  const double delta = value - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (value - mean_);
}

void EnsembleStats::merge(const EnsembleStats& other) noexcept {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  const auto na = static_cast<double>(count_);
  const auto nb = static_cast<double>(other.count_);
  const double total = na + nb;
  const double delta = other.mean_ - mean_;
  mean_ += delta * nb / total;
  m2_ += other.m2_ + delta * delta * na * nb / total;
  count_ += other.count_;
}

double EnsembleStats::variance() const noexcept {
  return count_ < 2 ? 0.0 : m2_ / static_cast<double>(count_ - 1);
}

double EnsembleStats::std_error() const noexcept {
  return count_ == 0 ? 0.0 : std::sqrt(variance() / static_cast<double>(count_));
}

std::size_t default_replicas(std::size_t n, std::size_t cap) {
  if (n == 0) throw ArgumentError("n must be >= 1");
  const std::size_t full_scale = (10'000'000 + n - 1) / n;
  return std::max<std::size_t>(1, std::min(full_scale, cap));
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi >= lo)) throw ArgumentError("log grid needs 0 < lo <= hi");
  if (count == 0) throw ArgumentError("grid needs at least one point");
  if (count == 1) return {lo};
  std::vector<double> grid(count);
  const double step = std::log(hi / lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) grid[i] = lo * std::exp(step * static_cast<double>(i));
  grid.back() = hi;
  return grid;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t count) {
  if (!(hi >= lo)) throw ArgumentError("linear grid needs lo <= hi");
  if (count == 0) throw ArgumentError("grid needs at least one point");
  if (count == 1) return {lo};
  std::vector<double> grid(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) grid[i] = lo + step * static_cast<double>(i);
  grid.back() = hi;
  return grid;
}

SweepPlan SweepPlan::over_mean_degrees(const ModelShape& shape,
                                       std::span<const double> mean_degrees,
                                       std::vector<IndexSpec> specs, std::size_t replicas,
                                       std::uint64_t master_seed) {
  SweepPlan plan;
  plan.shape = shape;
  for (const double k : mean_degrees) {
    plan.controls.push_back(theory::control_for_mean_degree(shape, k));
  }
  plan.specs = std::move(specs);
  plan.replicas = replicas;
  plan.master_seed = master_seed;
  return plan;
}

void SweepPlan::validate() const {
  if (controls.empty()) throw ArgumentError("sweep grid is empty");
  if (specs.empty()) throw ArgumentError("sweep needs at least one index");
  if (replicas == 0) throw ArgumentError("replicas must be >= 1");
  for (std::size_t i = 0; i < controls.size(); ++i) {
    sombor::validate(shape.at(controls[i]));
    if (i > 0 && !(controls[i] > controls[i - 1])) {
      throw ArgumentError("sweep grid must be strictly increasing");
    }
  }
  if (shape.family == ModelFamily::kBr && shape.n != shape.n1 + shape.n2) {
    throw ArgumentError("BR shape: n must equal n1 + n2");
  }
  for (const IndexSpec& spec : specs) IndexSpec::general(spec.alpha, spec.beta);
}

std::size_t SweepResult::spec_position(const IndexSpec& spec) const {
  const auto it = std::find(specs.begin(), specs.end(), spec);
  if (it == specs.end()) throw ArgumentError("index " + spec.label() + " not in result");
  return static_cast<std::size_t>(it - specs.begin());
}

SweepResult run_sweep(const SweepPlan& plan) {
  plan.validate();
  const auto started = std::chrono::steady_clock::now();

  const std::size_t points = plan.controls.size();
  const std::size_t stride = plan.specs.size() + 1;  // mean degree, then indices
  std::vector<double> values(points * plan.replicas * stride);

  parallel_for(points * plan.replicas, plan.threads, [&](std::size_t task) {
    const std::size_t point = task / plan.replicas;
    const std::size_t replica = task % plan.replicas;
    const SeedSpec seed{combine_seed(plan.master_seed, point), replica};
    try {
      const Graph graph = sample(plan.shape.at(plan.controls[point]), seed);
      double* slot = &values[task * stride];
      slot[0] = graph.mean_degree();
      for (std::size_t s = 0; s < plan.specs.size(); ++s) {
        slot[s + 1] = ka1_index(graph, plan.specs[s]);
      }
    } catch (const std::exception& e) {
      throw NumericError("sweep point " + std::to_string(point) + " (" +
                         describe(plan.shape.at(plan.controls[point])) + "), replica " +
                         std::to_string(replica) + ", master_seed " +
                         std::to_string(plan.master_seed) + ": " + e.what());
    }
  });

  SweepResult result;
  result.shape = plan.shape;
  result.specs = plan.specs;
  result.replicas = plan.replicas;
  result.master_seed = plan.master_seed;
  result.tool_version = SOMBOR_VERSION;
  for (std::size_t point = 0; point < points; ++point) {
    SweepPoint sp;
    sp.control = plan.controls[point];
    const ModelParams params = plan.shape.at(sp.control);
    sp.mean_k = theory::analytic_mean_degree(params);
    if (const auto* br = std::get_if<BrParams>(&params)) {
      std::tie(sp.mean_k1, sp.mean_k2) = theory::br_mean_degrees(br->n1, br->n2, br->p);
    } else {
      sp.mean_k1 = sp.mean_k2 = sp.mean_k;
    }
    sp.indices.resize(plan.specs.size());
    for (std::size_t replica = 0; replica < plan.replicas; ++replica) {
      const double* slot = &values[(point * plan.replicas + replica) * stride];
      sp.degree.add(slot[0]);
      for (std::size_t s = 0; s < plan.specs.size(); ++s) sp.indices[s].add(slot[s + 1]);
    }
    result.points.push_back(std::move(sp));
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

CollapseAxes collapse_axes(const ModelShape& shape, const SweepPoint& point,
                           const IndexSpec& spec, double mean_value) {
  const double n = static_cast<double>(shape.n);
  if (shape.family != ModelFamily::kBr || shape.n1 == shape.n2) {
    return {point.mean_k, mean_value / n};
  }
  const double n1 = static_cast<double>(shape.n1);
  const double n2 = static_cast<double>(shape.n2);
  const double h = std::hypot(n1, n2);
  const double p = point.control;
  if (spec == IndexSpec::sombor()) return {point.mean_k1 * point.mean_k2, mean_value / h};
  if (spec == IndexSpec::modified_sombor()) {
    return {p / theory::br_scaling_parameter(spec, shape.n1, shape.n2), mean_value * h / (n1 * n2)};
  }
  if (spec == IndexSpec::banhatti_sombor()) {
    return {p / theory::br_scaling_parameter(spec, shape.n1, shape.n2), mean_value / h};
  }
  return {point.mean_k, mean_value / n};
}

Curve normalize_for_collapse(const SweepResult& result, const IndexSpec& spec) {
  const std::size_t s = result.spec_position(spec);
  Curve curve;
  curve.label = result.shape.family_name() + ":" + std::to_string(result.shape.n) + ":" +
                spec.label();
  for (const SweepPoint& point : result.points) {
    const CollapseAxes axes = collapse_axes(result.shape, point, spec, point.indices[s].mean());
    curve.x.push_back(axes.x);
    curve.y.push_back(axes.y);
  }
  return curve;
}

namespace {

struct LogCurve {
  std::vector<double> log_x;
  std::vector<double> y;
};

LogCurve positive_sorted(const Curve& curve) {
  if (curve.x.size() != curve.y.size()) throw ArgumentError("curve x/y length mismatch");
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < curve.x.size(); ++i) {
    if (curve.x[i] > 0.0) pts.emplace_back(curve.x[i], curve.y[i]);
  }
  if (pts.empty()) throw ArgumentError("curve '" + curve.label + "' has no point with x > 0");
  std::sort(pts.begin(), pts.end());
  LogCurve out;
  for (const auto& [x, y] : pts) {
    out.log_x.push_back(std::log(x));
    out.y.push_back(y);
  }
  return out;
}

double interpolate(const LogCurve& curve, double log_x) {
  const auto& xs = curve.log_x;
  const auto upper = std::lower_bound(xs.begin(), xs.end(), log_x);
  if (upper == xs.end()) return curve.y.back();
  const auto hi = static_cast<std::size_t>(upper - xs.begin());
  if (*upper == log_x || hi == 0) return curve.y[hi];
  const std::size_t lo = hi - 1;
  const double t = (log_x - xs[lo]) / (xs[hi] - xs[lo]);
  return curve.y[lo] + t * (curve.y[hi] - curve.y[lo]);
}

}  // namespace

double collapse_distance(std::span<const Curve> curves) {
  if (curves.size() < 2) throw ArgumentError("collapse needs at least two curves");
  std::vector<LogCurve> logged;
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (const Curve& curve : curves) {
    logged.push_back(positive_sorted(curve));
    lo = std::max(lo, logged.back().log_x.front());
    hi = std::min(hi, logged.back().log_x.back());
  }
  if (lo > hi) throw ArgumentError("curves have disjoint x ranges");

  std::vector<double> grid;
  for (const LogCurve& curve : logged) {
    for (const double x : curve.log_x) {
      if (x >= lo && x <= hi) grid.push_back(x);
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  double worst = 0.0;
  for (const double x : grid) {
    double min_y = std::numeric_limits<double>::infinity();
    double max_y = -std::numeric_limits<double>::infinity();
    double sum_y = 0.0;
    for (const LogCurve& curve : logged) {
      const double y = interpolate(curve, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
      sum_y += y;
    }
    const double mean_y = sum_y / static_cast<double>(logged.size());
    const double spread = max_y - min_y;
    if (spread == 0.0) continue;
    if (mean_y == 0.0) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, spread / std::abs(mean_y));
  }
  return worst;
}

}  // namespace sombor
