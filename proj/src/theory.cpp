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

#include "sombor/theory.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sombor/error.hpp"

namespace sombor::theory {
namespace {

double hypot_sizes(std::size_t n1, std::size_t n2) {
  return std::hypot(static_cast<double>(n1), static_cast<double>(n2));
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("probability outside [0, 1]");
}

void check_mean_degree(double mean_k, double max_k) {
  if (!(mean_k >= 0.0 && mean_k <= max_k)) {
    throw ArgumentError("mean degree " + std::to_string(mean_k) + " outside [0, " +
                        std::to_string(max_k) + "]");
  }
}

}  // namespace

double er_mean_degree(std::size_t n, double p) {
  check_probability(p);
  return static_cast<double>(n - 1) * p;
}

double rg_connection_probability(double r) {
  if (!(r >= 0.0 && r <= kMaxRadius)) {
    throw ArgumentError("radius " + std::to_string(r) + " outside [0, sqrt(2)]");
  }
  const double r2 = r * r;
  if (r <= 1.0) return r2 * (std::numbers::pi - 8.0 * r / 3.0 + r2 / 2.0);
  const double inv = 1.0 / r;
  // Rounding can put r^2 - 1 a hair below zero only for r == 1, handled above.
  return 1.0 / 3.0 - 2.0 * r2 * (1.0 - std::asin(inv) + std::acos(inv)) +
         4.0 / 3.0 * (2.0 * r2 + 1.0) * std::sqrt(r2 - 1.0) - r2 * r2 / 2.0;
}

double rg_mean_degree(std::size_t n, double r) {
  return static_cast<double>(n - 1) * rg_connection_probability(r);
}

std::pair<double, double> br_mean_degrees(std::size_t n1, std::size_t n2, double p) {
  check_probability(p);
  return {static_cast<double>(n2) * p, static_cast<double>(n1) * p};
}

double br_overall_mean_degree(std::size_t n1, std::size_t n2, double p) {
  check_probability(p);
  return 2.0 * static_cast<double>(n1) * static_cast<double>(n2) * p /
         static_cast<double>(n1 + n2);
}

double analytic_mean_degree(const ModelParams& params) {
  return std::visit(
      [](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ErParams>) {
          return er_mean_degree(m.n, m.p);
        } else if constexpr (std::is_same_v<T, RgParams>) {
          return rg_mean_degree(m.n, m.r);
        } else {
          return br_overall_mean_degree(m.n1, m.n2, m.p);
        }
      },
      params);
}

Prediction predict_scaled_uniform(const IndexSpec& spec, double mean_k) {
  if (!(mean_k > 0.0)) throw ArgumentError("dense-limit prediction needs <k> > 0");
  return {std::exp2(spec.beta - 1.0) * std::pow(mean_k, 1.0 + spec.alpha * spec.beta)};
}

Prediction predict_br_dense(const IndexSpec& spec, std::size_t n1, std::size_t n2, double p) {
  check_probability(p);
  const double k1 = static_cast<double>(n1) * p;
  const double k2 = static_cast<double>(n2) * p;
  const double edges = static_cast<double>(n1) * static_cast<double>(n2) * p;
  return {edges * std::pow(std::pow(k1, spec.alpha) + std::pow(k2, spec.alpha), spec.beta)};
}

double br_dense_sombor(std::size_t n1, std::size_t n2, double p) {
  check_probability(p);
  // Edge count n1 n2 p times the per-edge value p sqrt(n1^2 + n2^2); this is
  // <k1><k2> sqrt(n1^2 + n2^2).
  return hypot_sizes(n1, n2) * static_cast<double>(n1) * static_cast<double>(n2) * p * p;
}

double br_dense_modified_sombor(std::size_t n1, std::size_t n2) {
  return static_cast<double>(n1) * static_cast<double>(n2) / hypot_sizes(n1, n2);
}

double br_dense_banhatti_sombor(std::size_t n1, std::size_t n2) {
  return hypot_sizes(n1, n2);
}

Prediction predict_dense(const ModelParams& params, const IndexSpec& spec) {
  validate(params);
  if (const auto* br = std::get_if<BrParams>(&params)) {
    return predict_br_dense(spec, br->n1, br->n2, br->p);
  }
  const double n = static_cast<double>(vertex_count(params));
  return {n * predict_scaled_uniform(spec, analytic_mean_degree(params)).value};
}

double br_scaling_parameter(const IndexSpec& spec, std::size_t n1, std::size_t n2) {
  if (n1 == 0 || n2 == 0) throw ArgumentError("set sizes must be >= 1");
  const double h = hypot_sizes(n1, n2);
  if (spec == IndexSpec::modified_sombor()) return 1.0 / h;
  if (spec == IndexSpec::banhatti_sombor()) {
    return h / (static_cast<double>(n1) * static_cast<double>(n2));
  }
  throw ArgumentError("no p* scaling known for index " + spec.label());
}

double rg_radius_for_probability(double probability, double tolerance) {
  if (!(probability >= 0.0 && probability <= 1.0)) {
    throw ArgumentError("connection probability outside [0, 1]");
  }
  double lo = 0.0;
  double hi = kMaxRadius;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (rg_connection_probability(mid) < probability) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double er_probability_for_mean_degree(std::size_t n, double mean_k) {
  if (n < 2) throw ArgumentError("need n >= 2 to reach a positive mean degree");
  check_mean_degree(mean_k, static_cast<double>(n - 1));
  return mean_k / static_cast<double>(n - 1);
}

double rg_radius_for_mean_degree(std::size_t n, double mean_k) {
  if (n < 2) throw ArgumentError("need n >= 2 to reach a positive mean degree");
  check_mean_degree(mean_k, static_cast<double>(n - 1));
  return rg_radius_for_probability(mean_k / static_cast<double>(n - 1));
}

double br_probability_for_mean_degree(std::size_t n1, std::size_t n2, double mean_k) {
  const double n = static_cast<double>(n1 + n2);
  const double max_k = 2.0 * static_cast<double>(n1) * static_cast<double>(n2) / n;
  check_mean_degree(mean_k, max_k);
  return mean_k / max_k;
}

double control_for_mean_degree(const ModelShape& shape, double mean_k) {
  switch (shape.family) {
    case ModelFamily::kEr:
      return er_probability_for_mean_degree(shape.n, mean_k);
    case ModelFamily::kRg:
      return rg_radius_for_mean_degree(shape.n, mean_k);
    case ModelFamily::kBr:
      return br_probability_for_mean_degree(shape.n1, shape.n2, mean_k);
  }
  throw ArgumentError("unknown model family");
}

}  // namespace sombor::theory
