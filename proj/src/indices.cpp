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

#include "sombor/indices.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "sombor/error.hpp"
#include "sombor/simd/kernels.hpp"

namespace sombor {
namespace {

constexpr double kMaxIntegralExponent = 64.0;

double integral_power(double base, long long exponent) noexcept {
  const bool invert = exponent < 0;
  unsigned long long e = static_cast<unsigned long long>(invert ? -exponent : exponent);
  double result = 1.0;
  while (e != 0) {
    if (e & 1ULL) result *= base;
    base *= base;
    e >>= 1;
  }
  return invert ? 1.0 / result : result;
}

}  // namespace

IndexSpec IndexSpec::general(double alpha, double beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw ArgumentError("index parameters must be finite");
  }
  return {alpha, beta};
}

IndexSpec IndexSpec::alpha_sombor(double alpha) {
  if (alpha == 0.0) throw ArgumentError("alpha-Sombor index needs alpha != 0");
  return general(alpha, 1.0 / alpha);
}

IndexSpec IndexSpec::complexity(double alpha) {
  if (alpha == 0.0) throw ArgumentError("KA(alpha, -1/alpha) needs alpha != 0");
  return general(alpha, -1.0 / alpha);
}

std::string IndexSpec::label() const {
  if (*this == sombor()) return "sombor";
  if (*this == modified_sombor()) return "modified_sombor";
  if (*this == banhatti_sombor()) return "banhatti_sombor";
  std::ostringstream out;
  out.precision(17);
  out << "ka1(" << alpha << ';' << beta << ')';
  return out.str();
}

double degree_power(std::uint32_t degree, double exponent) noexcept {
  const auto k = static_cast<double>(degree);
  if (exponent == std::trunc(exponent) && std::abs(exponent) <= kMaxIntegralExponent) {
    return integral_power(k, static_cast<long long>(exponent));
  }
  return std::exp(exponent * std::log(k));
}

double ka1_index(const Graph& graph, const IndexSpec& spec, Summation mode) {
  if (graph.edge_count() == 0) return 0.0;

  // Powers are tabulated per distinct degree value, then spread per vertex
  // so the edge loop does a single indirection.
  const auto degrees = graph.degrees();
  const std::uint32_t max_degree = *std::max_element(degrees.begin(), degrees.end());
  std::vector<double> by_degree(static_cast<std::size_t>(max_degree) + 1, 0.0);
  for (std::uint32_t k = 1; k <= max_degree; ++k) by_degree[k] = degree_power(k, spec.alpha);
  std::vector<double> powers(degrees.size());
  std::transform(degrees.begin(), degrees.end(), powers.begin(),
                 [&](std::uint32_t k) { return by_degree[k]; });

  const simd::OuterPower kind = simd::classify_outer_power(spec.beta);
  const auto edges = graph.edges();
  double total = 0.0;
  if (mode == Summation::kKahan) {
    double compensation = 0.0;
    for (const Edge& e : edges) {
      const double term = simd::apply_outer_power(powers[e.u] + powers[e.v], kind, spec.beta);
      const double y = term - compensation;
      const double t = total + y;
      compensation = (t - total) - y;
      total = t;
    }
  } else {
    total = simd::active_kernels().edge_power_sum(edges.data(), edges.size(), powers.data(),
                                                  kind, spec.beta);
  }
  if (!std::isfinite(total)) {
    throw NumericError("KA index " + spec.label() + " is not finite");
  }
  return total;
}

double sombor(const Graph& graph) { return ka1_index(graph, IndexSpec::sombor()); }

double modified_sombor(const Graph& graph) {
  return ka1_index(graph, IndexSpec::modified_sombor());
}

double banhatti_sombor(const Graph& graph) {
  return ka1_index(graph, IndexSpec::banhatti_sombor());
}

double alpha_sombor(const Graph& graph, double alpha) {
  return ka1_index(graph, IndexSpec::alpha_sombor(alpha));
}

double sum_connectivity(const Graph& graph, double beta) {
  return ka1_index(graph, IndexSpec::sum_connectivity(beta));
}

}  // namespace sombor
