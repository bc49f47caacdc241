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

// Reference implementations used only by tests. They share no code with the
// library: adjacency is rebuilt as a dense matrix, degrees are recounted, and
// every power goes through std::pow.

#include <cmath>
#include <algorithm>
#include <cstddef>
#include <vector>

#include "sombor/graph.hpp"

namespace oracle {

class DenseGraph {
 public:
  explicit DenseGraph(const sombor::Graph& g)
      : n_(g.vertex_count()), adjacent_(n_ * n_, 0) {
    for (const auto& e : g.edges()) {
      adjacent_[e.u * n_ + e.v] = 1;
      adjacent_[e.v * n_ + e.u] = 1;
    }
  }

  std::size_t size() const { return n_; }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacent_[i * n_ + j] != 0; }

  double degree(std::size_t i) const {
    double d = 0;
    for (std::size_t j = 0; j < n_; ++j) d += adjacent(i, j) ? 1.0 : 0.0;
    return d;
  }

 private:
  std::size_t n_;
  std::vector<char> adjacent_;
};

// Sum over unordered adjacent pairs of (k_i^a + k_j^a)^b, in long double.
inline double ka1(const sombor::Graph& g, double alpha, double beta) {
  const DenseGraph dense(g);
  long double total = 0;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    for (std::size_t j = i + 1; j < dense.size(); ++j) {
      if (!dense.adjacent(i, j)) continue;
      const long double ki = dense.degree(i);
      const long double kj = dense.degree(j);
      total += std::pow(std::pow(ki, (long double)alpha) + std::pow(kj, (long double)alpha),
                        (long double)beta);
    }
  }
  return static_cast<double>(total);
}

// Probability that two uniform points of the unit square lie within distance r.
// Each coordinate gap has density 2(1 - t) on [0, 1]; the inner integral over
// the second gap is done in closed form and the outer one by Simpson's rule
// after substituting t = r sin(theta) to tame the square-root endpoint.
inline double pair_within(double r, int panels = 20000) {
  if (r <= 0) return 0.0;
  const double pi = std::acos(-1.0);
  const double top = r <= 1 ? pi / 2 : std::asin(1.0 / r);
  auto inner = [](double t, double reach) {
    const double y = std::min(1.0, reach);
    return 4.0 * (1.0 - t) * (y - y * y / 2.0);
  };
  auto f = [&](double theta) {
    const double t = r * std::sin(theta);
    return inner(t, r * std::cos(theta)) * r * std::cos(theta);
  };
  const double h = top / panels;
  double acc = f(0) + f(top);
  for (int i = 1; i < panels; ++i) acc += f(i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

}  // namespace oracle
