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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "sombor/graph.hpp"

namespace testing {

inline bool close_rel(double a, double b, double tol) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= tol * (scale > 0 ? scale : 1.0);
}

inline sombor::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<sombor::Edge> edges;
  for (sombor::Vertex u = 0; u < n; ++u) {
    for (sombor::Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return sombor::Graph::from_edges(n, std::move(edges));
}

inline sombor::Graph relabel(const sombor::Graph& g, const std::vector<sombor::Vertex>& perm) {
  std::vector<sombor::Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return sombor::Graph::from_edges(g.vertex_count(), std::move(edges));
}

inline sombor::Graph path(std::size_t n) {
  std::vector<sombor::Edge> edges;
  for (sombor::Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return sombor::Graph::from_edges(n, std::move(edges));
}

inline sombor::Graph cycle(std::size_t n) {
  std::vector<sombor::Edge> edges;
  for (sombor::Vertex u = 0; u < n; ++u) edges.push_back({u, static_cast<sombor::Vertex>((u + 1) % n)});
  return sombor::Graph::from_edges(n, std::move(edges));
}

inline sombor::Graph star(std::size_t leaves) {
  std::vector<sombor::Edge> edges;
  for (sombor::Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return sombor::Graph::from_edges(leaves + 1, std::move(edges));
}

// Purely relative comparison, usable as `CHECK(x == Rel(y).epsilon(tol))`.
class Rel {
 public:
  explicit Rel(double target, double tol = 1e-12) : target_(target), tol_(tol) {}
  Rel epsilon(double tol) const { return Rel(target_, tol); }
  friend bool operator==(double value, const Rel& rel) {
    return close_rel(value, rel.target_, rel.tol_);
  }
  friend std::ostream& operator<<(std::ostream& out, const Rel& rel) {
    return out << rel.target_ << " (rel " << rel.tol_ << ")";
  }

 private:
  double target_;
  double tol_;
};

struct Moments {
  double mean = 0;
  double variance = 0;
  double stderr_mean = 0;
  std::size_t count = 0;
};

inline Moments moments(const std::vector<double>& xs) {
  Moments m;
  m.count = xs.size();
  for (double x : xs) m.mean += x;
  m.mean /= static_cast<double>(xs.size());
  for (double x : xs) m.variance += (x - m.mean) * (x - m.mean);
  m.variance /= static_cast<double>(xs.size() - 1);
  m.stderr_mean = std::sqrt(m.variance / static_cast<double>(xs.size()));
  return m;
}

}  // namespace testing
