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

#include "sombor/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "sombor/error.hpp"

namespace sombor {
namespace {

std::vector<std::uint32_t> count_degrees(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::uint32_t> degrees(n, 0);
  for (const Edge& e : edges) {
    ++degrees[e.u];
    ++degrees[e.v];
  }
  return degrees;
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges, TrustedTag)
    : n_(n), edges_(std::move(edges)), degrees_(count_degrees(n, edges_)) {}

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
  if (n == 0) throw ArgumentError("graph must have at least one vertex");
  for (Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw ArgumentError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          ") out of range for n=" + std::to_string(n));
    }
    if (e.u == e.v) throw ArgumentError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw ArgumentError("duplicate edge (" + std::to_string(dup->u) + "," +
                        std::to_string(dup->v) + ")");
  }
  return Graph(n, std::move(edges), TrustedTag{});
}

Graph Graph::empty(std::size_t n) { return from_edges(n, {}); }

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return from_edges(n, std::move(edges));
}

std::uint32_t Graph::degree(Vertex u) const {
  if (u >= n_) {
    throw ArgumentError("vertex " + std::to_string(u) + " out of range for n=" +
                        std::to_string(n_));
  }
  return degrees_[u];
}

double Graph::mean_degree() const noexcept {
  return n_ == 0 ? 0.0 : 2.0 * static_cast<double>(edges_.size()) / static_cast<double>(n_);
}

bool Graph::is_consistent() const {
  if (degrees_.size() != n_) return false;
  for (const Edge& e : edges_) {
    if (e.u >= e.v || e.v >= n_) return false;
  }
  std::vector<Edge> sorted(edges_.begin(), edges_.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  const auto recomputed = count_degrees(n_, edges_);
  const std::uint64_t degree_sum =
      std::accumulate(degrees_.begin(), degrees_.end(), std::uint64_t{0});
  return recomputed == degrees_ && degree_sum == 2 * edges_.size();
}

bool all_edges_cross(const Graph& graph, const BipartitePartition& partition) {
  if (graph.vertex_count() != partition.vertex_count()) return false;
  return std::all_of(graph.edges().begin(), graph.edges().end(),
                     [&](const Edge& e) { return partition.crosses(e); });
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  out << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_edge_list(std::istream& in) {
  std::size_t n = 0;
  std::size_t m = 0;
  if (!(in >> n >> m)) throw ArgumentError("edge list: missing \"n m\" header");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      throw ArgumentError("edge list: expected " + std::to_string(m) + " edges, got " +
                          std::to_string(i));
    }
    if (u < 0 || v < 0 || u > UINT32_MAX || v > UINT32_MAX) {
      throw ArgumentError("edge list: vertex id out of range");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace sombor
