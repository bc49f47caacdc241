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
#include <iosfwd>
#include <span>
#include <vector>

namespace sombor {

using Vertex = std::uint32_t;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};
static_assert(sizeof(Edge) == 2 * sizeof(Vertex), "kernels read edges as packed pairs");

// Undirected simple graph on vertices 0..n-1. Immutable after construction;
// the degree array is computed once from the edge list.
class Graph {
 public:
  struct TrustedTag {};

  // Validates the edge list: endpoints in range, no self-loops, no
  // duplicates. Pairs may be given in either orientation.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges);

  static Graph empty(std::size_t n);
  static Graph complete(std::size_t n);

  // For samplers that produce valid, normalized (u < v) edges by construction.
  Graph(std::size_t n, std::vector<Edge> edges, TrustedTag);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const std::uint32_t> degrees() const noexcept { return degrees_; }

  // Throws ArgumentError when u >= n.
  std::uint32_t degree(Vertex u) const;

  // 2|E| / n.
  double mean_degree() const noexcept;

  // Recomputes degrees from the edge list and checks every structural
  // invariant (orientation, range, loops, duplicates, handshake).
  bool is_consistent() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> degrees_;
};

// Vertices [0, n1) form set 1 and [n1, n1 + n2) form set 2.
struct BipartitePartition {
  std::size_t n1 = 0;
  std::size_t n2 = 0;

  std::size_t vertex_count() const noexcept { return n1 + n2; }
  bool in_first_set(Vertex u) const noexcept { return u < n1; }
  bool crosses(const Edge& e) const noexcept { return in_first_set(e.u) != in_first_set(e.v); }
};

bool all_edges_cross(const Graph& graph, const BipartitePartition& partition);

// Debug format: "n m" then m lines "u v", 0-based.
void write_edge_list(std::ostream& out, const Graph& graph);
Graph read_edge_list(std::istream& in);

}  // namespace sombor
