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

#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "sombor/error.hpp"
#include "sombor/graph.hpp"
#include "unit/helpers.hpp"

using namespace sombor;

TEST_CASE("degree of single vertices") {
  const Graph k2 = Graph::from_edges(2, {{0, 1}});
  CHECK(k2.degree(0) == 1);
  CHECK(Graph::empty(3).degree(2) == 0);
  CHECK(testing::star(3).degree(0) == 3);
  CHECK_THROWS_AS(k2.degree(2), ArgumentError);
}

TEST_CASE("edge counts") {
  CHECK(Graph::from_edges(2, {{0, 1}}).edge_count() == 1);
  CHECK(Graph::complete(4).edge_count() == 6);
  CHECK(Graph::empty(10).edge_count() == 0);
}

TEST_CASE("mean degree") {
  CHECK(Graph::from_edges(2, {{0, 1}}).mean_degree() == 1.0);
  CHECK(Graph::complete(5).mean_degree() == 4.0);
  CHECK(Graph::empty(7).mean_degree() == 0.0);
}

TEST_CASE("construction rejects malformed edge lists") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), ArgumentError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), ArgumentError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), ArgumentError);
  CHECK_THROWS_AS(Graph::from_edges(0, {}), ArgumentError);
}

TEST_CASE("edges are stored with u < v") {
  const Graph g = Graph::from_edges(4, {{3, 1}, {2, 0}});
  for (const Edge& e : g.edges()) CHECK(e.u < e.v);
  CHECK(g.degree(3) == 1);
}

TEST_CASE("handshake identity on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_graph(1 + trial % 17, 0.3, rng);
    const auto degrees = g.degrees();
    const auto total = std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0});
    CHECK(total == 2 * g.edge_count());
    CHECK(g.is_consistent());
  }
}

TEST_CASE("bipartite partition") {
  const BipartitePartition part{2, 3};
  CHECK(part.vertex_count() == 5);
  CHECK(part.in_first_set(1));
  CHECK_FALSE(part.in_first_set(2));
  CHECK(all_edges_cross(Graph::from_edges(5, {{0, 2}, {1, 4}}), part));
  CHECK_FALSE(all_edges_cross(Graph::from_edges(5, {{0, 1}}), part));
}

TEST_CASE("edge list round trip") {
  std::mt19937_64 rng(5);
  const Graph g = testing::random_graph(12, 0.4, rng);
  std::stringstream buffer;
  write_edge_list(buffer, g);
  const Graph back = read_edge_list(buffer);
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(std::equal(back.edges().begin(), back.edges().end(), g.edges().begin(), g.edges().end()));
}

TEST_CASE("edge list reader rejects garbage") {
  std::stringstream bad("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(bad), ArgumentError);
  std::stringstream loop("3 1\n2 2\n");
  CHECK_THROWS_AS(read_edge_list(loop), ArgumentError);
}
