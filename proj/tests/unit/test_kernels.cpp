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

#include <cmath>
#include <random>
#include <vector>

#include "sombor/error.hpp"
#include "sombor/generators.hpp"
#include "sombor/indices.hpp"
#include "sombor/simd/kernels.hpp"
#include "unit/helpers.hpp"

using namespace sombor;
using namespace sombor::simd;

namespace {

struct BackendGuard {
  Backend saved = active_backend();
  ~BackendGuard() { select_backend(saved); }
};

std::vector<double> random_values(std::size_t n, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out(n);
  for (double& x : out) x = dist(rng);
  return out;
}

}  // namespace

TEST_CASE("outer power classification") {
  CHECK(classify_outer_power(1) == OuterPower::kOne);
  CHECK(classify_outer_power(-1) == OuterPower::kMinusOne);
  CHECK(classify_outer_power(0.5) == OuterPower::kHalf);
  CHECK(classify_outer_power(-0.5) == OuterPower::kMinusHalf);
  CHECK(classify_outer_power(2) == OuterPower::kTwo);
  CHECK(classify_outer_power(0.3) == OuterPower::kGeneral);
  for (double beta : {1.0, -1.0, 0.5, -0.5, 2.0, 0.3, -1.7}) {
    CHECK(testing::close_rel(apply_outer_power(3.7, classify_outer_power(beta), beta),
                             std::pow(3.7, beta), 1e-15));
  }
}

TEST_CASE("backend selection") {
  BackendGuard guard;
  CHECK(backend_name(Backend::kScalar) == "scalar");
  CHECK(backend_name(Backend::kAvx2) == "avx2");
  select_backend(Backend::kScalar);
  CHECK(active_backend() == Backend::kScalar);
  CHECK(active_kernels().backend == Backend::kScalar);
  if (avx2_kernels() == nullptr) {
    CHECK_THROWS_AS(select_backend(Backend::kAvx2), ArgumentError);
  } else {
    select_backend(Backend::kAvx2);
    CHECK(active_kernels().backend == Backend::kAvx2);
  }
}

TEST_CASE("vector kernels match the scalar reference") {
  const KernelTable* avx2 = avx2_kernels();
  if (avx2 == nullptr) {
    MESSAGE("AVX2 kernels unavailable on this machine; equivalence not exercised");
    return;
  }
  const KernelTable& ref = scalar_kernels();
  std::mt19937_64 rng(2024);

  SUBCASE("within_radius, including exact ties") {
    for (std::size_t count : {0, 1, 3, 4, 5, 7, 8, 9, 31, 64, 257}) {
      auto xs = random_values(count, rng, 0, 1);
      auto ys = random_values(count, rng, 0, 1);
      const double x = 0.5, y = 0.25;
      // A few points sit at distance exactly 0.25 (representable offsets).
      for (std::size_t i = 0; i < count; i += 5) {
        xs[i] = x + 0.25;
        ys[i] = y;
      }
      for (double r : {0.0, 0.1, 0.25, 0.7, 1.5}) {
        std::vector<std::uint32_t> a(count + 1), b(count + 1);
        const auto na = ref.within_radius(x, y, xs.data(), ys.data(), count, r * r, a.data());
        const auto nb = avx2->within_radius(x, y, xs.data(), ys.data(), count, r * r, b.data());
        REQUIRE(na == nb);
        for (std::size_t i = 0; i < na; ++i) CHECK(a[i] == b[i]);
      }
    }
  }

  SUBCASE("edge_power_sum over every outer power") {
    for (std::size_t n : {2, 9, 40}) {
      const Graph g = testing::random_graph(n, 0.5, rng);
      const auto powers = random_values(n, rng, 0.1, 5);
      for (double beta : {1.0, -1.0, 0.5, -0.5, 2.0, 0.37}) {
        const auto kind = classify_outer_power(beta);
        for (std::size_t count = 0; count <= g.edge_count(); count += 1 + count / 7) {
          const double a = ref.edge_power_sum(g.edges().data(), count, powers.data(), kind, beta);
          const double b =
              avx2->edge_power_sum(g.edges().data(), count, powers.data(), kind, beta);
          CHECK(testing::close_rel(a, b, 1e-13));
        }
      }
    }
  }

  SUBCASE("dot and sum") {
    for (std::size_t n : {0, 1, 3, 8, 15, 16, 17, 1000}) {
      const auto a = random_values(n, rng, -1, 1);
      const auto b = random_values(n, rng, -1, 1);
      CHECK(std::abs(ref.dot(a.data(), b.data(), n) - avx2->dot(a.data(), b.data(), n)) < 1e-12);
      CHECK(std::abs(ref.sum(a.data(), n) - avx2->sum(a.data(), n)) < 1e-12);
    }
  }
}

TEST_CASE("library results agree across backends") {
  if (avx2_kernels() == nullptr) return;
  BackendGuard guard;
  std::vector<Graph> scalar_graphs, vector_graphs;
  std::vector<double> scalar_values, vector_values;
  const std::vector<IndexSpec> specs = {IndexSpec::sombor(), IndexSpec::modified_sombor(),
                                        IndexSpec::banhatti_sombor(), IndexSpec::general(1.5, 0.3)};
  for (Backend backend : {Backend::kScalar, Backend::kAvx2}) {
    select_backend(backend);
    auto& graphs = backend == Backend::kScalar ? scalar_graphs : vector_graphs;
    auto& values = backend == Backend::kScalar ? scalar_values : vector_values;
    for (std::uint64_t r = 0; r < 10; ++r) {
      graphs.push_back(sample_rg(300, 0.05 + 0.1 * r, {8, r}));
      for (const auto& spec : specs) values.push_back(ka1_index(graphs.back(), spec));
    }
  }
  for (std::size_t i = 0; i < scalar_graphs.size(); ++i) {
    const auto a = scalar_graphs[i].edges();
    const auto b = vector_graphs[i].edges();
    CHECK(std::equal(a.begin(), a.end(), b.begin(), b.end()));
  }
  for (std::size_t i = 0; i < scalar_values.size(); ++i) {
    CHECK(testing::close_rel(scalar_values[i], vector_values[i], 1e-12));
  }
}
