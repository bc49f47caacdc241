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

#include "sombor/generators.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "sombor/error.hpp"
#include "sombor/simd/kernels.hpp"

namespace sombor {
namespace {

void check_count(std::size_t n, const char* what) {
  if (n == 0) throw ArgumentError(std::string(what) + " must be >= 1");
  if (n > (std::size_t{1} << 31)) throw ArgumentError(std::string(what) + " too large");
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ArgumentError("probability " + std::to_string(p) + " outside [0, 1]");
  }
}

void check_radius(double r) {
  if (!(r >= 0.0 && r <= kMaxRadius)) {
    throw ArgumentError("radius " + std::to_string(r) + " outside [0, sqrt(2)]");
  }
}

// Independent Bernoulli(p) trial per candidate pair. p == 0 and p == 1 are
// exact because unit_interval draws lie in [0, 1).
struct BernoulliPairs {
  std::mt19937_64 engine;
  double p;

  bool operator()() { return unit_interval(engine()) < p; }
};

}  // namespace

void validate(const ModelParams& params) {
  std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ErParams>) {
          check_count(m.n, "n");
          check_probability(m.p);
        } else if constexpr (std::is_same_v<T, RgParams>) {
          check_count(m.n, "n");
          check_radius(m.r);
        } else {
          check_count(m.n1, "n1");
          check_count(m.n2, "n2");
          check_probability(m.p);
        }
      },
      params);
}

std::size_t vertex_count(const ModelParams& params) {
  return std::visit(
      [](const auto& m) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, BrParams>) {
          return m.n1 + m.n2;
        } else {
          return m.n;
        }
      },
      params);
}

std::string describe(const ModelParams& params) {
  std::ostringstream out;
  out.precision(17);
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ErParams>) {
          out << "ER(n=" << m.n << ", p=" << m.p << ")";
        } else if constexpr (std::is_same_v<T, RgParams>) {
          out << "RG(n=" << m.n << ", r=" << m.r << ")";
        } else {
          out << "BR(n1=" << m.n1 << ", n2=" << m.n2 << ", p=" << m.p << ")";
        }
      },
      params);
  return out.str();
}

ModelParams ModelShape::at(double control) const {
  switch (family) {
    case ModelFamily::kEr:
      return ErParams{n, control};
    case ModelFamily::kRg:
      return RgParams{n, control};
    case ModelFamily::kBr:
      return BrParams{n1, n2, control};
  }
  throw ArgumentError("unknown model family");
}

std::string ModelShape::family_name() const {
  switch (family) {
    case ModelFamily::kEr:
      return "er";
    case ModelFamily::kRg:
      return "rg";
    case ModelFamily::kBr:
      return "br";
  }
  return "?";
}

ModelFamily parse_family(const std::string& name) {
  if (name == "er") return ModelFamily::kEr;
  if (name == "rg") return ModelFamily::kRg;
  if (name == "br") return ModelFamily::kBr;
  throw ArgumentError("unknown model '" + name + "' (expected er, rg or br)");
}

Graph sample_er(std::size_t n, double p, const SeedSpec& seed) {
  check_count(n, "n");
  check_probability(p);
  BernoulliPairs trial{std::mt19937_64(stream_seed(seed)), p};
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p * static_cast<double>(n) * (n - 1) / 2.0 * 1.1) + 16);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (trial()) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges), Graph::TrustedTag{});
}

Graph sample_rg(std::size_t n, double r, const SeedSpec& seed) {
  check_count(n, "n");
  check_radius(r);
  std::mt19937_64 engine(stream_seed(seed));
  std::vector<double> xs(n);
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = unit_interval(engine());
    ys[i] = unit_interval(engine());
  }

  const auto& kernels = simd::active_kernels();
  const double radius_sq = r * r;
  std::vector<std::uint32_t> hits(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t first = i + 1;
    const std::size_t found = kernels.within_radius(xs[i], ys[i], xs.data() + first,
                                                    ys.data() + first, n - first, radius_sq,
                                                    hits.data());
    for (std::size_t h = 0; h < found; ++h) {
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(first + hits[h])});
    }
  }
  return Graph(n, std::move(edges), Graph::TrustedTag{});
}

BipartiteGraph sample_br(std::size_t n1, std::size_t n2, double p, const SeedSpec& seed) {
  check_count(n1, "n1");
  check_count(n2, "n2");
  check_probability(p);
  BernoulliPairs trial{std::mt19937_64(stream_seed(seed)), p};
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p * static_cast<double>(n1) * n2 * 1.1) + 16);
  const auto total = static_cast<Vertex>(n1 + n2);
  for (Vertex u = 0; u < n1; ++u) {
    for (auto v = static_cast<Vertex>(n1); v < total; ++v) {
      if (trial()) edges.push_back({u, v});
    }
  }
  return {Graph(n1 + n2, std::move(edges), Graph::TrustedTag{}), BipartitePartition{n1, n2}};
}

Graph sample(const ModelParams& params, const SeedSpec& seed) {
  return std::visit(
      [&](const auto& m) -> Graph {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ErParams>) {
          return sample_er(m.n, m.p, seed);
        } else if constexpr (std::is_same_v<T, RgParams>) {
          return sample_rg(m.n, m.r, seed);
        } else {
          return sample_br(m.n1, m.n2, m.p, seed).graph;
        }
      },
      params);
}

}  // namespace sombor
