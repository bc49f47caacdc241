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

// Data-parallel inner loops. Every kernel has a scalar reference version;
// vector versions are compiled when the toolchain supports them and picked
// at runtime from CPU feature bits. The SOMBOR_SIMD environment variable
// ("scalar" or "avx2") overrides the automatic choice.

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "sombor/graph.hpp"

namespace sombor::simd {

enum class Backend { kScalar, kAvx2 };

// How the outer exponent of an edge term (x_u + x_v)^beta is applied.
// kGeneral falls back to std::pow and is never vectorized.
enum class OuterPower { kOne, kMinusOne, kHalf, kMinusHalf, kTwo, kGeneral };

OuterPower classify_outer_power(double beta) noexcept;

// Scalar reference for one edge term's outer exponent.
double apply_outer_power(double x, OuterPower kind, double beta) noexcept;

struct KernelTable {
  Backend backend;
  std::string_view name;

  // Writes into out_indices every j in [0, count) with
  // (xs[j]-x)^2 + (ys[j]-y)^2 <= radius_sq, in increasing order; returns
  // how many were written. The decision must match the scalar kernel bit
  // for bit.
  std::size_t (*within_radius)(double x, double y, const double* xs, const double* ys,
                               std::size_t count, double radius_sq,
                               std::uint32_t* out_indices);

  // Sum over edges of (powers[u] + powers[v])^beta.
  double (*edge_power_sum)(const Edge* edges, std::size_t count, const double* powers,
                           OuterPower kind, double beta);

  double (*dot)(const double* a, const double* b, std::size_t count);
  double (*sum)(const double* a, std::size_t count);
};

const KernelTable& scalar_kernels() noexcept;

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels() noexcept;

const KernelTable& active_kernels() noexcept;

// Throws ArgumentError when the backend is unavailable on this machine.
void select_backend(Backend backend);

Backend active_backend() noexcept;
std::string_view backend_name(Backend backend) noexcept;

}  // namespace sombor::simd
