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

#include <cmath>

#include "kernels_internal.hpp"

namespace sombor::simd {

OuterPower classify_outer_power(double beta) noexcept {
  if (beta == 1.0) return OuterPower::kOne;
  if (beta == -1.0) return OuterPower::kMinusOne;
  if (beta == 0.5) return OuterPower::kHalf;
  if (beta == -0.5) return OuterPower::kMinusHalf;
  if (beta == 2.0) return OuterPower::kTwo;
  return OuterPower::kGeneral;
}

double apply_outer_power(double x, OuterPower kind, double beta) noexcept {
  switch (kind) {
    case OuterPower::kOne:
      return x;
    case OuterPower::kMinusOne:
      return 1.0 / x;
    case OuterPower::kHalf:
      return std::sqrt(x);
    case OuterPower::kMinusHalf:
      return 1.0 / std::sqrt(x);
    case OuterPower::kTwo:
      return x * x;
    case OuterPower::kGeneral:
      break;
  }
  return std::pow(x, beta);
}

namespace detail {

namespace {

std::size_t within_radius_scalar(double x, double y, const double* xs, const double* ys,
                                 std::size_t count, double radius_sq,
                                 std::uint32_t* out_indices) {
  std::size_t found = 0;
  for (std::size_t j = 0; j < count; ++j) {
    const double dx = xs[j] - x;
    const double dy = ys[j] - y;
    const double dx2 = dx * dx;
    const double dy2 = dy * dy;
    if (dx2 + dy2 <= radius_sq) out_indices[found++] = static_cast<std::uint32_t>(j);
  }
  return found;
}

double edge_power_sum_scalar(const Edge* edges, std::size_t count, const double* powers,
                             OuterPower kind, double beta) {
  double total = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    total += apply_outer_power(powers[edges[i].u] + powers[edges[i].v], kind, beta);
  }
  return total;
}

double dot_scalar(const double* a, const double* b, std::size_t count) {
  double total = 0.0;
  for (std::size_t i = 0; i < count; ++i) total += a[i] * b[i];
  return total;
}

double sum_scalar(const double* a, std::size_t count) {
  double total = 0.0;
  for (std::size_t i = 0; i < count; ++i) total += a[i];
  return total;
}

}  // namespace

const KernelTable kScalarTable{
    Backend::kScalar, "scalar", within_radius_scalar, edge_power_sum_scalar, dot_scalar,
    sum_scalar,
};

}  // namespace detail
}  // namespace sombor::simd
