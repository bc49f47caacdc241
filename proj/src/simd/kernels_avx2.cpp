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

#include "kernels_internal.hpp"

#if defined(SOMBOR_HAVE_AVX2_KERNELS)

#include <immintrin.h>

#define SOMBOR_TARGET_AVX2 __attribute__((target("avx2")))

namespace sombor::simd::detail {
namespace {

SOMBOR_TARGET_AVX2 double horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

SOMBOR_TARGET_AVX2 std::size_t within_radius_avx2(double x, double y, const double* xs,
                                                  const double* ys, std::size_t count,
                                                  double radius_sq,
                                                  std::uint32_t* out_indices) {
  const __m256d vx = _mm256_set1_pd(x);
  const __m256d vy = _mm256_set1_pd(y);
  const __m256d vr = _mm256_set1_pd(radius_sq);
  std::size_t found = 0;
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + j), vx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + j), vy);
    const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    unsigned mask = static_cast<unsigned>(_mm256_movemask_pd(_mm256_cmp_pd(d2, vr, _CMP_LE_OQ)));
    while (mask != 0) {
      out_indices[found++] = static_cast<std::uint32_t>(j + __builtin_ctz(mask));
      mask &= mask - 1;
    }
  }
  for (; j < count; ++j) {
    const double dx = xs[j] - x;
    const double dy = ys[j] - y;
    const double dx2 = dx * dx;
    const double dy2 = dy * dy;
    if (dx2 + dy2 <= radius_sq) out_indices[found++] = static_cast<std::uint32_t>(j);
  }
  return found;
}

template <OuterPower Kind>
SOMBOR_TARGET_AVX2 inline __m256d outer_power(__m256d x) {
  if constexpr (Kind == OuterPower::kOne) {
    return x;
  } else if constexpr (Kind == OuterPower::kMinusOne) {
    return _mm256_div_pd(_mm256_set1_pd(1.0), x);
  } else if constexpr (Kind == OuterPower::kHalf) {
    return _mm256_sqrt_pd(x);
  } else if constexpr (Kind == OuterPower::kMinusHalf) {
    return _mm256_div_pd(_mm256_set1_pd(1.0), _mm256_sqrt_pd(x));
  } else {
    static_assert(Kind == OuterPower::kTwo);
    return _mm256_mul_pd(x, x);
  }
}

// Four edges per step: the packed (u, v) pairs are de-interleaved into one
// lane of u indices and one of v indices, then both endpoint powers are
// gathered.
template <OuterPower Kind>
SOMBOR_TARGET_AVX2 double edge_power_sum_avx2_impl(const Edge* edges, std::size_t count,
                                                   const double* powers) {
  const __m256i split = _mm256_setr_epi32(0, 2, 4, 6, 1, 3, 5, 7);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    const __m256i pairs0 = _mm256_permutevar8x32_epi32(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(edges + i)), split);
    const __m256i pairs1 = _mm256_permutevar8x32_epi32(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(edges + i + 4)), split);
    const __m256d pu0 = _mm256_i32gather_pd(powers, _mm256_castsi256_si128(pairs0), 8);
    const __m256d pv0 = _mm256_i32gather_pd(powers, _mm256_extracti128_si256(pairs0, 1), 8);
    const __m256d pu1 = _mm256_i32gather_pd(powers, _mm256_castsi256_si128(pairs1), 8);
    const __m256d pv1 = _mm256_i32gather_pd(powers, _mm256_extracti128_si256(pairs1, 1), 8);
    acc0 = _mm256_add_pd(acc0, outer_power<Kind>(_mm256_add_pd(pu0, pv0)));
    acc1 = _mm256_add_pd(acc1, outer_power<Kind>(_mm256_add_pd(pu1, pv1)));
  }
  double total = horizontal_sum(_mm256_add_pd(acc0, acc1));
  for (; i < count; ++i) {
    total += apply_outer_power(powers[edges[i].u] + powers[edges[i].v], Kind, 0.0);
  }
  return total;
}

double edge_power_sum_avx2(const Edge* edges, std::size_t count, const double* powers,
                           OuterPower kind, double beta) {
  switch (kind) {
    case OuterPower::kOne:
      return edge_power_sum_avx2_impl<OuterPower::kOne>(edges, count, powers);
    case OuterPower::kMinusOne:
      return edge_power_sum_avx2_impl<OuterPower::kMinusOne>(edges, count, powers);
    case OuterPower::kHalf:
      return edge_power_sum_avx2_impl<OuterPower::kHalf>(edges, count, powers);
    case OuterPower::kMinusHalf:
      return edge_power_sum_avx2_impl<OuterPower::kMinusHalf>(edges, count, powers);
    case OuterPower::kTwo:
      return edge_power_sum_avx2_impl<OuterPower::kTwo>(edges, count, powers);
    case OuterPower::kGeneral:
      break;
  }
  return kScalarTable.edge_power_sum(edges, count, powers, kind, beta);
}

SOMBOR_TARGET_AVX2 double dot_avx2(const double* a, const double* b, std::size_t count) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    acc1 = _mm256_add_pd(acc1,
                         _mm256_mul_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4)));
  }
  double total = horizontal_sum(_mm256_add_pd(acc0, acc1));
  for (; i < count; ++i) total += a[i] * b[i];
  return total;
}

SOMBOR_TARGET_AVX2 double sum_avx2(const double* a, std::size_t count) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(a + i));
    acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(a + i + 4));
  }
  double total = horizontal_sum(_mm256_add_pd(acc0, acc1));
  for (; i < count; ++i) total += a[i];
  return total;
}

}  // namespace

const KernelTable kAvx2Table{
    Backend::kAvx2, "avx2", within_radius_avx2, edge_power_sum_avx2, dot_avx2, sum_avx2,
};

}  // namespace sombor::simd::detail

#endif  // SOMBOR_HAVE_AVX2_KERNELS
