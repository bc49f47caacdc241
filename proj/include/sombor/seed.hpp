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

#include <cstdint>

namespace sombor {

// splitmix64 finalizer: xor-shift-multiply chain with full avalanche.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Order-sensitive combination of two words into one seed.
constexpr std::uint64_t combine_seed(std::uint64_t a, std::uint64_t b) noexcept {
  return mix64(mix64(a) ^ (b + 0x632be59bd9b4e019ULL));
}

// (master_seed, replica_index) fixes one replica's random stream.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t replica_index = 0;

  friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

// Independent sub-streams of one replica (graph sampling, matrix weights).
enum class Stream : std::uint64_t { kGraph = 0, kWeights = 1 };

constexpr std::uint64_t stream_seed(const SeedSpec& seed, Stream stream = Stream::kGraph) noexcept {
  return combine_seed(combine_seed(seed.master_seed, seed.replica_index),
                      static_cast<std::uint64_t>(stream));
}

// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
constexpr double unit_interval(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace sombor
