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

#include <atomic>
#include <cstdlib>
#include <string>

#include "kernels_internal.hpp"
#include "sombor/error.hpp"

namespace sombor::simd {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(SOMBOR_HAVE_AVX2_KERNELS)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* pick_default() noexcept {
  const KernelTable* avx2 = avx2_kernels();
  if (const char* forced = std::getenv("SOMBOR_SIMD")) {
    const std::string choice(forced);
    if (choice == "scalar") return &scalar_kernels();
    if (choice == "avx2" && avx2 != nullptr) return avx2;
  }
  return avx2 != nullptr ? avx2 : &scalar_kernels();
}

std::atomic<const KernelTable*>& active_slot() noexcept {
  static std::atomic<const KernelTable*> slot{pick_default()};
  return slot;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept { return detail::kScalarTable; }

const KernelTable* avx2_kernels() noexcept {
#if defined(SOMBOR_HAVE_AVX2_KERNELS)
  static const bool supported = cpu_has_avx2();
  return supported ? &detail::kAvx2Table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() noexcept {
  return *active_slot().load(std::memory_order_acquire);
}

void select_backend(Backend backend) {
  const KernelTable* table = nullptr;
  switch (backend) {
    case Backend::kScalar:
      table = &scalar_kernels();
      break;
    case Backend::kAvx2:
      table = avx2_kernels();
      break;
  }
  if (table == nullptr) {
    throw ArgumentError("SIMD backend '" + std::string(backend_name(backend)) +
                        "' is not available on this machine");
  }
  active_slot().store(table, std::memory_order_release);
}

Backend active_backend() noexcept { return active_kernels().backend; }

std::string_view backend_name(Backend backend) noexcept {
  return backend == Backend::kAvx2 ? "avx2" : "scalar";
}

}  // namespace sombor::simd
