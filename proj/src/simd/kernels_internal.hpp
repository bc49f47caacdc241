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

// Internal: per-ISA kernel tables. Not part of the installed interface.

#include "sombor/simd/kernels.hpp"

namespace sombor::simd::detail {

extern const KernelTable kScalarTable;

#if defined(SOMBOR_HAVE_AVX2_KERNELS)
extern const KernelTable kAvx2Table;
#endif

}  // namespace sombor::simd::detail
