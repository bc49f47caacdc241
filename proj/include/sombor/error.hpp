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

#include <stdexcept>
#include <string>

namespace sombor {

// Invalid input: out-of-range parameters, malformed specs, bad files.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation produced a non-finite value or a solver failed.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pearson correlation requested on a (near-)constant sequence.
class UndefinedCorrelation : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace sombor
