// Copyright 2026 The typereg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TYPEREG_LINEAR_SYSTEM_H_
#define TYPEREG_LINEAR_SYSTEM_H_

#include <vector>

#include "typereg/rational.h"

namespace typereg {

enum class SolveStatus { kUnique, kUnderdetermined, kInconsistent };

struct LinearSolution {
  SolveStatus status = SolveStatus::kInconsistent;
  // Filled only for kUnique.
  std::vector<Rational> x;
};

// Exact Gauss-Jordan elimination on the square system A x = b.
LinearSolution SolveLinearSystem(std::vector<std::vector<Rational>> a,
                                 std::vector<Rational> b);

}  // namespace typereg

#endif  // TYPEREG_LINEAR_SYSTEM_H_
