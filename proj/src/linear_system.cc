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

#include "typereg/linear_system.h"

#include <utility>

#include "typereg/errors.h"

namespace typereg {

LinearSolution SolveLinearSystem(std::vector<std::vector<Rational>> a,
                                 std::vector<Rational> b) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) {
    throw InputError("right-hand side does not match system size");
  }
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n) {
      throw InputError("linear system must be square");
    }
  }

  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r) {
      if (!a[r][col].IsZero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    std::swap(b[pivot], b[rank]);
    const Rational inv = Rational(1) / a[rank][col];
    for (int c = col; c < n; ++c) a[rank][c] *= inv;
    b[rank] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == rank || a[r][col].IsZero()) continue;
      const Rational f = a[r][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[rank][c];
      b[r] -= f * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  for (int r = rank; r < n; ++r) {
    if (!b[r].IsZero()) return {SolveStatus::kInconsistent, {}};
  }
  if (rank < n) return {SolveStatus::kUnderdetermined, {}};

  LinearSolution out{SolveStatus::kUnique, std::vector<Rational>(n)};
  for (int r = 0; r < n; ++r) out.x[pivot_col[r]] = b[r];
  return out;
}

}  // namespace typereg
