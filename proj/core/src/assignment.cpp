// SPDX-FileCopyrightText: Copyright (c) 2026 The ToDD-MP Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "todd/assignment.h"

#include <algorithm>
#include <limits>

#include "todd/error.h"

namespace todd {
namespace {

void checkShape(std::span<const double> cost, int n) {
  if (n < 0 || cost.size() != static_cast<size_t>(n) * static_cast<size_t>(n)) {
    throw DataError("assignment cost matrix must be n x n");
  }
}

// Kuhn's augmenting-path matching restricted to entries <= limit.
bool perfectMatchingWithin(std::span<const double> cost, int n, double limit, std::vector<int>& rowToCol) {
  std::vector<int>  colToRow(n, -1);
  std::vector<char> visited(n);
  auto tryRow = [&](auto&& self, int row) -> bool {
    for (int col = 0; col < n; ++col) {
      if (visited[col] || cost[static_cast<size_t>(row) * n + col] > limit) {
        continue;
      }
      visited[col] = 1;
      if (colToRow[col] < 0 || self(self, colToRow[col])) {
        colToRow[col] = row;
        return true;
      }
    }
    return false;
  };
  for (int row = 0; row < n; ++row) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!tryRow(tryRow, row)) {
      return false;
    }
  }
  rowToCol.assign(n, -1);
  for (int col = 0; col < n; ++col) {
    rowToCol[colToRow[col]] = col;
  }
  return true;
}

}  // namespace

Assignment solveAssignment(std::span<const double> cost, int n) {
  checkShape(cost, n);
  Assignment result;
  if (n == 0) {
    return result;
  }
  const double     inf = std::numeric_limits<double>::infinity();
  // 1-based potentials formulation; column 0 is a virtual source.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<int>    match(n + 1, 0), way(n + 1, 0);
  std::vector<char>   used(n + 1);
  for (int row = 1; row <= n; ++row) {
    match[0]  = row;
    int col0  = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[col0]   = 1;
      const int i0 = match[col0];
      double    delta = inf;
      int       col1  = 0;
      for (int col = 1; col <= n; ++col) {
        if (used[col]) {
          continue;
        }
        const double cur = cost[static_cast<size_t>(i0 - 1) * n + (col - 1)] - u[i0] - v[col];
        if (cur < minv[col]) {
          minv[col] = cur;
          way[col]  = col0;
        }
        if (minv[col] < delta) {
          delta = minv[col];
          col1  = col;
        }
      }
      for (int col = 0; col <= n; ++col) {
        if (used[col]) {
          u[match[col]] += delta;
          v[col] -= delta;
        } else {
          minv[col] -= delta;
        }
      }
      col0 = col1;
    } while (match[col0] != 0);
    do {
      const int col1 = way[col0];
      match[col0]    = match[col1];
      col0           = col1;
    } while (col0 != 0);
  }
  result.rowToCol.assign(n, -1);
  for (int col = 1; col <= n; ++col) {
    result.rowToCol[match[col] - 1] = col - 1;
  }
  // Sum the chosen entries directly rather than trusting the potentials.
  for (int row = 0; row < n; ++row) {
    result.cost += cost[static_cast<size_t>(row) * n + result.rowToCol[row]];
  }
  return result;
}

Assignment solveBottleneckAssignment(std::span<const double> cost, int n) {
  checkShape(cost, n);
  Assignment result;
  if (n == 0) {
    return result;
  }
  std::vector<double> candidates(cost.begin(), cost.end());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  size_t lo = 0, hi = candidates.size() - 1;
  std::vector<int> matching;
  while (lo < hi) {
    const size_t mid = lo + (hi - lo) / 2;
    if (perfectMatchingWithin(cost, n, candidates[mid], matching)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  perfectMatchingWithin(cost, n, candidates[lo], result.rowToCol);
  result.cost = candidates[lo];
  return result;
}

}  // namespace todd
