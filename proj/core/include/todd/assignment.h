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

#ifndef TODD_ASSIGNMENT_H
#define TODD_ASSIGNMENT_H

#include <span>
#include <vector>

namespace todd {

struct Assignment {
  double           cost = 0.0;
  std::vector<int> rowToCol;
};

//! Exact minimum-cost perfect assignment for an n x n row-major cost matrix
//! (shortest augmenting paths with potentials, O(n^3)).
Assignment solveAssignment(std::span<const double> cost, int n);

//! Smallest c such that a perfect matching exists using only entries <= c.
Assignment solveBottleneckAssignment(std::span<const double> cost, int n);

}  // namespace todd

#endif  // TODD_ASSIGNMENT_H
