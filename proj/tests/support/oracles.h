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

#ifndef TODD_TESTS_ORACLES_H
#define TODD_TESTS_ORACLES_H

//! Reference implementations used only by tests. They share no code with the
//! library: cliques are enumerated by brute force over vertex subsets, ranks are
//! computed with plain Gaussian elimination, distances with Floyd-Warshall and
//! matchings by enumerating permutations.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "todd/molgraph.h"
#include "todd/screening.h"

namespace todd::oracle {

using AdjMatrix = std::vector<std::vector<bool>>;

inline constexpr int kNoPath = 1 << 20;

//! All-pairs hop distances by Floyd-Warshall; kNoPath for unreachable pairs.
std::vector<std::vector<int>> floydHops(int n, const std::vector<std::pair<int, int>>& edges);

//! Rank over GF(2) of a dense 0/1 matrix.
int gf2Rank(std::vector<std::vector<uint8_t>> rows);

//! beta_k (k = 0 or 1) of the clique complex of the graph `adj` restricted to `mask`.
int cliqueBetti(const AdjMatrix& adj, const std::vector<bool>& mask, int k);

//! beta_k of the VR complex at threshold t on `vset`, using distances `hops`.
int vrBetti(const std::vector<std::vector<int>>& hops, const std::vector<int>& vset, int t, int k);

struct Bar {
  double birth;
  double death;
};

//! W_p between diagrams (deaths already capped) by enumerating every bijection of
//! the diagonal-augmented diagrams. Small inputs only (|a| + |b| <= 7).
double bruteWasserstein(const std::vector<Bar>& a, const std::vector<Bar>& b, double p);

struct BruteTriplet {
  int  anchor, positive, negative;
  bool hard;
  bool operator==(const BruteTriplet&) const = default;
  auto operator<=>(const BruteTriplet&) const = default;
};

//! Every (a, p, n) meeting the Hard or SemiHard condition, by definition.
std::vector<BruteTriplet> bruteTriplets(const std::vector<Embedding>& xs, double margin);

//! Fraction of (active, inactive) pairs where the active scores lower; ties 1/2.
double pairCountAuc(const std::vector<double>& scores, const std::vector<bool>& active);

//! G(n, p) random graph edge list.
std::vector<std::pair<int, int>> randomEdges(std::mt19937_64& rng, int n, double p);

//! Molecule with the given topology; atoms cycle through C/N/O masses unless
//! explicit masses are given. Bonds are single.
MolecularGraph moleculeFrom(int n, const std::vector<std::pair<int, int>>& edges, std::vector<double> masses = {},
                            std::string id = "mol");

}  // namespace todd::oracle

#endif  // TODD_TESTS_ORACLES_H
