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

#ifndef TODD_FILTRATION_H
#define TODD_FILTRATION_H

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "todd/molgraph.h"

namespace todd {

//! Strictly increasing threshold values (the alpha_i of a sublevel filtration).
class ThresholdSet {
 public:
  ThresholdSet() = default;
  //! Throws DataError unless `values` is nonempty and strictly increasing.
  explicit ThresholdSet(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  int                        size() const { return static_cast<int>(values_.size()); }
  double                     operator[](int i) const { return values_[i]; }
  double                     back() const { return values_.back(); }

  bool operator==(const ThresholdSet&) const = default;

 private:
  std::vector<double> values_;
};

enum class ThresholdStrategy { UniformRange, Quantile, UniqueValues };

//! UniformRange: min + (max - min) * i / m for i = 1..m.
//! Quantile: nearest-rank quantiles at i / m; duplicates collapse (and `warning` is set).
//! UniqueValues: sorted distinct values, `m` ignored.
//! A constant input always yields a single threshold.
ThresholdSet computeThresholds(std::span<const double> values, int m, ThresholdStrategy strategy,
                               std::string* warning = nullptr);

enum class LevelDirection { Sublevel, Superlevel };

struct VertexHierarchy {
  std::vector<double>           thresholds;  //!< in the order the levels were built
  std::vector<std::vector<int>> levels;      //!< nested, sorted vertex sets
};

//! Sublevel: V_i = {v | f(v) <= alpha_i}. Superlevel: V_i = {v | f(v) >= alpha_{m+1-i}}.
VertexHierarchy sublevelHierarchy(std::span<const double> values, const ThresholdSet& thresholds,
                                  LevelDirection direction = LevelDirection::Sublevel);

//! Sorted vertex tuple of at most four vertices. Ordering is (dimension, lexicographic).
struct Simplex {
  int32_t                size = 0;
  std::array<int32_t, 4> v{};

  int  dim() const { return size - 1; }
  auto vertices() const { return std::span<const int32_t>(v.data(), static_cast<size_t>(size)); }

  static Simplex vertex(int a) { return {1, {a, 0, 0, 0}}; }
  static Simplex edge(int a, int b) { return a < b ? Simplex{2, {a, b, 0, 0}} : Simplex{2, {b, a, 0, 0}}; }
  //! Vertices must already be sorted.
  static Simplex triangle(int a, int b, int c) { return {3, {a, b, c, 0}}; }

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const  = default;
};

//! Simplices grouped by dimension, each group sorted.
struct SimplicialComplex {
  std::vector<std::vector<Simplex>> byDim;

  size_t count(int dim) const { return dim < static_cast<int>(byDim.size()) ? byDim[dim].size() : 0; }
  bool   contains(const Simplex& s) const;
};

//! Clique complex of `g` restricted to simplices of dimension <= maxDim (2 or 3).
SimplicialComplex cliqueComplex(const SimpleGraph& g, int maxDim = 2);

//! Clique complex of the subgraph induced by the vertices with mask[v] != 0.
SimplicialComplex inducedCliqueComplex(const SimpleGraph& g, std::span<const char> mask, int maxDim = 2);

struct FilteredSimplex {
  Simplex simplex;
  int     value = 0;

  bool operator==(const FilteredSimplex&) const = default;
};

//! Simplices of dimension <= 2 tagged with integer filtration values in 0..kCap.
struct FilteredComplex {
  std::vector<FilteredSimplex> simplices;
  int                          kCap = 0;
};

//! Vietoris-Rips slice of the vertex set `vset` using the full graph's hop
//! distances: vertices at 0, edges at d(u, v) when finite and <= kCap,
//! triangles at the largest of their edge values.
FilteredComplex vrSlice(std::span<const int> vset, const DistanceMatrix& dist, int kCap);

//! Grid of clique complexes of the subgraphs induced by
//! {v | f(v) <= alpha_i and g(v) <= beta_j}; result[i][j].
std::vector<std::vector<SimplicialComplex>> sublevelBifiltration(const SimpleGraph& g, std::span<const double> fValues,
                                                                 std::span<const double> gValues,
                                                                 const ThresholdSet& fThresholds,
                                                                 const ThresholdSet& gThresholds);

//! Index-valued sublevel filtration of the clique complex of `g`: a vertex enters
//! at the first j with value <= beta_j, higher simplices at the max over their
//! vertices. Vertices above the last threshold (or outside `mask`, when given)
//! never enter. kCap is |thresholds| - 1.
FilteredComplex sublevelIndexFiltration(const SimpleGraph& g, std::span<const double> values,
                                        const ThresholdSet& thresholds, std::span<const char> mask = {});

//! Nested graphs G_i keeping every vertex and the edges with weight <= alpha_i.
//! `edgeValues` is aligned with g.edges.
std::vector<SimpleGraph> weightFiltration(const SimpleGraph& g, std::span<const double> edgeValues,
                                          const ThresholdSet& thresholds);

}  // namespace todd

#endif  // TODD_FILTRATION_H
