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

#include "todd/filtration.h"

#include <algorithm>
#include <cmath>

namespace todd {

ThresholdSet::ThresholdSet(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw DataError("threshold set must not be empty");
  }
  for (size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw DataError("threshold values must be finite");
    }
    if (i > 0 && !(values_[i - 1] < values_[i])) {
      throw DataError("threshold values must be strictly increasing");
    }
  }
}

ThresholdSet computeThresholds(std::span<const double> values, int m, ThresholdStrategy strategy,
                               std::string* warning) {
  if (values.empty()) {
    throw DataError("cannot derive thresholds from an empty value list");
  }
  if (strategy != ThresholdStrategy::UniqueValues && m < 1) {
    throw DataError("threshold count must be >= 1");
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double lo = sorted.front();
  const double hi = sorted.back();
  if (lo == hi) {
    return ThresholdSet({hi});
  }

  std::vector<double> out;
  switch (strategy) {
    case ThresholdStrategy::UniqueValues:
      out = sorted;
      out.erase(std::unique(out.begin(), out.end()), out.end());
      break;
    case ThresholdStrategy::UniformRange:
      for (int i = 1; i < m; ++i) {
        out.push_back(lo + (hi - lo) * static_cast<double>(i) / m);
      }
      out.push_back(hi);
      break;
    case ThresholdStrategy::Quantile: {
      const size_t n = sorted.size();
      for (int i = 1; i <= m; ++i) {
        size_t rank = (static_cast<size_t>(i) * n + static_cast<size_t>(m) - 1) / static_cast<size_t>(m);
        double q    = sorted[std::max<size_t>(rank, 1) - 1];
        if (out.empty() || out.back() < q) {
          out.push_back(q);
        }
      }
      if (static_cast<int>(out.size()) < m && warning != nullptr) {
        *warning = "quantile thresholds collapsed from " + std::to_string(m) + " to " + std::to_string(out.size()) +
                   " distinct values";
      }
      break;
    }
  }
  return ThresholdSet(std::move(out));
}

VertexHierarchy sublevelHierarchy(std::span<const double> values, const ThresholdSet& thresholds,
                                  LevelDirection direction) {
  VertexHierarchy h;
  const int       m = thresholds.size();
  for (int i = 0; i < m; ++i) {
    const double     alpha = direction == LevelDirection::Sublevel ? thresholds[i] : thresholds[m - 1 - i];
    std::vector<int> level;
    for (size_t v = 0; v < values.size(); ++v) {
      const bool in = direction == LevelDirection::Sublevel ? values[v] <= alpha : values[v] >= alpha;
      if (in) {
        level.push_back(static_cast<int>(v));
      }
    }
    h.thresholds.push_back(alpha);
    h.levels.push_back(std::move(level));
  }
  return h;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  const int d = s.dim();
  if (d < 0 || d >= static_cast<int>(byDim.size())) {
    return false;
  }
  return std::binary_search(byDim[d].begin(), byDim[d].end(), s);
}

SimplicialComplex inducedCliqueComplex(const SimpleGraph& g, std::span<const char> mask, int maxDim) {
  if (maxDim < 0 || maxDim > 3) {
    throw DataError("clique complex dimension must be in 0..3");
  }
  const int  n      = g.numVertices;
  auto       inside = [&](int v) { return mask.empty() || mask[v] != 0; };
  // Neighbour lists restricted to the induced subgraph and to higher-indexed vertices.
  std::vector<std::vector<int>> up(n);
  for (auto [a, b] : g.edges) {
    if (inside(a) && inside(b)) {
      up[std::min(a, b)].push_back(std::max(a, b));
    }
  }
  for (auto& nbrs : up) {
    std::sort(nbrs.begin(), nbrs.end());
  }
  auto adjacent = [&](int a, int b) { return std::binary_search(up[a].begin(), up[a].end(), b); };

  SimplicialComplex c;
  c.byDim.resize(maxDim + 1);
  for (int v = 0; v < n; ++v) {
    if (inside(v)) {
      c.byDim[0].push_back(Simplex::vertex(v));
    }
  }
  for (int a = 0; a < n && maxDim >= 1; ++a) {
    for (size_t i = 0; i < up[a].size(); ++i) {
      const int b = up[a][i];
      c.byDim[1].push_back(Simplex::edge(a, b));
      if (maxDim < 2) {
        continue;
      }
      for (size_t j = i + 1; j < up[a].size(); ++j) {
        const int cc = up[a][j];
        if (!adjacent(b, cc)) {
          continue;
        }
        c.byDim[2].push_back(Simplex::triangle(a, b, cc));
        if (maxDim < 3) {
          continue;
        }
        for (size_t k = j + 1; k < up[a].size(); ++k) {
          const int d = up[a][k];
          if (adjacent(b, d) && adjacent(cc, d)) {
            c.byDim[3].push_back(Simplex{4, {a, b, cc, d}});
          }
        }
      }
    }
  }
  for (auto& simplices : c.byDim) {
    std::sort(simplices.begin(), simplices.end());
  }
  return c;
}

SimplicialComplex cliqueComplex(const SimpleGraph& g, int maxDim) { return inducedCliqueComplex(g, {}, maxDim); }

FilteredComplex vrSlice(std::span<const int> vset, const DistanceMatrix& dist, int kCap) {
  if (kCap < 1) {
    throw DataError("K_cap must be >= 1");
  }
  std::vector<int> verts(vset.begin(), vset.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  const int n = static_cast<int>(verts.size());

  FilteredComplex fc;
  fc.kCap = kCap;
  // Local pairwise edge values; 0 marks "no edge" since distinct vertices have d >= 1.
  std::vector<int> local(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    fc.simplices.push_back({Simplex::vertex(verts[i]), 0});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int d = dist.at(verts[i], verts[j]);
      if (d != DistanceMatrix::kUnreachable && d <= kCap) {
        local[static_cast<size_t>(i) * n + j] = d;
        fc.simplices.push_back({Simplex::edge(verts[i], verts[j]), d});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int dij = local[static_cast<size_t>(i) * n + j];
      if (dij == 0) {
        continue;
      }
      for (int k = j + 1; k < n; ++k) {
        const int dik = local[static_cast<size_t>(i) * n + k];
        const int djk = local[static_cast<size_t>(j) * n + k];
        if (dik != 0 && djk != 0) {
          fc.simplices.push_back({Simplex::triangle(verts[i], verts[j], verts[k]), std::max({dij, dik, djk})});
        }
      }
    }
  }
  return fc;
}

std::vector<std::vector<SimplicialComplex>> sublevelBifiltration(const SimpleGraph& g, std::span<const double> fValues,
                                                                 std::span<const double> gValues,
                                                                 const ThresholdSet& fThresholds,
                                                                 const ThresholdSet& gThresholds) {
  const int n = g.numVertices;
  if (static_cast<int>(fValues.size()) != n || static_cast<int>(gValues.size()) != n) {
    throw DataError("filter value vectors must have one entry per vertex");
  }
  std::vector<std::vector<SimplicialComplex>> grid(fThresholds.size());
  std::vector<char>                           mask(n);
  for (int i = 0; i < fThresholds.size(); ++i) {
    for (int j = 0; j < gThresholds.size(); ++j) {
      for (int v = 0; v < n; ++v) {
        mask[v] = fValues[v] <= fThresholds[i] && gValues[v] <= gThresholds[j];
      }
      grid[i].push_back(inducedCliqueComplex(g, mask, 2));
    }
  }
  return grid;
}

FilteredComplex sublevelIndexFiltration(const SimpleGraph& g, std::span<const double> values,
                                        const ThresholdSet& thresholds, std::span<const char> mask) {
  const int n = g.numVertices;
  if (static_cast<int>(values.size()) != n) {
    throw DataError("filter value vector must have one entry per vertex");
  }
  const auto&      beta = thresholds.values();
  std::vector<int> entry(n, -1);
  std::vector<char> present(n, 0);
  for (int v = 0; v < n; ++v) {
    if (!mask.empty() && mask[v] == 0) {
      continue;
    }
    auto it = std::lower_bound(beta.begin(), beta.end(), values[v]);
    if (it != beta.end()) {
      entry[v]   = static_cast<int>(it - beta.begin());
      present[v] = 1;
    }
  }
  const auto complex = inducedCliqueComplex(g, present, 2);
  FilteredComplex fc;
  fc.kCap = thresholds.size() - 1;
  for (const auto& simplices : complex.byDim) {
    for (const auto& s : simplices) {
      int value = 0;
      for (int v : s.vertices()) {
        value = std::max(value, entry[v]);
      }
      fc.simplices.push_back({s, value});
    }
  }
  return fc;
}

std::vector<SimpleGraph> weightFiltration(const SimpleGraph& g, std::span<const double> edgeValues,
                                          const ThresholdSet& thresholds) {
  if (edgeValues.size() != g.edges.size()) {
    throw DataError("weight filtration needs exactly one value per edge");
  }
  std::vector<SimpleGraph> seq;
  for (int i = 0; i < thresholds.size(); ++i) {
    SimpleGraph gi;
    gi.numVertices = g.numVertices;
    for (size_t e = 0; e < g.edges.size(); ++e) {
      if (edgeValues[e] <= thresholds[i]) {
        gi.edges.push_back(g.edges[e]);
      }
    }
    seq.push_back(std::move(gi));
  }
  return seq;
}

}  // namespace todd
