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

#include "todd/mpfingerprint.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace todd {
namespace {

void appendRow(MPFingerprint2D& fp, const SPVector& row) {
  if (static_cast<int>(row.size()) != fp.cols) {
    throw DataError("vectorization produced a row of unexpected length");
  }
  fp.data.insert(fp.data.end(), row.begin(), row.end());
  ++fp.rows;
}

std::vector<char> sublevelMask(std::span<const double> values, double alpha) {
  std::vector<char> mask(values.size());
  for (size_t v = 0; v < values.size(); ++v) {
    mask[v] = values[v] <= alpha;
  }
  return mask;
}

// Rank over GF(2) of the triangle -> edge boundary map of a clique complex.
int triangleBoundaryRank(const SimplicialComplex& c) {
  if (c.count(2) == 0) {
    return 0;
  }
  std::map<Simplex, int> edgeIndex;
  for (const auto& e : c.byDim[1]) {
    edgeIndex.emplace(e, static_cast<int>(edgeIndex.size()));
  }
  std::vector<int> owner(edgeIndex.size(), -1);
  std::vector<std::vector<int>> reduced;
  std::vector<int> scratch;
  int              rank = 0;
  for (const auto& t : c.byDim[2]) {
    std::vector<int> col = {edgeIndex.at(Simplex::edge(t.v[0], t.v[1])), edgeIndex.at(Simplex::edge(t.v[0], t.v[2])),
                            edgeIndex.at(Simplex::edge(t.v[1], t.v[2]))};
    std::sort(col.begin(), col.end());
    while (!col.empty() && owner[col.back()] >= 0) {
      scratch.clear();
      const auto& other = reduced[owner[col.back()]];
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(), std::back_inserter(scratch));
      col.swap(scratch);
    }
    if (!col.empty()) {
      owner[col.back()] = static_cast<int>(reduced.size());
      reduced.push_back(std::move(col));
      ++rank;
    }
  }
  return rank;
}

int connectedComponents(const SimplicialComplex& c) {
  if (c.count(0) == 0) {
    return 0;
  }
  std::map<int, int> slot;
  for (const auto& v : c.byDim[0]) {
    slot.emplace(v.v[0], static_cast<int>(slot.size()));
  }
  std::vector<int> parent(slot.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      x = parent[x] = parent[parent[x]];
    }
    return x;
  };
  int components = static_cast<int>(slot.size());
  if (c.byDim.size() > 1) {
    for (const auto& e : c.byDim[1]) {
      int a = find(slot.at(e.v[0]));
      int b = find(slot.at(e.v[1]));
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
        --components;
      }
    }
  }
  return components;
}

DiagramPair diagramsOrEmpty(const FilteredComplex& fc) {
  if (fc.simplices.empty()) {
    return {PersistenceDiagram(0, fc.kCap, {}), PersistenceDiagram(1, fc.kCap, {})};
  }
  return persistenceDiagrams(fc);
}

void checkDim(int dim) {
  if (dim != 0 && dim != 1) {
    throw DataError("homology dimension must be 0 or 1");
  }
}

}  // namespace

std::string variantName(FingerprintVariant v) {
  switch (v) {
    case FingerprintVariant::VrSlice:
      return "vr";
    case FingerprintVariant::SublevelBoth:
      return "sublevel-both";
    case FingerprintVariant::WeightFirst:
      return "weight-first";
    case FingerprintVariant::WeightVr:
      return "weight-vr";
  }
  return {};
}

FingerprintVariant variantFromName(std::string_view name) {
  for (auto v : {FingerprintVariant::VrSlice, FingerprintVariant::SublevelBoth, FingerprintVariant::WeightFirst,
                 FingerprintVariant::WeightVr}) {
    if (variantName(v) == name) {
      return v;
    }
  }
  throw DataError("unknown fingerprint variant '" + std::string(name) + "'");
}

SliceDiagrams vrSliceDiagrams(const MolecularGraph& g, std::span<const double> values, const ThresholdSet& thresholds,
                              int kCap) {
  if (static_cast<int>(values.size()) != g.numAtoms()) {
    throw DataError("filter value vector must have one entry per atom");
  }
  const auto      dist      = hopDistances(g);
  const auto      hierarchy = sublevelHierarchy(values, thresholds);
  SliceDiagrams   out;
  out.thresholds = thresholds;
  out.kCap       = kCap;
  const std::vector<int>* previous = nullptr;
  for (const auto& level : hierarchy.levels) {
    if (previous != nullptr && *previous == level) {
      out.slices.push_back(out.slices.back());
    } else {
      out.slices.push_back(diagramsOrEmpty(vrSlice(level, dist, kCap)));
    }
    previous = &level;
  }
  return out;
}

MPFingerprint2D assembleFingerprint(const SliceDiagrams& slices, const VectorizationSpec& vec, int dim,
                                    std::string filterName, FingerprintVariant variant) {
  checkDim(dim);
  MPFingerprint2D fp;
  fp.cols          = static_cast<int>(vec.outputLength(slices.kCap));
  fp.rowThresholds = slices.thresholds;
  fp.spec          = {std::move(filterName), vec, dim, variant, slices.kCap};
  fp.data.reserve(static_cast<size_t>(fp.cols) * slices.slices.size());
  for (const auto& diagrams : slices.slices) {
    appendRow(fp, vectorize(diagrams[dim], vec));
  }
  return fp;
}

MPFingerprint2D mpFingerprint2D(const MolecularGraph& g, const FilterFunction& filter, const ThresholdSet& thresholds,
                                const VectorizationSpec& vec, int dim, int kCap) {
  checkDim(dim);
  const auto values = vertexFilterValues(g, filter);
  return assembleFingerprint(vrSliceDiagrams(g, values, thresholds, kCap), vec, dim, filter.name(),
                             FingerprintVariant::VrSlice);
}

MPFingerprint3D mpFingerprint3D(const MolecularGraph& g, const FilterFunction& f, const FilterFunction& g2,
                                const ThresholdSet& fThresholds, const ThresholdSet& gThresholds,
                                const VectorizationSpec& vec, int dim, int kCap) {
  checkDim(dim);
  const auto fValues = vertexFilterValues(g, f);
  const auto gValues = vertexFilterValues(g, g2);
  const auto dist    = hopDistances(g);

  MPFingerprint3D fp;
  fp.m           = fThresholds.size();
  fp.n           = gThresholds.size();
  fp.r           = static_cast<int>(vec.outputLength(kCap));
  fp.fThresholds = fThresholds;
  fp.gThresholds = gThresholds;
  fp.spec        = {f.name() + "|" + g2.name(), vec, dim, FingerprintVariant::VrSlice, kCap};
  fp.data.reserve(static_cast<size_t>(fp.m) * fp.n * fp.r);
  for (int i = 0; i < fp.m; ++i) {
    for (int j = 0; j < fp.n; ++j) {
      std::vector<int> cell;
      for (int v = 0; v < g.numAtoms(); ++v) {
        if (fValues[v] <= fThresholds[i] && gValues[v] <= gThresholds[j]) {
          cell.push_back(v);
        }
      }
      const auto row = vectorize(diagramsOrEmpty(vrSlice(cell, dist, kCap))[dim], vec);
      fp.data.insert(fp.data.end(), row.begin(), row.end());
    }
  }
  return fp;
}

MPFingerprint2D mpSublevelBoth(const MolecularGraph& g, const FilterFunction& f, const FilterFunction& g2,
                               const ThresholdSet& fThresholds, const ThresholdSet& gThresholds,
                               const VectorizationSpec& vec, int dim) {
  checkDim(dim);
  const auto fValues = vertexFilterValues(g, f);
  const auto gValues = vertexFilterValues(g, g2);
  const auto topo    = g.topology();

  SliceDiagrams slices;
  slices.thresholds = fThresholds;
  slices.kCap       = gThresholds.size() - 1;
  for (int i = 0; i < fThresholds.size(); ++i) {
    const auto mask = sublevelMask(fValues, fThresholds[i]);
    slices.slices.push_back(diagramsOrEmpty(sublevelIndexFiltration(topo, gValues, gThresholds, mask)));
  }
  return assembleFingerprint(slices, vec, dim, f.name() + "|" + g2.name(), FingerprintVariant::SublevelBoth);
}

MPFingerprint2D mpWeightFirst(const MolecularGraph& g, std::span<const double> edgeValues,
                              const ThresholdSet& weightThresholds, const FilterFunction& g2,
                              const ThresholdSet& gThresholds, const VectorizationSpec& vec, int dim) {
  checkDim(dim);
  const auto gValues = vertexFilterValues(g, g2);
  const auto graphs  = weightFiltration(g.topology(), edgeValues, weightThresholds);

  SliceDiagrams slices;
  slices.thresholds = weightThresholds;
  slices.kCap       = gThresholds.size() - 1;
  for (const auto& gi : graphs) {
    slices.slices.push_back(diagramsOrEmpty(sublevelIndexFiltration(gi, gValues, gThresholds)));
  }
  return assembleFingerprint(slices, vec, dim, "weight|" + g2.name(), FingerprintVariant::WeightFirst);
}

SliceDiagrams weightVrSliceDiagrams(const MolecularGraph& g, std::span<const double> edgeValues,
                                    const ThresholdSet& weightThresholds, int kCap) {
  const auto graphs = weightFiltration(g.topology(), edgeValues, weightThresholds);
  std::vector<int> all(g.numAtoms());
  std::iota(all.begin(), all.end(), 0);

  SliceDiagrams out;
  out.thresholds = weightThresholds;
  out.kCap       = kCap;
  for (size_t i = 0; i < graphs.size(); ++i) {
    if (i > 0 && graphs[i].edges == graphs[i - 1].edges) {
      out.slices.push_back(out.slices.back());
      continue;
    }
    out.slices.push_back(diagramsOrEmpty(vrSlice(all, hopDistances(graphs[i]), kCap)));
  }
  return out;
}

IntMatrix bigradedBetti(const MolecularGraph& g, const FilterFunction& f, const FilterFunction& g2,
                        const ThresholdSet& fThresholds, const ThresholdSet& gThresholds, int dim) {
  checkDim(dim);
  const auto fValues = vertexFilterValues(g, f);
  const auto gValues = vertexFilterValues(g, g2);
  const auto topo    = g.topology();

  IntMatrix out;
  out.rows = fThresholds.size();
  out.cols = gThresholds.size();
  std::vector<char> mask(g.numAtoms());
  for (int i = 0; i < out.rows; ++i) {
    for (int j = 0; j < out.cols; ++j) {
      for (int v = 0; v < g.numAtoms(); ++v) {
        mask[v] = fValues[v] <= fThresholds[i] && gValues[v] <= gThresholds[j];
      }
      const auto complex    = inducedCliqueComplex(topo, mask, 2);
      const int  components = connectedComponents(complex);
      if (dim == 0) {
        out.data.push_back(components);
      } else {
        const int cycleRank = static_cast<int>(complex.count(1)) - static_cast<int>(complex.count(0)) + components;
        out.data.push_back(cycleRank - triangleBoundaryRank(complex));
      }
    }
  }
  return out;
}

std::string modalityName(Modality m) {
  switch (m) {
    case Modality::Mass:
      return "mass";
    case Modality::Charge:
      return "charge";
    case Modality::Bond:
      return "bond";
  }
  return {};
}

Modality modalityFromName(std::string_view name) {
  for (auto m : {Modality::Mass, Modality::Charge, Modality::Bond}) {
    if (modalityName(m) == name) {
      return m;
    }
  }
  throw DataError("unknown modality '" + std::string(name) + "'");
}

std::vector<double> resampleNearest(std::span<const double> src, int srcRows, int srcCols, int dstRows, int dstCols) {
  if (srcRows < 1 || srcCols < 1 || dstRows < 1 || dstCols < 1) {
    throw DataError("resample shapes must be positive");
  }
  if (src.size() != static_cast<size_t>(srcRows) * srcCols) {
    throw DataError("resample source size does not match its shape");
  }
  std::vector<double> out(static_cast<size_t>(dstRows) * dstCols);
  for (int i = 0; i < dstRows; ++i) {
    const int si = static_cast<int>(static_cast<long long>(i) * srcRows / dstRows);
    for (int j = 0; j < dstCols; ++j) {
      const int sj = static_cast<int>(static_cast<long long>(j) * srcCols / dstCols);
      out[static_cast<size_t>(i) * dstCols + j] = src[static_cast<size_t>(si) * srcCols + sj];
    }
  }
  return out;
}

MultiModalFingerprint multimodalStack(std::vector<ModalityFingerprint> parts, int rows, int cols) {
  if (parts.empty()) {
    throw DataError("multimodal stack needs at least one fingerprint");
  }
  MultiModalFingerprint out;
  out.compoundId = parts.front().compoundId;
  for (const auto& p : parts) {
    if (p.compoundId != out.compoundId) {
      throw DataError("multimodal stack mixes compounds '" + out.compoundId + "' and '" + p.compoundId + "'");
    }
    if (p.fingerprint.rows < 1 || p.fingerprint.cols < 1) {
      throw DataError("multimodal stack got an empty fingerprint for '" + p.compoundId + "'");
    }
  }
  std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.modality != b.modality) {
      return a.modality < b.modality;
    }
    return a.fingerprint.spec.dim < b.fingerprint.spec.dim;
  });
  std::set<std::string> tags;
  if (rows <= 0 || cols <= 0) {
    int maxRows = 0, maxCols = 0;
    for (const auto& p : parts) {
      maxRows = std::max(maxRows, p.fingerprint.rows);
      maxCols = std::max(maxCols, p.fingerprint.cols);
    }
    rows = rows > 0 ? rows : maxRows;
    cols = cols > 0 ? cols : maxCols;
  }
  out.rows = rows;
  out.cols = cols;
  for (const auto& p : parts) {
    const auto  tag = modalityName(p.modality) + ":H" + std::to_string(p.fingerprint.spec.dim);
    if (!tags.insert(tag).second) {
      throw DataError("duplicate modality channel '" + tag + "'");
    }
    const auto& fp = p.fingerprint;
    out.channels.push_back({tag, resampleNearest(fp.data, fp.rows, fp.cols, rows, cols)});
  }
  return out;
}

}  // namespace todd
