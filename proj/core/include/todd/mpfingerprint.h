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

#ifndef TODD_MPFINGERPRINT_H
#define TODD_MPFINGERPRINT_H

#include <span>
#include <string>
#include <vector>

#include "todd/filtration.h"
#include "todd/persistence.h"
#include "todd/vectorize.h"

namespace todd {

enum class FingerprintVariant {
  VrSlice,       //!< sublevel rows, VR (hop distance) slices of the full graph
  SublevelBoth,  //!< sublevel rows, sublevel filtration by a second vertex function
  WeightFirst,   //!< edge-weight rows, sublevel filtration by a vertex function
  WeightVr,      //!< edge-weight rows, VR slices using each subgraph's own hop distances
};

std::string        variantName(FingerprintVariant v);
FingerprintVariant variantFromName(std::string_view name);

struct FingerprintSpec {
  std::string        filter;  //!< e.g. "mass", "charge", "bond", "mass|charge"
  VectorizationSpec  vectorization;
  int                dim     = 0;
  FingerprintVariant variant = FingerprintVariant::VrSlice;
  int                kCap    = 0;  //!< extent of the slice filtration grid

  bool operator==(const FingerprintSpec&) const = default;
};

//! m x r matrix; row i is the vectorized diagram of slice i.
struct MPFingerprint2D {
  int                 rows = 0;
  int                 cols = 0;
  std::vector<double> data;  //!< row-major
  ThresholdSet        rowThresholds;
  FingerprintSpec     spec;

  std::span<const double> row(int i) const { return {data.data() + static_cast<size_t>(i) * cols, static_cast<size_t>(cols)}; }
  double                  at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const MPFingerprint2D&) const = default;
};

//! m x n x r array; floor (i, j) is the vectorized diagram of V_ij.
struct MPFingerprint3D {
  int                 m = 0;
  int                 n = 0;
  int                 r = 0;
  std::vector<double> data;
  ThresholdSet        fThresholds;
  ThresholdSet        gThresholds;
  FingerprintSpec     spec;

  std::span<const double> floor(int i, int j) const {
    return {data.data() + (static_cast<size_t>(i) * n + j) * r, static_cast<size_t>(r)};
  }

  bool operator==(const MPFingerprint3D&) const = default;
};

//! Per-slice diagrams of the VR-slicing construction: slices[i] belongs to V_i.
struct SliceDiagrams {
  ThresholdSet             thresholds;
  int                      kCap = 0;
  std::vector<DiagramPair> slices;
};

//! Sublevel hierarchy of `values`, then the VR slice (full-graph hop distances,
//! capped at kCap) of every V_i. Empty V_i give empty diagrams. Slices with the
//! same vertex set as their predecessor reuse its diagrams.
SliceDiagrams vrSliceDiagrams(const MolecularGraph& g, std::span<const double> values, const ThresholdSet& thresholds,
                              int kCap);

//! Stack vectorized slice diagrams of dimension `dim` into an m x r fingerprint.
MPFingerprint2D assembleFingerprint(const SliceDiagrams& slices, const VectorizationSpec& vec, int dim,
                                    std::string filterName, FingerprintVariant variant);

MPFingerprint2D mpFingerprint2D(const MolecularGraph& g, const FilterFunction& filter, const ThresholdSet& thresholds,
                                const VectorizationSpec& vec, int dim, int kCap);

MPFingerprint3D mpFingerprint3D(const MolecularGraph& g, const FilterFunction& f, const FilterFunction& g2,
                                const ThresholdSet& fThresholds, const ThresholdSet& gThresholds,
                                const VectorizationSpec& vec, int dim, int kCap);

//! Row i: sublevel filtration by g2 (over the beta grid) of the clique complex of
//! the subgraph induced by V_i. The vectorization grid is 0..n-1.
MPFingerprint2D mpSublevelBoth(const MolecularGraph& g, const FilterFunction& f, const FilterFunction& g2,
                               const ThresholdSet& fThresholds, const ThresholdSet& gThresholds,
                               const VectorizationSpec& vec, int dim);

//! Row i: sublevel filtration by g2 of the clique complex of G_i, the i-th graph
//! of the edge-weight filtration.
MPFingerprint2D mpWeightFirst(const MolecularGraph& g, std::span<const double> edgeValues,
                              const ThresholdSet& weightThresholds, const FilterFunction& g2,
                              const ThresholdSet& gThresholds, const VectorizationSpec& vec, int dim);

//! Diagrams of the weight-filtration slices: G_i's VR filtration over its own hop distances.
SliceDiagrams weightVrSliceDiagrams(const MolecularGraph& g, std::span<const double> edgeValues,
                                    const ThresholdSet& weightThresholds, int kCap);

struct IntMatrix {
  int              rows = 0;
  int              cols = 0;
  std::vector<int> data;

  int  at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
  bool operator==(const IntMatrix&) const = default;
};

//! m_ij = beta_dim of the clique complex of the subgraph induced by
//! {v | f(v) <= alpha_i and g(v) <= beta_j}.
IntMatrix bigradedBetti(const MolecularGraph& g, const FilterFunction& f, const FilterFunction& g2,
                        const ThresholdSet& fThresholds, const ThresholdSet& gThresholds, int dim);

// --- multimodal stacking -----------------------------------------------------

enum class Modality { Mass = 0, Charge = 1, Bond = 2 };

std::string modalityName(Modality m);
Modality    modalityFromName(std::string_view name);

struct ModalityFingerprint {
  std::string     compoundId;
  Modality        modality = Modality::Mass;
  MPFingerprint2D fingerprint;
};

struct Channel {
  std::string         tag;  //!< "<modality>:H<dim>"
  std::vector<double> data;  //!< rows x cols, row-major

  bool operator==(const Channel&) const = default;
};

struct MultiModalFingerprint {
  std::string          compoundId;
  int                  rows = 0;
  int                  cols = 0;
  std::vector<Channel> channels;  //!< mass, charge, bond; dimension ascending within a modality

  bool operator==(const MultiModalFingerprint&) const = default;
};

//! Nearest-neighbour resample of a row-major matrix: source index floor(i * src / dst).
std::vector<double> resampleNearest(std::span<const double> src, int srcRows, int srcCols, int dstRows, int dstCols);

//! Resample every fingerprint to rows x cols (0 = largest present) and order the
//! channels canonically. Throws DataError for mixed compounds or duplicate tags.
MultiModalFingerprint multimodalStack(std::vector<ModalityFingerprint> parts, int rows = 0, int cols = 0);

}  // namespace todd

#endif  // TODD_MPFINGERPRINT_H
