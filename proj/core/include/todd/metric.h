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

#ifndef TODD_METRIC_H
#define TODD_METRIC_H

#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "todd/mpfingerprint.h"
#include "todd/persistence.h"

namespace todd {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

//! Optimal matching between two diagrams augmented with diagonal projections.
//! Each entry pairs an index into `a` with an index into `b`; -1 stands for the
//! diagonal. Essential bars take part as ordinary points with death = kCap.
struct DiagramMatching {
  std::vector<std::pair<int, int>> pairs;
  double                           cost = 0.0;  //!< sum of ||q - phi(q)||_inf^p, or the max for p = inf
  double                           p    = 1.0;
};

DiagramMatching wassersteinMatching(const PersistenceDiagram& a, const PersistenceDiagram& b, double p);

//! W_p with the l-infinity ground metric; p = kInfinity gives the bottleneck distance.
double wasserstein(const PersistenceDiagram& a, const PersistenceDiagram& b, double p);

//! Sum over slices of W_p(a_i, b_i).
double slicewiseMatchingDistance(std::span<const PersistenceDiagram> a, std::span<const PersistenceDiagram> b,
                                 double p);

enum class RowMetric { L1, L2, SupNorm };

//! Norm under which the vectorization's stability constant is stated:
//! sup-norm for landscapes, L2 for images, L1 otherwise.
RowMetric nativeRowMetric(VectorizationKind kind);

double rowDistance(std::span<const double> a, std::span<const double> b, RowMetric metric);

//! Sum over rows of the row metric. Throws DataError on shape or spec mismatch.
double fingerprintDistance(const MPFingerprint2D& a, const MPFingerprint2D& b, RowMetric metric);

struct StabilityConfig {
  FilterFunction    filter;
  ThresholdSet      thresholds;
  VectorizationSpec vectorization;
  int               dim       = 0;
  int               kCap      = 1;
  RowMetric         rowMetric = RowMetric::SupNorm;
};

struct StabilityReport {
  double left     = 0.0;  //!< fingerprint distance
  double right    = 0.0;  //!< slicewise matching distance
  double ratio    = 0.0;  //!< left / right (0 when both vanish)
  double constant = 1.0;
  bool   pass     = false;

  bool operator==(const StabilityReport&) const = default;
};

//! Evaluates both sides of  D(M(G+), M(G-)) <= C * sum_i W_p(PD(V_i+), PD(V_i-))
//! for VR-sliced fingerprints built from `config`.
StabilityReport stabilityCheck(const MolecularGraph& gPlus, const MolecularGraph& gMinus,
                               const StabilityConfig& config, double constant, double p);

}  // namespace todd

#endif  // TODD_METRIC_H
