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

#include "todd/metric.h"

#include <algorithm>
#include <cmath>

#include "todd/assignment.h"

namespace todd {
namespace {

struct Point {
  double birth;
  double death;
};

std::vector<Point> points(const PersistenceDiagram& pd) {
  std::vector<Point> out;
  out.reserve(pd.pairs.size());
  for (const auto& p : pd.pairs) {
    out.push_back({static_cast<double>(p.birth), static_cast<double>(p.essential ? pd.kCap : p.death)});
  }
  return out;
}

double chebyshev(const Point& a, const Point& b) {
  return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double toDiagonal(const Point& a) { return std::abs(a.death - a.birth) / 2.0; }

}  // namespace

DiagramMatching wassersteinMatching(const PersistenceDiagram& a, const PersistenceDiagram& b, double p) {
  if (a.dim != b.dim) {
    throw DataError("cannot compare diagrams of dimension " + std::to_string(a.dim) + " and " +
                    std::to_string(b.dim));
  }
  if (!(p >= 1.0)) {
    throw DataError("Wasserstein order p must be >= 1");
  }
  const bool bottleneck = std::isinf(p);
  const auto pa         = points(a);
  const auto pb         = points(b);
  const int  na         = static_cast<int>(pa.size());
  const int  nb         = static_cast<int>(pb.size());
  const int  n          = na + nb;

  // Rows: a points, then diagonal slots; columns: b points, then diagonal slots.
  auto lift = [&](double d) { return bottleneck ? d : std::pow(d, p); };
  std::vector<double> cost(static_cast<size_t>(n) * n, 0.0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      double d = 0.0;
      if (r < na && c < nb) {
        d = chebyshev(pa[r], pb[c]);
      } else if (r < na) {
        d = toDiagonal(pa[r]);
      } else if (c < nb) {
        d = toDiagonal(pb[c]);
      }
      cost[static_cast<size_t>(r) * n + c] = lift(d);
    }
  }
  const Assignment assignment = bottleneck ? solveBottleneckAssignment(cost, n) : solveAssignment(cost, n);

  DiagramMatching m;
  m.p    = p;
  m.cost = assignment.cost;
  for (int r = 0; r < n; ++r) {
    const int c = assignment.rowToCol[r];
    if (r >= na && c >= nb) {
      continue;
    }
    m.pairs.emplace_back(r < na ? r : -1, c < nb ? c : -1);
  }
  return m;
}

double wasserstein(const PersistenceDiagram& a, const PersistenceDiagram& b, double p) {
  const auto m = wassersteinMatching(a, b, p);
  return std::isinf(p) ? m.cost : std::pow(m.cost, 1.0 / p);
}

double slicewiseMatchingDistance(std::span<const PersistenceDiagram> a, std::span<const PersistenceDiagram> b,
                                 double p) {
  if (a.size() != b.size()) {
    throw DataError("slice counts differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  double total = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    total += wasserstein(a[i], b[i], p);
  }
  return total;
}

RowMetric nativeRowMetric(VectorizationKind kind) {
  switch (kind) {
    case VectorizationKind::Landscape:
      return RowMetric::SupNorm;
    case VectorizationKind::PersistenceImage:
      return RowMetric::L2;
    default:
      return RowMetric::L1;
  }
}

double rowDistance(std::span<const double> a, std::span<const double> b, RowMetric metric) {
  if (a.size() != b.size()) {
    throw DataError("row lengths differ");
  }
  double acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    switch (metric) {
      case RowMetric::L1:
        acc += d;
        break;
      case RowMetric::L2:
        acc += d * d;
        break;
      case RowMetric::SupNorm:
        acc = std::max(acc, d);
        break;
    }
  }
  return metric == RowMetric::L2 ? std::sqrt(acc) : acc;
}

double fingerprintDistance(const MPFingerprint2D& a, const MPFingerprint2D& b, RowMetric metric) {
  if (a.rows != b.rows || a.cols != b.cols) {
    throw DataError("fingerprint shapes differ: " + std::to_string(a.rows) + "x" + std::to_string(a.cols) + " vs " +
                    std::to_string(b.rows) + "x" + std::to_string(b.cols));
  }
  if (!(a.spec == b.spec)) {
    throw DataError("fingerprints were built with different specs");
  }
  double total = 0.0;
  for (int i = 0; i < a.rows; ++i) {
    total += rowDistance(a.row(i), b.row(i), metric);
  }
  return total;
}

StabilityReport stabilityCheck(const MolecularGraph& gPlus, const MolecularGraph& gMinus,
                               const StabilityConfig& config, double constant, double p) {
  if (!(constant > 0.0)) {
    throw DataError("stability constant must be positive");
  }
  const auto slicesPlus  = vrSliceDiagrams(gPlus, vertexFilterValues(gPlus, config.filter), config.thresholds,
                                           config.kCap);
  const auto slicesMinus = vrSliceDiagrams(gMinus, vertexFilterValues(gMinus, config.filter), config.thresholds,
                                           config.kCap);
  const auto name = config.filter.name();
  const auto fpPlus  = assembleFingerprint(slicesPlus, config.vectorization, config.dim, name, FingerprintVariant::VrSlice);
  const auto fpMinus = assembleFingerprint(slicesMinus, config.vectorization, config.dim, name, FingerprintVariant::VrSlice);

  std::vector<PersistenceDiagram> plus, minus;
  for (const auto& s : slicesPlus.slices) {
    plus.push_back(s[config.dim]);
  }
  for (const auto& s : slicesMinus.slices) {
    minus.push_back(s[config.dim]);
  }

  StabilityReport report;
  report.constant = constant;
  report.left     = fingerprintDistance(fpPlus, fpMinus, config.rowMetric);
  report.right    = slicewiseMatchingDistance(plus, minus, p);
  report.ratio    = report.right > 0.0 ? report.left / report.right : (report.left > 0.0 ? kInfinity : 0.0);
  report.pass     = report.left <= constant * report.right;
  return report;
}

}  // namespace todd
