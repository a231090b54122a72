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

#include "todd/vectorize.h"

#include <algorithm>
#include <cmath>
#include <functional>

namespace todd {
namespace {

double tent(const PersistencePair& p, double t) {
  return std::max(0.0, std::min(t - p.birth, static_cast<double>(p.death) - t));
}

bool aliveAt(const PersistencePair& p, double t, int kCap) {
  return p.birth <= t && (p.essential ? t <= kCap : t < p.death);
}

size_t halfGridSize(int kCap) { return static_cast<size_t>(2 * kCap + 1); }
double halfGridPoint(size_t j) { return 0.5 * static_cast<double>(j); }

double normalCdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace

size_t VectorizationSpec::outputLength(int kCap) const {
  switch (kind) {
    case VectorizationKind::BettiCurve:
      return static_cast<size_t>(kCap + 1);
    case VectorizationKind::Landscape:
    case VectorizationKind::Silhouette:
    case VectorizationKind::EntropyCurve:
      return halfGridSize(kCap);
    case VectorizationKind::PersistenceImage:
      return static_cast<size_t>(imageRows) * static_cast<size_t>(imageCols);
  }
  return 0;
}

std::string VectorizationSpec::name() const {
  switch (kind) {
    case VectorizationKind::BettiCurve:
      return "betti";
    case VectorizationKind::Landscape:
      return "landscape";
    case VectorizationKind::Silhouette:
      return "silhouette";
    case VectorizationKind::EntropyCurve:
      return "entropy";
    case VectorizationKind::PersistenceImage:
      return "image";
  }
  return {};
}

VectorizationSpec VectorizationSpec::fromName(std::string_view name) {
  VectorizationSpec spec;
  if (name == "betti") {
    spec.kind = VectorizationKind::BettiCurve;
  } else if (name == "landscape") {
    spec.kind = VectorizationKind::Landscape;
  } else if (name == "silhouette") {
    spec.kind = VectorizationKind::Silhouette;
  } else if (name == "entropy") {
    spec.kind = VectorizationKind::EntropyCurve;
  } else if (name == "image") {
    spec.kind = VectorizationKind::PersistenceImage;
  } else {
    throw DataError("unknown vectorization '" + std::string(name) + "'");
  }
  return spec;
}

SPVector bettiCurve(const PersistenceDiagram& pd) {
  SPVector out(static_cast<size_t>(pd.kCap + 1), 0.0);
  for (int t = 0; t <= pd.kCap; ++t) {
    out[t] = pd.countAlive(t);
  }
  return out;
}

SPVector landscape(const PersistenceDiagram& pd, int level) {
  if (level < 1) {
    throw DataError("landscape level must be >= 1");
  }
  SPVector            out(halfGridSize(pd.kCap), 0.0);
  std::vector<double> values;
  for (size_t j = 0; j < out.size(); ++j) {
    const double t = halfGridPoint(j);
    values.clear();
    for (const auto& p : pd.pairs) {
      if (double v = tent(p, t); v > 0.0) {
        values.push_back(v);
      }
    }
    if (static_cast<int>(values.size()) >= level) {
      std::nth_element(values.begin(), values.begin() + (level - 1), values.end(), std::greater<>());
      out[j] = values[level - 1];
    }
  }
  return out;
}

SPVector silhouette(const PersistenceDiagram& pd, double power) {
  if (power < 0.0) {
    throw DataError("silhouette power must be >= 0");
  }
  SPVector out(halfGridSize(pd.kCap), 0.0);
  double   total = 0.0;
  for (const auto& p : pd.pairs) {
    total += std::pow(static_cast<double>(p.lifespan()), power);
  }
  if (total <= 0.0) {
    return out;
  }
  for (size_t j = 0; j < out.size(); ++j) {
    const double t   = halfGridPoint(j);
    double       sum = 0.0;
    for (const auto& p : pd.pairs) {
      sum += std::pow(static_cast<double>(p.lifespan()), power) * tent(p, t);
    }
    out[j] = sum / total;
  }
  return out;
}

SPVector entropyCurve(const PersistenceDiagram& pd) {
  SPVector out(halfGridSize(pd.kCap), 0.0);
  double   total = 0.0;
  for (const auto& p : pd.pairs) {
    total += p.lifespan();
  }
  if (total <= 0.0) {
    return out;
  }
  for (size_t j = 0; j < out.size(); ++j) {
    const double t = halfGridPoint(j);
    double       h = 0.0;
    for (const auto& p : pd.pairs) {
      if (!aliveAt(p, t, pd.kCap)) {
        continue;
      }
      const double w = p.lifespan() / total;
      if (w > 0.0) {
        h -= w * std::log(w);
      }
    }
    out[j] = h;
  }
  return out;
}

SPVector persistenceImage(const PersistenceDiagram& pd, const VectorizationSpec& spec) {
  if (spec.imageRows < 1 || spec.imageCols < 1) {
    throw DataError("persistence image resolution must be positive");
  }
  if (!(spec.imageSigma > 0.0)) {
    throw DataError("persistence image sigma must be > 0");
  }
  if (pd.kCap < 1) {
    throw DataError("persistence image needs K_cap >= 1");
  }
  const double lo = spec.imageLow.value_or(0.0);
  const double hi = spec.imageHigh.value_or(static_cast<double>(pd.kCap));
  if (!(hi > lo)) {
    throw DataError("persistence image range must be nonempty");
  }
  const int    rows  = spec.imageRows;
  const int    cols  = spec.imageCols;
  const double sigma = spec.imageSigma;
  SPVector     out(static_cast<size_t>(rows) * cols, 0.0);

  // Per-axis Gaussian mass of each pixel edge interval.
  auto axisMass = [&](double center, int bins, std::vector<double>& mass) {
    mass.assign(bins, 0.0);
    const double width = (hi - lo) / bins;
    double       prev  = normalCdf((lo - center) / sigma);
    for (int i = 0; i < bins; ++i) {
      const double next = normalCdf((lo + (i + 1) * width - center) / sigma);
      mass[i]           = next - prev;
      prev              = next;
    }
  };
  std::vector<double> birthMass, deathMass;
  for (const auto& p : pd.pairs) {
    const double weight = static_cast<double>(p.lifespan()) / pd.kCap;
    if (weight <= 0.0) {
      continue;
    }
    axisMass(p.birth, rows, birthMass);
    axisMass(p.death, cols, deathMass);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        out[static_cast<size_t>(r) * cols + c] += weight * birthMass[r] * deathMass[c];
      }
    }
  }
  return out;
}

SPVector vectorize(const PersistenceDiagram& pd, const VectorizationSpec& spec) {
  switch (spec.kind) {
    case VectorizationKind::BettiCurve:
      return bettiCurve(pd);
    case VectorizationKind::Landscape:
      return landscape(pd, spec.landscapeLevel);
    case VectorizationKind::Silhouette:
      return silhouette(pd, spec.silhouettePower);
    case VectorizationKind::EntropyCurve:
      return entropyCurve(pd);
    case VectorizationKind::PersistenceImage:
      return persistenceImage(pd, spec);
  }
  return {};
}

}  // namespace todd
