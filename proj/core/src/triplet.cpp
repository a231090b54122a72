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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "todd/error.h"
#include "todd/screening.h"

namespace todd {
namespace {

//! Gradient of ||y||_p with respect to y; zero when y vanishes.
std::vector<double> normGradient(const std::vector<double>& y, double p) {
  std::vector<double> g(y.size(), 0.0);
  const double        norm = lpNorm(y, p);
  if (norm == 0.0) {
    return g;
  }
  const double denom = std::pow(norm, p - 1.0);
  for (size_t k = 0; k < y.size(); ++k) {
    const double s = y[k] > 0.0 ? 1.0 : (y[k] < 0.0 ? -1.0 : 0.0);
    g[k]           = s * std::pow(std::abs(y[k]), p - 1.0) / denom;
  }
  return g;
}

std::vector<double> difference(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw DataError("embedding dimension mismatch");
  }
  std::vector<double> d(a.size());
  for (size_t k = 0; k < a.size(); ++k) {
    d[k] = a[k] - b[k];
  }
  return d;
}

}  // namespace

double lpNorm(std::span<const double> x, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : x) {
      m = std::max(m, std::abs(v));
    }
    return m;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (double v : x) {
      s += v * v;
    }
    return std::sqrt(s);
  }
  double s = 0.0;
  for (double v : x) {
    s += std::pow(std::abs(v), p);
  }
  return std::pow(s, 1.0 / p);
}

double tripletMarginLoss(std::span<const double> anchor, std::span<const double> positive,
                         std::span<const double> negative, double margin, double p) {
  const double dp = lpNorm(difference(anchor, positive), p);
  const double dn = lpNorm(difference(anchor, negative), p);
  return std::max(0.0, margin + dp - dn);
}

std::vector<Triplet> mineTriplets(std::span<const Embedding> embeddings, double margin) {
  const int                        n = static_cast<int>(embeddings.size());
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      dist[i][j] = dist[j][i] = embeddingDistance(embeddings[i].values, embeddings[j].values,
                                                  EmbeddingMetric::Euclidean);
    }
  }
  std::vector<Triplet> out;
  for (int a = 0; a < n; ++a) {
    const Label& la = embeddings[a].label;
    if (!la.bindsTarget()) {
      continue;
    }
    for (int p = 0; p < n; ++p) {
      const Label& lp = embeddings[p].label;
      if (p == a || !lp.bindsTarget() || lp.target != la.target) {
        continue;
      }
      const double dp = dist[a][p];
      for (int q = 0; q < n; ++q) {
        const Label& lq       = embeddings[q].label;
        const bool   negative = lq.kind == Label::Kind::Decoy || (lq.bindsTarget() && lq.target != la.target);
        if (!negative) {
          continue;
        }
        const double dn = dist[a][q];
        if (dn < dp) {
          out.push_back({a, p, q, TripletKind::Hard});
        } else if (dp < dn && dn < dp + margin) {
          out.push_back({a, p, q, TripletKind::SemiHard});
        }
      }
    }
  }
  return out;
}

LinearProjection LinearProjection::identity(int outputDim, int inputDim) {
  LinearProjection w{outputDim, inputDim, std::vector<double>(static_cast<size_t>(outputDim) * inputDim, 0.0)};
  for (int k = 0; k < std::min(outputDim, inputDim); ++k) {
    w.weights[static_cast<size_t>(k) * inputDim + k] = 1.0;
  }
  return w;
}

std::vector<double> LinearProjection::apply(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != inputDim) {
    throw DataError("projection expects dimension " + std::to_string(inputDim) + ", got " +
                    std::to_string(x.size()));
  }
  std::vector<double> y(outputDim, 0.0);
  for (int k = 0; k < outputDim; ++k) {
    const double* row = weights.data() + static_cast<size_t>(k) * inputDim;
    double        s   = 0.0;
    for (int l = 0; l < inputDim; ++l) {
      s += row[l] * x[l];
    }
    y[k] = s;
  }
  return y;
}

std::vector<Embedding> LinearProjection::apply(std::span<const Embedding> xs) const {
  std::vector<Embedding> out;
  out.reserve(xs.size());
  for (const Embedding& e : xs) {
    out.push_back({e.id, e.label, apply(e.values)});
  }
  return out;
}

double projectedTripletLoss(const LinearProjection& w, std::span<const double> anchor,
                            std::span<const double> positive, std::span<const double> negative, double margin,
                            double p, std::vector<double>* gradient) {
  const auto   up   = difference(anchor, positive);
  const auto   un   = difference(anchor, negative);
  const auto   yp   = w.apply(up);
  const auto   yn   = w.apply(un);
  const double loss = margin + lpNorm(yp, p) - lpNorm(yn, p);
  if (gradient) {
    gradient->assign(w.weights.size(), 0.0);
    if (loss > 0.0) {
      const auto gp = normGradient(yp, p);
      const auto gn = normGradient(yn, p);
      for (int k = 0; k < w.outputDim; ++k) {
        double* row = gradient->data() + static_cast<size_t>(k) * w.inputDim;
        for (int l = 0; l < w.inputDim; ++l) {
          row[l] = gp[k] * up[l] - gn[k] * un[l];
        }
      }
    }
  }
  return std::max(0.0, loss);
}

LinearMetricResult trainLinearMetric(std::span<const Embedding> embeddings, const LinearMetricConfig& config) {
  if (embeddings.empty()) {
    throw DataError("nothing to train: empty embedding set");
  }
  const int inputDim  = static_cast<int>(embeddings.front().values.size());
  const int outputDim = config.outputDim > 0 ? config.outputDim : inputDim;

  LinearMetricResult result;
  result.projection = LinearProjection::identity(outputDim, inputDim);

  const std::vector<Triplet> evalSet = mineTriplets(result.projection.apply(embeddings), config.margin);
  if (evalSet.empty()) {
    throw DataError("nothing to train: no triplet satisfies the sampling conditions");
  }
  auto meanLoss = [&](const LinearProjection& w) {
    double s = 0.0;
    for (const Triplet& t : evalSet) {
      s += projectedTripletLoss(w, embeddings[t.anchor].values, embeddings[t.positive].values,
                                embeddings[t.negative].values, config.margin, config.normP);
    }
    return s / static_cast<double>(evalSet.size());
  };
  result.initialLoss = meanLoss(result.projection);
  result.finalLoss   = result.initialLoss;

  LinearProjection    w = result.projection;
  std::mt19937_64     rng(config.seed);
  std::vector<double> grad;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    std::vector<Triplet> mined = mineTriplets(w.apply(embeddings), config.margin);
    if (mined.empty()) {
      break;
    }
    std::shuffle(mined.begin(), mined.end(), rng);
    for (const Triplet& t : mined) {
      projectedTripletLoss(w, embeddings[t.anchor].values, embeddings[t.positive].values,
                           embeddings[t.negative].values, config.margin, config.normP, &grad);
      for (size_t k = 0; k < grad.size(); ++k) {
        w.weights[k] -= config.learningRate * grad[k];
      }
    }
    ++result.epochsRun;
    const double loss = meanLoss(w);
    if (loss < result.finalLoss) {
      result.finalLoss  = loss;
      result.projection = w;
    }
  }
  return result;
}

}  // namespace todd
