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

#ifndef TODD_SCREENING_H
#define TODD_SCREENING_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "todd/fingerprint_io.h"
#include "todd/molgraph.h"
#include "todd/mpfingerprint.h"

namespace todd {

struct Embedding {
  std::string         id;
  Label               label;
  std::vector<double> values;

  bool operator==(const Embedding&) const = default;
};

//! Flatten the channels of a multimodal fingerprint in channel order.
Embedding embed(const MultiModalFingerprint& fp, const Label& label);

//! Per-dimension standardization (x - mean) / std with library statistics;
//! zero-variance dimensions map to 0.
void standardize(std::span<Embedding> library);

//! embed() every record, then standardize when `normalize` is set. Throws
//! DataError if embedding dimensions differ across the library.
std::vector<Embedding> embedLibrary(std::span<const FingerprintRecord> records, bool normalize);

enum class EmbeddingMetric { Euclidean, Manhattan };
enum class TemplateAggregation { Min, Mean };

double embeddingDistance(std::span<const double> a, std::span<const double> b, EmbeddingMetric metric);

struct RankedCompound {
  std::string id;
  double      score  = 0.0;  //!< distance to the templates; smaller ranks first
  Label       label;
  bool        active = false;  //!< label is Active for the ranked target

  bool operator==(const RankedCompound&) const = default;
};

struct RankingResult {
  std::string                 target;
  std::vector<RankedCompound> entries;  //!< ascending score, ties broken by id

  std::vector<bool> activeInRankOrder() const;
};

//! Score every pool member by its distance to the templates and sort.
RankingResult rankByTemplates(std::span<const Embedding> templates, std::span<const Embedding> pool,
                              const std::string& target, EmbeddingMetric metric = EmbeddingMetric::Euclidean,
                              TemplateAggregation aggregation = TemplateAggregation::Min);

//! EF_a% = (A / N_a) / (a / 100) with N_a = floor(N * a / 100).
double enrichmentFactor(const std::vector<bool>& activeInRankOrder, double alphaPercent);
double enrichmentFactor(const RankingResult& ranking, double alphaPercent);

//! Probability that a random active scores below a random inactive, ties counted half.
double rocAuc(const RankingResult& ranking);
//! Same, for a strict ranking without ties.
double rocAuc(const std::vector<bool>& activeInRankOrder);

// --- triplet metric learning -------------------------------------------------

double lpNorm(std::span<const double> x, double p);

//! max(0, margin + ||a - pos||_p - ||a - neg||_p)
double tripletMarginLoss(std::span<const double> anchor, std::span<const double> positive,
                         std::span<const double> negative, double margin = 1.0, double p = 2.0);

enum class TripletKind { Hard, SemiHard };

struct Triplet {
  int         anchor   = 0;  //!< indices into the embedding list
  int         positive = 0;
  int         negative = 0;
  TripletKind kind     = TripletKind::Hard;

  bool operator==(const Triplet&) const = default;
};

//! Anchors and positives share a target (active or template); negatives are
//! decoys or compounds of another target. Keeps d(a,n) < d(a,p) as Hard and
//! d(a,p) < d(a,n) < d(a,p) + margin as SemiHard, Euclidean distances. Ordered
//! by (anchor, positive, negative).
std::vector<Triplet> mineTriplets(std::span<const Embedding> embeddings, double margin);

//! Row-major outputDim x inputDim linear map.
struct LinearProjection {
  int                 outputDim = 0;
  int                 inputDim  = 0;
  std::vector<double> weights;

  static LinearProjection identity(int outputDim, int inputDim);
  std::vector<double>     apply(std::span<const double> x) const;
  std::vector<Embedding>  apply(std::span<const Embedding> xs) const;
};

//! Triplet margin loss of the projected triplet; when `gradient` is given it
//! receives dLoss/dW (zero at or beyond the hinge and for vanishing differences).
double projectedTripletLoss(const LinearProjection& w, std::span<const double> anchor,
                            std::span<const double> positive, std::span<const double> negative, double margin,
                            double p, std::vector<double>* gradient = nullptr);

struct LinearMetricConfig {
  double   margin       = 1.0;
  double   normP        = 2.0;
  double   learningRate = 0.01;
  int      epochs       = 100;
  int      outputDim    = 0;  //!< 0 keeps the input dimension
  uint64_t seed         = 0;
};

struct LinearMetricResult {
  LinearProjection projection;
  double           initialLoss = 0.0;  //!< mean loss over the triplets mined at initialization
  double           finalLoss   = 0.0;  //!< same triplet set, returned projection
  int              epochsRun   = 0;
};

//! SGD on the triplet margin loss over a linear map, re-mining each epoch in the
//! projected space. Returns the projection with the lowest evaluation loss seen.
//! Throws DataError when no triplet can be mined initially.
LinearMetricResult trainLinearMetric(std::span<const Embedding> embeddings, const LinearMetricConfig& config);

// --- evaluation --------------------------------------------------------------

struct CrossValidationConfig {
  int                               folds       = 5;
  uint64_t                          seed        = 0;
  EmbeddingMetric                   metric      = EmbeddingMetric::Euclidean;
  TemplateAggregation               aggregation = TemplateAggregation::Min;
  std::vector<double>               efAlphas    = {1.0, 2.0, 5.0, 10.0};
  std::optional<LinearMetricConfig> metricLearning;
};

struct FoldMetrics {
  std::vector<double> ef;   //!< aligned with EvalReport::alphas; NaN where N_a < 1
  double              auc = 0.0;
};

struct EvalReport {
  int                      folds = 0;
  std::vector<double>      alphas;
  std::vector<std::string> targets;
  std::vector<FoldMetrics> perFold;  //!< each value averaged over targets
  std::vector<double>      efMean, efStd;
  double                   aucMean = 0.0, aucStd = 0.0;
  std::vector<std::string> warnings;
};

//! Stratified k-fold evaluation. Per target, actives are split into folds;
//! templates and the other folds' actives act as templates, the held-out actives
//! plus every decoy form the pool. Standard deviations are sample (n - 1).
EvalReport crossValidate(std::span<const Embedding> library, const CrossValidationConfig& config);

//! {"folds", "alphas", "targets", "per_fold": [{"ef": {...}, "auc"}], "mean", "std", "warnings"}
std::string evalReportJson(const EvalReport& report);

//! "id\tscore\tlabel" lines with a header.
std::string rankingTsv(const RankingResult& ranking);

}  // namespace todd

#endif  // TODD_SCREENING_H
