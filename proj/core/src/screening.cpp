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

#include "todd/screening.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include <json.hpp>

#include "todd/error.h"

namespace todd {
namespace {

double mean(const std::vector<double>& xs) {
  if (xs.empty()) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sampleStd(const std::vector<double>& xs) {
  if (xs.size() < 2) {
    return 0.0;
  }
  const double m  = mean(xs);
  double       ss = 0.0;
  for (double x : xs) {
    ss += (x - m) * (x - m);
  }
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

//! Mean over the finite entries only; NaN when none.
double finiteMean(const std::vector<double>& xs) {
  std::vector<double> kept;
  for (double x : xs) {
    if (std::isfinite(x)) {
      kept.push_back(x);
    }
  }
  return mean(kept);
}

std::vector<double> finiteOnly(const std::vector<double>& xs) {
  std::vector<double> kept;
  std::copy_if(xs.begin(), xs.end(), std::back_inserter(kept), [](double x) { return std::isfinite(x); });
  return kept;
}

}  // namespace

Embedding embed(const MultiModalFingerprint& fp, const Label& label) {
  Embedding out;
  out.id    = fp.compoundId;
  out.label = label;
  for (const Channel& ch : fp.channels) {
    out.values.insert(out.values.end(), ch.data.begin(), ch.data.end());
  }
  for (double v : out.values) {
    if (!std::isfinite(v)) {
      throw DataError("compound '" + fp.compoundId + "': non-finite fingerprint entry");
    }
  }
  return out;
}

void standardize(std::span<Embedding> library) {
  if (library.empty()) {
    return;
  }
  const size_t dim = library.front().values.size();
  const double n   = static_cast<double>(library.size());
  for (size_t k = 0; k < dim; ++k) {
    double m = 0.0;
    for (const Embedding& e : library) {
      m += e.values[k];
    }
    m /= n;
    double var = 0.0;
    for (const Embedding& e : library) {
      var += (e.values[k] - m) * (e.values[k] - m);
    }
    const double sd = std::sqrt(var / n);
    for (Embedding& e : library) {
      e.values[k] = sd > 0.0 ? (e.values[k] - m) / sd : 0.0;
    }
  }
}

std::vector<Embedding> embedLibrary(std::span<const FingerprintRecord> records, bool normalize) {
  std::vector<Embedding> out;
  out.reserve(records.size());
  for (const FingerprintRecord& r : records) {
    out.push_back(embed(r.fingerprint, r.label));
    if (out.back().values.size() != out.front().values.size()) {
      throw DataError("compound '" + out.back().id + "': embedding dimension " +
                      std::to_string(out.back().values.size()) + " differs from library dimension " +
                      std::to_string(out.front().values.size()));
    }
  }
  if (normalize) {
    standardize(out);
  }
  return out;
}

double embeddingDistance(std::span<const double> a, std::span<const double> b, EmbeddingMetric metric) {
  if (a.size() != b.size()) {
    throw DataError("embedding dimension mismatch");
  }
  double acc = 0.0;
  for (size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    acc += metric == EmbeddingMetric::Euclidean ? d * d : std::abs(d);
  }
  return metric == EmbeddingMetric::Euclidean ? std::sqrt(acc) : acc;
}

std::vector<bool> RankingResult::activeInRankOrder() const {
  std::vector<bool> out;
  out.reserve(entries.size());
  for (const RankedCompound& e : entries) {
    out.push_back(e.active);
  }
  return out;
}

RankingResult rankByTemplates(std::span<const Embedding> templates, std::span<const Embedding> pool,
                              const std::string& target, EmbeddingMetric metric, TemplateAggregation aggregation) {
  if (templates.empty()) {
    throw DataError("ranking needs at least one template");
  }
  if (pool.empty()) {
    throw DataError("ranking pool is empty");
  }
  RankingResult out;
  out.target = target;
  out.entries.reserve(pool.size());
  for (const Embedding& q : pool) {
    double score = aggregation == TemplateAggregation::Min ? std::numeric_limits<double>::infinity() : 0.0;
    for (const Embedding& t : templates) {
      const double d = embeddingDistance(q.values, t.values, metric);
      score          = aggregation == TemplateAggregation::Min ? std::min(score, d) : score + d;
    }
    if (aggregation == TemplateAggregation::Mean) {
      score /= static_cast<double>(templates.size());
    }
    const bool active = q.label.kind == Label::Kind::Active && q.label.target == target;
    out.entries.push_back({q.id, score, q.label, active});
  }
  std::sort(out.entries.begin(), out.entries.end(), [](const RankedCompound& x, const RankedCompound& y) {
    return x.score != y.score ? x.score < y.score : x.id < y.id;
  });
  return out;
}

double enrichmentFactor(const std::vector<bool>& activeInRankOrder, double alphaPercent) {
  if (!(alphaPercent > 0.0 && alphaPercent <= 100.0)) {
    throw DataError("EF percentage must lie in (0, 100]");
  }
  const size_t n = activeInRankOrder.size();
  const auto   nAlpha =
      static_cast<size_t>(std::floor(static_cast<double>(n) * alphaPercent / 100.0 + 1e-9));
  if (nAlpha < 1) {
    throw DataError("undefined EF: top " + std::to_string(alphaPercent) + "% of " + std::to_string(n) +
                    " compounds is empty");
  }
  if (std::find(activeInRankOrder.begin(), activeInRankOrder.end(), true) == activeInRankOrder.end()) {
    throw DataError("undefined EF: no actives in pool");
  }
  const auto found = std::count(activeInRankOrder.begin(), activeInRankOrder.begin() + nAlpha, true);
  return (static_cast<double>(found) / static_cast<double>(nAlpha)) / (alphaPercent / 100.0);
}

double enrichmentFactor(const RankingResult& ranking, double alphaPercent) {
  return enrichmentFactor(ranking.activeInRankOrder(), alphaPercent);
}

double rocAuc(const RankingResult& ranking) {
  const auto& es = ranking.entries;
  // Mann-Whitney with average ranks over tied scores (entries are score-sorted).
  double     inactiveRankSum = 0.0;
  size_t     nActive = 0, nInactive = 0;
  size_t     i = 0;
  while (i < es.size()) {
    size_t j = i;
    while (j < es.size() && es[j].score == es[i].score) {
      ++j;
    }
    const double avgRank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (size_t k = i; k < j; ++k) {
      if (es[k].active) {
        ++nActive;
      } else {
        ++nInactive;
        inactiveRankSum += avgRank;
      }
    }
    i = j;
  }
  if (nActive == 0 || nInactive == 0) {
    throw DataError("AUC undefined: pool has " + std::to_string(nActive) + " actives and " +
                    std::to_string(nInactive) + " inactives");
  }
  const double ni = static_cast<double>(nInactive);
  const double u  = inactiveRankSum - ni * (ni + 1.0) / 2.0;
  return u / (static_cast<double>(nActive) * ni);
}

double rocAuc(const std::vector<bool>& activeInRankOrder) {
  RankingResult r;
  for (size_t i = 0; i < activeInRankOrder.size(); ++i) {
    r.entries.push_back({std::to_string(i), static_cast<double>(i), Label{}, activeInRankOrder[i]});
  }
  return rocAuc(r);
}

EvalReport crossValidate(std::span<const Embedding> library, const CrossValidationConfig& config) {
  if (config.folds < 2) {
    throw DataError("cross-validation needs at least 2 folds");
  }
  std::map<std::string, std::vector<int>> actives, templates;
  std::vector<int>                        decoys;
  for (int i = 0; i < static_cast<int>(library.size()); ++i) {
    const Label& l = library[i].label;
    if (l.kind == Label::Kind::Active) {
      actives[l.target].push_back(i);
    } else if (l.kind == Label::Kind::Template) {
      templates[l.target].push_back(i);
    } else if (l.kind == Label::Kind::Decoy) {
      decoys.push_back(i);
    }
  }
  EvalReport report;
  report.alphas = config.efAlphas;
  std::set<std::string> targetSet;
  for (const auto& [t, _] : actives) {
    targetSet.insert(t);
  }
  for (const auto& [t, _] : templates) {
    targetSet.insert(t);
  }
  if (targetSet.empty()) {
    throw DataError("library has no labeled targets");
  }
  report.targets.assign(targetSet.begin(), targetSet.end());

  int folds = config.folds;
  for (const std::string& t : report.targets) {
    const size_t na = actives[t].size();
    if (na + templates[t].size() < 2 || na == 0) {
      throw DataError("target '" + t + "' has a single compound; cross-validation needs at least one active and "
                      "one more compound of the same class");
    }
    if (static_cast<int>(na) < folds) {
      folds = std::max(2, static_cast<int>(na));
    }
  }
  for (const std::string& t : report.targets) {
    if (static_cast<int>(actives[t].size()) < folds || (actives[t].size() == 1 && templates[t].empty())) {
      throw DataError("target '" + t + "' has too few actives for cross-validation");
    }
  }
  if (folds != config.folds) {
    report.warnings.push_back("folds reduced from " + std::to_string(config.folds) + " to " +
                              std::to_string(folds) + ": smallest target has too few actives");
  }
  report.folds = folds;

  // Stratified assignment: shuffle each target's actives, deal round-robin.
  std::mt19937_64       rng(config.seed);
  std::vector<int>      foldOf(library.size(), -1);
  for (const std::string& t : report.targets) {
    std::vector<int> idx = actives[t];
    std::shuffle(idx.begin(), idx.end(), rng);
    for (size_t k = 0; k < idx.size(); ++k) {
      foldOf[idx[k]] = static_cast<int>(k % folds);
    }
  }
  {
    std::vector<int> idx = decoys;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (size_t k = 0; k < idx.size(); ++k) {
      foldOf[idx[k]] = static_cast<int>(k % folds);
    }
  }

  for (int f = 0; f < folds; ++f) {
    std::vector<Embedding> space(library.begin(), library.end());
    if (config.metricLearning) {
      std::vector<Embedding> train;
      for (size_t i = 0; i < library.size(); ++i) {
        const Label& l = library[i].label;
        if (l.kind == Label::Kind::Template || (l.kind != Label::Kind::Unlabeled && foldOf[i] != f)) {
          train.push_back(library[i]);
        }
      }
      LinearMetricConfig cfg = *config.metricLearning;
      cfg.seed               = config.seed + static_cast<uint64_t>(f);
      try {
        space = trainLinearMetric(train, cfg).projection.apply(library);
      } catch (const DataError&) {
        report.warnings.push_back("fold " + std::to_string(f) + ": no minable triplets, identity metric kept");
      }
    }

    std::vector<std::vector<double>> efPerTarget(config.efAlphas.size());
    std::vector<double>              aucPerTarget;
    for (const std::string& t : report.targets) {
      std::vector<Embedding> tmpl, pool;
      for (int i : templates[t]) {
        tmpl.push_back(space[i]);
      }
      for (int i : actives[t]) {
        (foldOf[i] == f ? pool : tmpl).push_back(space[i]);
      }
      for (int i : decoys) {
        pool.push_back(space[i]);
      }
      const RankingResult ranking = rankByTemplates(tmpl, pool, t, config.metric, config.aggregation);
      const auto          hits    = ranking.activeInRankOrder();
      for (size_t a = 0; a < config.efAlphas.size(); ++a) {
        const double alpha = config.efAlphas[a];
        const double nA    = std::floor(static_cast<double>(hits.size()) * alpha / 100.0 + 1e-9);
        efPerTarget[a].push_back(nA >= 1.0 ? enrichmentFactor(hits, alpha)
                                           : std::numeric_limits<double>::quiet_NaN());
      }
      aucPerTarget.push_back(decoys.empty() ? std::numeric_limits<double>::quiet_NaN() : rocAuc(ranking));
    }
    FoldMetrics fm;
    for (const auto& v : efPerTarget) {
      fm.ef.push_back(finiteMean(v));
    }
    fm.auc = finiteMean(aucPerTarget);
    report.perFold.push_back(std::move(fm));
  }

  for (size_t a = 0; a < config.efAlphas.size(); ++a) {
    std::vector<double> col;
    for (const FoldMetrics& fm : report.perFold) {
      col.push_back(fm.ef[a]);
    }
    const auto kept = finiteOnly(col);
    report.efMean.push_back(mean(kept));
    report.efStd.push_back(kept.empty() ? std::numeric_limits<double>::quiet_NaN() : sampleStd(kept));
  }
  std::vector<double> aucs;
  for (const FoldMetrics& fm : report.perFold) {
    aucs.push_back(fm.auc);
  }
  const auto keptAuc = finiteOnly(aucs);
  report.aucMean     = mean(keptAuc);
  report.aucStd      = keptAuc.empty() ? std::numeric_limits<double>::quiet_NaN() : sampleStd(keptAuc);
  return report;
}

namespace {

std::string alphaKey(double alpha) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", alpha);
  return buf;
}

nlohmann::json efObject(const std::vector<double>& alphas, const std::vector<double>& values) {
  nlohmann::json j = nlohmann::json::object();
  for (size_t a = 0; a < alphas.size(); ++a) {
    j[alphaKey(alphas[a])] = std::isfinite(values[a]) ? nlohmann::json(values[a]) : nlohmann::json(nullptr);
  }
  return j;
}

nlohmann::json finiteOrNull(double x) {
  return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}

}  // namespace

std::string evalReportJson(const EvalReport& report) {
  nlohmann::json j;
  j["folds"]   = report.folds;
  j["alphas"]  = report.alphas;
  j["targets"] = report.targets;
  j["per_fold"] = nlohmann::json::array();
  for (const FoldMetrics& fm : report.perFold) {
    j["per_fold"].push_back({{"ef", efObject(report.alphas, fm.ef)}, {"auc", finiteOrNull(fm.auc)}});
  }
  j["mean"]     = {{"ef", efObject(report.alphas, report.efMean)}, {"auc", finiteOrNull(report.aucMean)}};
  j["std"]      = {{"ef", efObject(report.alphas, report.efStd)}, {"auc", finiteOrNull(report.aucStd)}};
  j["warnings"] = report.warnings;
  return j.dump(2) + "\n";
}

std::string rankingTsv(const RankingResult& ranking) {
  std::string out = "id\tscore\tlabel\n";
  char        buf[64];
  for (const RankedCompound& e : ranking.entries) {
    std::snprintf(buf, sizeof buf, "%.17g", e.score);
    out += e.id + "\t" + buf + "\t" + e.label.toString() + "\n";
  }
  return out;
}

}  // namespace todd
