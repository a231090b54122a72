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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <numeric>
#include <random>

#include "oracles.h"
#include "todd/error.h"
#include "todd/screening.h"

namespace {

using namespace todd;

Embedding emb(std::string id, Label label, std::vector<double> values) {
  return Embedding{std::move(id), std::move(label), std::move(values)};
}

std::vector<std::string> idsOf(const RankingResult& r) {
  std::vector<std::string> out;
  for (const auto& e : r.entries) {
    out.push_back(e.id);
  }
  return out;
}

MultiModalFingerprint toyFingerprint(int channels) {
  MultiModalFingerprint fp{"c", 2, 3, {}};
  for (int c = 0; c < channels; ++c) {
    Channel ch{"mass:H" + std::to_string(c), {}};
    for (int k = 0; k < 6; ++k) {
      ch.data.push_back(10.0 * c + k);
    }
    fp.channels.push_back(ch);
  }
  return fp;
}

TEST(Embedding, Layout) {
  EXPECT_EQ(embed(toyFingerprint(1), Label::decoy()).values, (std::vector<double>{0, 1, 2, 3, 4, 5}));
  const auto e = embed(toyFingerprint(3), Label::decoy());
  ASSERT_EQ(e.values.size(), 18u);
  for (int c = 0; c < 3; ++c) {
    for (int k = 0; k < 6; ++k) {
      EXPECT_EQ(e.values[c * 6 + k], 10.0 * c + k);
    }
  }
  auto bad                     = toyFingerprint(1);
  bad.channels[0].data[2] = std::nan("");
  EXPECT_THROW(embed(bad, Label::decoy()), DataError);
}

TEST(Embedding, Standardize) {
  std::vector<Embedding> same(4, emb("x", Label::decoy(), {3, 3, 7}));
  standardize(same);
  for (const auto& e : same) {
    EXPECT_EQ(e.values, (std::vector<double>{0, 0, 0}));
  }
  std::vector<Embedding> lib{emb("a", Label::decoy(), {1, 5}), emb("b", Label::decoy(), {3, 5})};
  standardize(lib);
  EXPECT_DOUBLE_EQ(lib[0].values[0], -1.0);
  EXPECT_DOUBLE_EQ(lib[1].values[0], 1.0);
  EXPECT_EQ(lib[0].values[1], 0.0);

  std::vector<FingerprintRecord> records{{toyFingerprint(1), Label::decoy()}, {toyFingerprint(2), Label::decoy()}};
  EXPECT_THROW(embedLibrary(records, false), DataError);
}

TEST(Ranking, Examples) {
  const std::vector<Embedding> tmpl{emb("t", Label::templ("T"), {0})};
  const std::vector<Embedding> pool{emb("a", Label::active("T"), {1}), emb("b", Label::decoy(), {3}),
                                    emb("c", Label::decoy(), {2}), emb("d", Label::active("T"), {0})};
  const auto r = rankByTemplates(tmpl, pool, "T");
  EXPECT_EQ(idsOf(r), (std::vector<std::string>{"d", "a", "c", "b"}));
  EXPECT_EQ(r.entries[1].score, 1.0);
  EXPECT_EQ(r.activeInRankOrder(), (std::vector<bool>{true, true, false, false}));

  const std::vector<Embedding> two{emb("t1", Label::templ("T"), {0, 0}), emb("t2", Label::templ("T"), {10, 0})};
  const std::vector<Embedding> near{emb("p", Label::decoy(), {9, 0})};
  EXPECT_DOUBLE_EQ(rankByTemplates(two, near, "T").entries[0].score, 1.0);
  EXPECT_DOUBLE_EQ(rankByTemplates(two, near, "T", EmbeddingMetric::Euclidean, TemplateAggregation::Mean)
                       .entries[0]
                       .score,
                   5.0);
  EXPECT_DOUBLE_EQ(embeddingDistance(std::vector<double>{0, 0}, std::vector<double>{3, 4}, EmbeddingMetric::Manhattan),
                   7.0);

  EXPECT_THROW(rankByTemplates({}, pool, "T"), DataError);
  EXPECT_THROW(rankByTemplates(tmpl, {}, "T"), DataError);
  // Actives of another target count as inactive.
  const std::vector<Embedding> other{emb("o", Label::active("U"), {0})};
  EXPECT_FALSE(rankByTemplates(tmpl, other, "T").entries[0].active);
}

TEST(Ranking, ScaleInvariant) {
  std::mt19937_64                  rng(30);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Embedding> tmpl, pool;
    for (int i = 0; i < 3; ++i) {
      tmpl.push_back(emb("t" + std::to_string(i), Label::templ("T"), {normal(rng), normal(rng), normal(rng)}));
    }
    for (int i = 0; i < 30; ++i) {
      pool.push_back(emb("p" + std::to_string(i), Label::decoy(), {normal(rng), normal(rng), normal(rng)}));
    }
    const auto base = idsOf(rankByTemplates(tmpl, pool, "T"));
    for (auto* set : {&tmpl, &pool}) {
      for (auto& e : *set) {
        for (double& v : e.values) {
          v *= 3.7;
        }
      }
    }
    EXPECT_EQ(idsOf(rankByTemplates(tmpl, pool, "T")), base);
  }
}

TEST(EnrichmentFactor, Examples) {
  std::vector<bool> ranking(200, false);
  for (int i : {0, 3, 6, 9}) {
    ranking[i] = true;
  }
  EXPECT_DOUBLE_EQ(enrichmentFactor(ranking, 5.0), 8.0);
  for (double alpha : {1.0, 2.0, 5.0, 10.0}) {
    std::vector<bool> perfect(200, false);
    std::fill(perfect.begin(), perfect.begin() + 20, true);
    EXPECT_DOUBLE_EQ(enrichmentFactor(perfect, alpha), 100.0 / alpha);
  }
  EXPECT_THROW(enrichmentFactor(std::vector<bool>(200, false), 5.0), DataError);
  EXPECT_THROW(enrichmentFactor(std::vector<bool>(50, true), 1.0), DataError);  // N_a = 0
  EXPECT_THROW(enrichmentFactor(ranking, 0.0), DataError);
  EXPECT_THROW(enrichmentFactor(ranking, 101.0), DataError);
}

TEST(EnrichmentFactor, RandomRankingMeanAndBounds) {
  // The formula does not normalize by the active fraction, so a uniform ranking
  // averages 1 exactly when actives make up alpha percent of the pool.
  std::mt19937_64 rng(31);
  for (double alpha : {5.0, 10.0}) {
    std::vector<bool> ranking(200, false);
    std::fill(ranking.begin(), ranking.begin() + static_cast<int>(2 * alpha), true);
    double sum = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      std::shuffle(ranking.begin(), ranking.end(), rng);
      const double ef = enrichmentFactor(ranking, alpha);
      EXPECT_GE(ef, 0.0);
      EXPECT_LE(ef, 100.0 / alpha);
      sum += ef;
    }
    EXPECT_NEAR(sum / 1000.0, 1.0, 0.2);
  }
  for (int trial = 0; trial < 500; ++trial) {
    const int         n = 1 + static_cast<int>(rng() % 300);
    std::vector<bool> r(n);
    for (int i = 0; i < n; ++i) {
      r[i] = rng() % 3 == 0;
    }
    r[rng() % n] = true;
    for (double alpha : {1.0, 2.0, 5.0, 10.0, 50.0, 100.0}) {
      if (std::floor(n * alpha / 100.0 + 1e-9) < 1) {
        continue;
      }
      const double ef = enrichmentFactor(r, alpha);
      EXPECT_GE(ef, 0.0);
      EXPECT_LE(ef, 100.0 / alpha + 1e-12);
    }
  }
}

RankingResult rankingFromScores(const std::vector<double>& scores, const std::vector<bool>& active) {
  std::vector<size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return scores[a] < scores[b]; });
  RankingResult r;
  r.target = "T";
  for (size_t k : order) {
    r.entries.push_back({"c" + std::to_string(k), scores[k], Label::decoy(), active[k]});
  }
  return r;
}

TEST(Auc, Examples) {
  EXPECT_DOUBLE_EQ(rocAuc(std::vector<bool>{true, true, false, false}), 1.0);
  EXPECT_DOUBLE_EQ(rocAuc(std::vector<bool>{false, false, true, true}), 0.0);
  EXPECT_DOUBLE_EQ(rocAuc(std::vector<bool>{false, true, false}), 0.5);
  EXPECT_THROW(rocAuc(std::vector<bool>{true, true}), DataError);
  EXPECT_THROW(rocAuc(std::vector<bool>{false}), DataError);
  // Tied scores count one half.
  EXPECT_DOUBLE_EQ(rocAuc(rankingFromScores({1, 1}, {true, false})), 0.5);
}

TEST(Auc, TiesMatchPairCountAndMonotoneInvariance) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const int           n = 2 + static_cast<int>(rng() % 40);
    std::vector<double> scores(n);
    std::vector<bool>   active(n);
    for (int i = 0; i < n; ++i) {
      scores[i] = static_cast<double>(rng() % 6);
      active[i] = rng() % 2 == 0;
    }
    active[0] = true;
    active[1] = false;
    const auto   r   = rankingFromScores(scores, active);
    const double auc = rocAuc(r);
    EXPECT_NEAR(auc, oracle::pairCountAuc(scores, active), 1e-12);
    EXPECT_GE(auc, 0.0);
    EXPECT_LE(auc, 1.0);

    std::vector<double> transformed(n);
    for (int i = 0; i < n; ++i) {
      transformed[i] = std::exp(0.5 * scores[i]) - 4.0;
    }
    const auto t = rankingFromScores(transformed, active);
    EXPECT_DOUBLE_EQ(rocAuc(t), auc);
    for (double alpha : {10.0, 50.0}) {
      if (std::floor(n * alpha / 100.0 + 1e-9) >= 1) {
        EXPECT_DOUBLE_EQ(enrichmentFactor(t, alpha), enrichmentFactor(r, alpha));
      }
    }
  }
}

TEST(TripletLoss, Examples) {
  const std::vector<double> a{0, 0}, pos{1, 0}, neg{0, 2};
  EXPECT_DOUBLE_EQ(tripletMarginLoss(a, a, a), 1.0);
  EXPECT_DOUBLE_EQ(tripletMarginLoss(a, a, neg), 0.0);
  EXPECT_DOUBLE_EQ(tripletMarginLoss(a, pos, neg), 0.0);
  EXPECT_DOUBLE_EQ(tripletMarginLoss(a, pos, neg, 2.0), 1.0);
  EXPECT_DOUBLE_EQ(tripletMarginLoss(a, neg, pos, 1.0, 1.0), 2.0);
  EXPECT_DOUBLE_EQ(lpNorm(std::vector<double>{3, -4}, 2.0), 5.0);
  EXPECT_DOUBLE_EQ(lpNorm(std::vector<double>{3, -4}, 1.0), 7.0);
  EXPECT_DOUBLE_EQ(lpNorm(std::vector<double>{3, -4}, INFINITY), 4.0);
}

TEST(TripletLoss, NonNegativeAndZeroPastMargin) {
  std::mt19937_64                  rng(33);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> a(4), p(4), n(4);
    for (int k = 0; k < 4; ++k) {
      a[k] = normal(rng);
      p[k] = normal(rng);
      n[k] = normal(rng);
    }
    const double margin = 0.1 + (rng() % 20) / 10.0;
    const double loss   = tripletMarginLoss(a, p, n, margin);
    EXPECT_GE(loss, 0.0);
    std::vector<double> da(4), dn(4);
    for (int k = 0; k < 4; ++k) {
      da[k] = a[k] - p[k];
      dn[k] = a[k] - n[k];
    }
    if (lpNorm(dn, 2.0) >= lpNorm(da, 2.0) + margin) {
      EXPECT_EQ(loss, 0.0);
    }
  }
}

std::vector<Triplet> withAnchor(const std::vector<Triplet>& ts, int anchor) {
  std::vector<Triplet> out;
  std::copy_if(ts.begin(), ts.end(), std::back_inserter(out), [&](const Triplet& t) { return t.anchor == anchor; });
  return out;
}

TEST(Mining, OneDimensionalExamples) {
  auto lib = [](double neg) {
    return std::vector<Embedding>{emb("a", Label::active("T"), {0}), emb("p", Label::active("T"), {0.5}),
                                  emb("n", Label::decoy(), {neg})};
  };
  EXPECT_EQ(withAnchor(mineTriplets(lib(0.3), 1.0), 0), (std::vector<Triplet>{{0, 1, 2, TripletKind::Hard}}));
  EXPECT_EQ(withAnchor(mineTriplets(lib(1.2), 1.0), 0), (std::vector<Triplet>{{0, 1, 2, TripletKind::SemiHard}}));
  EXPECT_TRUE(withAnchor(mineTriplets(lib(2.0), 1.0), 0).empty());
  // Decoys never anchor; unlabeled compounds never take part.
  auto unl = lib(0.3);
  unl[2].label = Label{};
  EXPECT_TRUE(mineTriplets(unl, 1.0).empty());
}

TEST(Mining, MatchesBruteForce) {
  std::mt19937_64                        rng(34);
  std::uniform_real_distribution<double> unit(0.0, 3.0);
  const Label labels[] = {Label::active("A"), Label::templ("A"), Label::active("B"), Label::decoy(), Label{}};
  for (int trial = 0; trial < 200; ++trial) {
    const int              n = 2 + static_cast<int>(rng() % 19);
    std::vector<Embedding> xs;
    for (int i = 0; i < n; ++i) {
      // Quantized coordinates make boundary equalities common.
      xs.push_back(emb(std::to_string(i), labels[rng() % 5],
                       {std::round(unit(rng) * 4) / 4, std::round(unit(rng) * 4) / 4}));
    }
    const double margin = 0.25 * static_cast<double>(1 + rng() % 6);
    std::vector<oracle::BruteTriplet> got;
    for (const auto& t : mineTriplets(xs, margin)) {
      got.push_back({t.anchor, t.positive, t.negative, t.kind == TripletKind::Hard});
    }
    auto expected = oracle::bruteTriplets(xs, margin);
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    ASSERT_EQ(got, expected) << "trial " << trial;
    EXPECT_EQ(mineTriplets(xs, margin), mineTriplets(xs, margin));
  }
}

//! Central finite differences of the loss in W against the analytic gradient.
double gradientRelativeError(std::mt19937_64& rng, double p) {
  std::normal_distribution<double> normal;
  const int                        in = 5, out = 3;
  LinearProjection                 w{out, in, std::vector<double>(out * in)};
  std::vector<double>              a(in), pos(in), neg(in);
  for (double& v : w.weights) {
    v = normal(rng);
  }
  for (int k = 0; k < in; ++k) {
    a[k]   = normal(rng);
    pos[k] = normal(rng);
    neg[k] = a[k] + 0.1 * normal(rng);
  }
  // A large margin keeps the hinge active.
  const double        margin = 10.0;
  std::vector<double> grad;
  EXPECT_GT(projectedTripletLoss(w, a, pos, neg, margin, p, &grad), 0.0);
  double maxDiff = 0.0, maxFd = 0.0;
  for (size_t k = 0; k < w.weights.size(); ++k) {
    const double h    = 1e-6;
    auto         plus = w, minus = w;
    plus.weights[k] += h;
    minus.weights[k] -= h;
    const double fd = (projectedTripletLoss(plus, a, pos, neg, margin, p) -
                       projectedTripletLoss(minus, a, pos, neg, margin, p)) /
                      (2 * h);
    maxDiff = std::max(maxDiff, std::abs(fd - grad[k]));
    maxFd   = std::max(maxFd, std::abs(fd));
  }
  return maxDiff / maxFd;
}

TEST(LinearMetric, GradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(35);
  for (double p : {2.0, 1.5, 3.0}) {
    for (int trial = 0; trial < 30; ++trial) {
      EXPECT_LT(gradientRelativeError(rng, p), 1e-5) << "p " << p;
    }
  }
}

std::vector<Embedding> stripedToy(uint64_t seed) {
  // Classes overlap along x and separate along a thin y band.
  std::mt19937_64                        rng(seed);
  std::uniform_real_distribution<double> x(0.0, 4.0), y(0.0, 0.2);
  std::vector<Embedding>                 out;
  for (int i = 0; i < 12; ++i) {
    out.push_back(emb("a" + std::to_string(i), Label::active("A"), {x(rng), y(rng)}));
    out.push_back(emb("b" + std::to_string(i), Label::active("B"), {x(rng), 0.4 + y(rng)}));
  }
  return out;
}

TEST(LinearMetric, Training) {
  const auto         toy = stripedToy(1);
  LinearMetricConfig cfg;
  cfg.epochs       = 0;
  const auto noop  = trainLinearMetric(toy, cfg);
  EXPECT_EQ(noop.projection.weights, LinearProjection::identity(2, 2).weights);
  EXPECT_EQ(noop.epochsRun, 0);

  cfg.epochs     = 200;
  cfg.seed       = 9;
  const auto fit = trainLinearMetric(toy, cfg);
  EXPECT_GT(fit.initialLoss, 0.0);
  EXPECT_LT(fit.finalLoss, 0.1 * fit.initialLoss);
  const auto again = trainLinearMetric(toy, cfg);
  EXPECT_EQ(fit.projection.weights, again.projection.weights);
  EXPECT_EQ(fit.finalLoss, again.finalLoss);

  const std::vector<Embedding> far{emb("a", Label::active("A"), {0}), emb("b", Label::active("A"), {0.1}),
                                   emb("c", Label::decoy(), {50})};
  EXPECT_THROW(trainLinearMetric(far, cfg), DataError);
}

TEST(LinearMetric, FinalLossNeverAboveInitial) {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    LinearMetricConfig cfg;
    cfg.epochs       = 20;
    cfg.learningRate = 0.5;
    cfg.seed         = seed;
    cfg.outputDim    = 1;
    const auto r     = trainLinearMetric(stripedToy(seed + 100), cfg);
    EXPECT_LE(r.finalLoss, r.initialLoss);
    EXPECT_EQ(r.projection.outputDim, 1);
  }
}

std::vector<Embedding> clusteredLibrary(std::mt19937_64& rng, int actives, int decoys) {
  std::normal_distribution<double> normal;
  std::vector<Embedding>           lib;
  for (int t = 0; t < 2; ++t) {
    const std::string target = t ? "B" : "A";
    const double      cx     = t ? 100.0 : 0.0;
    for (int i = 0; i < 2; ++i) {
      lib.push_back(emb(target + "_t" + std::to_string(i), Label::templ(target), {cx + normal(rng), normal(rng)}));
    }
    for (int i = 0; i < actives; ++i) {
      lib.push_back(emb(target + "_a" + std::to_string(i), Label::active(target), {cx + normal(rng), normal(rng)}));
    }
  }
  for (int i = 0; i < decoys; ++i) {
    lib.push_back(emb("d" + std::to_string(i), Label::decoy(), {50 + normal(rng), 50 + normal(rng)}));
  }
  return lib;
}

TEST(CrossValidation, PerfectSeparationAndDeterminism) {
  std::mt19937_64       rng(36);
  const auto            lib = clusteredLibrary(rng, 10, 100);
  CrossValidationConfig cfg;
  cfg.seed     = 4;
  const auto r = crossValidate(lib, cfg);
  EXPECT_EQ(r.folds, 5);
  EXPECT_EQ(r.targets, (std::vector<std::string>{"A", "B"}));
  ASSERT_EQ(r.perFold.size(), 5u);
  for (const auto& f : r.perFold) {
    EXPECT_EQ(f.auc, 1.0);
  }
  EXPECT_EQ(r.aucMean, 1.0);
  EXPECT_EQ(r.aucStd, 0.0);
  EXPECT_TRUE(r.warnings.empty());
  const auto again = crossValidate(lib, cfg);
  EXPECT_EQ(evalReportJson(r), evalReportJson(again));

  const auto json = nlohmann::json::parse(evalReportJson(r));
  EXPECT_EQ(json["folds"], 5);
  EXPECT_EQ(json["mean"]["auc"], 1.0);

  cfg.metricLearning         = LinearMetricConfig{};
  cfg.metricLearning->epochs = 5;
  const auto learned         = crossValidate(lib, cfg);
  EXPECT_EQ(evalReportJson(learned), evalReportJson(crossValidate(lib, cfg)));
}

TEST(CrossValidation, ShuffledLabelsGiveChanceAuc) {
  double total = 0.0;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    std::mt19937_64                  rng(1000 + seed);
    std::normal_distribution<double> normal;
    std::vector<Label>               labels;
    labels.insert(labels.end(), 2, Label::templ("A"));
    labels.insert(labels.end(), 20, Label::active("A"));
    labels.insert(labels.end(), 60, Label::decoy());
    std::shuffle(labels.begin(), labels.end(), rng);
    std::vector<Embedding> lib;
    for (size_t i = 0; i < labels.size(); ++i) {
      lib.push_back(emb("c" + std::to_string(i), labels[i], {normal(rng), normal(rng), normal(rng)}));
    }
    CrossValidationConfig cfg;
    cfg.seed = seed;
    total += crossValidate(lib, cfg).aucMean;
  }
  const double mean = total / 20.0;
  EXPECT_GE(mean, 0.4);
  EXPECT_LE(mean, 0.6);
}

TEST(CrossValidation, FoldReductionAndErrors) {
  std::mt19937_64       rng(37);
  const auto            lib = clusteredLibrary(rng, 3, 20);
  CrossValidationConfig cfg;
  const auto            r = crossValidate(lib, cfg);
  EXPECT_EQ(r.folds, 3);
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.warnings[0].find("folds reduced"), std::string::npos);

  std::vector<Embedding> lonely{emb("x", Label::active("A"), {0}), emb("d", Label::decoy(), {1})};
  EXPECT_THROW(crossValidate(lonely, cfg), DataError);
}

TEST(Export, RankingTsv) {
  const std::vector<Embedding> tmpl{emb("t", Label::templ("T"), {0})};
  const std::vector<Embedding> pool{emb("a", Label::active("T"), {0.5}), emb("b", Label::decoy(), {2})};
  EXPECT_EQ(rankingTsv(rankByTemplates(tmpl, pool, "T")), "id\tscore\tlabel\na\t0.5\tactive:T\nb\t2\tdecoy\n");
}

}  // namespace
