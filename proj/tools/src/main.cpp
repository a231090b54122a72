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

#include <iostream>
#include <limits>
#include <string>

#include <CLI11.hpp>

#include "todd/error.h"
#include "todd/tools/commands.h"

namespace {

using namespace todd;
using namespace todd::tools;

EmbeddingMetric parseMetric(const std::string& s) {
  if (s == "euclidean") {
    return EmbeddingMetric::Euclidean;
  }
  if (s == "manhattan") {
    return EmbeddingMetric::Manhattan;
  }
  throw Error("metric must be 'euclidean' or 'manhattan'");
}

TemplateAggregation parseAggregation(const std::string& s) {
  if (s == "min") {
    return TemplateAggregation::Min;
  }
  if (s == "mean") {
    return TemplateAggregation::Mean;
  }
  throw Error("aggregation must be 'min' or 'mean'");
}

double parseP(const std::string& s) {
  if (s == "inf" || s == "infinity") {
    return std::numeric_limits<double>::infinity();
  }
  const double p = std::stod(s);
  if (p < 1.0) {
    throw Error("p must be at least 1");
  }
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiparameter persistence fingerprints for molecular graphs"};
  app.require_subcommand(1);

  // extract
  RunConfig   run;
  std::string modalities = "mass,charge,bond", dims = "0,1", thresholds = "quantile:8", vectorization = "betti";
  int         kcap = 0;
  run.workers      = defaultWorkerCount();
  auto* extract    = app.add_subcommand("extract", "Compute fingerprints for every compound of a library");
  extract->add_option("--input", run.inputs, "SDF or graph JSON files")->required();
  extract->add_option("--format", run.format, "sdf or json (default: by extension)");
  extract->add_option("--modalities", modalities, "Comma list of mass, charge, bond")->capture_default_str();
  extract->add_option("--vectorization", vectorization, "betti, landscape, silhouette, entropy or image")
      ->capture_default_str();
  extract->add_option("--landscape-level", run.vectorization.landscapeLevel, "Landscape level k");
  extract->add_option("--silhouette-power", run.vectorization.silhouettePower, "Silhouette weight exponent");
  extract->add_option("--image-size", run.vectorization.imageRows, "Persistence image resolution (square)");
  extract->add_option("--dims", dims, "Homology dimensions")->capture_default_str();
  extract->add_option("--thresholds", thresholds, "unique, quantile:m or uniform:m")->capture_default_str();
  extract->add_option("--kcap", kcap, "Slice filtration extent (default: library diameter)");
  extract->add_option("--workers", run.workers, "Worker threads (default: TODD_WORKERS or core count)");
  extract->add_option("--seed", run.seed, "Seed (recorded, extraction is deterministic)");
  extract->add_option("--out", run.outDir, "Output directory")->capture_default_str();
  extract->add_flag("--strict", run.strict, "Exit 2 when any compound fails");

  // rank
  RankOptions rank;
  std::string rankMetric = "euclidean", rankAggregation = "min";
  bool        rankRaw    = false;
  auto*       rankCmd    = app.add_subcommand("rank", "Rank a library against the templates of one target");
  rankCmd->add_option("--fingerprints", rank.fingerprints, "fingerprints.bin from extract")->required();
  rankCmd->add_option("--target", rank.target, "Target id")->required();
  rankCmd->add_option("--metric", rankMetric, "euclidean or manhattan")->capture_default_str();
  rankCmd->add_option("--aggregation", rankAggregation, "min or mean distance to templates")->capture_default_str();
  rankCmd->add_flag("--no-normalize", rankRaw, "Skip per-dimension standardization");
  rankCmd->add_option("--out", rank.out, "Ranking TSV path (default: standard output)");

  // evaluate
  EvaluateOptions eval;
  std::string     evalMetric = "euclidean", evalAggregation = "min";
  bool            evalRaw = false, learn = false;
  LinearMetricConfig learnCfg;
  auto* evalCmd = app.add_subcommand("evaluate", "Stratified k-fold EF/AUC evaluation");
  evalCmd->add_option("--fingerprints", eval.fingerprints, "fingerprints.bin from extract")->required();
  evalCmd->add_option("--folds", eval.cv.folds, "Number of folds")->capture_default_str();
  evalCmd->add_option("--seed", eval.cv.seed, "Fold assignment seed")->capture_default_str();
  evalCmd->add_option("--metric", evalMetric, "euclidean or manhattan")->capture_default_str();
  evalCmd->add_option("--aggregation", evalAggregation, "min or mean")->capture_default_str();
  evalCmd->add_flag("--no-normalize", evalRaw, "Skip per-dimension standardization");
  evalCmd->add_flag("--metric-learning", learn, "Train a linear triplet metric per fold");
  evalCmd->add_option("--epochs", learnCfg.epochs, "Metric learning epochs")->capture_default_str();
  evalCmd->add_option("--learning-rate", learnCfg.learningRate, "SGD step")->capture_default_str();
  evalCmd->add_option("--margin", learnCfg.margin, "Triplet margin")->capture_default_str();
  evalCmd->add_option("--output-dim", learnCfg.outputDim, "Projection dimension (0 = input)");
  evalCmd->add_option("--out", eval.out, "Report JSON path (default: standard output)");

  // stability
  StabilityOptions stab;
  std::string      stabP = "inf", stabVec = "landscape", stabThresholds = "unique";
  int              stabLevel = stab.vectorization.landscapeLevel;
  auto*            stabCmd = app.add_subcommand("stability", "Check the fingerprint stability bound on random pairs");
  stabCmd->add_option("--trials", stab.trials)->capture_default_str();
  stabCmd->add_option("--epsilon", stab.epsilon, "Maximum mass perturbation")->capture_default_str();
  stabCmd->add_option("--constant", stab.constant, "Constant C of the bound")->capture_default_str();
  stabCmd->add_option("--p", stabP, "Wasserstein order, or inf")->capture_default_str();
  stabCmd->add_option("--vectorization", stabVec)->capture_default_str();
  stabCmd->add_option("--landscape-level", stabLevel, "Landscape level k")->capture_default_str();
  stabCmd->add_option("--thresholds", stabThresholds)->capture_default_str();
  stabCmd->add_option("--kcap", stab.kCap)->capture_default_str();
  stabCmd->add_option("--dim", stab.dim)->capture_default_str();
  stabCmd->add_option("--max-atoms", stab.maxAtoms)->capture_default_str();
  stabCmd->add_option("--seed", stab.seed)->capture_default_str();

  // distance
  DistanceOptions dist;
  auto*           distCmd = app.add_subcommand("distance", "Fingerprint distance between two compounds");
  distCmd->add_option("--fingerprints", dist.fingerprints)->required();
  distCmd->add_option("--a", dist.a, "First compound id")->required();
  distCmd->add_option("--b", dist.b, "Second compound id")->required();

  // generate
  GenerateOptions gen;
  auto*           genCmd = app.add_subcommand("generate", "Write random molecules or a labeled screening library");
  genCmd->add_option("--count", gen.count, "Molecules, or decoys with --screening")->capture_default_str();
  genCmd->add_option("--min-atoms", gen.minAtoms)->capture_default_str();
  genCmd->add_option("--max-atoms", gen.maxAtoms)->capture_default_str();
  genCmd->add_option("--seed", gen.seed)->capture_default_str();
  genCmd->add_flag("--screening", gen.screening, "Three targets with templates, actives and decoys");
  genCmd->add_option("--format", gen.format, "sdf or json")->capture_default_str();
  genCmd->add_option("--out", gen.out, "Output path (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*extract) {
      run.modalities            = parseModalities(modalities);
      run.dims                  = parseDims(dims);
      run.thresholds            = ThresholdChoice::parse(thresholds);
      const auto parsed         = VectorizationSpec::fromName(vectorization);
      run.vectorization.kind    = parsed.kind;
      run.vectorization.imageCols = run.vectorization.imageRows;
      if (kcap > 0) {
        run.kCap = kcap;
      } else if (extract->count("--kcap")) {
        throw Error("kcap must be at least 1");
      }
      return cmdExtract(run, std::cerr);
    }
    if (*rankCmd) {
      rank.metric      = parseMetric(rankMetric);
      rank.aggregation = parseAggregation(rankAggregation);
      rank.normalize   = !rankRaw;
      return cmdRank(rank, std::cout, std::cerr);
    }
    if (*evalCmd) {
      eval.cv.metric      = parseMetric(evalMetric);
      eval.cv.aggregation = parseAggregation(evalAggregation);
      eval.normalize      = !evalRaw;
      if (learn) {
        learnCfg.seed            = eval.cv.seed;
        eval.cv.metricLearning   = learnCfg;
      }
      return cmdEvaluate(eval, std::cout, std::cerr);
    }
    if (*stabCmd) {
      stab.p                  = parseP(stabP);
      stab.vectorization.kind = VectorizationSpec::fromName(stabVec).kind;
      stab.vectorization.landscapeLevel = stabLevel;
      stab.thresholds         = ThresholdChoice::parse(stabThresholds);
      return cmdStability(stab, std::cout, std::cerr);
    }
    if (*distCmd) {
      return cmdDistance(dist, std::cout, std::cerr);
    }
    if (*genCmd) {
      return cmdGenerate(gen, std::cout, std::cerr);
    }
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitUsage;
}
