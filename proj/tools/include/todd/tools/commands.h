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

#ifndef TODD_TOOLS_COMMANDS_H
#define TODD_TOOLS_COMMANDS_H

#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>

#include "todd/screening.h"
#include "todd/tools/run_config.h"

namespace todd::tools {

//! Writes fingerprints.bin, fingerprints.csv and manifest.json into config.outDir.
int cmdExtract(const RunConfig& config, std::ostream& log);

struct RankOptions {
  std::string         fingerprints;  //!< container path
  std::string         target;
  bool                normalize   = true;
  EmbeddingMetric     metric      = EmbeddingMetric::Euclidean;
  TemplateAggregation aggregation = TemplateAggregation::Min;
  std::string         out;  //!< TSV path; empty writes the TSV to `out` stream
};

//! Templates of the target against every other compound; TSV plus an EF/AUC summary.
int cmdRank(const RankOptions& options, std::ostream& out, std::ostream& log);

struct EvaluateOptions {
  std::string           fingerprints;
  bool                  normalize = true;
  CrossValidationConfig cv;
  std::string           out;  //!< report JSON path; empty writes to `out` stream
};

int cmdEvaluate(const EvaluateOptions& options, std::ostream& out, std::ostream& log);

struct StabilityOptions {
  int               trials   = 100;
  double            epsilon  = 0.05;
  double            constant = 1.0;
  double            p        = std::numeric_limits<double>::infinity();
  ThresholdChoice   thresholds{ThresholdStrategy::UniqueValues, 0};  //!< over the unperturbed masses
  int               kCap     = 4;
  int               dim      = 0;
  int               minAtoms = 4;
  int               maxAtoms = 16;
  uint64_t          seed     = 0;
  VectorizationSpec vectorization = VectorizationSpec::fromName("landscape");
};

struct StabilitySummary {
  int    trials = 0;
  int    passed = 0;
  int    changed = 0;  //!< trials whose slice diagrams differ
  double maxRatio = 0.0;
};

//! Random molecules against copies whose atomic masses are shifted independently
//! by at most epsilon. Unique thresholds sit on the masses, so shifts move atoms
//! between slices.
//! Prints one line per trial and a pass-rate summary; always exits 0.
StabilitySummary runStability(const StabilityOptions& options, std::ostream& out);
int              cmdStability(const StabilityOptions& options, std::ostream& out, std::ostream& log);

struct DistanceOptions {
  std::string fingerprints;
  std::string a, b;
};

//! Per-channel fingerprint distance (sum of per-row native norms) between two compounds.
int cmdDistance(const DistanceOptions& options, std::ostream& out, std::ostream& log);

struct GenerateOptions {
  int         count     = 100;
  int         minAtoms  = 5;
  int         maxAtoms  = 30;
  uint64_t    seed      = 0;
  bool        screening = false;  //!< labeled screening library instead of random molecules
  std::string format    = "sdf";
  std::string out;
};

int cmdGenerate(const GenerateOptions& options, std::ostream& out, std::ostream& log);

}  // namespace todd::tools

#endif  // TODD_TOOLS_COMMANDS_H
