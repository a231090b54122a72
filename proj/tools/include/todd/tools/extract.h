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

#ifndef TODD_TOOLS_EXTRACT_H
#define TODD_TOOLS_EXTRACT_H

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "todd/fingerprint_io.h"
#include "todd/molgraph.h"
#include "todd/tools/run_config.h"

namespace todd::tools {

//! Library-level choices shared by every compound so fingerprints line up.
struct ExtractionPlan {
  std::map<Modality, ThresholdSet> thresholds;
  int                              kCap = 1;
  std::vector<std::string>         warnings;
};

struct ExtractionFailure {
  size_t      recordIndex = 0;
  std::string id;
  std::string message;
};

struct ExtractionResult {
  ExtractionPlan                 plan;
  FingerprintLibrary             library;
  std::vector<ExtractionFailure> failures;
  size_t                         recordCount = 0;
};

//! Reads every input with the lenient parsers; record indices run across files.
std::vector<RecordResult> loadRecords(const RunConfig& config);

ExtractionPlan planExtraction(const std::vector<const MolecularGraph*>& graphs, const RunConfig& config);

MultiModalFingerprint extractCompound(const MolecularGraph& g, const ExtractionPlan& plan, const RunConfig& config);

//! Runs fn(0..n-1) on `workers` threads; every index runs exactly once.
void parallelFor(size_t n, int workers, const std::function<void(size_t)>& fn);

//! Parallel over compounds, gathered in record order: the result does not
//! depend on the worker count.
ExtractionResult extractLibrary(const std::vector<RecordResult>& records, const RunConfig& config);

std::string specJson(const RunConfig& config, const ExtractionPlan& plan);
std::string manifestJson(const RunConfig& config, const ExtractionResult& result);

}  // namespace todd::tools

#endif  // TODD_TOOLS_EXTRACT_H
