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

#ifndef TODD_TOOLS_RUN_CONFIG_H
#define TODD_TOOLS_RUN_CONFIG_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "todd/filtration.h"
#include "todd/mpfingerprint.h"
#include "todd/vectorize.h"

namespace todd::tools {

//! Exit codes shared by every subcommand.
inline constexpr int kExitOk        = 0;
inline constexpr int kExitUsage     = 1;
inline constexpr int kExitDataError = 2;

struct ThresholdChoice {
  ThresholdStrategy strategy = ThresholdStrategy::Quantile;
  int               m        = 8;

  //! "unique", "quantile:m" or "uniform:m".
  static ThresholdChoice parse(std::string_view text);
  std::string            toString() const;
};

struct RunConfig {
  std::vector<std::string> inputs;
  std::string              format;  //!< "sdf", "json", or empty to infer from the extension
  std::vector<Modality>    modalities = {Modality::Mass, Modality::Charge, Modality::Bond};
  VectorizationSpec        vectorization;
  std::vector<int>         dims = {0, 1};
  ThresholdChoice          thresholds;
  std::optional<int>       kCap;
  int                      workers = 1;
  uint64_t                 seed    = 0;
  std::string              outDir  = ".";
  bool                     strict  = false;

  //! Throws todd::Error on inconsistent settings.
  void validate() const;
};

std::vector<Modality> parseModalities(std::string_view csv);
std::vector<int>      parseDims(std::string_view csv);

//! TODD_WORKERS when set and positive, else the hardware concurrency (at least 1).
int defaultWorkerCount();

}  // namespace todd::tools

#endif  // TODD_TOOLS_RUN_CONFIG_H
