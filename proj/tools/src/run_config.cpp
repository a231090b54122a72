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

#include "todd/tools/run_config.h"

#include <charconv>
#include <cstdlib>
#include <set>
#include <thread>

#include "todd/error.h"

namespace todd::tools {
namespace {

std::vector<std::string_view> splitCsv(std::string_view csv) {
  std::vector<std::string_view> out;
  size_t                        start = 0;
  while (start <= csv.size()) {
    size_t end = csv.find(',', start);
    if (end == std::string_view::npos) {
      end = csv.size();
    }
    auto item = csv.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') {
      item.remove_prefix(1);
    }
    while (!item.empty() && item.back() == ' ') {
      item.remove_suffix(1);
    }
    if (!item.empty()) {
      out.push_back(item);
    }
    start = end + 1;
  }
  return out;
}

int parseInt(std::string_view text, const char* what) {
  int  v   = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw Error(std::string("invalid ") + what + " '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

ThresholdChoice ThresholdChoice::parse(std::string_view text) {
  if (text == "unique") {
    return {ThresholdStrategy::UniqueValues, 0};
  }
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error("thresholds must be 'unique', 'quantile:m' or 'uniform:m', got '" + std::string(text) + "'");
  }
  const auto      kind = text.substr(0, colon);
  ThresholdChoice out;
  if (kind == "quantile") {
    out.strategy = ThresholdStrategy::Quantile;
  } else if (kind == "uniform") {
    out.strategy = ThresholdStrategy::UniformRange;
  } else {
    throw Error("unknown threshold strategy '" + std::string(kind) + "'");
  }
  out.m = parseInt(text.substr(colon + 1), "threshold count");
  if (out.m < 1) {
    throw Error("threshold count must be at least 1");
  }
  return out;
}

std::string ThresholdChoice::toString() const {
  switch (strategy) {
    case ThresholdStrategy::UniqueValues:
      return "unique";
    case ThresholdStrategy::Quantile:
      return "quantile:" + std::to_string(m);
    case ThresholdStrategy::UniformRange:
      return "uniform:" + std::to_string(m);
  }
  return {};
}

void RunConfig::validate() const {
  if (inputs.empty()) {
    throw Error("no input files given");
  }
  if (!format.empty() && format != "sdf" && format != "json") {
    throw Error("format must be 'sdf' or 'json', got '" + format + "'");
  }
  if (modalities.empty()) {
    throw Error("at least one modality is required");
  }
  if (dims.empty()) {
    throw Error("at least one homology dimension is required");
  }
  for (int d : dims) {
    if (d != 0 && d != 1) {
      throw Error("homology dimension must be 0 or 1, got " + std::to_string(d));
    }
  }
  if (workers < 1) {
    throw Error("worker count must be at least 1");
  }
  if (kCap && *kCap < 1) {
    throw Error("kcap must be at least 1");
  }
}

std::vector<Modality> parseModalities(std::string_view csv) {
  std::set<Modality> seen;
  for (auto item : splitCsv(csv)) {
    try {
      seen.insert(modalityFromName(item));
    } catch (const DataError&) {
      throw Error("unknown modality '" + std::string(item) + "' (expected mass, charge, bond)");
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> parseDims(std::string_view csv) {
  std::set<int> seen;
  for (auto item : splitCsv(csv)) {
    seen.insert(parseInt(item, "homology dimension"));
  }
  return {seen.begin(), seen.end()};
}

int defaultWorkerCount() {
  if (const char* env = std::getenv("TODD_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) {
      return v;
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace todd::tools
