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

#include "todd/tools/extract.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "todd/error.h"

namespace todd::tools {
namespace {

using nlohmann::json;

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DataError("cannot open input '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string inferFormat(const std::string& path, const std::string& requested) {
  if (!requested.empty()) {
    return requested;
  }
  auto ext = std::filesystem::path(path).extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext == ".sdf" || ext == ".sd" || ext == ".mol") {
    return "sdf";
  }
  if (ext == ".json" || ext == ".jsonl") {
    return "json";
  }
  throw Error("cannot infer the format of '" + path + "'; pass --format");
}

FingerprintVariant variantFor(Modality m) {
  return m == Modality::Bond ? FingerprintVariant::WeightVr : FingerprintVariant::VrSlice;
}

FilterFunction filterFor(Modality m) {
  return m == Modality::Charge ? FilterFunction{FilterFunction::Kind::PartialCharge, {}}
                               : FilterFunction{FilterFunction::Kind::AtomicMass, {}};
}

json vectorizationJson(const VectorizationSpec& v) {
  json j{{"kind", v.name()}};
  switch (v.kind) {
    case VectorizationKind::Landscape:
      j["level"] = v.landscapeLevel;
      break;
    case VectorizationKind::Silhouette:
      j["power"] = v.silhouettePower;
      break;
    case VectorizationKind::PersistenceImage:
      j["rows"]  = v.imageRows;
      j["cols"]  = v.imageCols;
      j["sigma"] = v.imageSigma;
      break;
    default:
      break;
  }
  return j;
}

json specObject(const RunConfig& config, const ExtractionPlan& plan) {
  json j;
  json mods = json::array(), variants = json::object(), values = json::object();
  for (Modality m : config.modalities) {
    mods.push_back(modalityName(m));
    variants[modalityName(m)] = variantName(variantFor(m));
    if (auto it = plan.thresholds.find(m); it != plan.thresholds.end()) {
      values[modalityName(m)] = it->second.values();
    }
  }
  j["modalities"]       = mods;
  j["variants"]         = variants;
  j["vectorization"]    = vectorizationJson(config.vectorization);
  j["dims"]             = config.dims;
  j["thresholds"]       = config.thresholds.toString();
  j["threshold_values"] = values;
  j["kcap"]             = plan.kCap;
  return j;
}

}  // namespace

std::vector<RecordResult> loadRecords(const RunConfig& config) {
  std::vector<RecordResult> out;
  for (const std::string& path : config.inputs) {
    const std::string fmt   = inferFormat(path, config.format);
    const std::string bytes = readFile(path);
    auto records = fmt == "sdf" ? parseSdfRecords(bytes) : parseGraphJsonRecords(bytes);
    const size_t offset = out.size();
    for (auto& r : records) {
      r.recordIndex += offset;
      if (!r.error.empty()) {
        r.error = path + ": " + r.error;
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

ExtractionPlan planExtraction(const std::vector<const MolecularGraph*>& graphs, const RunConfig& config) {
  ExtractionPlan plan;
  if (config.kCap) {
    plan.kCap = *config.kCap;
  } else {
    for (const MolecularGraph* g : graphs) {
      plan.kCap = std::max(plan.kCap, hopDistances(*g).maxFinite());
    }
  }
  for (Modality m : config.modalities) {
    if (m == Modality::Bond) {
      plan.thresholds.emplace(m, ThresholdSet({1.0, 2.0, 3.0, 4.0}));
      continue;
    }
    std::vector<double> pooled;
    for (const MolecularGraph* g : graphs) {
      if (m == Modality::Charge &&
          std::any_of(g->atoms().begin(), g->atoms().end(), [](const Atom& a) { return !a.partialCharge; })) {
        continue;
      }
      for (double v : vertexFilterValues(*g, filterFor(m))) {
        pooled.push_back(v);
      }
    }
    if (pooled.empty()) {
      plan.warnings.push_back("modality " + modalityName(m) + ": no compound provides values");
      continue;
    }
    std::string warning;
    plan.thresholds.emplace(m, computeThresholds(pooled, config.thresholds.m, config.thresholds.strategy, &warning));
    if (!warning.empty()) {
      plan.warnings.push_back("modality " + modalityName(m) + ": " + warning);
    }
  }
  return plan;
}

MultiModalFingerprint extractCompound(const MolecularGraph& g, const ExtractionPlan& plan, const RunConfig& config) {
  std::vector<ModalityFingerprint> parts;
  for (Modality m : config.modalities) {
    const auto it = plan.thresholds.find(m);
    if (it == plan.thresholds.end()) {
      throw DataError("compound '" + g.id() + "': modality " + modalityName(m) + " has no thresholds");
    }
    const SliceDiagrams slices =
        m == Modality::Bond ? weightVrSliceDiagrams(g, bondTypeWeights(g), it->second, plan.kCap)
                            : vrSliceDiagrams(g, vertexFilterValues(g, filterFor(m)), it->second, plan.kCap);
    for (int dim : config.dims) {
      parts.push_back({g.id(), m, assembleFingerprint(slices, config.vectorization, dim, modalityName(m), variantFor(m))});
    }
  }
  return multimodalStack(std::move(parts));
}

void parallelFor(size_t n, int workers, const std::function<void(size_t)>& fn) {
  const size_t threads = std::min<size_t>(std::max(1, workers), std::max<size_t>(n, 1));
  if (threads <= 1) {
    for (size_t i = 0; i < n; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<size_t>      next{0};
  std::exception_ptr       firstError;
  std::mutex               errorMutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(errorMutex);
          if (!firstError) {
            firstError = std::current_exception();
          }
        }
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
  if (firstError) {
    std::rethrow_exception(firstError);
  }
}

ExtractionResult extractLibrary(const std::vector<RecordResult>& records, const RunConfig& config) {
  ExtractionResult result;
  result.recordCount = records.size();

  std::vector<const MolecularGraph*> graphs;
  for (const RecordResult& r : records) {
    if (r.graph) {
      graphs.push_back(&*r.graph);
    }
  }
  result.plan = planExtraction(graphs, config);

  struct Slot {
    std::optional<MultiModalFingerprint> fingerprint;
    std::string                          error;
  };
  std::vector<Slot> slots(records.size());
  parallelFor(records.size(), config.workers, [&](size_t i) {
    const RecordResult& r = records[i];
    if (!r.graph) {
      slots[i].error = r.error;
      return;
    }
    try {
      slots[i].fingerprint = extractCompound(*r.graph, result.plan, config);
    } catch (const Error& e) {
      slots[i].error = e.what();
    }
  });

  result.library.specJson = specJson(config, result.plan);
  for (size_t i = 0; i < records.size(); ++i) {
    if (slots[i].fingerprint) {
      result.library.records.push_back({std::move(*slots[i].fingerprint), records[i].graph->label()});
    } else {
      const std::string id = records[i].graph ? records[i].graph->id() : "record_" + std::to_string(i);
      result.failures.push_back({records[i].recordIndex, id, slots[i].error});
    }
  }
  return result;
}

std::string specJson(const RunConfig& config, const ExtractionPlan& plan) { return specObject(config, plan).dump(); }

std::string manifestJson(const RunConfig& config, const ExtractionResult& result) {
  json j;
  j["format_version"] = kFingerprintFormatVersion;
  j["spec"]           = specObject(config, result.plan);
  j["inputs"]         = config.inputs;
  j["records"]        = result.recordCount;
  j["extracted"]      = result.library.records.size();
  if (!result.library.records.empty()) {
    const auto& fp = result.library.records.front().fingerprint;
    json        channels = json::array();
    for (const Channel& c : fp.channels) {
      channels.push_back(c.tag);
    }
    j["shape"] = {{"rows", fp.rows}, {"cols", fp.cols}, {"channels", channels}};
  }
  j["failures"] = json::array();
  for (const auto& f : result.failures) {
    j["failures"].push_back({{"record", f.recordIndex}, {"id", f.id}, {"error", f.message}});
  }
  j["warnings"] = result.plan.warnings;
  return j.dump(2) + "\n";
}

}  // namespace todd::tools
