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

#include "todd/tools/commands.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "todd/error.h"
#include "todd/fingerprint_io.h"
#include "todd/metric.h"
#include "todd/tools/extract.h"
#include "todd/tools/synthetic.h"

namespace todd::tools {
namespace {

std::string readBinary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DataError("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeBinary(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw DataError("cannot write '" + path.string() + "'");
  }
  out << bytes;
}

void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
  } else {
    writeBinary(path, text);
  }
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

int cmdExtract(const RunConfig& config, std::ostream& log) {
  config.validate();
  const auto records = loadRecords(config);
  if (records.empty()) {
    throw DataError("inputs contain no records");
  }
  log << "extracting " << records.size() << " records with " << config.workers << " worker(s)\n";
  const ExtractionResult result = extractLibrary(records, config);
  for (const auto& w : result.plan.warnings) {
    log << "warning: " << w << "\n";
  }
  for (const auto& f : result.failures) {
    log << "failed: record " << f.recordIndex << " (" << f.id << "): " << f.message << "\n";
  }

  const std::filesystem::path dir(config.outDir);
  std::filesystem::create_directories(dir);
  writeBinary(dir / "fingerprints.bin", writeFingerprintContainer(result.library));
  writeBinary(dir / "fingerprints.csv", fingerprintCsv(result.library));
  writeBinary(dir / "manifest.json", manifestJson(config, result));
  log << "extracted " << result.library.records.size() << " of " << records.size() << " compounds into "
      << dir.string() << "\n";

  if (!result.failures.empty() && config.strict) {
    return kExitDataError;
  }
  return result.library.records.empty() ? kExitDataError : kExitOk;
}

int cmdRank(const RankOptions& options, std::ostream& out, std::ostream& log) {
  const FingerprintLibrary lib        = readFingerprintContainer(readBinary(options.fingerprints));
  const auto               embeddings = embedLibrary(lib.records, options.normalize);

  std::set<std::string> known;
  for (const Embedding& e : embeddings) {
    if (e.label.bindsTarget()) {
      known.insert(e.label.target);
    }
  }
  if (!known.count(options.target)) {
    std::string list;
    for (const auto& t : known) {
      list += (list.empty() ? "" : ", ") + t;
    }
    throw DataError("unknown target '" + options.target + "'; known targets: " + (list.empty() ? "(none)" : list));
  }

  std::vector<Embedding> templates, pool;
  for (const Embedding& e : embeddings) {
    const bool isTemplate = e.label.kind == Label::Kind::Template && e.label.target == options.target;
    (isTemplate ? templates : pool).push_back(e);
  }
  if (templates.empty()) {
    throw DataError("target '" + options.target + "' has no template compounds");
  }
  const RankingResult ranking =
      rankByTemplates(templates, pool, options.target, options.metric, options.aggregation);
  emit(options.out, rankingTsv(ranking), out);
  log << "ranked " << ranking.entries.size() << " compounds against " << templates.size() << " template(s)\n";

  const auto hits = ranking.activeInRankOrder();
  for (double alpha : {1.0, 2.0, 5.0, 10.0}) {
    const bool defined = std::floor(static_cast<double>(hits.size()) * alpha / 100.0 + 1e-9) >= 1.0;
    out << "# EF" << fmt(alpha) << "%\t" << (defined ? fmt(enrichmentFactor(hits, alpha)) : "n/a") << "\n";
  }
  out << "# AUC\t" << fmt(rocAuc(ranking)) << "\n";
  return kExitOk;
}

int cmdEvaluate(const EvaluateOptions& options, std::ostream& out, std::ostream& log) {
  const FingerprintLibrary lib        = readFingerprintContainer(readBinary(options.fingerprints));
  const auto               embeddings = embedLibrary(lib.records, options.normalize);
  const EvalReport         report     = crossValidate(embeddings, options.cv);
  for (const auto& w : report.warnings) {
    log << "warning: " << w << "\n";
  }
  emit(options.out, evalReportJson(report), out);
  for (size_t a = 0; a < report.alphas.size(); ++a) {
    log << "EF" << fmt(report.alphas[a]) << "% " << fmt(report.efMean[a]) << " +- " << fmt(report.efStd[a]) << "\n";
  }
  log << "AUC " << fmt(report.aucMean) << " +- " << fmt(report.aucStd) << "\n";
  return kExitOk;
}

StabilitySummary runStability(const StabilityOptions& options, std::ostream& out) {
  std::mt19937_64  rng(options.seed);
  StabilitySummary summary;
  out << "trial\tleft\tright\tratio\tpass\n";
  for (int t = 0; t < options.trials; ++t) {
    const MolecularGraph g = randomMolecule(rng, options.minAtoms, options.maxAtoms, "trial_" + std::to_string(t));
    std::uniform_real_distribution<double> shift(-options.epsilon, options.epsilon);
    std::vector<Atom>                      atoms = g.atoms();
    for (Atom& a : atoms) {
      a.atomicMass += options.epsilon > 0.0 ? shift(rng) : 0.0;
    }
    const MolecularGraph perturbed(g.id() + "_perturbed", std::move(atoms), g.bonds(), g.label());

    const FilterFunction mass{FilterFunction::Kind::AtomicMass, {}};
    StabilityConfig      cfg;
    cfg.filter        = mass;
    cfg.thresholds    = computeThresholds(vertexFilterValues(g, mass), options.thresholds.m,
                                          options.thresholds.strategy);
    cfg.vectorization = options.vectorization;
    cfg.dim           = options.dim;
    cfg.kCap          = options.kCap;
    cfg.rowMetric     = nativeRowMetric(options.vectorization.kind);
    const StabilityReport r = stabilityCheck(g, perturbed, cfg, options.constant, options.p);

    ++summary.trials;
    summary.passed += r.pass ? 1 : 0;
    summary.changed += r.right > 0.0 ? 1 : 0;
    summary.maxRatio = std::max(summary.maxRatio, r.ratio);
    out << t << "\t" << fmt(r.left) << "\t" << fmt(r.right) << "\t" << fmt(r.ratio) << "\t"
        << (r.pass ? "pass" : "FAIL") << "\n";
  }
  out << "# pass_rate\t" << fmt(summary.trials ? static_cast<double>(summary.passed) / summary.trials : 1.0) << "\t("
      << summary.passed << "/" << summary.trials << ", " << summary.changed << " perturbed pairs differ)\n";
  return summary;
}

int cmdStability(const StabilityOptions& options, std::ostream& out, std::ostream& log) {
  if (options.trials < 0 || options.epsilon < 0.0) {
    throw Error("trials and epsilon must be non-negative");
  }
  const StabilitySummary s = runStability(options, out);
  log << "stability: " << s.passed << " of " << s.trials << " trials satisfy the bound\n";
  return kExitOk;
}

int cmdDistance(const DistanceOptions& options, std::ostream& out, std::ostream& log) {
  const FingerprintLibrary lib = readFingerprintContainer(readBinary(options.fingerprints));
  const FingerprintRecord* a   = nullptr;
  const FingerprintRecord* b   = nullptr;
  for (const auto& r : lib.records) {
    if (r.fingerprint.compoundId == options.a && !a) {
      a = &r;
    }
    if (r.fingerprint.compoundId == options.b && !b) {
      b = &r;
    }
  }
  if (!a || !b) {
    throw DataError("compound '" + (a ? options.b : options.a) + "' not found in " + options.fingerprints);
  }
  const auto spec = nlohmann::json::parse(lib.specJson, nullptr, false);
  VectorizationSpec vec;
  if (spec.is_object() && spec.contains("vectorization")) {
    vec = VectorizationSpec::fromName(spec["vectorization"].value("kind", "betti"));
  }
  const RowMetric metric = nativeRowMetric(vec.kind);
  const auto&     fa     = a->fingerprint;
  const auto&     fb     = b->fingerprint;
  if (fa.rows != fb.rows || fa.cols != fb.cols || fa.channels.size() != fb.channels.size()) {
    throw DataError("fingerprint shapes differ");
  }
  double total = 0.0;
  out << "channel\tdistance\n";
  for (size_t c = 0; c < fa.channels.size(); ++c) {
    double d = 0.0;
    for (int i = 0; i < fa.rows; ++i) {
      const std::span<const double> ra(fa.channels[c].data.data() + static_cast<size_t>(i) * fa.cols, fa.cols);
      const std::span<const double> rb(fb.channels[c].data.data() + static_cast<size_t>(i) * fb.cols, fb.cols);
      d += rowDistance(ra, rb, metric);
    }
    total += d;
    out << fa.channels[c].tag << "\t" << fmt(d) << "\n";
  }
  out << "total\t" << fmt(total) << "\n";
  log << "distance between " << options.a << " and " << options.b << " over " << fa.channels.size()
      << " channel(s)\n";
  return kExitOk;
}

int cmdGenerate(const GenerateOptions& options, std::ostream& out, std::ostream& log) {
  if (options.format != "sdf" && options.format != "json") {
    throw Error("format must be 'sdf' or 'json'");
  }
  std::vector<MolecularGraph> graphs;
  if (options.screening) {
    ScreeningLibraryConfig cfg;
    cfg.decoys = options.count;
    cfg.seed   = options.seed;
    graphs     = syntheticScreeningLibrary(cfg);
  } else {
    std::mt19937_64 rng(options.seed);
    for (int i = 0; i < options.count; ++i) {
      graphs.push_back(randomMolecule(rng, options.minAtoms, options.maxAtoms, "mol_" + std::to_string(i)));
    }
  }
  std::string text;
  for (const auto& g : graphs) {
    text += options.format == "sdf" ? writeSdfRecord(g) : serializeGraphJson(g) + "\n";
  }
  emit(options.out, text, out);
  log << "generated " << graphs.size() << " molecules\n";
  return kExitOk;
}

}  // namespace todd::tools
