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

// JSON graph record:
//   {"id": "...", "label": "active:T1" | "template:T1" | "decoy" | "unlabeled",
//    "atoms": [{"element": "C", "mass": 12.011, "charge": -0.12, "extra": {"key": 1.0}}],
//    "bonds": [{"i": 0, "j": 1, "type": 1}] or [[0, 1, 1]]}
// "mass", "charge", "extra" and "label" are optional.

#include <json.hpp>

#include "todd/molgraph.h"

namespace todd {
namespace {

using nlohmann::json;

MolecularGraph fromJson(const json& record) {
  if (!record.is_object()) {
    throw ParseError("graph record must be a JSON object");
  }
  try {
    std::string id    = record.value("id", std::string{});
    Label       label = Label::parse(record.value("label", std::string{}));

    std::vector<Atom> atoms;
    for (const auto& a : record.at("atoms")) {
      Atom atom;
      atom.index   = static_cast<int>(atoms.size());
      atom.element = a.at("element").get<std::string>();
      if (a.contains("mass") && !a["mass"].is_null()) {
        atom.atomicMass = a["mass"].get<double>();
      } else if (auto m = lookupAtomicMass(atom.element)) {
        atom.atomicMass = *m;
      } else {
        throw DataError("unknown element '" + atom.element + "' with no mass override");
      }
      if (a.contains("charge") && !a["charge"].is_null()) {
        atom.partialCharge = a["charge"].get<double>();
      }
      if (a.contains("extra")) {
        for (const auto& [key, value] : a["extra"].items()) {
          atom.extra[key] = value.get<double>();
        }
      }
      atoms.push_back(std::move(atom));
    }

    std::vector<Bond> bonds;
    if (record.contains("bonds")) {
      for (const auto& b : record["bonds"]) {
        int i = 0, j = 0, type = 1;
        if (b.is_array()) {
          if (b.size() < 2 || b.size() > 3) {
            throw ParseError("bond arrays must be [i, j] or [i, j, type]");
          }
          i    = b[0].get<int>();
          j    = b[1].get<int>();
          type = b.size() == 3 ? b[2].get<int>() : 1;
        } else {
          i    = b.at("i").get<int>();
          j    = b.at("j").get<int>();
          type = b.value("type", 1);
        }
        bonds.push_back({i, j, static_cast<BondType>(type)});
      }
    }
    return MolecularGraph(std::move(id), std::move(atoms), std::move(bonds), std::move(label));
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph record: ") + e.what());
  }
}

json toJson(const MolecularGraph& g) {
  json atoms = json::array();
  for (const auto& atom : g.atoms()) {
    json a = {{"element", atom.element}, {"mass", atom.atomicMass}};
    if (atom.partialCharge) {
      a["charge"] = *atom.partialCharge;
    }
    if (!atom.extra.empty()) {
      a["extra"] = atom.extra;
    }
    atoms.push_back(std::move(a));
  }
  json bonds = json::array();
  for (const auto& bond : g.bonds()) {
    bonds.push_back({{"i", bond.a}, {"j", bond.b}, {"type", static_cast<int>(bond.type)}});
  }
  return {{"id", g.id()}, {"label", g.label().toString()}, {"atoms", std::move(atoms)}, {"bonds", std::move(bonds)}};
}

json parseDocument(std::string_view bytes) {
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// Splits a library stream into individual records: array, single object, or JSON lines.
std::vector<json> libraryRecords(std::string_view bytes) {
  std::vector<json> records;
  auto              firstNonSpace = bytes.find_first_not_of(" \t\r\n");
  if (firstNonSpace == std::string_view::npos) {
    return records;
  }
  if (bytes[firstNonSpace] == '[') {
    for (auto& r : parseDocument(bytes)) {
      records.push_back(std::move(r));
    }
    return records;
  }
  if (json::accept(bytes)) {
    records.push_back(json::parse(bytes));
    return records;
  }
  size_t start = 0;
  size_t lineNo = 0;
  while (start <= bytes.size()) {
    size_t end  = bytes.find('\n', start);
    auto   line = bytes.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++lineNo;
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      try {
        records.push_back(json::parse(line));
      } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON on line " + std::to_string(lineNo) + ": " + e.what());
      }
    }
    if (end == std::string_view::npos) {
      break;
    }
    start = end + 1;
  }
  return records;
}

}  // namespace

MolecularGraph parseGraphJson(std::string_view bytes) { return fromJson(parseDocument(bytes)); }

std::string serializeGraphJson(const MolecularGraph& g) { return toJson(g).dump(); }

std::vector<MolecularGraph> parseGraphJsonLibrary(std::string_view bytes) {
  std::vector<MolecularGraph> graphs;
  auto                        records = libraryRecords(bytes);
  for (size_t i = 0; i < records.size(); ++i) {
    try {
      graphs.push_back(fromJson(records[i]));
    } catch (const Error& e) {
      throw ParseError("JSON record " + std::to_string(i) + ": " + e.what());
    }
  }
  return graphs;
}

std::vector<RecordResult> parseGraphJsonRecords(std::string_view bytes) {
  std::vector<RecordResult> results;
  auto                      records = libraryRecords(bytes);
  for (size_t i = 0; i < records.size(); ++i) {
    RecordResult r;
    r.recordIndex = i;
    try {
      r.graph = fromJson(records[i]);
    } catch (const Error& e) {
      r.error = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace todd
