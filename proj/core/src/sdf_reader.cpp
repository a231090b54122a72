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

// MDL V2000 subset: header block, counts line, atom block, bond block, `M  END`,
// then `> <NAME>` data items up to the `$$$$` separator. Column offsets follow the
// CTfile specification; coordinates are validated but otherwise unused.

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "todd/molgraph.h"

namespace todd {
namespace {

constexpr std::string_view kChargeProperty = "PARTIAL_CHARGES";
constexpr std::string_view kLabelProperty  = "TODD_LABEL";

std::vector<std::string_view> splitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t                        start = 0;
  while (start < text.size()) {
    size_t end  = text.find('\n', start);
    size_t stop = end == std::string_view::npos ? text.size() : end;
    auto   line = text.substr(start, stop - start);
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    lines.push_back(line);
    if (end == std::string_view::npos) {
      break;
    }
    start = end + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string_view field(std::string_view line, size_t offset, size_t width) {
  if (offset >= line.size()) {
    return {};
  }
  return trim(line.substr(offset, width));
}

std::optional<int> parseInt(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return value;
}

std::optional<double> parseReal(std::string_view s) {
  s = trim(s);
  if (s.empty()) {
    return std::nullopt;
  }
  std::string buf(s);
  char*       end   = nullptr;
  double      value = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size()) {
    return std::nullopt;
  }
  return value;
}

struct RecordSpan {
  std::vector<std::string_view> lines;
};

std::vector<RecordSpan> splitRecords(std::string_view bytes) {
  std::vector<RecordSpan> records;
  RecordSpan              current;
  for (auto line : splitLines(bytes)) {
    if (line.substr(0, 4) == "$$$$") {
      records.push_back(std::move(current));
      current = {};
      continue;
    }
    current.lines.push_back(line);
  }
  bool trailingContent = false;
  for (auto line : current.lines) {
    if (!trim(line).empty()) {
      trailingContent = true;
    }
  }
  if (trailingContent) {
    records.push_back(std::move(current));
  }
  return records;
}

[[noreturn]] void fail(size_t record, const std::string& what) {
  throw ParseError("SDF record " + std::to_string(record) + ": " + what);
}

MolecularGraph parseRecord(const RecordSpan& rec, size_t recordIndex) {
  const auto& lines = rec.lines;
  if (lines.size() < 4) {
    fail(recordIndex, "malformed counts line (record has fewer than 4 lines)");
  }
  std::string_view counts   = lines[3];
  auto             numAtoms = parseInt(field(counts, 0, 3));
  auto             numBonds = parseInt(field(counts, 3, 3));
  if (!numAtoms || !numBonds || *numAtoms < 0 || *numBonds < 0) {
    fail(recordIndex, "malformed counts line '" + std::string(counts) + "'");
  }
  if (counts.find("V3000") != std::string_view::npos) {
    fail(recordIndex, "V3000 connection tables are not supported");
  }
  const size_t atomStart = 4;
  const size_t bondStart = atomStart + static_cast<size_t>(*numAtoms);
  const size_t propStart = bondStart + static_cast<size_t>(*numBonds);
  if (lines.size() < propStart) {
    fail(recordIndex, "truncated atom/bond block");
  }

  std::vector<Atom> atoms;
  atoms.reserve(*numAtoms);
  for (size_t i = atomStart; i < bondStart; ++i) {
    std::string_view line = lines[i];
    for (size_t axis = 0; axis < 3; ++axis) {
      if (!parseReal(field(line, axis * 10, 10))) {
        fail(recordIndex, "atom line " + std::to_string(i - atomStart + 1) + " has a malformed coordinate");
      }
    }
    std::string symbol(field(line, 31, 3));
    if (symbol.empty()) {
      fail(recordIndex, "atom line " + std::to_string(i - atomStart + 1) + " has no element symbol");
    }
    auto mass = lookupAtomicMass(symbol);
    if (!mass) {
      fail(recordIndex, "unknown element '" + symbol + "'");
    }
    Atom atom;
    atom.index      = static_cast<int>(atoms.size());
    atom.element    = std::move(symbol);
    atom.atomicMass = *mass;
    atoms.push_back(std::move(atom));
  }

  std::vector<Bond> bonds;
  bonds.reserve(*numBonds);
  for (size_t i = bondStart; i < propStart; ++i) {
    std::string_view line = lines[i];
    auto             a    = parseInt(field(line, 0, 3));
    auto             b    = parseInt(field(line, 3, 3));
    auto             type = parseInt(field(line, 6, 3));
    const auto       where = "bond line " + std::to_string(i - bondStart + 1);
    if (!a || !b || !type) {
      fail(recordIndex, where + " is malformed");
    }
    if (*a < 1 || *b < 1 || *a > *numAtoms || *b > *numAtoms) {
      fail(recordIndex, where + " references atom index outside 1.." + std::to_string(*numAtoms));
    }
    if (*type < 1 || *type > 4) {
      fail(recordIndex, where + " has unsupported bond type " + std::to_string(*type));
    }
    bonds.push_back({*a - 1, *b - 1, static_cast<BondType>(*type)});
  }

  size_t cursor = propStart;
  while (cursor < lines.size() && lines[cursor].substr(0, 6) != "M  END") {
    ++cursor;
  }
  if (cursor == lines.size()) {
    fail(recordIndex, "missing 'M  END'");
  }
  ++cursor;

  Label label;
  while (cursor < lines.size()) {
    std::string_view line = lines[cursor++];
    if (line.empty() || line.front() != '>') {
      continue;
    }
    auto open  = line.find('<');
    auto close = line.find('>', open == std::string_view::npos ? 1 : open);
    if (open == std::string_view::npos || close == std::string_view::npos) {
      fail(recordIndex, "malformed data header '" + std::string(line) + "'");
    }
    std::string                   name(line.substr(open + 1, close - open - 1));
    std::vector<std::string_view> data;
    while (cursor < lines.size() && !trim(lines[cursor]).empty()) {
      data.push_back(lines[cursor++]);
    }
    if (name == kLabelProperty) {
      try {
        label = Label::parse(data.empty() ? std::string_view{} : trim(data.front()));
      } catch (const DataError& e) {
        fail(recordIndex, e.what());
      }
      continue;
    }
    std::vector<double> values;
    for (auto d : data) {
      auto v = parseReal(d);
      if (!v) {
        break;
      }
      values.push_back(*v);
    }
    const bool perAtom = values.size() == data.size() && values.size() == atoms.size();
    if (name == kChargeProperty) {
      if (!perAtom) {
        fail(recordIndex, std::string(kChargeProperty) + " must hold one real per atom line");
      }
      for (size_t i = 0; i < atoms.size(); ++i) {
        atoms[i].partialCharge = values[i];
      }
    } else if (perAtom) {
      for (size_t i = 0; i < atoms.size(); ++i) {
        atoms[i].extra[name] = values[i];
      }
    }
  }

  std::string id(trim(lines[0]));
  if (id.empty()) {
    id = "record_" + std::to_string(recordIndex);
  }
  try {
    return MolecularGraph(std::move(id), std::move(atoms), std::move(bonds), std::move(label));
  } catch (const DataError& e) {
    fail(recordIndex, e.what());
  }
}

}  // namespace

std::vector<MolecularGraph> parseSdf(std::string_view bytes) {
  std::vector<MolecularGraph> graphs;
  auto                        records = splitRecords(bytes);
  graphs.reserve(records.size());
  for (size_t i = 0; i < records.size(); ++i) {
    graphs.push_back(parseRecord(records[i], i));
  }
  return graphs;
}

std::vector<RecordResult> parseSdfRecords(std::string_view bytes) {
  std::vector<RecordResult> results;
  auto                      records = splitRecords(bytes);
  for (size_t i = 0; i < records.size(); ++i) {
    RecordResult r;
    r.recordIndex = i;
    try {
      r.graph = parseRecord(records[i], i);
    } catch (const Error& e) {
      r.error = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::string writeSdfRecord(const MolecularGraph& g) {
  std::string out;
  char        buf[128];
  out += g.id() + "\n  todd\n\n";
  std::snprintf(buf, sizeof(buf), "%3d%3d  0  0  0  0  0  0  0  0999 V2000\n", g.numAtoms(),
                static_cast<int>(g.bonds().size()));
  out += buf;
  for (const auto& atom : g.atoms()) {
    std::snprintf(buf, sizeof(buf), "%10.4f%10.4f%10.4f %-3s 0  0  0  0  0  0  0  0  0  0  0  0\n", 0.0, 0.0, 0.0,
                  atom.element.c_str());
    out += buf;
  }
  for (const auto& bond : g.bonds()) {
    std::snprintf(buf, sizeof(buf), "%3d%3d%3d  0\n", bond.a + 1, bond.b + 1, static_cast<int>(bond.type));
    out += buf;
  }
  out += "M  END\n";
  if (g.label().kind != Label::Kind::Unlabeled) {
    out += "> <" + std::string(kLabelProperty) + ">\n" + g.label().toString() + "\n\n";
  }
  const bool hasCharges =
    g.numAtoms() > 0 && std::all_of(g.atoms().begin(), g.atoms().end(), [](const Atom& a) { return a.partialCharge.has_value(); });
  if (hasCharges) {
    out += "> <" + std::string(kChargeProperty) + ">\n";
    for (const auto& atom : g.atoms()) {
      std::snprintf(buf, sizeof(buf), "%.17g\n", *atom.partialCharge);
      out += buf;
    }
    out += "\n";
  }
  out += "$$$$\n";
  return out;
}

}  // namespace todd
