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

#ifndef TODD_MOLGRAPH_H
#define TODD_MOLGRAPH_H

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "todd/error.h"

namespace todd {

struct ElementEntry {
  int         atomicNumber;
  const char* symbol;
  double      mass;
};

//! Version of the compiled-in element table (from data/element_masses.tsv).
extern const int kElementTableVersion;
const std::vector<ElementEntry>& elementTable();

//! Standard atomic mass for a symbol, or nullopt if the symbol is unknown.
std::optional<double> lookupAtomicMass(std::string_view symbol);

struct Atom {
  int                           index = 0;
  std::string                   element;
  double                        atomicMass = 0.0;
  std::optional<double>         partialCharge;
  std::map<std::string, double> extra;

  bool operator==(const Atom&) const = default;
};

enum class BondType : int { Single = 1, Double = 2, Triple = 3, Aromatic = 4 };

//! Undirected bond; endpoints are stored with a < b.
struct Bond {
  int      a    = 0;
  int      b    = 0;
  BondType type = BondType::Single;

  bool operator==(const Bond&) const = default;
};

struct Label {
  enum class Kind { Active, Decoy, Template, Unlabeled };
  Kind        kind = Kind::Unlabeled;
  std::string target;

  static Label active(std::string target) { return {Kind::Active, std::move(target)}; }
  static Label templ(std::string target) { return {Kind::Template, std::move(target)}; }
  static Label decoy() { return {Kind::Decoy, {}}; }

  //! Target this compound binds to, or empty for decoys and unlabeled compounds.
  const std::string& targetId() const { return target; }
  bool               bindsTarget() const { return kind == Kind::Active || kind == Kind::Template; }

  //! "active:T", "template:T", "decoy" or "unlabeled".
  std::string toString() const;
  static Label parse(std::string_view text);

  bool operator==(const Label&) const = default;
};

//! Bare vertex/edge structure shared by filtrations. Edges are (a, b) with a < b.
struct SimpleGraph {
  int                              numVertices = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<std::vector<int>> adjacency() const;
};

//! Simple undirected molecular graph. Immutable once constructed; the constructor
//! validates every invariant and throws DataError on violation.
class MolecularGraph {
 public:
  MolecularGraph() = default;
  MolecularGraph(std::string id, std::vector<Atom> atoms, std::vector<Bond> bonds, Label label = {});

  const std::string&       id() const { return id_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Bond>& bonds() const { return bonds_; }
  const Label&             label() const { return label_; }
  int                      numAtoms() const { return static_cast<int>(atoms_.size()); }

  SimpleGraph topology() const;

  bool operator==(const MolecularGraph&) const = default;

 private:
  std::string       id_;
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  Label             label_;
};

//! All-pairs hop distances. Unreachable pairs hold kUnreachable.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<int> entries);

  int  size() const { return n_; }
  int  at(int r, int s) const { return entries_[static_cast<size_t>(r) * n_ + s]; }
  bool reachable(int r, int s) const { return at(r, s) != kUnreachable; }
  //! Largest finite entry (0 for graphs without edges).
  int  maxFinite() const { return maxFinite_; }

 private:
  int              n_ = 0;
  std::vector<int> entries_;
  int              maxFinite_ = 0;
};

DistanceMatrix hopDistances(const SimpleGraph& g);
DistanceMatrix hopDistances(const MolecularGraph& g);

struct FilterFunction {
  enum class Kind { AtomicMass, PartialCharge, Extra };
  Kind        kind = Kind::AtomicMass;
  std::string key;

  static FilterFunction atomicMass() { return {Kind::AtomicMass, {}}; }
  static FilterFunction partialCharge() { return {Kind::PartialCharge, {}}; }
  static FilterFunction extra(std::string key) { return {Kind::Extra, std::move(key)}; }

  std::string name() const;
  bool        operator==(const FilterFunction&) const = default;
};

//! One value per atom, in atom order. Throws DataError naming the first atom
//! that lacks the requested attribute.
std::vector<double> vertexFilterValues(const MolecularGraph& g, const FilterFunction& fn);

//! Bond type codes as edge weights, aligned with topology().edges.
std::vector<double> bondTypeWeights(const MolecularGraph& g);

// --- ingestion -------------------------------------------------------------

//! Parse a V2000 MOL/SDF stream. Throws ParseError (with 0-based record index)
//! on the first malformed record.
std::vector<MolecularGraph> parseSdf(std::string_view bytes);

struct RecordResult {
  size_t                        recordIndex = 0;
  std::optional<MolecularGraph> graph;
  std::string                   error;
};

//! Lenient variant: every record is parsed independently and failures are reported
//! per record instead of aborting the stream.
std::vector<RecordResult> parseSdfRecords(std::string_view bytes);

//! Serialize one molecule as a V2000 record (zero coordinates), including the
//! label and partial charge property blocks.
std::string writeSdfRecord(const MolecularGraph& g);

MolecularGraph parseGraphJson(std::string_view bytes);
std::string    serializeGraphJson(const MolecularGraph& g);

//! Accepts a JSON array of records, a single record, or one record per line.
std::vector<MolecularGraph> parseGraphJsonLibrary(std::string_view bytes);
//! Lenient library parse; a stream that is not JSON at all still throws ParseError.
std::vector<RecordResult> parseGraphJsonRecords(std::string_view bytes);

}  // namespace todd

#endif  // TODD_MOLGRAPH_H
