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

#include "todd/molgraph.h"

#include <algorithm>
#include <deque>
#include <set>

namespace todd {

std::optional<double> lookupAtomicMass(std::string_view symbol) {
  for (const auto& entry : elementTable()) {
    if (symbol == entry.symbol) {
      return entry.mass;
    }
  }
  return std::nullopt;
}

std::string Label::toString() const {
  switch (kind) {
    case Kind::Active:
      return "active:" + target;
    case Kind::Template:
      return "template:" + target;
    case Kind::Decoy:
      return "decoy";
    case Kind::Unlabeled:
      break;
  }
  return "unlabeled";
}

Label Label::parse(std::string_view text) {
  auto withTarget = [&](std::string_view prefix, Kind kind) -> std::optional<Label> {
    if (text.substr(0, prefix.size()) != prefix) {
      return std::nullopt;
    }
    auto target = text.substr(prefix.size());
    if (target.empty()) {
      throw DataError("label '" + std::string(text) + "' is missing a target id");
    }
    return Label{kind, std::string(target)};
  };
  if (text == "decoy") {
    return decoy();
  }
  if (text.empty() || text == "unlabeled") {
    return {};
  }
  if (auto l = withTarget("active:", Kind::Active)) {
    return *l;
  }
  if (auto l = withTarget("template:", Kind::Template)) {
    return *l;
  }
  throw DataError("unrecognized label '" + std::string(text) + "'");
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
  std::vector<std::vector<int>> adj(numVertices);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nbrs : adj) {
    std::sort(nbrs.begin(), nbrs.end());
  }
  return adj;
}

MolecularGraph::MolecularGraph(std::string id, std::vector<Atom> atoms, std::vector<Bond> bonds, Label label)
    : id_(std::move(id)), atoms_(std::move(atoms)), bonds_(std::move(bonds)), label_(std::move(label)) {
  const int n = numAtoms();
  for (int i = 0; i < n; ++i) {
    auto& atom = atoms_[i];
    atom.index = i;
    if (!(atom.atomicMass > 0.0)) {
      throw DataError("atom " + std::to_string(i) + " (" + atom.element + ") has non-positive atomic mass");
    }
  }
  std::set<std::pair<int, int>> seen;
  for (auto& bond : bonds_) {
    if (bond.a == bond.b) {
      throw DataError("self-loop on atom " + std::to_string(bond.a));
    }
    if (bond.a < 0 || bond.b < 0 || bond.a >= n || bond.b >= n) {
      throw DataError("bond (" + std::to_string(bond.a) + ", " + std::to_string(bond.b) +
                      ") references an atom outside 0.." + std::to_string(n - 1));
    }
    const int code = static_cast<int>(bond.type);
    if (code < 1 || code > 4) {
      throw DataError("bond type code " + std::to_string(code) + " is not one of 1, 2, 3, 4");
    }
    if (bond.a > bond.b) {
      std::swap(bond.a, bond.b);
    }
    if (!seen.insert({bond.a, bond.b}).second) {
      throw DataError("duplicate bond (" + std::to_string(bond.a) + ", " + std::to_string(bond.b) + ")");
    }
  }
}

SimpleGraph MolecularGraph::topology() const {
  SimpleGraph g;
  g.numVertices = numAtoms();
  g.edges.reserve(bonds_.size());
  for (const auto& bond : bonds_) {
    g.edges.emplace_back(bond.a, bond.b);
  }
  return g;
}

DistanceMatrix::DistanceMatrix(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
  for (int d : entries_) {
    maxFinite_ = std::max(maxFinite_, d);
  }
}

DistanceMatrix hopDistances(const SimpleGraph& g) {
  const int        n = g.numVertices;
  const auto       adj = g.adjacency();
  std::vector<int> dist(static_cast<size_t>(n) * n, DistanceMatrix::kUnreachable);
  std::vector<int> queue(n);
  for (int src = 0; src < n; ++src) {
    int* row = dist.data() + static_cast<size_t>(src) * n;
    row[src] = 0;
    size_t head = 0, tail = 0;
    queue[tail++] = src;
    while (head < tail) {
      const int u = queue[head++];
      for (int v : adj[u]) {
        if (row[v] == DistanceMatrix::kUnreachable) {
          row[v] = row[u] + 1;
          queue[tail++] = v;
        }
      }
    }
  }
  return DistanceMatrix(n, std::move(dist));
}

DistanceMatrix hopDistances(const MolecularGraph& g) { return hopDistances(g.topology()); }

std::string FilterFunction::name() const {
  switch (kind) {
    case Kind::AtomicMass:
      return "mass";
    case Kind::PartialCharge:
      return "charge";
    case Kind::Extra:
      return "extra:" + key;
  }
  return {};
}

std::vector<double> vertexFilterValues(const MolecularGraph& g, const FilterFunction& fn) {
  std::vector<double> values;
  values.reserve(g.atoms().size());
  for (const auto& atom : g.atoms()) {
    switch (fn.kind) {
      case FilterFunction::Kind::AtomicMass:
        values.push_back(atom.atomicMass);
        break;
      case FilterFunction::Kind::PartialCharge:
        if (!atom.partialCharge) {
          throw DataError("compound '" + g.id() + "': atom " + std::to_string(atom.index) +
                          " has no partial_charge");
        }
        values.push_back(*atom.partialCharge);
        break;
      case FilterFunction::Kind::Extra: {
        auto it = atom.extra.find(fn.key);
        if (it == atom.extra.end()) {
          throw DataError("compound '" + g.id() + "': atom " + std::to_string(atom.index) + " has no attribute '" +
                          fn.key + "'");
        }
        values.push_back(it->second);
        break;
      }
    }
  }
  return values;
}

std::vector<double> bondTypeWeights(const MolecularGraph& g) {
  std::vector<double> w;
  w.reserve(g.bonds().size());
  for (const auto& bond : g.bonds()) {
    w.push_back(static_cast<double>(static_cast<int>(bond.type)));
  }
  return w;
}

}  // namespace todd
