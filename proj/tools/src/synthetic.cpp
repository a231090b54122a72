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

#include "todd/tools/synthetic.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace todd::tools {
namespace {

struct ElementChoice {
  const char* symbol;
  int         valence;
  double      weight;
};

constexpr ElementChoice kElements[] = {
    {"C", 4, 0.62}, {"N", 3, 0.14}, {"O", 2, 0.14}, {"S", 2, 0.05}, {"Cl", 1, 0.05},
};

int valenceOf(const std::string& symbol) {
  for (const auto& e : kElements) {
    if (symbol == e.symbol) {
      return e.valence;
    }
  }
  return 4;
}

const ElementChoice& drawElement(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double                                 x = u(rng);
  for (const auto& e : kElements) {
    if (x < e.weight) {
      return e;
    }
    x -= e.weight;
  }
  return kElements[0];
}

BondType drawBondType(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double                           x = u(rng);
  if (x < 0.75) {
    return BondType::Single;
  }
  if (x < 0.87) {
    return BondType::Double;
  }
  if (x < 0.90) {
    return BondType::Triple;
  }
  return BondType::Aromatic;
}

double drawCharge(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  return std::round(u(rng) * 1000.0) / 1000.0;
}

Atom makeAtom(const std::string& symbol, double charge) {
  Atom a;
  a.element       = symbol;
  a.atomicMass    = *lookupAtomicMass(symbol);
  a.partialCharge = charge;
  return a;
}

//! Mutable working copy used while editing a molecule.
struct Draft {
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;

  std::vector<int> degrees() const {
    std::vector<int> d(atoms.size(), 0);
    for (const Bond& b : bonds) {
      ++d[b.a];
      ++d[b.b];
    }
    return d;
  }
  int freeValence(int v, const std::vector<int>& deg) const { return valenceOf(atoms[v].element) - deg[v]; }
};

Draft draftOf(const MolecularGraph& g) { return {g.atoms(), g.bonds()}; }

void addRingClosures(Draft& d, std::mt19937_64& rng, int attempts) {
  const int n = static_cast<int>(d.atoms.size());
  if (n < 4) {
    return;
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int k = 0; k < attempts; ++k) {
    const int u = pick(rng), v = pick(rng);
    if (u == v) {
      continue;
    }
    const auto deg = d.degrees();
    if (d.freeValence(u, deg) < 1 || d.freeValence(v, deg) < 1) {
      continue;
    }
    SimpleGraph sg{n, {}};
    for (const Bond& b : d.bonds) {
      sg.edges.emplace_back(b.a, b.b);
    }
    const int hops = hopDistances(sg).at(u, v);
    if (hops < 2 || hops > 6) {
      continue;
    }
    d.bonds.push_back({std::min(u, v), std::max(u, v), hops == 5 ? BondType::Aromatic : BondType::Single});
  }
}

void addLeaf(Draft& d, std::mt19937_64& rng) {
  const auto       deg = d.degrees();
  std::vector<int> open;
  for (int v = 0; v < static_cast<int>(d.atoms.size()); ++v) {
    if (d.freeValence(v, deg) > 0) {
      open.push_back(v);
    }
  }
  if (open.empty()) {
    return;
  }
  const int parent = open[std::uniform_int_distribution<size_t>(0, open.size() - 1)(rng)];
  d.atoms.push_back(makeAtom(drawElement(rng).symbol, drawCharge(rng)));
  d.bonds.push_back({parent, static_cast<int>(d.atoms.size()) - 1, BondType::Single});
}

//! Swap the element of one terminal atom, keeping valence feasible.
void swapTerminal(Draft& d, std::mt19937_64& rng) {
  const auto       deg = d.degrees();
  std::vector<int> leaves;
  for (int v = 0; v < static_cast<int>(d.atoms.size()); ++v) {
    if (deg[v] == 1) {
      leaves.push_back(v);
    }
  }
  if (leaves.empty()) {
    return;
  }
  const int v      = leaves[std::uniform_int_distribution<size_t>(0, leaves.size() - 1)(rng)];
  const auto& e    = drawElement(rng);
  d.atoms[v]       = makeAtom(e.symbol, *d.atoms[v].partialCharge);
}

void jitterCharges(Draft& d, std::mt19937_64& rng, double amount) {
  std::uniform_real_distribution<double> u(-amount, amount);
  for (Atom& a : d.atoms) {
    a.partialCharge = std::round((*a.partialCharge + u(rng)) * 1000.0) / 1000.0;
  }
}

MolecularGraph variantOf(const MolecularGraph& scaffold, std::mt19937_64& rng, std::string id, Label label) {
  Draft     d     = draftOf(scaffold);
  const int edits = std::uniform_int_distribution<int>(1, 2)(rng);
  for (int k = 0; k < edits; ++k) {
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
      addLeaf(d, rng);
    } else {
      swapTerminal(d, rng);
    }
  }
  jitterCharges(d, rng, 0.05);
  return MolecularGraph(std::move(id), std::move(d.atoms), std::move(d.bonds), std::move(label));
}

std::string numbered(const std::string& stem, int i, int width) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%0*d", stem.c_str(), width, i);
  return buf;
}

}  // namespace

MolecularGraph randomMolecule(std::mt19937_64& rng, int minAtoms, int maxAtoms, std::string id, Label label) {
  const int n = std::uniform_int_distribution<int>(std::max(1, minAtoms), std::max(minAtoms, maxAtoms))(rng);
  Draft     d;
  d.atoms.push_back(makeAtom("C", drawCharge(rng)));
  std::vector<int> deg{0};
  while (static_cast<int>(d.atoms.size()) < n) {
    const ElementChoice& e = drawElement(rng);
    std::vector<int>     open;
    for (int v = 0; v < static_cast<int>(d.atoms.size()); ++v) {
      if (d.freeValence(v, deg) > 0) {
        open.push_back(v);
      }
    }
    if (open.empty()) {
      break;
    }
    const int parent = open[std::uniform_int_distribution<size_t>(0, open.size() - 1)(rng)];
    const int child  = static_cast<int>(d.atoms.size());
    d.atoms.push_back(makeAtom(e.symbol, drawCharge(rng)));
    deg.push_back(1);
    ++deg[parent];
    d.bonds.push_back({parent, child, drawBondType(rng)});
  }
  addRingClosures(d, rng, std::uniform_int_distribution<int>(0, 3)(rng));
  return MolecularGraph(std::move(id), std::move(d.atoms), std::move(d.bonds), std::move(label));
}

std::vector<MolecularGraph> syntheticScreeningLibrary(const ScreeningLibraryConfig& config) {
  std::mt19937_64             rng(config.seed);
  std::vector<MolecularGraph> out;
  for (int t = 1; t <= config.targets; ++t) {
    const std::string    target   = "T" + std::to_string(t);
    const MolecularGraph scaffold = randomMolecule(rng, 14, 20, target + "_scaffold");
    for (int i = 0; i < config.templatesPerTarget; ++i) {
      out.push_back(variantOf(scaffold, rng, numbered(target + "_tmpl_", i, 2), Label::templ(target)));
    }
    for (int i = 0; i < config.activesPerTarget; ++i) {
      out.push_back(variantOf(scaffold, rng, numbered(target + "_act_", i, 3), Label::active(target)));
    }
  }
  for (int i = 0; i < config.decoys; ++i) {
    out.push_back(randomMolecule(rng, 8, 30, numbered("decoy_", i, 4), Label::decoy()));
  }
  return out;
}

}  // namespace todd::tools
