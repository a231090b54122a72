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

#ifndef TODD_TOOLS_SYNTHETIC_H
#define TODD_TOOLS_SYNTHETIC_H

#include <random>
#include <string>
#include <vector>

#include "todd/molgraph.h"

namespace todd::tools {

//! Random organic-looking graph: a tree over C/N/O/S/Cl with valence caps,
//! a few ring closures, mixed bond types and partial charges in [-0.5, 0.5].
MolecularGraph randomMolecule(std::mt19937_64& rng, int minAtoms, int maxAtoms, std::string id, Label label = {});

struct ScreeningLibraryConfig {
  int      targets            = 3;
  int      activesPerTarget   = 15;
  int      templatesPerTarget = 2;
  int      decoys             = 500;
  uint64_t seed               = 0;
};

//! Per target a random scaffold; templates and actives are the scaffold with a
//! few peripheral edits, decoys are unrelated random molecules. Targets are
//! named T1, T2, ...
std::vector<MolecularGraph> syntheticScreeningLibrary(const ScreeningLibraryConfig& config);

}  // namespace todd::tools

#endif  // TODD_TOOLS_SYNTHETIC_H
