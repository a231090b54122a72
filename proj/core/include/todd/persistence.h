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

#ifndef TODD_PERSISTENCE_H
#define TODD_PERSISTENCE_H

#include <vector>

#include "todd/filtration.h"

namespace todd {

struct PersistencePair {
  int  birth     = 0;
  int  death     = 0;
  bool essential = false;  //!< never dies; death holds kCap

  auto operator<=>(const PersistencePair&) const = default;
  bool operator==(const PersistencePair&) const  = default;
  int  lifespan() const { return death - birth; }
};

//! Multiset of (birth, death) pairs for one homology dimension, kept in
//! canonical sorted order so equal multisets compare equal.
struct PersistenceDiagram {
  int                          dim  = 0;
  int                          kCap = 0;
  std::vector<PersistencePair> pairs;

  PersistenceDiagram() = default;
  PersistenceDiagram(int dim, int kCap, std::vector<PersistencePair> pairs);

  bool   empty() const { return pairs.empty(); }
  size_t size() const { return pairs.size(); }
  //! Number of bars alive at t: birth <= t < death, essential bars birth <= t.
  int    countAlive(int t) const;

  bool operator==(const PersistenceDiagram&) const = default;
};

struct DiagramPair {
  PersistenceDiagram dim0;
  PersistenceDiagram dim1;

  const PersistenceDiagram& operator[](int k) const { return k == 0 ? dim0 : dim1; }
};

//! Boundary-matrix reduction over GF(2) with clearing. Simplices are ordered by
//! (value, dimension, vertex tuple). Zero-length pairs are dropped; unpaired
//! creators become essential with death = kCap. Throws DataError if a face is
//! missing or enters after one of its cofaces.
DiagramPair persistenceDiagrams(const FilteredComplex& fc);

//! Dimension-0 diagram by union-find with the elder rule. Same multiset as
//! persistenceDiagrams(fc).dim0.
PersistenceDiagram pd0UnionFind(const FilteredComplex& fc);

//! Betti number of the subcomplex {sigma | value(sigma) <= t}, computed from
//! ranks of dense boundary matrices. Independent of the reduction above.
int bettiAt(const FilteredComplex& fc, int t, int k);

}  // namespace todd

#endif  // TODD_PERSISTENCE_H
