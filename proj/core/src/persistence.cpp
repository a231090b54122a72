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

#include "todd/persistence.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

namespace todd {
namespace {

std::string describe(const FilteredSimplex& s) {
  std::string out = "[";
  for (int i = 0; i < s.simplex.size; ++i) {
    out += (i ? "," : "") + std::to_string(s.simplex.v[i]);
  }
  return out + "]@" + std::to_string(s.value);
}

bool filtrationLess(const FilteredSimplex& a, const FilteredSimplex& b) {
  if (a.value != b.value) {
    return a.value < b.value;
  }
  return a.simplex < b.simplex;  // dimension, then vertex tuple
}

// Position lookup for vertices and edges of the sorted complex. Dense tables
// for small vertex ids, hashing otherwise.
class FaceIndex {
 public:
  explicit FaceIndex(int maxVertex) : n_(maxVertex + 1), dense_(n_ <= kDenseLimit) {
    vertexPos_.assign(n_, -1);
    if (dense_) {
      edgePos_.assign(static_cast<size_t>(n_) * n_, -1);
    }
  }

  void addVertex(int v, int pos) { vertexPos_[v] = pos; }
  void addEdge(int a, int b, int pos) {
    if (dense_) {
      edgePos_[static_cast<size_t>(a) * n_ + b] = pos;
    } else {
      edgeMap_[key(a, b)] = pos;
    }
  }
  int vertex(int v) const { return vertexPos_[v]; }
  int edge(int a, int b) const {
    if (dense_) {
      return edgePos_[static_cast<size_t>(a) * n_ + b];
    }
    auto it = edgeMap_.find(key(a, b));
    return it == edgeMap_.end() ? -1 : it->second;
  }

 private:
  static constexpr int kDenseLimit = 1024;
  static uint64_t      key(int a, int b) { return (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b); }

  int                               n_;
  bool                              dense_;
  std::vector<int>                  vertexPos_;
  std::vector<int>                  edgePos_;
  std::unordered_map<uint64_t, int> edgeMap_;
};

// Sorted (ascending) sparse GF(2) column; the pivot is the last entry.
using Column = std::vector<int>;

void addInto(Column& target, const Column& source, Column& scratch) {
  scratch.clear();
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                std::back_inserter(scratch));
  target.swap(scratch);
}

struct SortedComplex {
  std::vector<FilteredSimplex> order;
  std::vector<Column>          boundary;
};

SortedComplex sortAndIndex(const FilteredComplex& fc) {
  SortedComplex sc;
  sc.order = fc.simplices;
  int maxVertex = -1;
  for (const auto& s : sc.order) {
    if (s.simplex.size < 1 || s.simplex.size > 3) {
      throw DataError("persistence supports simplices of dimension 0..2, got " + describe(s));
    }
    if (s.value < 0 || s.value > fc.kCap) {
      throw DataError("filtration value outside 0..K_cap on simplex " + describe(s));
    }
    for (int i = 0; i < s.simplex.size; ++i) {
      if (s.simplex.v[i] < 0 || (i > 0 && s.simplex.v[i - 1] >= s.simplex.v[i])) {
        throw DataError("simplex vertices must be distinct, sorted and nonnegative: " + describe(s));
      }
      maxVertex = std::max(maxVertex, static_cast<int>(s.simplex.v[i]));
    }
  }
  std::sort(sc.order.begin(), sc.order.end(), filtrationLess);

  FaceIndex index(maxVertex);
  sc.boundary.resize(sc.order.size());
  auto requireFace = [&](int pos, int facePos, const FilteredSimplex& s) {
    if (facePos < 0) {
      throw DataError("filtration is missing a face of simplex " + describe(s));
    }
    if (facePos > pos) {
      throw DataError("filtration monotonicity violated: simplex " + describe(s) + " enters before its face " +
                      describe(sc.order[facePos]));
    }
  };
  // Register vertices and edges first; the position checks below catch faces
  // that sort after their cofaces.
  for (size_t pos = 0; pos < sc.order.size(); ++pos) {
    const auto& s = sc.order[pos].simplex;
    if (s.size == 1) {
      if (index.vertex(s.v[0]) >= 0) {
        throw DataError("duplicate simplex " + describe(sc.order[pos]));
      }
      index.addVertex(s.v[0], static_cast<int>(pos));
    } else if (s.size == 2) {
      if (index.edge(s.v[0], s.v[1]) >= 0) {
        throw DataError("duplicate simplex " + describe(sc.order[pos]));
      }
      index.addEdge(s.v[0], s.v[1], static_cast<int>(pos));
    }
  }
  for (size_t pos = 0; pos < sc.order.size(); ++pos) {
    const auto& fs  = sc.order[pos];
    const auto& s   = fs.simplex;
    auto&       col = sc.boundary[pos];
    const int   p   = static_cast<int>(pos);
    if (s.size == 2) {
      col = {index.vertex(s.v[0]), index.vertex(s.v[1])};
    } else if (s.size == 3) {
      col = {index.edge(s.v[0], s.v[1]), index.edge(s.v[0], s.v[2]), index.edge(s.v[1], s.v[2])};
    }
    for (int face : col) {
      requireFace(p, face, fs);
    }
    std::sort(col.begin(), col.end());
  }
  return sc;
}

}  // namespace

PersistenceDiagram::PersistenceDiagram(int dim_, int kCap_, std::vector<PersistencePair> pairs_)
    : dim(dim_), kCap(kCap_), pairs(std::move(pairs_)) {
  std::sort(pairs.begin(), pairs.end());
}

int PersistenceDiagram::countAlive(int t) const {
  int count = 0;
  for (const auto& p : pairs) {
    if (p.birth <= t && (p.essential ? t <= kCap : t < p.death)) {
      ++count;
    }
  }
  return count;
}

DiagramPair persistenceDiagrams(const FilteredComplex& fc) {
  SortedComplex sc = sortAndIndex(fc);
  const size_t  n  = sc.order.size();

  std::vector<int>  pivotOwner(n, -1);  // row -> column whose reduced pivot is that row
  std::vector<char> paired(n, 0);
  std::vector<PersistencePair> bars0, bars1;
  Column scratch;

  auto reduce = [&](size_t col) -> int {
    Column& c = sc.boundary[col];
    while (!c.empty()) {
      const int low   = c.back();
      const int owner = pivotOwner[low];
      if (owner < 0) {
        pivotOwner[low] = static_cast<int>(col);
        return low;
      }
      addInto(c, sc.boundary[owner], scratch);
    }
    return -1;
  };

  // Triangles first: their pivots are positive edges, whose own columns are
  // then known to reduce to zero and can be cleared.
  for (size_t col = 0; col < n; ++col) {
    if (sc.order[col].simplex.size != 3) {
      continue;
    }
    const int low = reduce(col);
    if (low >= 0) {
      paired[low] = paired[col] = 1;
      sc.boundary[low].clear();
      const int birth = sc.order[low].value;
      const int death = sc.order[col].value;
      if (birth < death) {
        bars1.push_back({birth, death, false});
      }
    }
  }
  for (size_t col = 0; col < n; ++col) {
    if (sc.order[col].simplex.size != 2 || paired[col]) {
      continue;
    }
    const int low = reduce(col);
    if (low >= 0) {
      paired[low] = paired[col] = 1;
      const int birth = sc.order[low].value;
      const int death = sc.order[col].value;
      if (birth < death) {
        bars0.push_back({birth, death, false});
      }
    }
  }
  for (size_t pos = 0; pos < n; ++pos) {
    if (paired[pos]) {
      continue;
    }
    const auto& s = sc.order[pos];
    if (s.simplex.size == 1) {
      bars0.push_back({s.value, fc.kCap, true});
    } else if (s.simplex.size == 2) {
      bars1.push_back({s.value, fc.kCap, true});
    }
  }
  return {PersistenceDiagram(0, fc.kCap, std::move(bars0)), PersistenceDiagram(1, fc.kCap, std::move(bars1))};
}

PersistenceDiagram pd0UnionFind(const FilteredComplex& fc) {
  std::vector<FilteredSimplex> vertices, edges;
  for (const auto& s : fc.simplices) {
    if (s.simplex.size == 1) {
      vertices.push_back(s);
    } else if (s.simplex.size == 2) {
      edges.push_back(s);
    }
  }
  std::sort(vertices.begin(), vertices.end(), filtrationLess);
  std::sort(edges.begin(), edges.end(), filtrationLess);

  std::unordered_map<int, int> slot;  // vertex id -> union-find slot
  std::vector<int>             parent(vertices.size());
  std::vector<int>             birth(vertices.size());
  std::vector<int>             vertexId(vertices.size());
  for (size_t i = 0; i < vertices.size(); ++i) {
    slot[vertices[i].simplex.v[0]] = static_cast<int>(i);
    parent[i]                      = static_cast<int>(i);
    birth[i]                       = vertices[i].value;
    vertexId[i]                    = vertices[i].simplex.v[0];
  }
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x         = parent[x];
    }
    return x;
  };
  // Roots always hold the oldest vertex of their component.
  auto older = [&](int a, int b) {
    return birth[a] != birth[b] ? birth[a] < birth[b] : vertexId[a] < vertexId[b];
  };

  std::vector<PersistencePair> bars;
  for (const auto& e : edges) {
    auto ia = slot.find(e.simplex.v[0]);
    auto ib = slot.find(e.simplex.v[1]);
    if (ia == slot.end() || ib == slot.end()) {
      throw DataError("edge references a vertex that is not in the complex");
    }
    int ra = find(ia->second);
    int rb = find(ib->second);
    if (ra == rb) {
      continue;
    }
    if (older(rb, ra)) {
      std::swap(ra, rb);
    }
    // rb is younger and dies here.
    if (birth[rb] < e.value) {
      bars.push_back({birth[rb], e.value, false});
    }
    parent[rb] = ra;
  }
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (find(static_cast<int>(i)) == static_cast<int>(i)) {
      bars.push_back({birth[i], fc.kCap, true});
    }
  }
  return PersistenceDiagram(0, fc.kCap, std::move(bars));
}

namespace {

// Rank over GF(2) of a dense matrix given as bit-packed columns.
int gf2Rank(std::vector<std::vector<uint64_t>> cols) {
  int rank = 0;
  if (cols.empty()) {
    return 0;
  }
  const size_t words = cols.front().size();
  for (size_t w = 0; w < words; ++w) {
    for (int bit = 0; bit < 64; ++bit) {
      const uint64_t mask = uint64_t{1} << bit;
      auto pivot = std::find_if(cols.begin() + rank, cols.end(), [&](const auto& c) { return (c[w] & mask) != 0; });
      if (pivot == cols.end()) {
        continue;
      }
      std::iter_swap(cols.begin() + rank, pivot);
      for (auto it = cols.begin() + rank + 1; it != cols.end(); ++it) {
        if ((*it)[w] & mask) {
          for (size_t k = 0; k < words; ++k) {
            (*it)[k] ^= cols[rank][k];
          }
        }
      }
      ++rank;
    }
  }
  return rank;
}

int boundaryRank(const std::vector<Simplex>& faces, const std::vector<Simplex>& cofaces) {
  if (faces.empty() || cofaces.empty()) {
    return 0;
  }
  std::map<Simplex, size_t> row;
  for (size_t i = 0; i < faces.size(); ++i) {
    row[faces[i]] = i;
  }
  const size_t                       words = (faces.size() + 63) / 64;
  std::vector<std::vector<uint64_t>> cols;
  for (const auto& s : cofaces) {
    std::vector<uint64_t> col(words, 0);
    for (int drop = 0; drop < s.size; ++drop) {
      Simplex face;
      face.size = s.size - 1;
      for (int i = 0, j = 0; i < s.size; ++i) {
        if (i != drop) {
          face.v[j++] = s.v[i];
        }
      }
      auto it = row.find(face);
      if (it == row.end()) {
        throw DataError("subcomplex is not closed under faces");
      }
      col[it->second / 64] ^= uint64_t{1} << (it->second % 64);
    }
    cols.push_back(std::move(col));
  }
  return gf2Rank(std::move(cols));
}

}  // namespace

int bettiAt(const FilteredComplex& fc, int t, int k) {
  if (k < 0 || k > 1) {
    throw DataError("bettiAt supports dimensions 0 and 1");
  }
  std::vector<std::vector<Simplex>> byDim(4);
  for (const auto& s : fc.simplices) {
    if (s.value <= t) {
      byDim[s.simplex.dim()].push_back(s.simplex);
    }
  }
  const int cells   = static_cast<int>(byDim[k].size());
  const int rankIn  = k == 0 ? 0 : boundaryRank(byDim[k - 1], byDim[k]);
  const int rankOut = boundaryRank(byDim[k], byDim[k + 1]);
  return cells - rankIn - rankOut;
}

}  // namespace todd
