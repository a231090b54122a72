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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.h"
#include "todd/error.h"
#include "todd/fingerprint_io.h"
#include "todd/mpfingerprint.h"

namespace {

using namespace todd;

VectorizationSpec specOf(VectorizationKind kind) {
  VectorizationSpec s;
  s.kind = kind;
  return s;
}

const VectorizationSpec kBetti = specOf(VectorizationKind::BettiCurve);

const VectorizationKind kAllKinds[] = {VectorizationKind::BettiCurve, VectorizationKind::Landscape,
                                       VectorizationKind::Silhouette, VectorizationKind::EntropyCurve,
                                       VectorizationKind::PersistenceImage};

MolecularGraph ccoPath() {
  return oracle::moleculeFrom(3, {{0, 1}, {1, 2}}, {12.011, 12.011, 15.999}, "cco");
}

MolecularGraph withCharges(MolecularGraph g, const std::vector<double>& q) {
  auto atoms = g.atoms();
  for (size_t i = 0; i < atoms.size(); ++i) {
    atoms[i].partialCharge = q[i];
  }
  return MolecularGraph(g.id(), atoms, g.bonds(), g.label());
}

std::vector<std::vector<double>> rowsOf(const MPFingerprint2D& fp) {
  std::vector<std::vector<double>> out;
  for (int i = 0; i < fp.rows; ++i) {
    out.emplace_back(fp.row(i).begin(), fp.row(i).end());
  }
  return out;
}

MolecularGraph randomMolecule(std::mt19937_64& rng, int maxAtoms, const std::string& id = "r") {
  const int           n = 1 + static_cast<int>(rng() % maxAtoms);
  std::vector<double> masses(n), charges(n);
  const double        choices[] = {12.011, 14.007, 15.999, 32.06};
  for (int i = 0; i < n; ++i) {
    masses[i]  = choices[rng() % 4];
    charges[i] = static_cast<double>(static_cast<int>(rng() % 7) - 3) / 10.0;
  }
  return withCharges(oracle::moleculeFrom(n, oracle::randomEdges(rng, n, 0.35), masses, id), charges);
}

TEST(MPFingerprint2D, PathExample) {
  const auto g  = ccoPath();
  const auto t  = computeThresholds(vertexFilterValues(g, FilterFunction::atomicMass()), 0,
                                    ThresholdStrategy::UniqueValues);
  const auto fp = mpFingerprint2D(g, FilterFunction::atomicMass(), t, kBetti, 0, 2);
  EXPECT_EQ(rowsOf(fp), (std::vector<std::vector<double>>{{2, 1, 1}, {3, 1, 1}}));
  EXPECT_EQ(fp.rowThresholds, t);
  EXPECT_EQ(fp.spec.filter, "mass");
}

TEST(MPFingerprint2D, EmptyFirstLevelGivesZeroRow) {
  const auto fp = mpFingerprint2D(ccoPath(), FilterFunction::atomicMass(), ThresholdSet({1.0, 20.0}), kBetti, 0, 2);
  EXPECT_EQ(rowsOf(fp)[0], (std::vector<double>{0, 0, 0}));
  EXPECT_EQ(rowsOf(fp)[1], (std::vector<double>{3, 1, 1}));
}

TEST(MPFingerprint2D, ReducesToSinglePersistence) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g    = randomMolecule(rng, 9);
    const int  kCap = 1 + static_cast<int>(rng() % 4);
    const auto max  = vertexFilterValues(g, FilterFunction::atomicMass());
    const ThresholdSet top({*std::max_element(max.begin(), max.end())});
    std::vector<int>   all(g.numAtoms());
    std::iota(all.begin(), all.end(), 0);
    const auto whole = persistenceDiagrams(vrSlice(all, hopDistances(g), kCap));
    for (auto kind : kAllKinds) {
      for (int dim = 0; dim <= 1; ++dim) {
        const auto fp = mpFingerprint2D(g, FilterFunction::atomicMass(), top, specOf(kind), dim, kCap);
        ASSERT_EQ(fp.rows, 1);
        EXPECT_EQ(fp.data, vectorize(whole[dim], specOf(kind)));
      }
    }
  }
}

TEST(MPFingerprint2D, RowsMatchSliceOracleAndAreMonotone) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g    = randomMolecule(rng, 8);
    const int  kCap = 1 + static_cast<int>(rng() % 4);
    const auto f    = vertexFilterValues(g, FilterFunction::atomicMass());
    const auto t    = computeThresholds(f, 0, ThresholdStrategy::UniqueValues);
    std::vector<std::pair<int, int>> edges;
    for (const auto& b : g.bonds()) {
      edges.emplace_back(b.a, b.b);
    }
    const auto hops = oracle::floydHops(g.numAtoms(), edges);
    for (int dim = 0; dim <= 1; ++dim) {
      const auto fp = mpFingerprint2D(g, FilterFunction::atomicMass(), t, kBetti, dim, kCap);
      for (int i = 0; i < t.size(); ++i) {
        std::vector<int> vi;
        for (int v = 0; v < g.numAtoms(); ++v) {
          if (f[v] <= t[i]) {
            vi.push_back(v);
          }
        }
        for (int s = 0; s <= kCap; ++s) {
          ASSERT_EQ(fp.at(i, s), oracle::vrBetti(hops, vi, s, dim));
        }
        if (dim == 0) {
          EXPECT_EQ(fp.at(i, 0), static_cast<double>(vi.size()));
          if (i > 0) {
            EXPECT_GE(fp.at(i, 0), fp.at(i - 1, 0));
          }
        }
      }
    }
  }
}

TEST(MPFingerprint2D, PermutationInvariantAndDeterministic) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const auto       g = randomMolecule(rng, 10);
    const int        n = g.numAtoms();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Atom> atoms(n);
    for (int v = 0; v < n; ++v) {
      atoms[perm[v]] = g.atoms()[v];
    }
    std::vector<Bond> bonds;
    for (const auto& b : g.bonds()) {
      bonds.push_back({perm[b.a], perm[b.b], b.type});
    }
    const MolecularGraph h(g.id(), atoms, bonds);
    const auto t = computeThresholds(vertexFilterValues(g, FilterFunction::atomicMass()), 4,
                                     ThresholdStrategy::UniformRange);
    for (auto kind : kAllKinds) {
      for (int dim = 0; dim <= 1; ++dim) {
        const auto a = mpFingerprint2D(g, FilterFunction::atomicMass(), t, specOf(kind), dim, 3);
        EXPECT_EQ(a, mpFingerprint2D(h, FilterFunction::atomicMass(), t, specOf(kind), dim, 3));
        EXPECT_EQ(a, mpFingerprint2D(g, FilterFunction::atomicMass(), t, specOf(kind), dim, 3));
      }
    }
  }
}

TEST(MPFingerprint2D, MissingAttributePropagates) {
  EXPECT_THROW(mpFingerprint2D(ccoPath(), FilterFunction::partialCharge(), ThresholdSet({0.0}), kBetti, 0, 2),
               DataError);
}

TEST(MPFingerprint3D, ConstantSecondFilterRepeatsRows) {
  const auto g  = withCharges(ccoPath(), {0.1, 0.1, 0.1});
  const auto ft = ThresholdSet({12.011, 15.999});
  const auto fp = mpFingerprint3D(g, FilterFunction::atomicMass(), FilterFunction::partialCharge(), ft,
                                  ThresholdSet({0.1, 0.2}), kBetti, 0, 2);
  const auto two = mpFingerprint2D(g, FilterFunction::atomicMass(), ft, kBetti, 0, 2);
  for (int i = 0; i < fp.m; ++i) {
    for (int j = 0; j < fp.n; ++j) {
      EXPECT_TRUE(std::equal(fp.floor(i, j).begin(), fp.floor(i, j).end(), two.row(i).begin()));
    }
  }
  const auto single = mpFingerprint3D(g, FilterFunction::atomicMass(), FilterFunction::partialCharge(), ft,
                                      ThresholdSet({0.1}), kBetti, 0, 2);
  EXPECT_EQ(single.data, two.data);
}

TEST(MPFingerprint3D, CellByCellOracle) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g    = randomMolecule(rng, 7);
    const int  kCap = 1 + static_cast<int>(rng() % 3);
    const auto f    = vertexFilterValues(g, FilterFunction::atomicMass());
    const auto q    = vertexFilterValues(g, FilterFunction::partialCharge());
    const auto ft   = computeThresholds(f, 0, ThresholdStrategy::UniqueValues);
    const auto gt   = computeThresholds(q, 0, ThresholdStrategy::UniqueValues);
    std::vector<std::pair<int, int>> edges;
    for (const auto& b : g.bonds()) {
      edges.emplace_back(b.a, b.b);
    }
    const auto hops = oracle::floydHops(g.numAtoms(), edges);
    const int  dim  = trial % 2;
    const auto fp   = mpFingerprint3D(g, FilterFunction::atomicMass(), FilterFunction::partialCharge(), ft, gt,
                                      kBetti, dim, kCap);
    for (int i = 0; i < fp.m; ++i) {
      for (int j = 0; j < fp.n; ++j) {
        std::vector<int> cell;
        for (int v = 0; v < g.numAtoms(); ++v) {
          if (f[v] <= ft[i] && q[v] <= gt[j]) {
            cell.push_back(v);
          }
        }
        for (int s = 0; s <= kCap; ++s) {
          ASSERT_EQ(fp.floor(i, j)[s], oracle::vrBetti(hops, cell, s, dim));
        }
      }
    }
  }
}

//! Betti entries of a sublevel-both or weight-first row against clique Betti numbers.
TEST(MPSublevelBoth, MatchesCliqueOracle) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 80; ++trial) {
    const auto g  = randomMolecule(rng, 8);
    const int  n  = g.numAtoms();
    const auto f  = vertexFilterValues(g, FilterFunction::atomicMass());
    const auto q  = vertexFilterValues(g, FilterFunction::partialCharge());
    const auto ft = computeThresholds(f, 0, ThresholdStrategy::UniqueValues);
    const auto gt = computeThresholds(q, 0, ThresholdStrategy::UniqueValues);
    oracle::AdjMatrix adj(n, std::vector<bool>(n, false));
    for (const auto& b : g.bonds()) {
      adj[b.a][b.b] = adj[b.b][b.a] = true;
    }
    for (int dim = 0; dim <= 1; ++dim) {
      const auto fp = mpSublevelBoth(g, FilterFunction::atomicMass(), FilterFunction::partialCharge(), ft, gt, kBetti,
                                     dim);
      ASSERT_EQ(fp.rows, ft.size());
      ASSERT_EQ(fp.cols, gt.size());
      const auto bb = bigradedBetti(g, FilterFunction::atomicMass(), FilterFunction::partialCharge(), ft, gt, dim);
      for (int i = 0; i < ft.size(); ++i) {
        for (int j = 0; j < gt.size(); ++j) {
          std::vector<bool> mask(n);
          for (int v = 0; v < n; ++v) {
            mask[v] = f[v] <= ft[i] && q[v] <= gt[j];
          }
          const int expected = oracle::cliqueBetti(adj, mask, dim);
          ASSERT_EQ(fp.at(i, j), expected);
          ASSERT_EQ(bb.at(i, j), expected);
        }
      }
    }
  }
}

TEST(MPSublevelBoth, IdenticalFunctionsTruncateOneFiltration) {
  const auto g = oracle::moleculeFrom(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {1, 2, 3, 4});
  const auto t = ThresholdSet({1, 2, 3, 4});
  const auto fp = mpSublevelBoth(g, FilterFunction::atomicMass(), FilterFunction::atomicMass(), t, t, kBetti, 0);
  const auto full = persistenceDiagrams(
      sublevelIndexFiltration(g.topology(), vertexFilterValues(g, FilterFunction::atomicMass()), t));
  // Last row is the untruncated filtration.
  const auto last = bettiCurve(full.dim0);
  EXPECT_TRUE(std::equal(last.begin(), last.end(), fp.row(3).begin()));
  // Row 0 keeps only vertex 0: one component from index 0 on.
  EXPECT_EQ(rowsOf(fp)[0], (std::vector<double>{1, 1, 1, 1}));
}

TEST(MPWeightFirst, Examples) {
  const auto g = oracle::moleculeFrom(3, {{0, 1}, {1, 2}}, {12, 14, 16});
  const std::vector<double> w{1, 2};
  const auto                gt = ThresholdSet({12, 14, 16});
  const auto rows = mpWeightFirst(g, w, ThresholdSet({1, 2}), FilterFunction::atomicMass(), gt, kBetti, 0);
  // G_1 keeps edge 0-1: components at indices 0,1,2 are {0}, {01}, {01, 2}.
  EXPECT_EQ(rowsOf(rows)[0], (std::vector<double>{1, 1, 2}));
  EXPECT_EQ(rowsOf(rows)[1], (std::vector<double>{1, 1, 1}));

  const auto single = mpWeightFirst(g, w, ThresholdSet({2}), FilterFunction::atomicMass(), gt, kBetti, 0);
  const auto plain  = persistenceDiagrams(
      sublevelIndexFiltration(g.topology(), vertexFilterValues(g, FilterFunction::atomicMass()), gt));
  EXPECT_EQ(single.data, bettiCurve(plain.dim0));

  const std::vector<double> same{1, 1};
  const auto flat = mpWeightFirst(g, same, ThresholdSet({1, 2, 3}), FilterFunction::atomicMass(), gt, kBetti, 0);
  EXPECT_EQ(rowsOf(flat)[0], rowsOf(flat)[1]);
  EXPECT_EQ(rowsOf(flat)[1], rowsOf(flat)[2]);
}

TEST(BigradedBetti, Examples) {
  const auto g = oracle::moleculeFrom(5, {{0, 1}, {2, 3}}, {1, 1, 1, 1, 1});
  const auto c = bigradedBetti(g, FilterFunction::atomicMass(), FilterFunction::atomicMass(), ThresholdSet({1}),
                               ThresholdSet({1, 2}), 0);
  EXPECT_EQ(c.data, (std::vector<int>{3, 3}));
  const auto e = bigradedBetti(g, FilterFunction::atomicMass(), FilterFunction::atomicMass(), ThresholdSet({0.5}),
                               ThresholdSet({1}), 0);
  EXPECT_EQ(e.at(0, 0), 0);
}

TEST(WeightVr, ShapeAndBondWeights) {
  const auto g = parseGraphJson(R"({"id":"x","atoms":[{"element":"C"},{"element":"C"},{"element":"O"}],
      "bonds":[[0,1,2],[1,2,1]]})");
  const auto slices = weightVrSliceDiagrams(g, bondTypeWeights(g), ThresholdSet({1, 2, 3, 4}), 2);
  ASSERT_EQ(slices.slices.size(), 4u);
  // G_1 has only the single bond 1-2: vertex 0 isolated.
  EXPECT_EQ(bettiCurve(slices.slices[0].dim0), (SPVector{3, 2, 2}));
  EXPECT_EQ(bettiCurve(slices.slices[1].dim0), (SPVector{3, 1, 1}));
}

TEST(MultimodalStack, ResamplingAndOrder) {
  auto make = [](Modality m, int rows, int cols, int dim, double base) {
    MPFingerprint2D fp;
    fp.rows     = rows;
    fp.cols     = cols;
    fp.spec.dim = dim;
    for (int i = 0; i < rows * cols; ++i) {
      fp.data.push_back(base + i);
    }
    return ModalityFingerprint{"c1", m, fp};
  };
  const auto one = multimodalStack({make(Modality::Mass, 2, 3, 0, 0)});
  ASSERT_EQ(one.channels.size(), 1u);
  EXPECT_EQ(one.channels[0].data, (std::vector<double>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(one.channels[0].tag, "mass:H0");

  const auto mm = multimodalStack(
      {make(Modality::Bond, 4, 3, 0, 100), make(Modality::Mass, 8, 3, 1, 0), make(Modality::Charge, 5, 3, 0, 50)});
  EXPECT_EQ(mm.rows, 8);
  EXPECT_EQ(mm.cols, 3);
  ASSERT_EQ(mm.channels.size(), 3u);
  EXPECT_EQ(mm.channels[0].tag, "mass:H1");
  EXPECT_EQ(mm.channels[1].tag, "charge:H0");
  EXPECT_EQ(mm.channels[2].tag, "bond:H0");
  // Nearest neighbour: destination row i reads source row floor(i * src / dst).
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(mm.channels[2].data[i * 3 + j], 100 + (i * 4 / 8) * 3 + j);
      EXPECT_EQ(mm.channels[1].data[i * 3 + j], 50 + (i * 5 / 8) * 3 + j);
    }
  }
  const auto fixed = multimodalStack({make(Modality::Mass, 4, 4, 0, 0)}, 2, 2);
  EXPECT_EQ(fixed.channels[0].data, (std::vector<double>{0, 2, 8, 10}));

  EXPECT_THROW(multimodalStack({make(Modality::Mass, 2, 3, 0, 0), make(Modality::Mass, 2, 3, 0, 1)}), DataError);
  auto other       = make(Modality::Bond, 2, 3, 0, 0);
  other.compoundId = "c2";
  EXPECT_THROW(multimodalStack({make(Modality::Mass, 2, 3, 0, 0), other}), DataError);
}

TEST(FingerprintIo, RoundTripAndCorruption) {
  FingerprintLibrary lib;
  lib.specJson = R"({"kcap":3})";
  std::mt19937_64 rng(3);
  for (int c = 0; c < 5; ++c) {
    MultiModalFingerprint fp{"cmp" + std::to_string(c), 2, 3, {}};
    for (const char* tag : {"mass:H0", "bond:H1"}) {
      Channel ch{tag, {}};
      for (int k = 0; k < 6; ++k) {
        ch.data.push_back(std::ldexp(static_cast<double>(rng() % 100000), -7) - 3.0);
      }
      fp.channels.push_back(ch);
    }
    lib.records.push_back({fp, c % 2 ? Label::active("T") : Label::decoy()});
  }
  const auto bytes = writeFingerprintContainer(lib);
  EXPECT_EQ(bytes.substr(0, 8), std::string(kFingerprintMagic));
  EXPECT_EQ(readFingerprintContainer(bytes), lib);
  EXPECT_EQ(writeFingerprintContainer(readFingerprintContainer(bytes)), bytes);

  EXPECT_THROW(readFingerprintContainer("NOTMAGIC" + bytes.substr(8)), ParseError);
  EXPECT_THROW(readFingerprintContainer(bytes.substr(0, bytes.size() - 3)), ParseError);
  EXPECT_THROW(readFingerprintContainer(bytes + "x"), ParseError);

  const auto csv   = fingerprintCsv(lib);
  const auto lines = std::count(csv.begin(), csv.end(), '\n');
  EXPECT_EQ(lines, 1 + 5 * 2 * 2);  // header + compound x channel x row
}

}  // namespace
