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

#ifndef TODD_VECTORIZE_H
#define TODD_VECTORIZE_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "todd/persistence.h"

namespace todd {

enum class VectorizationKind { BettiCurve, Landscape, Silhouette, EntropyCurve, PersistenceImage };

//! Single-persistence vectorization. Curves live on the integer grid 0..K
//! (Betti) or the half-integer grid 0, 0.5, ..., K (landscape, silhouette,
//! entropy). Images integrate a lifespan-weighted Gaussian surface over a
//! rows x cols pixel grid on [low, high]^2, birth along rows, death along columns.
struct VectorizationSpec {
  VectorizationKind     kind            = VectorizationKind::BettiCurve;
  int                   landscapeLevel  = 1;
  double                silhouettePower = 1.0;
  int                   imageRows       = 8;
  int                   imageCols       = 8;
  double                imageSigma      = 0.5;
  std::optional<double> imageLow;   //!< defaults to 0
  std::optional<double> imageHigh;  //!< defaults to kCap

  //! K+1 for Betti, 2(K+1)-1 for the half-grid curves, rows*cols for images.
  size_t      outputLength(int kCap) const;
  //! "betti", "landscape", "silhouette", "entropy" or "image".
  std::string name() const;
  static VectorizationSpec fromName(std::string_view name);

  bool operator==(const VectorizationSpec&) const = default;
};

using SPVector = std::vector<double>;

SPVector bettiCurve(const PersistenceDiagram& pd);
SPVector landscape(const PersistenceDiagram& pd, int level = 1);
SPVector silhouette(const PersistenceDiagram& pd, double power = 1.0);
SPVector entropyCurve(const PersistenceDiagram& pd);
//! Row-major rows x cols image.
SPVector persistenceImage(const PersistenceDiagram& pd, const VectorizationSpec& spec);

SPVector vectorize(const PersistenceDiagram& pd, const VectorizationSpec& spec);

}  // namespace todd

#endif  // TODD_VECTORIZE_H
