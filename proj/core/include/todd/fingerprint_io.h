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

#ifndef TODD_FINGERPRINT_IO_H
#define TODD_FINGERPRINT_IO_H

#include <string>
#include <string_view>
#include <vector>

#include "todd/molgraph.h"
#include "todd/mpfingerprint.h"

namespace todd {

struct FingerprintRecord {
  MultiModalFingerprint fingerprint;
  Label                 label;

  bool operator==(const FingerprintRecord&) const = default;
};

struct FingerprintLibrary {
  std::string                    specJson = "{}";  //!< JSON object describing how the records were built
  std::vector<FingerprintRecord> records;

  bool operator==(const FingerprintLibrary&) const = default;
};

//! Binary container, all integers and reals little-endian:
//!   magic "TODDMPF\0" | u32 version (=1) | u32 n + n bytes spec JSON | u64 record count
//!   per record: u32 n + n bytes metadata JSON {id, label, rows, cols, channels}
//!               then channels * rows * cols float64, channel-major then row-major.
inline constexpr std::string_view kFingerprintMagic{"TODDMPF\0", 8};
inline constexpr uint32_t         kFingerprintFormatVersion = 1;

std::string        writeFingerprintContainer(const FingerprintLibrary& library);
FingerprintLibrary readFingerprintContainer(std::string_view bytes);

//! One line per (compound, channel, row): id,label,channel,row,v0,v1,...
std::string fingerprintCsv(const FingerprintLibrary& library);

}  // namespace todd

#endif  // TODD_FINGERPRINT_IO_H
