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

#ifndef TODD_ERROR_H
#define TODD_ERROR_H

#include <stdexcept>
#include <string>

namespace todd {

//! Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! Malformed input bytes (SDF, JSON, fingerprint containers).
class ParseError : public Error {
 public:
  using Error::Error;
};

//! Input parsed but violates a data-model or precondition contract.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace todd

#endif  // TODD_ERROR_H
