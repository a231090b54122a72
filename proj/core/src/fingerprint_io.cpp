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

#include "todd/fingerprint_io.h"

#include <bit>
#include <cstdio>
#include <cstring>

#include <json.hpp>

namespace todd {
namespace {

using nlohmann::json;

void putU32(std::string& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) {
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
}

void putU64(std::string& out, uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
}

void putBlob(std::string& out, const std::string& blob) {
  putU32(out, static_cast<uint32_t>(blob.size()));
  out += blob;
}

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  std::string_view take(size_t n, const char* what) {
    if (bytes_.size() - pos_ < n) {
      throw ParseError(std::string("fingerprint container truncated while reading ") + what);
    }
    auto out = bytes_.substr(pos_, n);
    pos_ += n;
    return out;
  }
  uint64_t uint(size_t width, const char* what) {
    auto     raw = take(width, what);
    uint64_t v   = 0;
    for (size_t i = 0; i < width; ++i) {
      v |= static_cast<uint64_t>(static_cast<unsigned char>(raw[i])) << (8 * i);
    }
    return v;
  }
  json blob(const char* what) {
    const auto n = uint(4, what);
    auto       text = take(n, what);
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("fingerprint container has invalid ") + what + ": " + e.what());
    }
  }
  bool atEnd() const { return pos_ == bytes_.size(); }

 private:
  std::string_view bytes_;
  size_t           pos_ = 0;
};

}  // namespace

std::string writeFingerprintContainer(const FingerprintLibrary& library) {
  std::string out(kFingerprintMagic);
  putU32(out, kFingerprintFormatVersion);
  putBlob(out, json::parse(library.specJson).dump());
  putU64(out, library.records.size());
  for (const auto& rec : library.records) {
    const auto& fp   = rec.fingerprint;
    json        tags = json::array();
    for (const auto& ch : fp.channels) {
      tags.push_back(ch.tag);
    }
    json meta = {{"id", fp.compoundId},
                 {"label", rec.label.toString()},
                 {"rows", fp.rows},
                 {"cols", fp.cols},
                 {"channels", std::move(tags)}};
    putBlob(out, meta.dump());
    for (const auto& ch : fp.channels) {
      if (ch.data.size() != static_cast<size_t>(fp.rows) * fp.cols) {
        throw DataError("channel '" + ch.tag + "' of '" + fp.compoundId + "' does not match its declared shape");
      }
      for (double v : ch.data) {
        putU64(out, std::bit_cast<uint64_t>(v));
      }
    }
  }
  return out;
}

FingerprintLibrary readFingerprintContainer(std::string_view bytes) {
  Reader r(bytes);
  if (r.take(kFingerprintMagic.size(), "magic") != kFingerprintMagic) {
    throw ParseError("not a fingerprint container (bad magic bytes)");
  }
  const auto version = r.uint(4, "version");
  if (version != kFingerprintFormatVersion) {
    throw ParseError("unsupported fingerprint container version " + std::to_string(version));
  }
  FingerprintLibrary lib;
  lib.specJson       = r.blob("spec header").dump();
  const auto records = r.uint(8, "record count");
  for (uint64_t i = 0; i < records; ++i) {
    const json meta = r.blob("record metadata");
    FingerprintRecord rec;
    try {
      rec.fingerprint.compoundId = meta.at("id").get<std::string>();
      rec.label                  = Label::parse(meta.at("label").get<std::string>());
      rec.fingerprint.rows       = meta.at("rows").get<int>();
      rec.fingerprint.cols       = meta.at("cols").get<int>();
      for (const auto& tag : meta.at("channels")) {
        rec.fingerprint.channels.push_back({tag.get<std::string>(), {}});
      }
    } catch (const json::exception& e) {
      throw ParseError(std::string("fingerprint record metadata: ") + e.what());
    }
    if (rec.fingerprint.rows < 0 || rec.fingerprint.cols < 0) {
      throw ParseError("fingerprint record has a negative shape");
    }
    const size_t count = static_cast<size_t>(rec.fingerprint.rows) * rec.fingerprint.cols;
    for (auto& ch : rec.fingerprint.channels) {
      ch.data.resize(count);
      for (auto& v : ch.data) {
        v = std::bit_cast<double>(r.uint(8, "values"));
      }
    }
    lib.records.push_back(std::move(rec));
  }
  if (!r.atEnd()) {
    throw ParseError("trailing bytes after the last fingerprint record");
  }
  return lib;
}

std::string fingerprintCsv(const FingerprintLibrary& library) {
  std::string out = "id,label,channel,row,values...\n";
  char        buf[64];
  for (const auto& rec : library.records) {
    const auto& fp = rec.fingerprint;
    for (const auto& ch : fp.channels) {
      for (int i = 0; i < fp.rows; ++i) {
        out += fp.compoundId + "," + rec.label.toString() + "," + ch.tag + "," + std::to_string(i);
        for (int j = 0; j < fp.cols; ++j) {
          std::snprintf(buf, sizeof(buf), ",%.17g", ch.data[static_cast<size_t>(i) * fp.cols + j]);
          out += buf;
        }
        out += "\n";
      }
    }
  }
  return out;
}

}  // namespace todd
