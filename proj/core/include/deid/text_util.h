// Copyright 2026 The dpdeid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DEID_TEXT_UTIL_H_
#define DEID_TEXT_UTIL_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace deid {

// Byte offset of every Unicode scalar value in a UTF-8 string, followed by
// text.size(). Entry i is where code point i starts, so the result has
// (code point count + 1) entries. Fails on malformed UTF-8.
absl::StatusOr<std::vector<std::size_t>> CodepointByteOffsets(
    std::string_view text);

// Number of Unicode scalar values in valid UTF-8 text. Bytes of malformed
// sequences count as one code point each.
std::size_t CodepointLength(std::string_view text);

// Decodes valid UTF-8 into code points; malformed bytes map to U+FFFD.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view codepoints);

// Strict whole-string number parsing (std::from_chars).
bool ParseInt(std::string_view text, int* out);
bool ParseInt64(std::string_view text, std::int64_t* out);
bool ParseDouble(std::string_view text, double* out);

std::string_view StripAsciiWhitespace(std::string_view text);
std::string AsciiLower(std::string_view text);

// Simple case folding covering ASCII, Latin-1 and the French ligatures.
std::string CaseFold(std::string_view text);

// Case-folds, collapses whitespace runs (including NBSP) to one space and
// trims both ends. Used for memoization keys and name lookups.
std::string CanonicalKey(std::string_view text);

}  // namespace deid

#endif  // DEID_TEXT_UTIL_H_
