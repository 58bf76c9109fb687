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

#include "deid/text_util.h"

#include <charconv>

#include "absl/status/status.h"
#include "fmt/format.h"

namespace deid {
namespace {

// Length of the sequence introduced by lead byte b, or 0 if b cannot lead.
int SequenceLength(unsigned char b) {
  if (b < 0x80) return 1;
  if (b >= 0xC2 && b <= 0xDF) return 2;
  if (b >= 0xE0 && b <= 0xEF) return 3;
  if (b >= 0xF0 && b <= 0xF4) return 4;
  return 0;
}

// Decodes one scalar value at text[pos]; returns bytes consumed or 0.
int DecodeOne(std::string_view text, std::size_t pos, char32_t* out) {
  const auto lead = static_cast<unsigned char>(text[pos]);
  const int len = SequenceLength(lead);
  if (len == 0 || pos + len > text.size()) return 0;
  if (len == 1) {
    *out = lead;
    return 1;
  }
  char32_t cp = lead & (0xFF >> (len + 1));
  for (int i = 1; i < len; ++i) {
    const auto c = static_cast<unsigned char>(text[pos + i]);
    if ((c & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (c & 0x3F);
  }
  // Reject overlong forms, surrogates and values above U+10FFFF.
  if ((len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
      (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
    return 0;
  }
  *out = cp;
  return len;
}

void AppendUtf8(char32_t cp, std::string* out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

char32_t FoldCodepoint(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  if (cp == 0x152) return 0x153;  // Œ
  if (cp == 0x178) return 0xFF;   // Ÿ
  return cp;
}

bool IsSpace(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == U'\f' || cp == U'\v' || cp == 0xA0 || cp == 0x202F;
}

}  // namespace

absl::StatusOr<std::vector<std::size_t>> CodepointByteOffsets(
    std::string_view text) {
  std::vector<std::size_t> offsets;
  offsets.reserve(text.size() + 1);
  std::size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp;
    const int len = DecodeOne(text, pos, &cp);
    if (len == 0) {
      return absl::InvalidArgumentError(
          fmt::format("malformed UTF-8 at byte {}", pos));
    }
    offsets.push_back(pos);
    pos += len;
  }
  offsets.push_back(text.size());
  return offsets;
}

std::size_t CodepointLength(std::string_view text) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp;
    const int len = DecodeOne(text, pos, &cp);
    pos += len == 0 ? 1 : len;
    ++count;
  }
  return count;
}

std::u32string DecodeUtf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp;
    const int len = DecodeOne(text, pos, &cp);
    if (len == 0) {
      out.push_back(0xFFFD);
      ++pos;
    } else {
      out.push_back(cp);
      pos += len;
    }
  }
  return out;
}

std::string EncodeUtf8(std::u32string_view codepoints) {
  std::string out;
  out.reserve(codepoints.size());
  for (char32_t cp : codepoints) AppendUtf8(cp, &out);
  return out;
}

namespace {

template <typename T>
bool ParseWhole(std::string_view text, T* out) {
  text = StripAsciiWhitespace(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), *out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

bool ParseInt(std::string_view text, int* out) { return ParseWhole(text, out); }

bool ParseInt64(std::string_view text, std::int64_t* out) {
  return ParseWhole(text, out);
}

bool ParseDouble(std::string_view text, double* out) {
  return ParseWhole(text, out);
}

std::string_view StripAsciiWhitespace(std::string_view text) {
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  return text;
}

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string CaseFold(std::string_view text) {
  std::u32string cps = DecodeUtf8(text);
  for (char32_t& cp : cps) cp = FoldCodepoint(cp);
  return EncodeUtf8(cps);
}

std::string CanonicalKey(std::string_view text) {
  std::u32string out;
  bool pending_space = false;
  for (char32_t cp : DecodeUtf8(text)) {
    if (IsSpace(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(FoldCodepoint(cp));
  }
  return EncodeUtf8(out);
}

}  // namespace deid
