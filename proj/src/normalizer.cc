// Copyright 2026 The swatok Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swatok/normalizer.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "swatok/errors.h"

namespace swatok {
namespace {

bool IsApostrophe(UChar32 c) {
  return c == 0x0027 || c == 0x2019 || c == 0x2018 || c == 0x02BC;
}

// Appends one already-lowercased code point.
class Builder {
 public:
  Builder(std::string& out, UnknownChars mode) : out_(out), mode_(mode) {}

  void Push(UChar32 c) {
    if (c >= 'a' && c <= 'z') {
      FlushSpace();
      out_.push_back(static_cast<char>(c));
    } else if (IsApostrophe(c)) {
      FlushSpace();
      out_.push_back(kCanonicalApostrophe);
    } else if (c < 0x80 ? (c == ' ' || (c >= '\t' && c <= '\r')) : u_isUWhiteSpace(c)) {
      pending_space_ = !out_.empty();
    } else if (mode_ == UnknownChars::kMark) {
      FlushSpace();
      out_.push_back(kUnknownMarker);
    }
  }

 private:
  void FlushSpace() {
    if (pending_space_) out_.push_back(' ');
    pending_space_ = false;
  }

  std::string& out_;
  UnknownChars mode_;
  bool pending_space_ = false;
};

bool IsAscii(std::string_view s) {
  for (unsigned char c : s) {
    if (c >= 0x80) return false;
  }
  return true;
}

}  // namespace

std::string Normalize(std::string_view utf8, UnknownChars mode) {
  std::string out;
  out.reserve(utf8.size());
  Builder builder(out, mode);

  if (IsAscii(utf8)) {
    for (char ch : utf8) {
      UChar32 c = static_cast<unsigned char>(ch);
      if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
      builder.Push(c);
    }
    return out;
  }

  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw DataError("ICU NFC normalizer unavailable");
  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  icu::UnicodeString composed = nfc->normalize(text, status);
  if (U_FAILURE(status)) throw DataError("NFC normalization failed");
  composed.toLower(icu::Locale::getRoot());
  // Lowercasing can emit decomposed sequences (e.g. U+0130).
  composed = nfc->normalize(composed, status);
  if (U_FAILURE(status)) throw DataError("NFC normalization failed");

  for (int32_t i = 0; i < composed.length();) {
    const UChar32 c = composed.char32At(i);
    builder.Push(c);
    i += U16_LENGTH(c);
  }
  return out;
}

std::vector<std::string_view> PreTokenize(std::string_view normalized) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  const std::size_t n = normalized.size();
  auto is_space = [](char c) { return c == ' ' || (c >= '\t' && c <= '\r'); };
  while (i < n) {
    while (i < n && is_space(normalized[i])) ++i;
    const std::size_t start = i;
    while (i < n && !is_space(normalized[i])) ++i;
    if (i > start) words.push_back(normalized.substr(start, i - start));
  }
  return words;
}

}  // namespace swatok
