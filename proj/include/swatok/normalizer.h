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

#ifndef SWATOK_NORMALIZER_H_
#define SWATOK_NORMALIZER_H_

#include <string>
#include <string_view>
#include <vector>

namespace swatok {

inline constexpr char kCanonicalApostrophe = '\'';

// Stands in for each unknown character when they are kept rather than
// removed. Decoding renders UNK ids with the same character.
inline constexpr char kUnknownMarker = '?';

enum class UnknownChars {
  kRemove,  // drop characters outside a-z and the apostrophe
  kMark,    // replace each of them with kUnknownMarker
};

// NFC, lowercase, canonical apostrophe, whitespace runs collapsed to one
// space and trimmed. Everything else outside a-z is removed or marked.
// The result is pure ASCII.
std::string Normalize(std::string_view utf8, UnknownChars mode = UnknownChars::kRemove);

// Splits on whitespace; empty pieces are skipped.
std::vector<std::string_view> PreTokenize(std::string_view normalized);

}  // namespace swatok

#endif  // SWATOK_NORMALIZER_H_
