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

#ifndef SWATOK_INVENTORY_H_
#define SWATOK_INVENTORY_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace swatok {

// Number of distinct syllables in the embedded table after dropping the two
// "-" grid placeholders and the repeated "vu". The table's caption announces
// 219; the grid itself only holds 217 distinct entries.
inline constexpr std::size_t kInventorySize = 217;

// Count announced by the table caption. Kept for reporting the discrepancy.
inline constexpr std::size_t kDocumentedInventorySize = 219;

// Entry bounds: at most four letters plus an optional apostrophe.
inline constexpr std::size_t kMaxSyllableLetters = 4;
inline constexpr std::size_t kMaxSyllableChars = kMaxSyllableLetters + 1;

// Raw cells of the syllable table in row-major order, placeholders and
// duplicates included. Uses the typographic apostrophe of the source.
std::span<const std::string_view> EmbeddedSyllableTable();

// True for the letters and the canonical apostrophe that may appear in a
// syllable entry. 'q' and 'x' are not part of the Swahili alphabet.
bool IsSyllableAlphabet(char c);

bool IsVowel(char c);

struct PrefixMatch {
  std::size_t index = 0;   // position in canonical order
  std::size_t length = 0;  // in characters of the normalized form
  friend bool operator==(const PrefixMatch&, const PrefixMatch&) = default;
};

// Up to kMaxSyllableChars inventory entries sharing a start position,
// longest first.
struct PrefixMatches {
  std::array<PrefixMatch, kMaxSyllableChars> matches{};
  std::size_t count = 0;

  std::span<const PrefixMatch> view() const { return {matches.data(), count}; }
};

// The canonical Swahili syllable set plus a prefix index over it. Immutable
// after construction; safe to share between threads.
class SyllableInventory {
 public:
  // Loads the embedded table, validating every entry and the pinned count.
  static SyllableInventory LoadDefault();

  // Loads an override file: one syllable per line, '#' starts a comment.
  static SyllableInventory LoadFromFile(const std::filesystem::path& path);

  // Parses override text with the same rules as LoadFromFile.
  static SyllableInventory Parse(std::string_view text);

  // Builds from raw cells. Placeholders are dropped only when
  // `drop_placeholders` is set; otherwise they raise PlaceholderInData.
  static SyllableInventory FromCells(std::span<const std::string_view> cells,
                                     bool drop_placeholders);

  std::size_t size() const { return entries_.size(); }
  std::span<const std::string> entries() const { return entries_; }
  const std::string& entry(std::size_t index) const { return entries_[index]; }

  // `text` is expected in normalized form. Typographic apostrophes are
  // accepted too.
  bool Contains(std::string_view text) const;
  std::optional<std::size_t> IndexOf(std::string_view text) const;

  // Longest entry that is a prefix of `s`, or nullopt.
  std::optional<PrefixMatch> LongestPrefixMatch(std::string_view s) const;

  // Every entry that is a prefix of `s`, longest first.
  PrefixMatches AllPrefixMatches(std::string_view s) const;

  // Entries dropped while loading because they repeated an earlier one.
  std::span<const std::string> dropped_duplicates() const {
    return dropped_duplicates_;
  }
  std::size_t dropped_placeholders() const { return dropped_placeholders_; }

 private:
  static constexpr int kEdges = 27;  // a-z and the apostrophe
  static constexpr std::int32_t kNone = -1;

  struct Node {
    std::array<std::int32_t, kEdges> next;
    std::int32_t entry = kNone;
    Node() { next.fill(kNone); }
  };

  SyllableInventory() = default;
  void Add(std::string canonical);
  static int EdgeOf(char c);

  std::vector<std::string> entries_;
  std::vector<Node> nodes_;
  std::vector<std::string> dropped_duplicates_;
  std::size_t dropped_placeholders_ = 0;
};

// Maps the typographic apostrophes to the canonical one and lowercases ASCII.
// Used for inventory entries and membership queries.
std::string CanonicalizeSyllable(std::string_view raw);

}  // namespace swatok

#endif  // SWATOK_INVENTORY_H_
