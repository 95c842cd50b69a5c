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

#include "swatok/inventory.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <fmt/format.h>

#include "swatok/errors.h"

namespace swatok {
namespace {

// Swahili syllabic alphabet, 17 rows of 13 cells except row 15 (12 cells).
constexpr std::string_view kTable[] = {
    "mbwa", "mbwe", "mbwi", "ndwa", "ndwe", "ndwi", "ngwa", "ngwe", "ngwi", "njwa", "njwe", "njwi", "nywa",
    "nywe", "shwa", "shwe", "shwi", "chwa", "chwe", "chwi", "pwa",  "pwe",  "pwi",  "pwo",  "swa",  "swe",
    "swi",  "twa",  "twe",  "twi",  "zwa",  "zwe",  "zwi",  "cha",  "che",  "chi",  "cho",  "chu",  "dha",
    "dhe",  "dhi",  "dho",  "dhu",  "gha",  "ghe",  "ghi",  "gho",  "ghu",  "kha",  "khe",  "kho",  "khu",
    "mba",  "mbe",  "mbi",  "mbo",  "mbu",  "nda",  "nde",  "ndi",  "ndo",  "ndu",  "nga",  "nge",  "ngi",
    "ngo",  "ngu",  "ng’a", "ng’e", "ng’o", "nja", "nje", "nji", "njo", "nju", "nya", "nye", "nyi",
    "nyo",  "nyu",  "sha",  "she",  "shi",  "sho",  "shu",  "tha",  "the",  "thi",  "tho",  "thu",  "vya",
    "vye",  "vyo",  "bwa",  "bwe",  "bwi",  "gwa",  "gwe",  "gwi",  "jwa",  "jwe",  "jwi",  "kwa",  "kwe",
    "kwi",  "lwa",  "lwe",  "lwi",  "mwa",  "mwe",  "mwi",  "nza",  "nze",  "nzi",  "nzo",  "nzu",  "ba",
    "be",   "bi",   "bo",   "bu",   "da",   "de",   "di",   "do",   "du",   "fa",   "fe",   "fi",   "fo",
    "fu",   "ga",   "ge",   "gi",   "go",   "gu",   "ha",   "he",   "hi",   "ho",   "hu",   "ja",   "je",
    "ji",   "jo",   "ju",   "ka",   "ke",   "ki",   "ko",   "ku",   "la",   "le",   "li",   "lo",   "lu",
    "ma",   "me",   "mi",   "mo",   "mu",   "na",   "ne",   "ni",   "no",   "nu",   "pa",   "pe",   "pi",
    "po",   "pu",   "ra",   "re",   "ri",   "ro",   "ru",   "sa",   "se",   "si",   "so",   "su",   "ta",
    "te",   "ti",   "to",   "va",   "ve",   "vi",   "vo",   "vu",   "wa",   "we",   "wi",   "wo",
    "wu",   "ya",   "ye",   "yi",   "yo",   "yu",   "vu",   "za",   "ze",   "zi",   "zo",   "zu",   "a",
    "e",    "i",    "o",    "u",    "b",    "d",    "f",    "k",    "m",    "n",    "s",    "-",    "-",
};

constexpr std::string_view kPlaceholder = "-";

// UTF-8 spellings that fold to the canonical apostrophe.
constexpr std::string_view kApostropheVariants[] = {
    "’",  // right single quotation mark, used by the source table
    "‘",  // left single quotation mark
    "ʼ",  // modifier letter apostrophe
};

void ValidateShape(std::string_view entry, std::string_view raw) {
  auto fail = [&](std::string_view why) {
    throw MalformedEntry(fmt::format("malformed syllable '{}': {}", raw, why));
  };
  if (entry.empty()) fail("empty entry");
  std::size_t vowels = 0;
  std::size_t letters = 0;
  for (std::size_t i = 0; i < entry.size(); ++i) {
    const char c = entry[i];
    if (!IsSyllableAlphabet(c)) fail("character outside the Swahili alphabet");
    if (c == '\'') {
      // Only the velar nasal ng' carries an apostrophe.
      if (i != 2 || entry.substr(0, 2) != "ng" || i + 1 >= entry.size() ||
          !IsVowel(entry[i + 1])) {
        fail("apostrophe outside ng'V");
      }
      continue;
    }
    ++letters;
    if (IsVowel(c)) {
      ++vowels;
      if (i + 1 != entry.size()) fail("vowel not in final position");
    }
  }
  if (vowels > 1) fail("more than one vowel");
  if (vowels == 0 && letters != 1) fail("consonant-only entry longer than one letter");
  if (letters > kMaxSyllableLetters) fail("too many letters");
}

}  // namespace

std::span<const std::string_view> EmbeddedSyllableTable() { return kTable; }

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool IsSyllableAlphabet(char c) {
  if (c == '\'') return true;
  return c >= 'a' && c <= 'z' && c != 'q' && c != 'x';
}

std::string CanonicalizeSyllable(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  std::size_t i = 0;
  while (i < raw.size()) {
    bool folded = false;
    for (std::string_view variant : kApostropheVariants) {
      if (raw.substr(i, variant.size()) == variant) {
        out.push_back('\'');
        i += variant.size();
        folded = true;
        break;
      }
    }
    if (folded) continue;
    char c = raw[i++];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    out.push_back(c);
  }
  return out;
}

int SyllableInventory::EdgeOf(char c) {
  if (c >= 'a' && c <= 'z') return c - 'a';
  if (c == '\'') return 26;
  return -1;
}

void SyllableInventory::Add(std::string canonical) {
  if (nodes_.empty()) nodes_.emplace_back();
  std::int32_t node = 0;
  for (char c : canonical) {
    const int edge = EdgeOf(c);
    if (nodes_[node].next[edge] == kNone) {
      nodes_[node].next[edge] = static_cast<std::int32_t>(nodes_.size());
      nodes_.emplace_back();
    }
    node = nodes_[node].next[edge];
  }
  nodes_[node].entry = static_cast<std::int32_t>(entries_.size());
  entries_.push_back(std::move(canonical));
}

SyllableInventory SyllableInventory::FromCells(
    std::span<const std::string_view> cells, bool drop_placeholders) {
  SyllableInventory inventory;
  inventory.nodes_.emplace_back();
  std::unordered_map<std::string, std::string_view> seen;  // canonical -> raw
  for (std::string_view cell : cells) {
    if (cell == kPlaceholder) {
      if (!drop_placeholders) {
        throw PlaceholderInData("placeholder '-' found in syllable data");
      }
      ++inventory.dropped_placeholders_;
      continue;
    }
    std::string canonical = CanonicalizeSyllable(cell);
    ValidateShape(canonical, cell);
    if (auto it = seen.find(canonical); it != seen.end()) {
      if (it->second != cell) {
        throw DuplicateEntry(fmt::format(
            "syllable '{}' conflicts with earlier spelling '{}'", cell,
            it->second));
      }
      inventory.dropped_duplicates_.push_back(canonical);
      continue;
    }
    seen.emplace(canonical, cell);
    inventory.Add(std::move(canonical));
  }
  return inventory;
}

SyllableInventory SyllableInventory::LoadDefault() {
  SyllableInventory inventory = FromCells(kTable, /*drop_placeholders=*/true);
  if (inventory.size() != kInventorySize) {
    throw DataError(fmt::format("embedded inventory resolved to {} entries, expected {}",
                                inventory.size(), kInventorySize));
  }
  return inventory;
}

SyllableInventory SyllableInventory::Parse(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) {
      line.remove_prefix(1);
    }
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
      line.remove_suffix(1);
    }
    if (!line.empty()) lines.emplace_back(line);
    start = end + 1;
  }
  std::vector<std::string_view> cells(lines.begin(), lines.end());
  return FromCells(cells, /*drop_placeholders=*/false);
}

SyllableInventory SyllableInventory::LoadFromFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open inventory file '{}'", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

std::optional<std::size_t> SyllableInventory::IndexOf(std::string_view text) const {
  std::string canonical = CanonicalizeSyllable(text);
  std::int32_t node = 0;
  for (char c : canonical) {
    const int edge = EdgeOf(c);
    if (edge < 0) return std::nullopt;
    node = nodes_[node].next[edge];
    if (node == kNone) return std::nullopt;
  }
  if (nodes_[node].entry == kNone) return std::nullopt;
  return static_cast<std::size_t>(nodes_[node].entry);
}

bool SyllableInventory::Contains(std::string_view text) const {
  return IndexOf(text).has_value();
}

PrefixMatches SyllableInventory::AllPrefixMatches(std::string_view s) const {
  PrefixMatches found;
  std::array<PrefixMatch, kMaxSyllableChars> shortest_first{};
  std::size_t count = 0;
  std::int32_t node = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int edge = EdgeOf(s[i]);
    if (edge < 0) break;
    node = nodes_[node].next[edge];
    if (node == kNone) break;
    if (nodes_[node].entry != kNone && count < shortest_first.size()) {
      shortest_first[count++] = {static_cast<std::size_t>(nodes_[node].entry), i + 1};
    }
  }
  found.count = std::min(count, found.matches.size());
  for (std::size_t k = 0; k < found.count; ++k) {
    found.matches[k] = shortest_first[count - 1 - k];
  }
  return found;
}

std::optional<PrefixMatch> SyllableInventory::LongestPrefixMatch(std::string_view s) const {
  PrefixMatches all = AllPrefixMatches(s);
  if (all.count == 0) return std::nullopt;
  return all.matches[0];
}

}  // namespace swatok
