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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "segmentation_oracle.h"
#include "swatok/errors.h"

namespace swatok {
namespace {

const SyllableInventory& Default() {
  static const SyllableInventory inventory = SyllableInventory::LoadDefault();
  return inventory;
}

TEST(InventoryTest, EmbeddedTableResolvesToPinnedCount) {
  EXPECT_EQ(EmbeddedSyllableTable().size(), 220u);
  EXPECT_EQ(Default().size(), kInventorySize);
  EXPECT_EQ(kInventorySize, 217u);
  EXPECT_EQ(Default().dropped_placeholders(), 2u);
  ASSERT_EQ(Default().dropped_duplicates().size(), 1u);
  EXPECT_EQ(Default().dropped_duplicates()[0], "vu");
}

TEST(InventoryTest, KnownMembers) {
  for (const char* s : {"mbwa", "ng’a", "ng'a", "a", "m", "ndwe", "ku", "la", "kha"}) {
    EXPECT_TRUE(Default().Contains(s)) << s;
  }
  EXPECT_FALSE(Default().Contains("xe"));
  EXPECT_FALSE(Default().Contains("tu"));  // absent from the source grid
  EXPECT_FALSE(Default().Contains("ng'i"));
  EXPECT_FALSE(Default().Contains(""));
  EXPECT_FALSE(Default().Contains("-"));
}

TEST(InventoryTest, VowelsAndStandaloneConsonantsPresent) {
  for (const char* s : {"a", "e", "i", "o", "u", "b", "d", "f", "k", "m", "n", "s"}) {
    EXPECT_TRUE(Default().Contains(s)) << s;
  }
}

TEST(InventoryTest, CanonicalOrderIsRowMajor) {
  EXPECT_EQ(Default().entry(0), "mbwa");
  EXPECT_EQ(Default().entry(1), "mbwe");
  EXPECT_EQ(*Default().IndexOf("ng’a"), *Default().IndexOf("ng'a"));
  EXPECT_EQ(Default().entries().back(), "s");
  EXPECT_LT(*Default().IndexOf("vu"), *Default().IndexOf("wu"));
}

TEST(InventoryTest, NoDuplicatesByPairwiseScan) {
  const auto entries = Default().entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      ASSERT_NE(entries[i], entries[j]) << i << " " << j;
    }
  }
}

TEST(InventoryTest, MatchesOracleEntrySet) {
  const auto oracle = testing::OracleEntries();
  ASSERT_EQ(oracle.size(), Default().size());
  for (std::size_t i = 0; i < oracle.size(); ++i) EXPECT_EQ(oracle[i], Default().entry(i));
}

TEST(InventoryTest, EntryShapes) {
  for (const std::string& e : Default().entries()) {
    std::size_t vowels = 0;
    for (char c : e) vowels += IsVowel(c);
    if (vowels == 0) {
      EXPECT_EQ(e.size(), 1u) << e;
    } else {
      EXPECT_EQ(vowels, 1u) << e;
      EXPECT_TRUE(IsVowel(e.back())) << e;
    }
  }
}

TEST(InventoryTest, LoadIsIdempotent) {
  const SyllableInventory again = SyllableInventory::LoadDefault();
  ASSERT_EQ(again.size(), Default().size());
  EXPECT_TRUE(std::equal(again.entries().begin(), again.entries().end(),
                         Default().entries().begin()));
}

TEST(InventoryTest, LongestPrefixMatchExamples) {
  auto m = Default().LongestPrefixMatch("anakula");
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(Default().entry(m->index), "a");
  EXPECT_EQ(m->length, 1u);

  m = Default().LongestPrefixMatch("ndwele");
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(Default().entry(m->index), "ndwe");
  EXPECT_EQ(m->length, 4u);

  EXPECT_FALSE(Default().LongestPrefixMatch("xyz").has_value());
  EXPECT_FALSE(Default().LongestPrefixMatch("").has_value());
}

TEST(InventoryTest, AllPrefixMatchesLongestFirst) {
  const PrefixMatches m = Default().AllPrefixMatches("ngwe");
  std::vector<std::string> found;
  for (const PrefixMatch& p : m.view()) found.push_back(Default().entry(p.index));
  EXPECT_EQ(found, (std::vector<std::string>{"ngwe", "n"}));
}

// Brute-force scan of every entry against the trie answer.
TEST(InventoryTest, LongestPrefixMatchAgreesWithLinearScan) {
  std::mt19937_64 rng(7);
  const std::string alphabet = "abcdefghijklmnoprstuvwyz'";
  for (int trial = 0; trial < 5000; ++trial) {
    std::string s;
    const std::size_t len = rng() % 7;
    for (std::size_t i = 0; i < len; ++i) s += alphabet[rng() % alphabet.size()];
    std::size_t best = 0;
    for (const std::string& e : Default().entries()) {
      if (s.starts_with(e)) best = std::max(best, e.size());
    }
    const auto m = Default().LongestPrefixMatch(s);
    if (best == 0) {
      EXPECT_FALSE(m.has_value()) << s;
    } else {
      ASSERT_TRUE(m.has_value()) << s;
      EXPECT_EQ(m->length, best) << s;
      EXPECT_TRUE(s.starts_with(Default().entry(m->index)));
    }
  }
}

TEST(InventoryTest, PrefixPropertyForEveryEntry) {
  std::mt19937_64 rng(11);
  for (const std::string& e : Default().entries()) {
    for (int k = 0; k < 5; ++k) {
      std::string s = e + Default().entry(rng() % Default().size());
      const auto m = Default().LongestPrefixMatch(s);
      ASSERT_TRUE(m.has_value());
      EXPECT_GE(m->length, e.size()) << s;
      EXPECT_TRUE(Default().Contains(Default().entry(m->index)));
    }
  }
}

TEST(InventoryTest, OverrideFileParsing) {
  const SyllableInventory inv = SyllableInventory::Parse(
      "# tiny inventory\n"
      "ku\n"
      "  la  # trailing comment\n"
      "\n"
      "NG’A\n"
      "ku\n");
  ASSERT_EQ(inv.size(), 3u);
  EXPECT_EQ(inv.entry(2), "ng'a");
  EXPECT_EQ(inv.dropped_duplicates().size(), 1u);
}

TEST(InventoryTest, OverrideErrors) {
  EXPECT_THROW(SyllableInventory::Parse("ku\n-\n"), PlaceholderInData);
  EXPECT_THROW(SyllableInventory::Parse("xe\n"), MalformedEntry);
  EXPECT_THROW(SyllableInventory::Parse("k1\n"), MalformedEntry);
  EXPECT_THROW(SyllableInventory::Parse("kua\n"), MalformedEntry);   // two vowels
  EXPECT_THROW(SyllableInventory::Parse("kl\n"), MalformedEntry);    // consonant cluster, no vowel
  EXPECT_THROW(SyllableInventory::Parse("ak\n"), MalformedEntry);    // vowel not final
  EXPECT_THROW(SyllableInventory::Parse("nd'a\n"), MalformedEntry);  // apostrophe outside ng'
  EXPECT_THROW(SyllableInventory::Parse("ng’a\nng'a\n"), DuplicateEntry);
  EXPECT_THROW(SyllableInventory::LoadFromFile("/nonexistent/inventory.txt"), IoError);
}

}  // namespace
}  // namespace swatok
