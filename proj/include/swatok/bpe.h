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

#ifndef SWATOK_BPE_H_
#define SWATOK_BPE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "swatok/word_tokenizer.h"

namespace swatok {

inline constexpr std::string_view kBpeUnknown = "[UNK]";

struct MergeRule {
  std::string left;
  std::string right;

  std::string merged() const { return left + right; }
  friend bool operator==(const MergeRule&, const MergeRule&) = default;
};

// Learned state of character-level BPE: the base alphabet and the merges in
// training order.
class MergeTable {
 public:
  MergeTable() = default;
  MergeTable(std::vector<std::string> alphabet, std::vector<MergeRule> merges);

  std::span<const std::string> alphabet() const { return alphabet_; }
  std::span<const MergeRule> merges() const { return merges_; }

  // Distinct symbols: alphabet plus every merge result.
  std::size_t vocab_size() const { return symbol_count_; }
  bool InAlphabet(std::string_view ch) const;

  // File format: "#alphabet" line listing the base characters, then one
  // "left right" merge per line.
  void Write(std::ostream& out) const;
  static MergeTable Read(std::istream& in);
  void Save(const std::filesystem::path& path) const;
  static MergeTable Load(const std::filesystem::path& path);

  friend bool operator==(const MergeTable& a, const MergeTable& b) {
    return a.alphabet_ == b.alphabet_ && a.merges_ == b.merges_;
  }

 private:
  void Check();

  std::vector<std::string> alphabet_;  // sorted
  std::vector<MergeRule> merges_;
  std::size_t symbol_count_ = 0;
};

// Splits UTF-8 text into code points.
std::vector<std::string> SplitCodePoints(std::string_view word);

// Counts whitespace-separated words over all lines, in first-seen order.
std::vector<std::pair<std::string, std::uint64_t>> CountWords(std::span<const std::string> lines);

// Repeatedly merges the most frequent adjacent pair (weighted by word
// frequency, never across words) until `target_vocab_size` distinct symbols
// exist or no pair occurs at least twice. Ties go to the lexicographically
// smallest (left, right). Throws EmptyCorpus, or InvalidArgument when the
// target does not exceed the base alphabet.
MergeTable TrainBpe(std::span<const std::string> lines, std::size_t target_vocab_size);

// Characters first, then every merge applied in table order. Characters
// outside the alphabet become kBpeUnknown and never merge.
std::vector<Piece> TokenizeBpe(const MergeTable& table, std::string_view word);

class BpeTokenizer : public WordTokenizer {
 public:
  explicit BpeTokenizer(MergeTable table);

  const MergeTable& table() const { return table_; }

  std::string_view name() const override { return "bpe"; }
  void TokenizeWord(std::string_view word, std::vector<Piece>& out) const override;
  std::size_t vocab_size() const override { return table_.vocab_size(); }

 private:
  MergeTable table_;
  // "left\0right" -> ascending ranks of that pair in the table.
  std::unordered_map<std::string, std::vector<std::size_t>> rank_lookup_;
};

}  // namespace swatok

#endif  // SWATOK_BPE_H_
