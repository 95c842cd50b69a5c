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

#ifndef SWATOK_WORDPIECE_H_
#define SWATOK_WORDPIECE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "swatok/word_tokenizer.h"

namespace swatok {

inline constexpr std::string_view kContinuationPrefix = "##";
inline constexpr std::string_view kWordPieceUnknown = "[UNK]";

// Frequencies behind the merge score count(ab) / (count(a) * count(b)).
struct PairScore {
  std::uint64_t pair_count = 0;
  std::uint64_t left_count = 0;
  std::uint64_t right_count = 0;

  double value() const {
    return static_cast<double>(pair_count) /
           (static_cast<double>(left_count) * static_cast<double>(right_count));
  }
};

// Exact comparison of two scores by cross-multiplication: <0, 0 or >0.
int CompareScores(const PairScore& a, const PairScore& b);

struct WordPieceStep {
  std::string left;
  std::string right;
  std::string merged;
  PairScore score;
};

class WordPieceVocab {
 public:
  WordPieceVocab() = default;
  explicit WordPieceVocab(std::vector<std::string> pieces, std::vector<double> scores = {});

  std::span<const std::string> pieces() const { return pieces_; }
  // Training score per piece; zero for base characters and loaded files.
  std::span<const double> scores() const { return scores_; }
  std::size_t size() const { return pieces_.size(); }
  bool Contains(std::string_view piece) const;

  // One piece per line, kWordPieceUnknown first; "##" marks continuations.
  void Write(std::ostream& out) const;
  static WordPieceVocab Read(std::istream& in);
  void Save(const std::filesystem::path& path) const;
  static WordPieceVocab Load(const std::filesystem::path& path);

  friend bool operator==(const WordPieceVocab& a, const WordPieceVocab& b) {
    return a.pieces_ == b.pieces_;
  }

 private:
  std::vector<std::string> pieces_;
  std::vector<double> scores_;
  std::unordered_set<std::string> lookup_;
};

struct WordPieceTraining {
  WordPieceVocab vocab;
  std::vector<WordPieceStep> steps;  // one per merge, in order
};

// Starts from characters (word-internal ones carry "##") and repeatedly
// merges the adjacent pair with the highest score, ties going to the larger
// count(ab) and then to the lexicographically smallest (left, right). Stops
// at `target_vocab_size` pieces or when no pair is left. The base alphabet
// holds both forms of every character seen. Throws EmptyCorpus, or
// InvalidArgument when the target does not exceed the base alphabet.
WordPieceTraining TrainWordPiece(std::span<const std::string> lines,
                                 std::size_t target_vocab_size);

// Greedy longest-match-first. A word with any unmatched position becomes a
// single kWordPieceUnknown.
std::vector<Piece> TokenizeWordPiece(const WordPieceVocab& vocab, std::string_view word);

// Drops a leading "##".
std::string_view StripContinuation(std::string_view piece);

class WordPieceTokenizer : public WordTokenizer {
 public:
  explicit WordPieceTokenizer(WordPieceVocab vocab) : vocab_(std::move(vocab)) {}

  const WordPieceVocab& vocab() const { return vocab_; }

  std::string_view name() const override { return "wordpiece"; }
  void TokenizeWord(std::string_view word, std::vector<Piece>& out) const override;
  std::size_t vocab_size() const override { return vocab_.size(); }

 private:
  WordPieceVocab vocab_;
};

}  // namespace swatok

#endif  // SWATOK_WORDPIECE_H_
