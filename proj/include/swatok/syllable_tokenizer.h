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

#ifndef SWATOK_SYLLABLE_TOKENIZER_H_
#define SWATOK_SYLLABLE_TOKENIZER_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swatok/inventory.h"
#include "swatok/normalizer.h"
#include "swatok/vocabulary.h"
#include "swatok/word_tokenizer.h"

namespace swatok {

struct Token {
  std::string text;
  TokenId id = Vocabulary::kUnk;
  bool word_initial = false;

  friend bool operator==(const Token&, const Token&) = default;
};

struct TokenSequence {
  std::vector<Token> tokens;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  std::vector<std::string> texts() const;
  std::vector<bool> word_initial_flags() const;

  friend bool operator==(const TokenSequence&, const TokenSequence&) = default;
};

// One piece of a word segmentation. Unknown pieces cover exactly one
// character that no inventory entry can account for.
struct SyllableSpan {
  std::size_t offset = 0;
  std::size_t length = 0;
  std::size_t inventory_index = 0;  // meaningless when unknown
  bool unknown = false;
};

// Segments one normalized word into inventory syllables.
//
// Picks the segmentation with the fewest unknown characters. Among those it
// prefers, position by position, the longest inventory entry, with an
// unknown character ranked below every entry. When a full segmentation
// exists this is exactly greedy longest-prefix matching with backtracking
// on dead ends.
void SyllabifyWord(const SyllableInventory& inventory, std::string_view word,
                   std::vector<SyllableSpan>& out);

std::vector<std::string> SyllabifyWord(const SyllableInventory& inventory,
                                       std::string_view word);

// normalize -> pre-tokenize -> syllabify. Ids follow the canonical
// inventory order behind the four special tokens.
TokenSequence Tokenize(const SyllableInventory& inventory, std::string_view text,
                       UnknownChars mode = UnknownChars::kRemove);

std::vector<TokenId> Encode(const Vocabulary& vocab, const TokenSequence& sequence);

// Rebuilds text, inserting a space before every word-initial token except
// the first. PAD, BOS and EOS are skipped; UNK renders as kUnknownMarker.
// Throws IdOutOfRange, or InvalidArgument on a flag count mismatch.
std::string Decode(const Vocabulary& vocab, std::span<const TokenId> ids,
                   const std::vector<bool>& word_initial);

// (rows, cols) of the one-hot matrix for a sentence: one row per inventory
// entry, one column per token. Throws IdOutOfRange.
std::pair<std::size_t, std::size_t> OneHotShape(const Vocabulary& vocab,
                                                std::span<const TokenId> ids);

// Owns an inventory and its vocabulary. This is the surface exposed to
// host-language bindings.
class SyllableTokenizer : public WordTokenizer {
 public:
  explicit SyllableTokenizer(SyllableInventory inventory,
                             UnknownChars mode = UnknownChars::kRemove);
  SyllableTokenizer() : SyllableTokenizer(SyllableInventory::LoadDefault()) {}

  const SyllableInventory& inventory() const { return inventory_; }
  const Vocabulary& vocab() const { return vocab_; }
  UnknownChars unknown_mode() const { return mode_; }

  TokenSequence Tokenize(std::string_view text) const;
  std::vector<TokenId> Encode(std::string_view text) const;
  std::string Decode(std::span<const TokenId> ids, const std::vector<bool>& word_initial) const;

  std::string_view name() const override { return "syllable"; }
  void TokenizeWord(std::string_view word, std::vector<Piece>& out) const override;
  std::size_t vocab_size() const override { return inventory_.size(); }

 private:
  SyllableInventory inventory_;
  Vocabulary vocab_;
  UnknownChars mode_;
};

}  // namespace swatok

#endif  // SWATOK_SYLLABLE_TOKENIZER_H_
