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

#include "swatok/syllable_tokenizer.h"

#include <cstdint>

#include <fmt/format.h>

#include "swatok/errors.h"

namespace swatok {
namespace {

std::size_t CodePointLength(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;
}

}  // namespace

std::vector<std::string> TokenSequence::texts() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.text);
  return out;
}

std::vector<bool> TokenSequence::word_initial_flags() const {
  std::vector<bool> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.word_initial);
  return out;
}

void SyllabifyWord(const SyllableInventory& inventory, std::string_view word,
                   std::vector<SyllableSpan>& out) {
  const std::size_t n = word.size();
  // unknowns[i]: fewest unknown characters needed to cover word[i..n).
  thread_local std::vector<std::uint32_t> unknowns;
  unknowns.assign(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t step = std::min(CodePointLength(word[i]), n - i);
    std::uint32_t best = unknowns[i + step] + 1;
    for (const PrefixMatch& m : inventory.AllPrefixMatches(word.substr(i)).view()) {
      best = std::min(best, unknowns[i + m.length]);
    }
    unknowns[i] = best;
  }

  std::size_t i = 0;
  while (i < n) {
    bool matched = false;
    for (const PrefixMatch& m : inventory.AllPrefixMatches(word.substr(i)).view()) {
      if (unknowns[i + m.length] == unknowns[i]) {
        out.push_back({i, m.length, m.index, false});
        i += m.length;
        matched = true;
        break;
      }
    }
    if (!matched) {
      const std::size_t step = std::min(CodePointLength(word[i]), n - i);
      out.push_back({i, step, 0, true});
      i += step;
    }
  }
}

std::vector<std::string> SyllabifyWord(const SyllableInventory& inventory,
                                       std::string_view word) {
  std::vector<SyllableSpan> spans;
  SyllabifyWord(inventory, word, spans);
  std::vector<std::string> out;
  out.reserve(spans.size());
  for (const SyllableSpan& s : spans) out.emplace_back(word.substr(s.offset, s.length));
  return out;
}

TokenSequence Tokenize(const SyllableInventory& inventory, std::string_view text,
                       UnknownChars mode) {
  TokenSequence sequence;
  const std::string normalized = Normalize(text, mode);
  std::vector<SyllableSpan> spans;
  for (std::string_view word : PreTokenize(normalized)) {
    spans.clear();
    SyllabifyWord(inventory, word, spans);
    bool first = true;
    for (const SyllableSpan& s : spans) {
      Token token;
      token.text.assign(word.substr(s.offset, s.length));
      token.id = s.unknown ? Vocabulary::kUnk : Vocabulary::IdForInventoryIndex(s.inventory_index);
      token.word_initial = first;
      first = false;
      sequence.tokens.push_back(std::move(token));
    }
  }
  return sequence;
}

std::vector<TokenId> Encode(const Vocabulary& vocab, const TokenSequence& sequence) {
  std::vector<TokenId> ids;
  ids.reserve(sequence.size());
  for (const Token& t : sequence.tokens) {
    // Specials are never produced by segmentation, so their spelling in
    // running text must not map onto them.
    const TokenId id = vocab.IdOf(t.text);
    ids.push_back(Vocabulary::IsSpecial(id) ? Vocabulary::kUnk : id);
  }
  return ids;
}

std::string Decode(const Vocabulary& vocab, std::span<const TokenId> ids,
                   const std::vector<bool>& word_initial) {
  if (ids.size() != word_initial.size()) {
    throw InvalidArgument(fmt::format("decode got {} ids but {} word-initial flags",
                                      ids.size(), word_initial.size()));
  }
  std::string text;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const std::string& token = vocab.TokenOf(ids[i]);
    if (ids[i] == Vocabulary::kPad || ids[i] == Vocabulary::kBos || ids[i] == Vocabulary::kEos) {
      continue;
    }
    if (word_initial[i] && !text.empty()) text.push_back(' ');
    if (ids[i] == Vocabulary::kUnk) {
      text.push_back(kUnknownMarker);
    } else {
      text += token;
    }
  }
  return text;
}

std::pair<std::size_t, std::size_t> OneHotShape(const Vocabulary& vocab,
                                                std::span<const TokenId> ids) {
  for (TokenId id : ids) {
    if (id >= vocab.size()) {
      throw IdOutOfRange(fmt::format("token id {} outside vocabulary of size {}", id, vocab.size()));
    }
  }
  return {vocab.inventory_size(), ids.size()};
}

SyllableTokenizer::SyllableTokenizer(SyllableInventory inventory, UnknownChars mode)
    : inventory_(std::move(inventory)), vocab_(inventory_), mode_(mode) {}

TokenSequence SyllableTokenizer::Tokenize(std::string_view text) const {
  return swatok::Tokenize(inventory_, text, mode_);
}

std::vector<TokenId> SyllableTokenizer::Encode(std::string_view text) const {
  return swatok::Encode(vocab_, Tokenize(text));
}

std::string SyllableTokenizer::Decode(std::span<const TokenId> ids,
                                      const std::vector<bool>& word_initial) const {
  return swatok::Decode(vocab_, ids, word_initial);
}

void SyllableTokenizer::TokenizeWord(std::string_view word, std::vector<Piece>& out) const {
  thread_local std::vector<SyllableSpan> spans;
  spans.clear();
  SyllabifyWord(inventory_, word, spans);
  for (const SyllableSpan& s : spans) {
    out.push_back({std::string(word.substr(s.offset, s.length)), s.unknown});
  }
}

}  // namespace swatok
