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

#ifndef SWATOK_VOCABULARY_H_
#define SWATOK_VOCABULARY_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "swatok/inventory.h"

namespace swatok {

using TokenId = std::uint32_t;

// Token <-> id map: four special tokens, then inventory entries in canonical
// order. Serialized as one token per line, line number = id.
class Vocabulary {
 public:
  static constexpr TokenId kPad = 0;
  static constexpr TokenId kUnk = 1;
  static constexpr TokenId kBos = 2;
  static constexpr TokenId kEos = 3;
  static constexpr std::size_t kNumSpecials = 4;

  static constexpr std::string_view kPadToken = "[PAD]";
  static constexpr std::string_view kUnkToken = "[UNK]";
  static constexpr std::string_view kBosToken = "[BOS]";
  static constexpr std::string_view kEosToken = "[EOS]";

  explicit Vocabulary(const SyllableInventory& inventory);

  // Reads the line-per-token format. The first four lines must be the
  // specials in order.
  static Vocabulary Read(std::istream& in);
  static Vocabulary Load(const std::filesystem::path& path);
  void Write(std::ostream& out) const;
  void Save(const std::filesystem::path& path) const;

  std::size_t size() const { return tokens_.size(); }
  // Rows of the one-hot representation.
  std::size_t inventory_size() const { return tokens_.size() - kNumSpecials; }

  std::optional<TokenId> Find(std::string_view token) const;
  // kUnk for tokens outside the vocabulary.
  TokenId IdOf(std::string_view token) const;
  // Throws IdOutOfRange.
  const std::string& TokenOf(TokenId id) const;

  static bool IsSpecial(TokenId id) { return id < kNumSpecials; }
  static TokenId IdForInventoryIndex(std::size_t index) {
    return static_cast<TokenId>(kNumSpecials + index);
  }

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  Vocabulary() = default;
  void Index();

  std::vector<std::string> tokens_;
  std::unordered_map<std::string, TokenId> ids_;
};

}  // namespace swatok

#endif  // SWATOK_VOCABULARY_H_
