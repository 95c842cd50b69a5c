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

#include "swatok/vocabulary.h"

#include <fstream>
#include <istream>
#include <ostream>

#include <fmt/format.h>

#include "swatok/errors.h"

namespace swatok {

Vocabulary::Vocabulary(const SyllableInventory& inventory) {
  tokens_.reserve(kNumSpecials + inventory.size());
  tokens_.emplace_back(kPadToken);
  tokens_.emplace_back(kUnkToken);
  tokens_.emplace_back(kBosToken);
  tokens_.emplace_back(kEosToken);
  for (const std::string& entry : inventory.entries()) tokens_.push_back(entry);
  Index();
}

void Vocabulary::Index() {
  ids_.clear();
  ids_.reserve(tokens_.size());
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    auto [it, inserted] = ids_.emplace(tokens_[i], static_cast<TokenId>(i));
    if (!inserted) {
      throw DuplicateEntry(fmt::format("token '{}' appears twice in vocabulary", tokens_[i]));
    }
  }
}

Vocabulary Vocabulary::Read(std::istream& in) {
  Vocabulary vocab;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    vocab.tokens_.push_back(line);
  }
  const std::string_view specials[] = {kPadToken, kUnkToken, kBosToken, kEosToken};
  if (vocab.tokens_.size() < kNumSpecials) {
    throw DataError("vocabulary file is missing the special tokens");
  }
  for (std::size_t i = 0; i < kNumSpecials; ++i) {
    if (vocab.tokens_[i] != specials[i]) {
      throw DataError(fmt::format("vocabulary line {} must be {}", i + 1, specials[i]));
    }
  }
  vocab.Index();
  return vocab;
}

Vocabulary Vocabulary::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open vocabulary '{}'", path.string()));
  return Read(in);
}

void Vocabulary::Write(std::ostream& out) const {
  for (const std::string& token : tokens_) out << token << '\n';
}

void Vocabulary::Save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(fmt::format("cannot write vocabulary '{}'", path.string()));
  Write(out);
}

std::optional<TokenId> Vocabulary::Find(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

TokenId Vocabulary::IdOf(std::string_view token) const {
  return Find(token).value_or(kUnk);
}

const std::string& Vocabulary::TokenOf(TokenId id) const {
  if (id >= tokens_.size()) {
    throw IdOutOfRange(fmt::format("token id {} outside vocabulary of size {}", id, tokens_.size()));
  }
  return tokens_[id];
}

}  // namespace swatok
