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

#ifndef SWATOK_WORD_TOKENIZER_H_
#define SWATOK_WORD_TOKENIZER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace swatok {

struct Piece {
  std::string text;
  bool unknown = false;

  friend bool operator==(const Piece&, const Piece&) = default;
};

// Common surface of the three schemes, used by the statistics pipeline.
// Implementations are immutable and safe to call from several threads.
class WordTokenizer {
 public:
  virtual ~WordTokenizer() = default;

  virtual std::string_view name() const = 0;

  // Appends the pieces of one normalized, whitespace-free word to `out`.
  virtual void TokenizeWord(std::string_view word, std::vector<Piece>& out) const = 0;

  // Configured vocabulary size, excluding special tokens.
  virtual std::size_t vocab_size() const = 0;
};

}  // namespace swatok

#endif  // SWATOK_WORD_TOKENIZER_H_
