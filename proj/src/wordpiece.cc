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

#include "swatok/wordpiece.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <unordered_map>

#include <fmt/format.h>

#include "swatok/bpe.h"
#include "swatok/errors.h"

namespace swatok {

int CompareScores(const PairScore& a, const PairScore& b) {
  using u128 = unsigned __int128;
  const u128 lhs = static_cast<u128>(a.pair_count) * b.left_count * b.right_count;
  const u128 rhs = static_cast<u128>(b.pair_count) * a.left_count * a.right_count;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

std::string_view StripContinuation(std::string_view piece) {
  if (piece.starts_with(kContinuationPrefix)) piece.remove_prefix(kContinuationPrefix.size());
  return piece;
}

WordPieceVocab::WordPieceVocab(std::vector<std::string> pieces, std::vector<double> scores)
    : pieces_(std::move(pieces)), scores_(std::move(scores)) {
  scores_.resize(pieces_.size(), 0.0);
  for (const std::string& p : pieces_) {
    if (p.empty() || p == kContinuationPrefix) throw DataError("empty WordPiece entry");
    if (!lookup_.insert(p).second) {
      throw DuplicateEntry(fmt::format("piece '{}' appears twice in WordPiece vocabulary", p));
    }
  }
}

bool WordPieceVocab::Contains(std::string_view piece) const {
  return lookup_.contains(std::string(piece));
}

void WordPieceVocab::Write(std::ostream& out) const {
  out << kWordPieceUnknown << '\n';
  for (const std::string& p : pieces_) out << p << '\n';
}

WordPieceVocab WordPieceVocab::Read(std::istream& in) {
  std::vector<std::string> pieces;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == kWordPieceUnknown) continue;
    pieces.push_back(line);
  }
  return WordPieceVocab(std::move(pieces));
}

void WordPieceVocab::Save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(fmt::format("cannot write WordPiece vocabulary '{}'", path.string()));
  Write(out);
}

WordPieceVocab WordPieceVocab::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open WordPiece vocabulary '{}'", path.string()));
  return Read(in);
}

WordPieceTraining TrainWordPiece(std::span<const std::string> lines,
                                 std::size_t target_vocab_size) {
  const auto word_counts = CountWords(lines);
  if (word_counts.empty()) throw EmptyCorpus("cannot train WordPiece on an empty corpus");

  struct Word {
    std::vector<std::string> symbols;
    std::uint64_t freq;
  };
  std::vector<Word> words;
  std::vector<std::string> chars;
  for (const auto& [text, freq] : word_counts) {
    Word w{{}, freq};
    bool first = true;
    for (std::string& c : SplitCodePoints(text)) {
      chars.push_back(c);
      w.symbols.push_back(first ? c : std::string(kContinuationPrefix) + c);
      first = false;
    }
    words.push_back(std::move(w));
  }
  std::sort(chars.begin(), chars.end());
  chars.erase(std::unique(chars.begin(), chars.end()), chars.end());

  std::vector<std::string> pieces;
  for (const std::string& c : chars) pieces.push_back(c);
  for (const std::string& c : chars) pieces.push_back(std::string(kContinuationPrefix) + c);
  if (target_vocab_size <= pieces.size()) {
    throw InvalidArgument(fmt::format("target vocabulary size {} must exceed the base alphabet of {}",
                                      target_vocab_size, pieces.size()));
  }
  std::vector<double> scores(pieces.size(), 0.0);
  std::unordered_set<std::string> known(pieces.begin(), pieces.end());

  WordPieceTraining result;
  while (pieces.size() < target_vocab_size) {
    std::unordered_map<std::string, std::uint64_t> symbol_counts;
    std::map<std::pair<std::string, std::string>, std::uint64_t> pair_counts;
    for (const Word& w : words) {
      for (std::size_t i = 0; i < w.symbols.size(); ++i) {
        symbol_counts[w.symbols[i]] += w.freq;
        if (i + 1 < w.symbols.size()) pair_counts[{w.symbols[i], w.symbols[i + 1]}] += w.freq;
      }
    }
    if (pair_counts.empty()) break;

    // std::map iterates in (left, right) order, so the first maximum seen
    // is already the lexicographic tie-break winner.
    const std::pair<std::string, std::string>* best = nullptr;
    PairScore best_score;
    for (const auto& [pair, count] : pair_counts) {
      const PairScore score{count, symbol_counts[pair.first], symbol_counts[pair.second]};
      if (best == nullptr) {
        best = &pair;
        best_score = score;
        continue;
      }
      const int cmp = CompareScores(score, best_score);
      if (cmp > 0 || (cmp == 0 && score.pair_count > best_score.pair_count)) {
        best = &pair;
        best_score = score;
      }
    }

    const std::string left = best->first;
    const std::string right = best->second;
    const std::string merged = left + std::string(StripContinuation(right));
    result.steps.push_back({left, right, merged, best_score});
    if (known.insert(merged).second) {
      pieces.push_back(merged);
      scores.push_back(best_score.value());
    }
    for (Word& w : words) {
      std::vector<std::string> updated;
      updated.reserve(w.symbols.size());
      for (std::size_t i = 0; i < w.symbols.size(); ++i) {
        if (i + 1 < w.symbols.size() && w.symbols[i] == left && w.symbols[i + 1] == right) {
          updated.push_back(merged);
          ++i;
        } else {
          updated.push_back(std::move(w.symbols[i]));
        }
      }
      w.symbols = std::move(updated);
    }
  }
  result.vocab = WordPieceVocab(std::move(pieces), std::move(scores));
  return result;
}

void WordPieceTokenizer::TokenizeWord(std::string_view word, std::vector<Piece>& out) const {
  // Code point boundaries, so candidate pieces never split a character.
  std::vector<std::size_t> bounds;
  std::size_t pos = 0;
  for (const std::string& c : SplitCodePoints(word)) {
    bounds.push_back(pos);
    pos += c.size();
  }
  bounds.push_back(pos);

  const std::size_t first_new = out.size();
  std::size_t start = 0;
  std::string candidate;
  while (start + 1 < bounds.size()) {
    bool found = false;
    for (std::size_t end = bounds.size() - 1; end > start; --end) {
      candidate.clear();
      if (start > 0) candidate += kContinuationPrefix;
      candidate += word.substr(bounds[start], bounds[end] - bounds[start]);
      if (vocab_.Contains(candidate)) {
        out.push_back({candidate, false});
        start = end;
        found = true;
        break;
      }
    }
    if (!found) {
      out.resize(first_new);
      out.push_back({std::string(kWordPieceUnknown), true});
      return;
    }
  }
}

std::vector<Piece> TokenizeWordPiece(const WordPieceVocab& vocab, std::string_view word) {
  std::vector<Piece> out;
  WordPieceTokenizer(vocab).TokenizeWord(word, out);
  return out;
}

}  // namespace swatok
