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

#include "swatok/bpe.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include <fmt/format.h>

#include "swatok/errors.h"
#include "swatok/normalizer.h"

namespace swatok {
namespace {

using SymbolId = std::uint32_t;

constexpr std::uint64_t PairKey(SymbolId left, SymbolId right) {
  return (static_cast<std::uint64_t>(left) << 32) | right;
}
constexpr SymbolId LeftOf(std::uint64_t key) { return static_cast<SymbolId>(key >> 32); }
constexpr SymbolId RightOf(std::uint64_t key) { return static_cast<SymbolId>(key); }

class SymbolTable {
 public:
  SymbolId Intern(const std::string& text) {
    auto [it, inserted] = ids_.emplace(text, static_cast<SymbolId>(texts_.size()));
    if (inserted) texts_.push_back(text);
    return it->second;
  }
  const std::string& Text(SymbolId id) const { return texts_[id]; }
  std::size_t size() const { return texts_.size(); }
  const SymbolId* Find(const std::string& text) const {
    auto it = ids_.find(text);
    return it == ids_.end() ? nullptr : &it->second;
  }

 private:
  std::vector<std::string> texts_;
  std::unordered_map<std::string, SymbolId> ids_;
};

struct TrainingWord {
  std::vector<SymbolId> symbols;
  std::uint64_t freq = 0;
};

// Merges every occurrence of (left, right) scanning left to right.
bool MergeInPlace(std::vector<SymbolId>& symbols, SymbolId left, SymbolId right,
                  SymbolId merged) {
  bool changed = false;
  std::size_t out = 0;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i + 1 < symbols.size() && symbols[i] == left && symbols[i + 1] == right) {
      symbols[out++] = merged;
      ++i;
      changed = true;
    } else {
      symbols[out++] = symbols[i];
    }
  }
  symbols.resize(out);
  return changed;
}

}  // namespace

std::vector<std::string> SplitCodePoints(std::string_view word) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < word.size()) {
    const unsigned char lead = static_cast<unsigned char>(word[i]);
    std::size_t len = 1;
    if ((lead >> 5) == 0x6) len = 2;
    else if ((lead >> 4) == 0xE) len = 3;
    else if ((lead >> 3) == 0x1E) len = 4;
    len = std::min(len, word.size() - i);
    out.emplace_back(word.substr(i, len));
    i += len;
  }
  return out;
}

std::vector<std::pair<std::string, std::uint64_t>> CountWords(std::span<const std::string> lines) {
  std::vector<std::pair<std::string, std::uint64_t>> counts;
  std::unordered_map<std::string, std::size_t> index;
  for (const std::string& line : lines) {
    for (std::string_view word : PreTokenize(line)) {
      auto [it, inserted] = index.emplace(std::string(word), counts.size());
      if (inserted) counts.emplace_back(std::string(word), 0);
      ++counts[it->second].second;
    }
  }
  return counts;
}

MergeTable::MergeTable(std::vector<std::string> alphabet, std::vector<MergeRule> merges)
    : alphabet_(std::move(alphabet)), merges_(std::move(merges)) {
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
  Check();
}

void MergeTable::Check() {
  std::unordered_set<std::string> known(alphabet_.begin(), alphabet_.end());
  for (std::size_t r = 0; r < merges_.size(); ++r) {
    const MergeRule& m = merges_[r];
    if (!known.contains(m.left) || !known.contains(m.right)) {
      throw DataError(fmt::format("merge {} '{} {}' uses a symbol not built by earlier merges",
                                  r + 1, m.left, m.right));
    }
    known.insert(m.merged());
  }
  symbol_count_ = known.size();
}

bool MergeTable::InAlphabet(std::string_view ch) const {
  return std::binary_search(alphabet_.begin(), alphabet_.end(), ch);
}

void MergeTable::Write(std::ostream& out) const {
  out << "#alphabet";
  for (const std::string& c : alphabet_) out << ' ' << c;
  out << '\n';
  for (const MergeRule& m : merges_) out << m.left << ' ' << m.right << '\n';
}

MergeTable MergeTable::Read(std::istream& in) {
  std::vector<std::string> alphabet;
  std::vector<MergeRule> merges;
  std::string line;
  bool have_alphabet = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.starts_with("#alphabet")) {
      std::istringstream fields(line.substr(9));
      std::string c;
      while (fields >> c) alphabet.push_back(c);
      have_alphabet = true;
      continue;
    }
    if (line.front() == '#') continue;
    const std::size_t space = line.find(' ');
    if (space == std::string::npos || space == 0 || space + 1 >= line.size() ||
        line.find(' ', space + 1) != std::string::npos) {
      throw DataError(fmt::format("merge table line {}: expected 'left right'", line_no));
    }
    merges.push_back({line.substr(0, space), line.substr(space + 1)});
  }
  if (!have_alphabet) throw DataError("merge table has no #alphabet line");
  return MergeTable(std::move(alphabet), std::move(merges));
}

void MergeTable::Save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(fmt::format("cannot write merge table '{}'", path.string()));
  Write(out);
}

MergeTable MergeTable::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open merge table '{}'", path.string()));
  return Read(in);
}

MergeTable TrainBpe(std::span<const std::string> lines, std::size_t target_vocab_size) {
  const auto word_counts = CountWords(lines);
  if (word_counts.empty()) throw EmptyCorpus("cannot train BPE on an empty corpus");

  SymbolTable symbols;
  std::vector<TrainingWord> words;
  words.reserve(word_counts.size());
  std::vector<std::string> alphabet;
  for (const auto& [word, freq] : word_counts) {
    for (const std::string& c : SplitCodePoints(word)) alphabet.push_back(c);
  }
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  for (const std::string& c : alphabet) symbols.Intern(c);
  if (target_vocab_size <= alphabet.size()) {
    throw InvalidArgument(fmt::format("target vocabulary size {} must exceed the base alphabet of {}",
                                      target_vocab_size, alphabet.size()));
  }
  for (const auto& [word, freq] : word_counts) {
    TrainingWord w;
    w.freq = freq;
    for (const std::string& c : SplitCodePoints(word)) w.symbols.push_back(symbols.Intern(c));
    words.push_back(std::move(w));
  }

  std::unordered_map<std::uint64_t, std::int64_t> pair_counts;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> pair_words;
  auto account = [&](std::uint32_t w, std::int64_t sign) {
    const auto& syms = words[w].symbols;
    for (std::size_t i = 0; i + 1 < syms.size(); ++i) {
      const std::uint64_t key = PairKey(syms[i], syms[i + 1]);
      pair_counts[key] += sign * static_cast<std::int64_t>(words[w].freq);
      if (sign > 0) pair_words[key].push_back(w);
    }
  };
  for (std::uint32_t w = 0; w < words.size(); ++w) account(w, +1);

  std::vector<MergeRule> merges;
  std::vector<std::uint32_t> touched;
  std::vector<char> seen(words.size(), 0);
  while (symbols.size() < target_vocab_size) {
    std::uint64_t best = 0;
    std::int64_t best_count = 0;
    for (const auto& [key, count] : pair_counts) {
      if (count <= 0) continue;
      if (count > best_count) {
        best = key;
        best_count = count;
        continue;
      }
      if (count < best_count) continue;
      const std::string& l = symbols.Text(LeftOf(key));
      const std::string& bl = symbols.Text(LeftOf(best));
      if (l < bl || (l == bl && symbols.Text(RightOf(key)) < symbols.Text(RightOf(best)))) {
        best = key;
      }
    }
    if (best_count < 2) break;

    const SymbolId left = LeftOf(best);
    const SymbolId right = RightOf(best);
    merges.push_back({symbols.Text(left), symbols.Text(right)});
    const SymbolId merged = symbols.Intern(symbols.Text(left) + symbols.Text(right));

    touched.clear();
    for (std::uint32_t w : pair_words[best]) {
      if (!seen[w]) {
        seen[w] = 1;
        touched.push_back(w);
      }
    }
    for (std::uint32_t w : touched) {
      seen[w] = 0;
      std::vector<SymbolId> updated = words[w].symbols;
      if (!MergeInPlace(updated, left, right, merged)) continue;
      account(w, -1);
      words[w].symbols = std::move(updated);
      account(w, +1);
    }
    pair_words.erase(best);
    for (auto it = pair_counts.begin(); it != pair_counts.end();) {
      it = it->second == 0 ? pair_counts.erase(it) : std::next(it);
    }
  }
  return MergeTable(std::move(alphabet), std::move(merges));
}

BpeTokenizer::BpeTokenizer(MergeTable table) : table_(std::move(table)) {
  const auto merges = table_.merges();
  for (std::size_t r = 0; r < merges.size(); ++r) {
    rank_lookup_[merges[r].left + '\0' + merges[r].right].push_back(r);
  }
}

std::vector<Piece> TokenizeBpe(const MergeTable& table, std::string_view word) {
  std::vector<Piece> out;
  BpeTokenizer(table).TokenizeWord(word, out);
  return out;
}

void BpeTokenizer::TokenizeWord(std::string_view word, std::vector<Piece>& out) const {
  struct Sym {
    std::string text;
    bool unknown;
  };
  std::vector<Sym> seq;
  for (std::string& c : SplitCodePoints(word)) {
    const bool unknown = !table_.InAlphabet(c);
    seq.push_back({unknown ? std::string(kBpeUnknown) : std::move(c), unknown});
  }
  const auto merges = table_.merges();
  // Merges apply strictly in table order; scanning skips ranks whose pair is
  // absent from the current sequence.
  std::size_t next_rank = 0;
  while (seq.size() > 1 && next_rank < merges.size()) {
    std::size_t best = merges.size();
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      if (seq[i].unknown || seq[i + 1].unknown) continue;
      const auto it = rank_lookup_.find(seq[i].text + '\0' + seq[i + 1].text);
      if (it == rank_lookup_.end()) continue;
      auto rank = std::lower_bound(it->second.begin(), it->second.end(), next_rank);
      if (rank != it->second.end()) best = std::min(best, *rank);
    }
    if (best == merges.size()) break;
    const MergeRule& m = merges[best];
    std::vector<Sym> merged;
    merged.reserve(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i + 1 < seq.size() && !seq[i].unknown && !seq[i + 1].unknown &&
          seq[i].text == m.left && seq[i + 1].text == m.right) {
        merged.push_back({m.merged(), false});
        ++i;
      } else {
        merged.push_back(std::move(seq[i]));
      }
    }
    seq = std::move(merged);
    next_rank = best + 1;
  }
  for (Sym& s : seq) out.push_back({std::move(s.text), s.unknown});
}

}  // namespace swatok
