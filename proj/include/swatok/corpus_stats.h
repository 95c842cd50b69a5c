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

#ifndef SWATOK_CORPUS_STATS_H_
#define SWATOK_CORPUS_STATS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "swatok/word_tokenizer.h"

namespace swatok {

struct SplitSpec {
  double train_fraction = 0.9;
  std::uint64_t seed = 42;
  bool shuffle = true;
};

// floor(fraction * n), guarded against representation error in `fraction`.
std::size_t TrainCount(std::size_t n, double train_fraction);

struct SplitIndices {
  std::vector<std::size_t> train;  // in output order
  std::vector<std::size_t> test;
};

// Partitions [0, n). Shuffled splits use a seeded Fisher-Yates permutation
// and are reproducible across platforms. Throws EmptyCorpus or
// InvalidArgument.
SplitIndices SplitCorpusIndices(std::size_t n, const SplitSpec& spec);

std::pair<std::vector<std::string>, std::vector<std::string>> SplitCorpus(
    std::span<const std::string> lines, const SplitSpec& spec);

// Per-tokenizer statistics. Counts are raw; the ratios are derived.
struct CorpusReport {
  std::string tokenizer;
  std::uint64_t line_count = 0;
  std::uint64_t word_count = 0;
  std::uint64_t token_count = 0;
  std::uint64_t unknown_count = 0;
  std::uint64_t char_count = 0;  // characters of the normalized words
  std::size_t vocab_size = 0;
  std::size_t vocab_used = 0;

  double fertility() const { return Ratio(token_count, word_count); }
  double mean_sequence_length() const { return Ratio(token_count, line_count); }
  double oov_rate() const { return Ratio(unknown_count, token_count); }
  double chars_per_token() const { return Ratio(char_count, token_count); }

 private:
  static double Ratio(std::uint64_t num, std::uint64_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  }
};

// Partial result of a report; Merge is associative and commutative.
class ReportAccumulator {
 public:
  void AddLine(const WordTokenizer& tokenizer, std::string_view raw_line);
  void Merge(const ReportAccumulator& other);
  CorpusReport Finish(const WordTokenizer& tokenizer) const;

 private:
  std::uint64_t lines_ = 0;
  std::uint64_t words_ = 0;
  std::uint64_t tokens_ = 0;
  std::uint64_t unknowns_ = 0;
  std::uint64_t chars_ = 0;
  std::unordered_set<std::string> used_;
  std::vector<Piece> scratch_;
};

// Normalizes each line, counts words from pre-tokenization and tokens from
// `tokenizer`. Unknown pieces count once toward vocab_used. Lines are split
// across `threads` workers; the result does not depend on the thread count.
CorpusReport ComputeReport(const WordTokenizer& tokenizer, std::span<const std::string> lines,
                           unsigned threads = 1);

// Metric rows by tokenizer columns.
struct ComparisonTable {
  std::vector<std::string> columns;
  std::vector<std::string> metrics;
  std::vector<std::vector<std::string>> cells;  // [metric][column]

  std::string ToTsv() const;
  std::string ToPretty() const;
};

// Needs at least two reports; throws InvalidArgument otherwise.
ComparisonTable Compare(std::span<const CorpusReport> reports);

// Column order of the single-report TSV, one row per report.
std::string ReportTsvHeader();
std::string ReportTsvRow(const CorpusReport& report);

}  // namespace swatok

#endif  // SWATOK_CORPUS_STATS_H_
