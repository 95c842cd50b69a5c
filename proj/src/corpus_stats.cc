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

#include "swatok/corpus_stats.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include <fmt/format.h>

#include "swatok/errors.h"
#include "swatok/normalizer.h"

namespace swatok {
namespace {

// Uniform in [0, bound) by rejection, independent of the standard library's
// distribution implementations.
std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound);
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

std::string Fixed(double v) { return fmt::format("{:.4f}", v); }

}  // namespace

std::size_t TrainCount(std::size_t n, double train_fraction) {
  const long double exact = static_cast<long double>(train_fraction) * n;
  // 0.9 is stored slightly below 0.9; accept products within a few ulps of
  // the next integer.
  const long double nudged = exact + exact * 1e-12L;
  return std::min(n, static_cast<std::size_t>(std::floor(nudged)));
}

SplitIndices SplitCorpusIndices(std::size_t n, const SplitSpec& spec) {
  if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
    throw InvalidArgument(fmt::format("train fraction {} is not in (0, 1)", spec.train_fraction));
  }
  if (n == 0) throw EmptyCorpus("cannot split an empty corpus");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (spec.shuffle) {
    std::mt19937_64 rng(spec.seed);
    for (std::size_t i = n - 1; i > 0; --i) {
      std::swap(order[i], order[UniformBelow(rng, i + 1)]);
    }
  }
  const std::size_t train_count = TrainCount(n, spec.train_fraction);
  SplitIndices split;
  split.train.assign(order.begin(), order.begin() + train_count);
  split.test.assign(order.begin() + train_count, order.end());
  // Each part keeps corpus order so splits can be streamed.
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

std::pair<std::vector<std::string>, std::vector<std::string>> SplitCorpus(
    std::span<const std::string> lines, const SplitSpec& spec) {
  const SplitIndices split = SplitCorpusIndices(lines.size(), spec);
  std::pair<std::vector<std::string>, std::vector<std::string>> out;
  out.first.reserve(split.train.size());
  out.second.reserve(split.test.size());
  for (std::size_t i : split.train) out.first.push_back(lines[i]);
  for (std::size_t i : split.test) out.second.push_back(lines[i]);
  return out;
}

void ReportAccumulator::AddLine(const WordTokenizer& tokenizer, std::string_view raw_line) {
  ++lines_;
  const std::string normalized = Normalize(raw_line);
  for (std::string_view word : PreTokenize(normalized)) {
    ++words_;
    chars_ += word.size();
    scratch_.clear();
    tokenizer.TokenizeWord(word, scratch_);
    tokens_ += scratch_.size();
    for (const Piece& p : scratch_) {
      if (p.unknown) {
        ++unknowns_;
        used_.insert("[UNK]");
      } else {
        used_.insert(p.text);
      }
    }
  }
}

void ReportAccumulator::Merge(const ReportAccumulator& other) {
  lines_ += other.lines_;
  words_ += other.words_;
  tokens_ += other.tokens_;
  unknowns_ += other.unknowns_;
  chars_ += other.chars_;
  used_.insert(other.used_.begin(), other.used_.end());
}

CorpusReport ReportAccumulator::Finish(const WordTokenizer& tokenizer) const {
  CorpusReport report;
  report.tokenizer = std::string(tokenizer.name());
  report.line_count = lines_;
  report.word_count = words_;
  report.token_count = tokens_;
  report.unknown_count = unknowns_;
  report.char_count = chars_;
  report.vocab_size = tokenizer.vocab_size();
  report.vocab_used = used_.size();
  return report;
}

CorpusReport ComputeReport(const WordTokenizer& tokenizer, std::span<const std::string> lines,
                           unsigned threads) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(
                                                         std::max<std::size_t>(lines.size(), 1))));
  std::vector<ReportAccumulator> parts(threads);
  const std::size_t chunk = (lines.size() + threads - 1) / threads;
  auto work = [&](unsigned t) {
    const std::size_t begin = std::min(lines.size(), t * chunk);
    const std::size_t end = std::min(lines.size(), begin + chunk);
    for (std::size_t i = begin; i < end; ++i) parts[t].AddLine(tokenizer, lines[i]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) workers.emplace_back(work, t);
    for (std::thread& w : workers) w.join();
  }
  for (unsigned t = 1; t < threads; ++t) parts[0].Merge(parts[t]);
  return parts[0].Finish(tokenizer);
}

std::string ReportTsvHeader() {
  return "tokenizer\tlines\twords\ttokens\tfertility\tmean_seq_len\tvocab_size\tvocab_used\t"
         "oov_rate\tchars_per_token";
}

std::string ReportTsvRow(const CorpusReport& r) {
  return fmt::format("{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}", r.tokenizer, r.line_count,
                     r.word_count, r.token_count, Fixed(r.fertility()),
                     Fixed(r.mean_sequence_length()), r.vocab_size, r.vocab_used,
                     Fixed(r.oov_rate()), Fixed(r.chars_per_token()));
}

ComparisonTable Compare(std::span<const CorpusReport> reports) {
  if (reports.size() < 2) {
    throw InvalidArgument(fmt::format("comparison needs at least two reports, got {}", reports.size()));
  }
  ComparisonTable table;
  table.metrics = {"lines",     "words",      "tokens",   "fertility",      "mean_seq_len",
                   "vocab_size", "vocab_used", "oov_rate", "chars_per_token"};
  table.cells.resize(table.metrics.size());
  for (const CorpusReport& r : reports) {
    table.columns.push_back(r.tokenizer);
    const std::string values[] = {
        std::to_string(r.line_count),    std::to_string(r.word_count),
        std::to_string(r.token_count),   Fixed(r.fertility()),
        Fixed(r.mean_sequence_length()), std::to_string(r.vocab_size),
        std::to_string(r.vocab_used),    Fixed(r.oov_rate()),
        Fixed(r.chars_per_token())};
    for (std::size_t m = 0; m < table.metrics.size(); ++m) table.cells[m].push_back(values[m]);
  }
  return table;
}

std::string ComparisonTable::ToTsv() const {
  std::string out = "metric";
  for (const std::string& c : columns) out += "\t" + c;
  out += '\n';
  for (std::size_t m = 0; m < metrics.size(); ++m) {
    out += metrics[m];
    for (const std::string& v : cells[m]) out += "\t" + v;
    out += '\n';
  }
  return out;
}

std::string ComparisonTable::ToPretty() const {
  std::size_t label_width = std::string_view("metric").size();
  for (const std::string& m : metrics) label_width = std::max(label_width, m.size());
  std::vector<std::size_t> widths;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    std::size_t w = columns[c].size();
    for (const auto& row : cells) w = std::max(w, row[c].size());
    widths.push_back(w);
  }
  auto rule = [&] {
    std::string line = "+" + std::string(label_width + 2, '-');
    for (std::size_t w : widths) line += "+" + std::string(w + 2, '-');
    return line + "+\n";
  };
  std::string out = rule();
  out += fmt::format("| {:<{}} ", "metric", label_width);
  for (std::size_t c = 0; c < columns.size(); ++c) out += fmt::format("| {:>{}} ", columns[c], widths[c]);
  out += "|\n" + rule();
  for (std::size_t m = 0; m < metrics.size(); ++m) {
    out += fmt::format("| {:<{}} ", metrics[m], label_width);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out += fmt::format("| {:>{}} ", cells[m][c], widths[c]);
    }
    out += "|\n";
  }
  return out + rule();
}

}  // namespace swatok
