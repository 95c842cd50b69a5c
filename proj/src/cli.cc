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

#include "swatok/cli.h"

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "swatok/bpe.h"
#include "swatok/corpus_stats.h"
#include "swatok/errors.h"
#include "swatok/syllable_tokenizer.h"
#include "swatok/wordpiece.h"

namespace swatok::cli {
namespace {

constexpr std::size_t kBatchLines = 8192;

void RequireFile(const std::filesystem::path& path, std::string_view what) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw IoError(fmt::format("{} '{}' does not exist or is not a file", what, path.string()));
  }
}

void RequireWritable(const std::filesystem::path& path) {
  const std::filesystem::path parent = path.parent_path();
  std::error_code ec;
  if (!parent.empty() && !std::filesystem::is_directory(parent, ec)) {
    throw IoError(fmt::format("output directory '{}' does not exist", parent.string()));
  }
}

std::ifstream OpenInput(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path.string()));
  return in;
}

std::ofstream OpenOutput(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(fmt::format("cannot write '{}'", path.string()));
  return out;
}

bool ReadLine(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

// Reads up to kBatchLines lines; false once the stream is exhausted.
bool ReadBatch(std::istream& in, std::vector<std::string>& batch) {
  batch.clear();
  std::string line;
  while (batch.size() < kBatchLines && ReadLine(in, line)) batch.push_back(std::move(line));
  return !batch.empty();
}

std::vector<std::string> ReadNormalizedLines(const std::filesystem::path& path) {
  std::ifstream in = OpenInput(path);
  std::vector<std::string> lines;
  std::string line;
  while (ReadLine(in, line)) lines.push_back(Normalize(line));
  return lines;
}

// Calls fn(i) for i in [0, n), split over `threads` contiguous chunks.
void ParallelFor(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t chunk = (n + threads - 1) / threads;
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = std::min(n, t * chunk);
    const std::size_t end = std::min(n, begin + chunk);
    workers.emplace_back([&fn, begin, end] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
  for (std::thread& w : workers) w.join();
}

SyllableInventory LoadInventory(const CliConfig& config) {
  if (config.inventory) {
    RequireFile(*config.inventory, "inventory file");
    return SyllableInventory::LoadFromFile(*config.inventory);
  }
  return SyllableInventory::LoadDefault();
}

std::unique_ptr<WordTokenizer> MakeTokenizer(const CliConfig& config, Scheme scheme,
                                             const std::optional<std::filesystem::path>& model) {
  switch (scheme) {
    case Scheme::kSyllable:
      return std::make_unique<SyllableTokenizer>(
          LoadInventory(config), config.keep_unknown ? UnknownChars::kMark : UnknownChars::kRemove);
    case Scheme::kBpe:
      if (!model) throw InvalidArgument("--model is required for the bpe scheme");
      RequireFile(*model, "BPE merge table");
      return std::make_unique<BpeTokenizer>(MergeTable::Load(*model));
    case Scheme::kWordPiece:
      if (!model) throw InvalidArgument("--model is required for the wordpiece scheme");
      RequireFile(*model, "WordPiece vocabulary");
      return std::make_unique<WordPieceTokenizer>(WordPieceVocab::Load(*model));
  }
  throw InvalidArgument("unknown scheme");
}

// Output sink: the configured file or `fallback`.
class Sink {
 public:
  Sink(const CliConfig& config, std::ostream& fallback) {
    if (config.output) {
      file_ = OpenOutput(*config.output);
      stream_ = &file_;
    } else {
      stream_ = &fallback;
    }
  }
  std::ostream& get() { return *stream_; }
  void Close() {
    stream_->flush();
    if (!*stream_) throw IoError("write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::string FormatSyllableLine(const SyllableTokenizer& tokenizer, const std::string& line,
                               const CliConfig& config) {
  const TokenSequence seq = tokenizer.Tokenize(line);
  const std::vector<TokenId> ids = config.emit_ids ? Encode(tokenizer.vocab(), seq) : std::vector<TokenId>{};
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Token& t = seq.tokens[i];
    if (i > 0) out += t.word_initial ? config.separator : " ";
    if (config.emit_ids) {
      out += std::to_string(ids[i]);
    } else {
      out += t.id == Vocabulary::kUnk ? std::string(Vocabulary::kUnkToken) : t.text;
    }
  }
  return out;
}

std::string FormatWordLine(const WordTokenizer& tokenizer, const std::string& line,
                           const CliConfig& config) {
  const std::string normalized = Normalize(line);
  std::string out;
  std::vector<Piece> pieces;
  bool first_word = true;
  for (std::string_view word : PreTokenize(normalized)) {
    pieces.clear();
    tokenizer.TokenizeWord(word, pieces);
    if (!first_word) out += config.separator;
    first_word = false;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (i > 0) out += ' ';
      out += pieces[i].text;
    }
  }
  return out;
}

void RunTokenize(const CliConfig& config, std::ostream& stdout_stream) {
  RequireFile(config.input, "input");
  if (config.emit_ids && config.scheme != Scheme::kSyllable) {
    throw InvalidArgument("--ids is only available for the syllable scheme");
  }
  if (config.output) RequireWritable(*config.output);
  const std::unique_ptr<WordTokenizer> tokenizer = MakeTokenizer(config, config.scheme, config.model);
  const auto* syllable = dynamic_cast<const SyllableTokenizer*>(tokenizer.get());

  std::ifstream in = OpenInput(config.input);
  Sink sink(config, stdout_stream);
  std::vector<std::string> batch;
  std::vector<std::string> rendered;
  while (ReadBatch(in, batch)) {
    rendered.assign(batch.size(), {});
    ParallelFor(batch.size(), config.threads, [&](std::size_t i) {
      rendered[i] = syllable != nullptr ? FormatSyllableLine(*syllable, batch[i], config)
                                        : FormatWordLine(*tokenizer, batch[i], config);
    });
    for (const std::string& r : rendered) sink.get() << r << '\n';
  }
  sink.Close();
}

void RunTrainBpe(const CliConfig& config) {
  RequireFile(config.input, "input");
  if (!config.output) throw InvalidArgument("train-bpe needs --output");
  RequireWritable(*config.output);
  const std::vector<std::string> lines = ReadNormalizedLines(config.input);
  TrainBpe(lines, config.vocab_size).Save(*config.output);
}

void RunTrainWordPiece(const CliConfig& config) {
  RequireFile(config.input, "input");
  if (!config.output) throw InvalidArgument("train-wordpiece needs --output");
  RequireWritable(*config.output);
  const std::vector<std::string> lines = ReadNormalizedLines(config.input);
  TrainWordPiece(lines, config.vocab_size).vocab.Save(*config.output);
}

void RunSplit(const CliConfig& config) {
  RequireFile(config.input, "input");
  if (config.train_output.empty() || config.test_output.empty()) {
    throw InvalidArgument("split needs --train-out and --test-out");
  }
  RequireWritable(config.train_output);
  RequireWritable(config.test_output);

  std::size_t n = 0;
  {
    std::ifstream in = OpenInput(config.input);
    std::string line;
    while (ReadLine(in, line)) ++n;
  }
  const SplitIndices split =
      SplitCorpusIndices(n, SplitSpec{config.fraction, config.seed, config.shuffle});
  std::vector<char> is_train(n, 0);
  for (std::size_t i : split.train) is_train[i] = 1;

  std::ifstream in = OpenInput(config.input);
  std::ofstream train = OpenOutput(config.train_output);
  std::ofstream test = OpenOutput(config.test_output);
  std::string line;
  for (std::size_t i = 0; i < n && ReadLine(in, line); ++i) {
    (is_train[i] ? train : test) << line << '\n';
  }
  if (!train.flush() || !test.flush()) throw IoError("write failed");
}

CorpusReport StreamReport(const WordTokenizer& tokenizer, const CliConfig& config) {
  std::ifstream in = OpenInput(config.input);
  ReportAccumulator total;
  std::vector<std::string> batch;
  const unsigned threads = std::max(1u, config.threads);
  while (ReadBatch(in, batch)) {
    std::vector<ReportAccumulator> parts(threads);
    const std::size_t chunk = (batch.size() + threads - 1) / threads;
    ParallelFor(threads, threads, [&](std::size_t t) {
      const std::size_t begin = std::min(batch.size(), t * chunk);
      const std::size_t end = std::min(batch.size(), begin + chunk);
      for (std::size_t i = begin; i < end; ++i) parts[t].AddLine(tokenizer, batch[i]);
    });
    for (const ReportAccumulator& p : parts) total.Merge(p);
  }
  return total.Finish(tokenizer);
}

void RunStats(const CliConfig& config, std::ostream& stdout_stream) {
  RequireFile(config.input, "input");
  if (config.output) RequireWritable(*config.output);
  const std::unique_ptr<WordTokenizer> tokenizer = MakeTokenizer(config, config.scheme, config.model);
  const CorpusReport report = StreamReport(*tokenizer, config);
  Sink sink(config, stdout_stream);
  if (config.format == ReportFormat::kTsv) {
    sink.get() << ReportTsvHeader() << '\n' << ReportTsvRow(report) << '\n';
  } else {
    ComparisonTable single;
    // Reuse the comparison layout for one column.
    const CorpusReport pair[] = {report, report};
    single = Compare(pair);
    single.columns.resize(1);
    for (auto& row : single.cells) row.resize(1);
    sink.get() << single.ToPretty();
  }
  sink.Close();
}

void RunCompare(const CliConfig& config, std::ostream& stdout_stream) {
  RequireFile(config.input, "input");
  if (config.output) RequireWritable(*config.output);
  std::vector<std::unique_ptr<WordTokenizer>> tokenizers;
  tokenizers.push_back(MakeTokenizer(config, Scheme::kSyllable, std::nullopt));
  if (config.bpe_model) tokenizers.push_back(MakeTokenizer(config, Scheme::kBpe, config.bpe_model));
  if (config.wordpiece_model) {
    tokenizers.push_back(MakeTokenizer(config, Scheme::kWordPiece, config.wordpiece_model));
  }
  if (tokenizers.size() < 2) {
    throw InvalidArgument("compare needs --bpe-model and/or --wordpiece-model");
  }
  std::vector<CorpusReport> reports;
  for (const auto& t : tokenizers) reports.push_back(StreamReport(*t, config));
  const ComparisonTable table = Compare(reports);
  Sink sink(config, stdout_stream);
  sink.get() << (config.format == ReportFormat::kTsv ? table.ToTsv() : table.ToPretty());
  sink.Close();
}

void RunInspectVocab(const CliConfig& config, std::ostream& stdout_stream) {
  if (config.output) RequireWritable(*config.output);
  const SyllableInventory inventory = LoadInventory(config);
  Sink sink(config, stdout_stream);
  Vocabulary(inventory).Write(sink.get());
  sink.Close();
}

}  // namespace

int Run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::kTokenize: RunTokenize(config, out); break;
      case Command::kTrainBpe: RunTrainBpe(config); break;
      case Command::kTrainWordPiece: RunTrainWordPiece(config); break;
      case Command::kSplit: RunSplit(config); break;
      case Command::kStats: RunStats(config, out); break;
      case Command::kCompare: RunCompare(config, out); break;
      case Command::kInspectVocab: RunInspectVocab(config, out); break;
    }
  } catch (const Error& e) {
    err << "swatok: " << e.what() << '\n';
    switch (e.category()) {
      case Error::Category::kInvalidArgument: return kExitInvalidArgs;
      case Error::Category::kIo: return kExitIo;
      case Error::Category::kData: return kExitData;
    }
  } catch (const std::exception& e) {
    err << "swatok: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Swahili syllable tokenizer with BPE and WordPiece baselines"};
  app.require_subcommand(1);
  CliConfig config;

  const std::map<std::string, Scheme> schemes = {
      {"syllable", Scheme::kSyllable}, {"bpe", Scheme::kBpe}, {"wordpiece", Scheme::kWordPiece}};
  const std::map<std::string, ReportFormat> formats = {{"tsv", ReportFormat::kTsv},
                                                       {"table", ReportFormat::kTable}};
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("-i,--input", config.input, "UTF-8 text, one sentence per line")->required();
  };
  auto add_output = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("-o,--output", config.output, "Output file (default: stdout)");
    if (required) opt->required();
  };
  auto add_inventory = [&](CLI::App* cmd) {
    cmd->add_option("--inventory", config.inventory, "Syllable override file, one per line");
  };
  auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", config.threads, "Worker threads (output order is preserved)")
        ->check(CLI::Range(1u, 256u));
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", config.format, "Report format: tsv or table")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* tokenize = app.add_subcommand("tokenize", "Tokenize each input line");
  add_input(tokenize);
  add_output(tokenize, false);
  tokenize->add_option("--scheme", config.scheme, "syllable, bpe or wordpiece")
      ->transform(CLI::CheckedTransformer(schemes, CLI::ignore_case));
  tokenize->add_option("--model", config.model, "Merge table (bpe) or vocabulary (wordpiece)");
  add_inventory(tokenize);
  tokenize->add_flag("--keep-unknown", config.keep_unknown,
                     "Keep unknown characters as [UNK] tokens instead of removing them");
  tokenize->add_flag("--ids", config.emit_ids, "Print vocabulary ids (syllable scheme)");
  tokenize->add_option("--separator", config.separator, "Word boundary marker (default \" | \")");
  add_threads(tokenize);

  auto* train_bpe = app.add_subcommand("train-bpe", "Learn a character-level BPE merge table");
  add_input(train_bpe);
  add_output(train_bpe, true);
  train_bpe->add_option("--vocab-size", config.vocab_size, "Target vocabulary size")->required();

  auto* train_wp = app.add_subcommand("train-wordpiece", "Learn a WordPiece vocabulary");
  add_input(train_wp);
  add_output(train_wp, true);
  train_wp->add_option("--vocab-size", config.vocab_size, "Target vocabulary size")->required();

  auto* split = app.add_subcommand("split", "Split a corpus into train and test files");
  add_input(split);
  split->add_option("--train-out", config.train_output, "Train output file")->required();
  split->add_option("--test-out", config.test_output, "Test output file")->required();
  split->add_option("--fraction", config.fraction, "Train fraction in (0, 1)");
  split->add_option("--seed", config.seed, "Shuffle seed");
  bool no_shuffle = false;
  split->add_flag("--no-shuffle", no_shuffle, "Keep corpus order (first lines go to train)");

  auto* stats = app.add_subcommand("stats", "Corpus statistics for one tokenizer");
  add_input(stats);
  add_output(stats, false);
  stats->add_option("--scheme", config.scheme, "syllable, bpe or wordpiece")
      ->transform(CLI::CheckedTransformer(schemes, CLI::ignore_case));
  stats->add_option("--model", config.model, "Merge table (bpe) or vocabulary (wordpiece)");
  add_inventory(stats);
  add_threads(stats);
  add_format(stats);

  auto* compare = app.add_subcommand("compare", "Compare the syllable tokenizer with baselines");
  add_input(compare);
  add_output(compare, false);
  compare->add_option("--bpe-model", config.bpe_model, "BPE merge table");
  compare->add_option("--wordpiece-model", config.wordpiece_model, "WordPiece vocabulary");
  add_inventory(compare);
  add_threads(compare);
  add_format(compare);

  auto* inspect = app.add_subcommand("inspect-vocab", "Print the syllable vocabulary, line = id");
  add_output(inspect, false);
  add_inventory(inspect);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidArgs;
  }
  config.shuffle = !no_shuffle;
  if (app.got_subcommand(tokenize)) config.command = Command::kTokenize;
  if (app.got_subcommand(train_bpe)) config.command = Command::kTrainBpe;
  if (app.got_subcommand(train_wp)) config.command = Command::kTrainWordPiece;
  if (app.got_subcommand(split)) config.command = Command::kSplit;
  if (app.got_subcommand(stats)) config.command = Command::kStats;
  if (app.got_subcommand(compare)) config.command = Command::kCompare;
  if (app.got_subcommand(inspect)) config.command = Command::kInspectVocab;
  return Run(config, out, err);
}

}  // namespace swatok::cli
