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

#ifndef SWATOK_CLI_H_
#define SWATOK_CLI_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace swatok::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidArgs = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitData = 4;

enum class Command { kTokenize, kTrainBpe, kTrainWordPiece, kSplit, kStats, kCompare, kInspectVocab };
enum class Scheme { kSyllable, kBpe, kWordPiece };
enum class ReportFormat { kTsv, kTable };

struct CliConfig {
  Command command = Command::kTokenize;
  std::filesystem::path input;
  std::optional<std::filesystem::path> output;  // stdout when unset
  std::filesystem::path train_output;
  std::filesystem::path test_output;
  Scheme scheme = Scheme::kSyllable;
  std::optional<std::filesystem::path> model;
  std::optional<std::filesystem::path> bpe_model;
  std::optional<std::filesystem::path> wordpiece_model;
  std::optional<std::filesystem::path> inventory;
  bool keep_unknown = false;
  bool emit_ids = false;
  std::string separator = " | ";
  std::uint64_t seed = 42;
  double fraction = 0.9;
  bool shuffle = true;
  std::size_t vocab_size = 0;
  unsigned threads = 1;
  ReportFormat format = ReportFormat::kTable;
};

// Executes one command. Errors are reported as a single line on `err` and
// mapped to the exit codes above.
int Run(const CliConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (CLI11) and runs. --help prints usage and returns 0.
int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace swatok::cli

#endif  // SWATOK_CLI_H_
