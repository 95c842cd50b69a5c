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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "swatok/normalizer.h"
#include "swatok/syllable_tokenizer.h"
#include "swahili_text.h"

namespace swatok::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("swatok_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path Write(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
  }

  static std::string Read(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  int Exec(std::vector<std::string> args) {
    args.insert(args.begin(), "swatok");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return Main(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, TokenizeSyllable) {
  const fs::path in = Write("in.txt", "kula\nTofauti na somo la Historia\n\n");
  EXPECT_EQ(Exec({"tokenize", "--scheme", "syllable", "-i", in.string()}), kExitOk);
  EXPECT_EQ(out_.str(), "ku la\nto fa u ti | na | so mo | la | hi s to ri a\n\n");
  EXPECT_EQ(Exec({"tokenize", "-i", in.string(), "--separator", " / "}), kExitOk);
  EXPECT_EQ(out_.str(), "ku la\nto fa u ti / na / so mo / la / hi s to ri a\n\n");
}

TEST_F(CliTest, TokenizeIdsAndUnknowns) {
  const fs::path in = Write("in.txt", "mtu 42\n");
  EXPECT_EQ(Exec({"tokenize", "-i", in.string()}), kExitOk);
  EXPECT_EQ(out_.str(), "m [UNK] u\n");
  EXPECT_EQ(Exec({"tokenize", "-i", in.string(), "--keep-unknown"}), kExitOk);
  EXPECT_EQ(out_.str(), "m [UNK] u | [UNK] [UNK]\n");
  EXPECT_EQ(Exec({"tokenize", "-i", in.string(), "--ids"}), kExitOk);
  const SyllableTokenizer tok;
  const auto ids = tok.Encode("mtu");
  EXPECT_EQ(out_.str(), std::to_string(ids[0]) + " 1 " + std::to_string(ids[2]) + "\n");
}

TEST_F(CliTest, TokenizeEmptyFile) {
  const fs::path in = Write("empty.txt", "");
  const fs::path out = dir_ / "out.txt";
  EXPECT_EQ(Exec({"tokenize", "-i", in.string(), "-o", out.string()}), kExitOk);
  EXPECT_TRUE(fs::exists(out));
  EXPECT_EQ(Read(out), "");
}

TEST_F(CliTest, ThreadedOutputMatchesSingleThread) {
  testing::SwahiliTextGenerator gen(61);
  std::string text;
  for (const auto& s : gen.Sentences(20000)) text += s + "\n";
  const fs::path in = Write("corpus.txt", text);
  ASSERT_EQ(Exec({"tokenize", "-i", in.string()}), kExitOk);
  const std::string single = out_.str();
  ASSERT_EQ(Exec({"tokenize", "-i", in.string(), "--threads", "4"}), kExitOk);
  EXPECT_EQ(out_.str(), single);
}

TEST_F(CliTest, AdapterMatchesLibrary) {
  testing::SwahiliTextGenerator gen(62);
  const auto sentences = gen.Sentences(200);
  std::string text;
  std::string expected;
  const SyllableTokenizer tok;
  for (const auto& s : sentences) {
    text += s + "\n";
    const TokenSequence seq = tok.Tokenize(s);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i > 0) expected += seq.tokens[i].word_initial ? " | " : " ";
      expected += seq.tokens[i].id == Vocabulary::kUnk ? "[UNK]" : seq.tokens[i].text;
    }
    expected += "\n";
  }
  const fs::path in = Write("corpus.txt", text);
  ASSERT_EQ(Exec({"tokenize", "-i", in.string()}), kExitOk);
  EXPECT_EQ(out_.str(), expected);
}

TEST_F(CliTest, SplitCounts) {
  std::string text;
  text.reserve(303260 * 8);
  for (int i = 0; i < 303260; ++i) text += "s" + std::to_string(i) + "\n";
  const fs::path in = Write("all.txt", text);
  const fs::path train = dir_ / "train.txt";
  const fs::path test = dir_ / "test.txt";
  ASSERT_EQ(Exec({"split", "--fraction", "0.9", "--seed", "42", "-i", in.string(), "--train-out",
                  train.string(), "--test-out", test.string()}),
            kExitOk);
  auto count = [](const std::string& s) { return std::count(s.begin(), s.end(), '\n'); };
  const std::string train_text = Read(train);
  EXPECT_EQ(count(train_text), 272934);
  EXPECT_EQ(count(Read(test)), 30326);
  ASSERT_EQ(Exec({"split", "--fraction", "0.9", "--seed", "42", "-i", in.string(), "--train-out",
                  train.string(), "--test-out", test.string()}),
            kExitOk);
  EXPECT_EQ(Read(train), train_text);
}

TEST_F(CliTest, TrainAndCompare) {
  testing::SwahiliTextGenerator gen(63);
  std::string text;
  for (const auto& s : gen.Sentences(300)) text += s + "\n";
  const fs::path in = Write("corpus.txt", text);
  const fs::path merges = dir_ / "merges.txt";
  const fs::path vocab = dir_ / "wp.txt";
  ASSERT_EQ(Exec({"train-bpe", "-i", in.string(), "-o", merges.string(), "--vocab-size", "120"}),
            kExitOk)
      << err_.str();
  ASSERT_EQ(Exec({"train-wordpiece", "-i", in.string(), "-o", vocab.string(), "--vocab-size",
                  "120"}),
            kExitOk)
      << err_.str();
  EXPECT_TRUE(Read(merges).starts_with("#alphabet "));
  EXPECT_TRUE(Read(vocab).starts_with("[UNK]\n"));

  ASSERT_EQ(Exec({"tokenize", "--scheme", "bpe", "--model", merges.string(), "-i", in.string()}),
            kExitOk);
  EXPECT_FALSE(out_.str().empty());
  ASSERT_EQ(Exec({"tokenize", "--scheme", "wordpiece", "--model", vocab.string(), "-i",
                  in.string()}),
            kExitOk);
  EXPECT_NE(out_.str().find("##"), std::string::npos);

  ASSERT_EQ(Exec({"compare", "-i", in.string(), "--bpe-model", merges.string(),
                  "--wordpiece-model", vocab.string(), "--format", "tsv"}),
            kExitOk)
      << err_.str();
  EXPECT_TRUE(out_.str().starts_with("metric\tsyllable\tbpe\twordpiece\n"));
  EXPECT_NE(out_.str().find("\nvocab_size\t217\t120\t120\n"), std::string::npos) << out_.str();

  ASSERT_EQ(Exec({"stats", "-i", in.string(), "--format", "tsv"}), kExitOk);
  EXPECT_TRUE(out_.str().starts_with("tokenizer\tlines\t"));
  ASSERT_EQ(Exec({"stats", "-i", in.string()}), kExitOk);
  EXPECT_NE(out_.str().find("| syllable |"), std::string::npos) << out_.str();
}

TEST_F(CliTest, InspectVocab) {
  ASSERT_EQ(Exec({"inspect-vocab"}), kExitOk);
  const std::string listing = out_.str();
  EXPECT_TRUE(listing.starts_with("[PAD]\n[UNK]\n[BOS]\n[EOS]\n"));
  EXPECT_EQ(std::count(listing.begin(), listing.end(), '\n'), 221);

  const fs::path inv = Write("inv.txt", "ku\nla\n");
  ASSERT_EQ(Exec({"inspect-vocab", "--inventory", inv.string()}), kExitOk);
  EXPECT_EQ(out_.str(), "[PAD]\n[UNK]\n[BOS]\n[EOS]\nku\nla\n");
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Exec({}), kExitInvalidArgs);
  EXPECT_EQ(Exec({"tokenize"}), kExitInvalidArgs);
  EXPECT_EQ(Exec({"bogus"}), kExitInvalidArgs);
  EXPECT_EQ(Exec({"--help"}), kExitOk);
  EXPECT_NE(out_.str().find("tokenize"), std::string::npos);

  EXPECT_EQ(Exec({"tokenize", "-i", (dir_ / "missing.txt").string()}), kExitIo);
  EXPECT_EQ(err_.str().find('\n'), err_.str().size() - 1);  // one-line diagnostic

  const fs::path in = Write("in.txt", "kula\n");
  EXPECT_EQ(Exec({"tokenize", "--scheme", "bpe", "-i", in.string()}), kExitInvalidArgs);
  EXPECT_EQ(Exec({"tokenize", "--scheme", "nope", "-i", in.string()}), kExitInvalidArgs);
  EXPECT_EQ(Exec({"compare", "-i", in.string()}), kExitInvalidArgs);
  const fs::path bad = Write("bad.txt", "no alphabet\n");
  EXPECT_EQ(Exec({"tokenize", "--scheme", "bpe", "--model", bad.string(), "-i", in.string()}),
            kExitData);
  const fs::path bad_inv = Write("inv.txt", "xe\n");
  EXPECT_EQ(Exec({"tokenize", "--inventory", bad_inv.string(), "-i", in.string()}), kExitData);
  EXPECT_EQ(Exec({"train-bpe", "-i", Write("e.txt", "").string(), "-o",
                  (dir_ / "m.txt").string(), "--vocab-size", "10"}),
            kExitData);
  EXPECT_EQ(Exec({"split", "-i", in.string(), "--train-out", (dir_ / "a").string(), "--test-out",
                  (dir_ / "b").string(), "--fraction", "1.5"}),
            kExitInvalidArgs);
  EXPECT_EQ(Exec({"tokenize", "-i", in.string(), "-o", (dir_ / "no/such/dir/out").string()}),
            kExitIo);
}

}  // namespace
}  // namespace swatok::cli
