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

#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "swatok/errors.h"
#include "swatok/normalizer.h"
#include "swahili_text.h"
#include "wordpiece_oracle.h"

namespace swatok {
namespace {

using Lines = std::vector<std::string>;
using Strings = std::vector<std::string>;

Strings Texts(const std::vector<Piece>& pieces) {
  Strings out;
  for (const Piece& p : pieces) out.push_back(p.text);
  return out;
}

TEST(WordPieceScoreTest, LikelihoodRatioComparison) {
  const PairScore ab{2, 10, 2};   // 0.1
  const PairScore ac{5, 10, 10};  // 0.05
  EXPECT_GT(CompareScores(ab, ac), 0);
  EXPECT_LT(CompareScores(ac, ab), 0);
  EXPECT_EQ(CompareScores(PairScore{1, 2, 3}, PairScore{2, 4, 3}), 0);
  EXPECT_DOUBLE_EQ(ab.value(), 0.1);
}

TEST(WordPieceScoreTest, ExactWhereDoublesTie) {
  // Ratios differ in the 17th significant digit.
  const std::uint64_t big = 1ull << 40;
  const PairScore a{big + 1, big, 1};
  const PairScore b{big, big - 1, 1};
  EXPECT_NE(CompareScores(a, b), 0);
}

TEST(TrainWordPieceTest, SingleCharacterCorpus) {
  const WordPieceTraining t = TrainWordPiece(Lines{"x x x"}, 10);
  EXPECT_TRUE(t.steps.empty());
  EXPECT_EQ(Strings(t.vocab.pieces().begin(), t.vocab.pieces().end()), (Strings{"x", "##x"}));
}

TEST(TrainWordPieceTest, LalaFirstStep) {
  // l:2 ##a:4 ##l:2; every adjacent pair scores 2/8 with count 2, so the
  // lexicographic tie-break picks (##a, ##l).
  const WordPieceTraining t = TrainWordPiece(Lines{"lala lala"}, 7);
  ASSERT_FALSE(t.steps.empty());
  EXPECT_EQ(t.steps[0].left, "##a");
  EXPECT_EQ(t.steps[0].right, "##l");
  EXPECT_EQ(t.steps[0].merged, "##al");
  EXPECT_EQ(t.steps[0].score.pair_count, 2u);
  EXPECT_EQ(t.steps[0].score.left_count, 4u);
  EXPECT_EQ(t.steps[0].score.right_count, 2u);
  const auto replay = testing::ReplayWordPieceTrace(Lines{"lala lala"}, t.steps);
  EXPECT_TRUE(replay.ok) << replay.failure;
}

TEST(TrainWordPieceTest, PrefersRareButCohesivePairs) {
  // "qz" occurs once but q and z never occur elsewhere: score 1.
  const WordPieceTraining t = TrainWordPiece(Lines{"qz aa aa aa ab ab"}, 9);
  ASSERT_FALSE(t.steps.empty());
  EXPECT_EQ(t.steps[0].merged, "qz");
}

TEST(TrainWordPieceTest, EveryStepMaximizesScore) {
  testing::SwahiliTextGenerator gen(31);
  Lines corpus;
  for (const std::string& s : gen.Sentences(60)) corpus.push_back(Normalize(s));
  const WordPieceTraining t = TrainWordPiece(corpus, 120);
  EXPECT_EQ(t.vocab.size(), 120u);
  const auto replay = testing::ReplayWordPieceTrace(corpus, t.steps);
  EXPECT_TRUE(replay.ok) << replay.failure;
  EXPECT_EQ(replay.steps_checked, t.steps.size());
}

TEST(TrainWordPieceTest, Errors) {
  EXPECT_THROW(TrainWordPiece(Lines{}, 10), EmptyCorpus);
  EXPECT_THROW(TrainWordPiece(Lines{"ab"}, 4), InvalidArgument);
}

TEST(TokenizeWordPieceTest, GreedyLongestMatch) {
  const WordPieceVocab vocab(Strings{"a", "na", "ku", "la", "an", "##a", "##na", "##ku", "##la",
                                     "##kula", "##n", "##k", "##u", "##l"});
  // From position 0 "an" beats "a"; then "##a" (no "##ak..."), then "##kula".
  EXPECT_EQ(Texts(TokenizeWordPiece(vocab, "anakula")), (Strings{"an", "##a", "##kula"}));
  EXPECT_EQ(Texts(TokenizeWordPiece(vocab, "kula")), (Strings{"ku", "##la"}));
}

// Independent simulation: at each cursor try every end position from the
// right and keep the first hit.
Strings SimulateLongestMatch(const std::set<std::string>& vocab, const std::string& word) {
  Strings out;
  std::size_t start = 0;
  while (start < word.size()) {
    std::string hit;
    for (std::size_t len = word.size() - start; len > 0; --len) {
      const std::string cand = (start ? "##" : "") + word.substr(start, len);
      if (vocab.contains(cand)) {
        hit = cand;
        break;
      }
    }
    if (hit.empty()) return {"[UNK]"};
    out.push_back(hit);
    start += hit.size() - (start ? 2 : 0);
  }
  return out;
}

TEST(TokenizeWordPieceTest, AgreesWithSimulationOnTrainedVocab) {
  testing::SwahiliTextGenerator gen(41);
  Lines corpus;
  for (const std::string& s : gen.Sentences(100)) corpus.push_back(Normalize(s));
  const WordPieceVocab vocab = TrainWordPiece(corpus, 150).vocab;
  const std::set<std::string> set(vocab.pieces().begin(), vocab.pieces().end());
  for (int i = 0; i < 500; ++i) {
    const std::string w = gen.SyllableWord(1, 5);
    const auto pieces = TokenizeWordPiece(vocab, w);
    EXPECT_EQ(Texts(pieces), SimulateLongestMatch(set, w)) << w;
    if (!(pieces.size() == 1 && pieces[0].unknown)) {
      std::string joined;
      for (const Piece& p : pieces) joined += StripContinuation(p.text);
      EXPECT_EQ(joined, w);
    }
  }
}

TEST(TokenizeWordPieceTest, WholeWordAndUnknown) {
  const WordPieceVocab vocab(Strings{"kula", "k", "##u"});
  EXPECT_EQ(Texts(TokenizeWordPiece(vocab, "kula")), (Strings{"kula"}));
  const auto unk = TokenizeWordPiece(vocab, "kuz");
  ASSERT_EQ(unk.size(), 1u);
  EXPECT_EQ(unk[0].text, "[UNK]");
  EXPECT_TRUE(unk[0].unknown);
}

TEST(WordPieceVocabTest, FileRoundTrip) {
  const WordPieceVocab vocab = TrainWordPiece(Lines{"kula kula anakula"}, 16).vocab;
  std::stringstream buffer;
  vocab.Write(buffer);
  EXPECT_TRUE(buffer.str().starts_with("[UNK]\n"));
  EXPECT_NE(buffer.str().find("\n##u\n"), std::string::npos);
  EXPECT_EQ(WordPieceVocab::Read(buffer), vocab);
  std::stringstream dup("a\na\n");
  EXPECT_THROW(WordPieceVocab::Read(dup), DuplicateEntry);
}

}  // namespace
}  // namespace swatok
