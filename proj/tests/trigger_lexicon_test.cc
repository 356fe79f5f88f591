// Copyright 2026 The cetrip Authors.
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

#include "cetrip/trigger_lexicon.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "test_support.h"

namespace cetrip {
namespace {

using testing::MakeSentence;

std::vector<LexiconEntry> Load(const std::string& text) {
  std::istringstream in(text);
  return LoadLexicon(in);
}

TEST(LexiconTest, ShippedLexiconCounts) {
  const auto lexicon = testing::ShippedLexicon();
  const auto agnostic =
      std::count_if(lexicon.begin(), lexicon.end(), [](const auto& e) {
        return e.trigger_class == TriggerClass::kAgnostic;
      });
  EXPECT_EQ(agnostic, 33);
  EXPECT_EQ(lexicon.size() - agnostic, 108u);
}

TEST(LexiconTest, ParsesClassesVariantsAndMultiwordEntries) {
  const auto lex = Load(
      "# comment\n\ngive rise to\tagnostic\tgave rise to\n"
      "Induce\tspecific\tinduces, induced\n");
  ASSERT_EQ(lex.size(), 2u);
  EXPECT_TRUE(lex[0].is_mwe);
  EXPECT_EQ(lex[0].trigger_class, TriggerClass::kAgnostic);
  EXPECT_EQ(TriggerClassName(lex[1].trigger_class), "specific");
  EXPECT_EQ(TriggerVariants(lex[1]),
            (std::set<std::string>{"induce", "induces", "induced"}));
}

TEST(LexiconTest, RejectsDuplicatesAndUnknownClasses) {
  EXPECT_THROW(Load("cause\tagnostic\ncause\tspecific\n"), LexiconError);
  EXPECT_THROW(Load("cause\tweird\n"), LexiconError);
  EXPECT_THROW(Load("\tagnostic\n"), LexiconError);
  try {
    Load("a\tagnostic\nb\tagnostic\nb\tagnostic\n");
    FAIL();
  } catch (const LexiconError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(LexiconTest, MissingFileNamesPath) {
  try {
    LoadLexiconFile("/nonexistent/lexicon.tsv");
    FAIL();
  } catch (const LexiconError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/lexicon.tsv"),
              std::string::npos);
  }
}

TEST(FindTriggersTest, MatchesSurfaceOrLemma) {
  const auto lex = Load("induce\tspecific\tinduces\n");
  // "Induced" is neither listed form, but its lemma is.
  std::vector<Token> tokens(2);
  tokens[0] = Token{0, "Drugs", "", "drug", "NNS", "NOUN", 1, "nsubj"};
  tokens[1] = Token{1, "Induced", "", "induce", "VBD", "VERB", kRoot, "root"};
  const ParsedSentence s(tokens, "d", "s");
  const auto found = FindTriggers(s, lex);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].begin, 1);
  EXPECT_EQ(found[0].anchor, 1);
  EXPECT_EQ(found[0].entry->canonical, "induce");
}

TEST(FindTriggersTest, LongestMatchWinsAndAnchorIsSpanHead) {
  const auto lex = Load(
      "lead\tagnostic\tled\nlead to\tagnostic\tled to\n");
  // X led to Y: led is the head of "to".
  const auto s = MakeSentence({1, kRoot, 1, 2},
                              {"nsubj", "", "prep", "pobj"},
                              {"X", "led", "to", "Y"});
  const auto found = FindTriggers(s, lex);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].begin, 1);
  EXPECT_EQ(found[0].end, 3);
  EXPECT_EQ(found[0].anchor, 1);
  EXPECT_EQ(found[0].entry->canonical, "lead to");
  EXPECT_TRUE(found[0].Contains(2));
  EXPECT_FALSE(found[0].Contains(3));
}

TEST(FindTriggersTest, NonOverlappingAndSortedByPosition) {
  const auto lex = Load("cause\tagnostic\tcaused\n");
  const auto s = MakeSentence({kRoot, 0, 0}, {}, {"caused", "x", "cause"});
  const auto found = FindTriggers(s, lex);
  ASSERT_EQ(found.size(), 2u);
  EXPECT_EQ(found[0].begin, 0);
  EXPECT_EQ(found[1].begin, 2);
}

TEST(FindTriggersTest, FixtureTriggers) {
  const auto lex = testing::ShippedLexicon();
  const auto corpus = testing::LoadFixture("table2_pedv.conllu");
  const auto found = FindTriggers(testing::FirstSentence(corpus), lex);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].entry->canonical, "cause");
}

}  // namespace
}  // namespace cetrip
