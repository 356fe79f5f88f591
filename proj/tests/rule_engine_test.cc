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

#include "cetrip/rule_engine.h"

#include <gtest/gtest.h>

#include <sstream>
#include <thread>

#include "cetrip/features.h"
#include "test_support.h"

namespace cetrip {
namespace {

RuleSet Load(const std::string& text) {
  std::istringstream in(text);
  return LoadRules(in);
}

TEST(RuleFileTest, ShippedRulesLoadInOrder) {
  const RuleSet rules = testing::ShippedRules();
  EXPECT_EQ(rules.CountLabel(Label::kCause), 33u);
  EXPECT_EQ(rules.CountLabel(Label::kEffect), 21u);
  ASSERT_EQ(rules.size(), 54u);
  EXPECT_EQ(rules.rules().front().id, "C1");
  EXPECT_EQ(rules.rules()[32].id, "C33");
  EXPECT_EQ(rules.rules()[33].id, "E1");
  for (size_t i = 0; i < rules.size(); ++i) {
    EXPECT_EQ(rules.rules()[i].priority, static_cast<int>(i));
  }
  const Rule* c1 = rules.Find("C1");
  ASSERT_NE(c1, nullptr);
  EXPECT_EQ(c1->and_set, (std::vector<std::string>{"dep.path.u<nsubj<v"}));
  EXPECT_EQ(c1->or_set,
            (std::vector<std::string>{"u.POS_gen.NOUN", "u.POS_gen.PROPN"}));
  EXPECT_EQ(c1->neg_set, (std::vector<std::string>{"v.rootword.result"}));
}

TEST(RuleFileTest, EveryShippedFeatureIsCanonical) {
  const RuleSet rules = testing::ShippedRules();
  for (const auto& r : rules.rules()) {
    for (const auto* set : {&r.and_set, &r.or_set, &r.neg_set}) {
      for (const auto& f : *set) {
        EXPECT_EQ(NormalizeFeature(f), f) << r.id;
        EXPECT_TRUE(ClassifyFeature(f).has_value()) << r.id << " " << f;
      }
    }
  }
}

TEST(RuleFileTest, WriteThenLoadIsIdentity) {
  const RuleSet rules = testing::ShippedRules();
  std::ostringstream out;
  WriteRules(out, rules);
  EXPECT_EQ(Load(out.str()).rules(), rules.rules());
}

TEST(RuleFileTest, ErrorsNameTheLine) {
  auto message = [](const std::string& text) {
    try {
      Load(text);
    } catch (const RuleError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message("RULE C1 CAUSE\nAND: w.bogus.x\n").find("line 2"),
            std::string::npos);
  EXPECT_NE(message("RULE C1 MAYBE\nAND: v.text.x\n").find("unknown label"),
            std::string::npos);
  EXPECT_NE(message("RULE C1 CAUSE\nAND: v.text.x\n\nRULE C1 EFFECT\n"
                    "AND: v.text.y\n")
                .find("duplicate"),
            std::string::npos);
  EXPECT_NE(message("RULE C1 CAUSE\nOR: v.text.x\n").find("no AND"),
            std::string::npos);
  EXPECT_NE(message("AND: v.text.x\n").find("outside"), std::string::npos);
  EXPECT_NE(message("RULE C1 CAUSE\nMAYBE: v.text.x\n").find("unknown set"),
            std::string::npos);
}

TEST(RuleSetTest, ConstructorValidates) {
  Rule ok{"A", Label::kCause, {"v.text.x"}, {}, {}, 0};
  EXPECT_NO_THROW(RuleSet({ok}));
  Rule empty = ok;
  empty.and_set.clear();
  EXPECT_THROW(RuleSet({empty}), RuleError);
  Rule other = ok;
  other.label = Label::kOther;
  EXPECT_THROW(RuleSet({other}), RuleError);
  Rule overlap = ok;
  overlap.neg_set = {"v.text.x"};
  EXPECT_THROW(RuleSet({overlap}), RuleError);
  EXPECT_THROW(RuleSet({ok, ok}), RuleError);
}

TEST(ClassifyPairTest, AndOrNegSemantics) {
  const RuleSet rules = Load(
      "RULE C1 CAUSE\nAND: v.text.a\nOR: u.text.b, u.text.c\n"
      "NEG: v.rootword.z\n\nRULE E1 EFFECT\nAND: v.text.a\n");
  EXPECT_EQ(ClassifyPair(rules, {"v.text.a", "u.text.c"}).rule_id, "C1");
  EXPECT_EQ(ClassifyPair(rules, {"v.text.a"}).rule_id, "E1");
  EXPECT_EQ(ClassifyPair(rules, {"v.text.a", "u.text.b", "v.rootword.z"})
                .rule_id,
            "E1");
  const PairLabel none = ClassifyPair(rules, {"u.text.b"});
  EXPECT_EQ(none.label, Label::kOther);
  EXPECT_FALSE(none.rule_id.has_value());
  EXPECT_EQ(rules.Counts(), (std::vector<uint64_t>{1, 2}));
}

TEST(ClassifyPairTest, Table2Pairs) {
  const auto corpus = testing::LoadFixture("table2_pedv.conllu");
  const auto& s = testing::FirstSentence(corpus);
  const RuleSet rules = testing::ShippedRules();
  const int cause = testing::FindToken(s, "cause");
  const PairLabel pedv =
      ClassifyPair(rules, GenerateFeatures(s, cause, testing::FindToken(s, "PEDV")));
  const PairLabel disease = ClassifyPair(
      rules, GenerateFeatures(s, cause, testing::FindToken(s, "disease")));
  EXPECT_EQ(pedv.label, Label::kCause);
  EXPECT_EQ(pedv.rule_id, "C1");
  EXPECT_EQ(disease.label, Label::kEffect);
  EXPECT_EQ(disease.rule_id, "E1");
}

TEST(RuleSetTest, CountersAreSafeAcrossThreads) {
  const RuleSet rules = Load("RULE C1 CAUSE\nAND: v.text.a\n");
  const FeatureSet f{"v.text.a"};
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < 8; ++t) {
      pool.emplace_back([&] {
        for (int i = 0; i < 1000; ++i) ClassifyPair(rules, f);
      });
    }
  }
  EXPECT_EQ(rules.Counts(), (std::vector<uint64_t>{8000}));
  RuleSet copy = rules;
  EXPECT_EQ(copy.Counts(), (std::vector<uint64_t>{8000}));
  const uint64_t more[] = {5};
  copy.AddCounts(more);
  EXPECT_EQ(copy.Counts(), (std::vector<uint64_t>{8005}));
  const uint64_t wrong[] = {1, 2};
  EXPECT_THROW(copy.AddCounts(wrong), RuleError);
  copy.ResetCounts();
  EXPECT_EQ(copy.Counts(), (std::vector<uint64_t>{0}));
}

TEST(CoverageTest, FractionsPerLabelSortedDescending) {
  const RuleSet rules = Load(
      "RULE C1 CAUSE\nAND: v.text.a\n\nRULE C2 CAUSE\nAND: v.text.b\n\n"
      "RULE E1 EFFECT\nAND: v.text.c\n");
  const uint64_t counts[] = {1, 3, 2};
  const auto rows = CoverageReport(rules, counts);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].id, "C2");
  EXPECT_DOUBLE_EQ(rows[0].fraction, 0.75);
  EXPECT_EQ(rows[1].id, "E1");
  EXPECT_DOUBLE_EQ(rows[1].fraction, 1.0);
  EXPECT_EQ(rows[2].id, "C1");
  EXPECT_DOUBLE_EQ(rows[2].fraction, 0.25);
  const uint64_t zero[] = {0, 0, 0};
  for (const auto& row : CoverageReport(rules, zero)) {
    EXPECT_EQ(row.fraction, 0.0);
  }
}

TEST(RuleTest, Describe) {
  const Rule r{"C8", Label::kCause, {"a.b", "c.d"}, {}, {"e.f"}, 0};
  EXPECT_EQ(r.Describe(), "AND: {a.b, c.d}; NEG: {e.f}");
  EXPECT_EQ(ParseLabel("cause"), Label::kCause);
  EXPECT_FALSE(ParseLabel("x").has_value());
}

}  // namespace
}  // namespace cetrip
