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

// Decision-list classification of (trigger, candidate headword) pairs.
//
// Rule file format:
//
//   # comment
//   RULE C1 CAUSE
//   AND: dep.path.u<nsubj<v
//   OR: u.POS_gen.NOUN, u.POS_gen.PROPN
//   NEG: v.rootword.result
//
// Records are separated by blank lines; OR and NEG lines are optional. File
// order is priority order.

#ifndef CETRIP_RULE_ENGINE_H_
#define CETRIP_RULE_ENGINE_H_

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cetrip/features.h"

namespace cetrip {

enum class Label { kCause, kEffect, kOther };

std::string_view LabelName(Label label);
// Accepts CAUSE / EFFECT / OTHER in any case.
std::optional<Label> ParseLabel(std::string_view name);

struct Rule {
  std::string id;
  Label label = Label::kCause;
  std::vector<std::string> and_set;
  std::vector<std::string> or_set;
  std::vector<std::string> neg_set;
  int priority = 0;

  // "AND: {a, b}; OR: {c}; NEG: {d}" with empty OR/NEG parts omitted.
  std::string Describe() const;

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct PairLabel {
  Label label = Label::kOther;
  std::optional<std::string> rule_id;  // set iff label != kOther
};

class RuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Priority-ordered rules plus per-rule match counters. Rules are immutable;
// the counters are atomic so one RuleSet can serve concurrent classifiers.
class RuleSet {
 public:
  RuleSet() = default;
  // Validates rules and renumbers priorities to list order. Throws RuleError
  // on empty AND sets, overlapping AND/OR/NEG sets, duplicate ids or an OTHER
  // label.
  explicit RuleSet(std::vector<Rule> rules);

  RuleSet(const RuleSet& other);
  RuleSet& operator=(const RuleSet& other);

  const std::vector<Rule>& rules() const { return rules_; }
  size_t size() const { return rules_.size(); }
  const Rule* Find(std::string_view id) const;
  size_t CountLabel(Label label) const;

  std::vector<uint64_t> Counts() const;
  void AddCounts(std::span<const uint64_t> counts);
  void ResetCounts();
  void Increment(size_t rule_index) const;

 private:
  std::vector<Rule> rules_;
  mutable std::vector<std::atomic<uint64_t>> counters_;
};

// AND subset, OR non-empty-intersection (when OR is non-empty), NEG disjoint.
bool RuleMatches(const Rule& rule, const FeatureSet& features);

// First matching rule in priority order wins and has its counter bumped;
// no match gives OTHER.
PairLabel ClassifyPair(const RuleSet& rules, const FeatureSet& features);

// Feature strings are normalized with NormalizeFeature; unknown families are
// load errors. Messages carry the 1-based line number.
RuleSet LoadRules(std::istream& in);
RuleSet LoadRulesFile(const std::filesystem::path& path);
void WriteRules(std::ostream& out, const RuleSet& rules);

struct CoverageRow {
  std::string id;
  Label label = Label::kCause;
  uint64_t count = 0;
  // count over the total count of rules with the same label; 0 when that
  // total is 0.
  double fraction = 0.0;
};

// Rows sorted by descending count, ties in priority order.
std::vector<CoverageRow> RuleCoverageReport(const RuleSet& rules);
std::vector<CoverageRow> CoverageReport(const RuleSet& rules,
                                        std::span<const uint64_t> counts);

}  // namespace cetrip

#endif  // CETRIP_RULE_ENGINE_H_
