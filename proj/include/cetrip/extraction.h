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

// Phrase expansion, triplet formation, negation/uncertainty arguments and the
// per-sentence and per-corpus extraction pipeline.

#ifndef CETRIP_EXTRACTION_H_
#define CETRIP_EXTRACTION_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "cetrip/conllu.h"
#include "cetrip/parse_model.h"
#include "cetrip/rule_engine.h"
#include "cetrip/trigger_lexicon.h"

namespace cetrip {

struct ExpansionConfig {
  LabelSet excluded_deps{"punct", "appos", "advcl"};
  // Keep phrases on their own side of a trigger that sits inside their
  // subtree.
  bool clamp_at_trigger = true;
  LabelSet uncertainty_words{"may", "might", "would", "could"};
};

struct Phrase {
  int head = 0;
  std::vector<int> tokens;  // ascending, may have gaps
  std::string text;         // surfaces of tokens joined by single spaces

  int first() const { return tokens.front(); }
  int last() const { return tokens.back(); }
  friend bool operator==(const Phrase&, const Phrase&) = default;
};

// Trigger as carried by a triplet; self-contained so triplets survive a
// round trip through JSON.
struct TriggerSpan {
  int begin = 0;  // [begin, end) token range
  int end = 0;
  int anchor = 0;
  std::string text;   // span surfaces joined by single spaces
  std::string lemma;  // anchor lemma
  std::string entry;  // canonical lexicon entry
  friend bool operator==(const TriggerSpan&, const TriggerSpan&) = default;
};

struct ArgumentToken {
  int index = 0;
  std::string text;
  friend bool operator==(const ArgumentToken&, const ArgumentToken&) = default;
};

struct CETriplet {
  std::string doc_id;
  std::string sent_id;
  TriggerSpan trigger;
  Phrase cause;
  Phrase effect;
  std::optional<ArgumentToken> negation;
  std::optional<ArgumentToken> uncertainty;
  std::string cause_rule_id;
  std::string effect_rule_id;
  friend bool operator==(const CETriplet&, const CETriplet&) = default;
};

struct LabeledHead {
  int head = 0;
  std::string rule_id;
};

TriggerSpan MakeTriggerSpan(const ParsedSentence& s, const TriggerMatch& m);

// Subtree of head minus excluded dependents. When clamping and the trigger
// lies in head's full subtree, the trigger and everything past it on that
// side are dropped, along with the trigger's own dependents. Throws std::invalid_argument when head == trigger.
Phrase ExpandPhrase(const ParsedSentence& s, int head, int trigger,
                    const ExpansionConfig& cfg = {});

// One triplet per (cause, effect) pair with distinct heads; empty when either
// list is empty. Negation and uncertainty are attached here.
std::vector<CETriplet> FormTriplets(const TriggerMatch& trigger,
                                    std::span<const LabeledHead> causes,
                                    std::span<const LabeledHead> effects,
                                    const ParsedSentence& s,
                                    const ExpansionConfig& cfg = {});

// Leftmost child of the trigger attached as neg.
std::optional<int> ExtractNegation(const ParsedSentence& s, int trigger);

// Leftmost aux child of the trigger whose lowercased surface is an
// uncertainty word.
std::optional<int> ExtractUncertainty(const ParsedSentence& s, int trigger,
                                      const ExpansionConfig& cfg = {});

struct SentenceResult {
  std::vector<CETriplet> triplets;
  size_t triggers = 0;
};

// Triggers, candidate pairs, classification, triplet formation. Output is
// ordered by trigger, then cause head, then effect head.
SentenceResult ExtractSentence(const ParsedSentence& s,
                               std::span<const LexiconEntry> lexicon,
                               const RuleSet& rules,
                               const ExpansionConfig& cfg = {});

struct CorpusResult {
  // Triplets in corpus order regardless of the number of workers.
  std::vector<CETriplet> triplets;
  size_t sentences = 0;
  size_t triggers = 0;
  std::vector<std::string> diagnostics;
};

// Runs ExtractSentence over every sentence using `jobs` worker threads.
// Rule counters in `rules` accumulate pair classifications.
CorpusResult ExtractCorpus(const Corpus& corpus,
                           std::span<const LexiconEntry> lexicon,
                           const RuleSet& rules, const ExpansionConfig& cfg,
                           int jobs = 1);

// Number of triplets whose cause (or effect) headword each rule identified,
// indexed like rules.rules().
std::vector<uint64_t> TripletCoverage(const RuleSet& rules,
                                      std::span<const CETriplet> triplets);

}  // namespace cetrip

#endif  // CETRIP_EXTRACTION_H_
