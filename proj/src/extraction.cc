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

#include "cetrip/extraction.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iterator>
#include <map>
#include <stdexcept>
#include <thread>

#include "cetrip/features.h"

namespace cetrip {
namespace {

std::string JoinSurfaces(const ParsedSentence& s, std::span<const int> tokens) {
  std::string out;
  for (int i : tokens) {
    if (!out.empty()) out += ' ';
    out += s.token(i).text;
  }
  return out;
}

std::optional<ArgumentToken> ToArgument(const ParsedSentence& s,
                                        std::optional<int> index) {
  if (!index) return std::nullopt;
  return ArgumentToken{*index, s.token(*index).text};
}

}  // namespace

TriggerSpan MakeTriggerSpan(const ParsedSentence& s, const TriggerMatch& m) {
  TriggerSpan span;
  span.begin = m.begin;
  span.end = m.end;
  span.anchor = m.anchor;
  std::vector<int> tokens;
  for (int i = m.begin; i < m.end; ++i) tokens.push_back(i);
  span.text = JoinSurfaces(s, tokens);
  span.lemma = s.token(m.anchor).lemma;
  if (m.entry != nullptr) span.entry = m.entry->canonical;
  return span;
}

Phrase ExpandPhrase(const ParsedSentence& s, int head, int trigger,
                    const ExpansionConfig& cfg) {
  s.CheckIndex(head);
  s.CheckIndex(trigger);
  if (head == trigger) {
    throw std::invalid_argument("phrase head coincides with the trigger");
  }
  Phrase phrase;
  phrase.head = head;
  phrase.tokens = Subtree(s, head, cfg.excluded_deps);
  if (cfg.clamp_at_trigger && IsAncestor(s, head, trigger)) {
    std::erase_if(phrase.tokens, [&](int i) {
      if (trigger > head ? i >= trigger : i <= trigger) return true;
      return IsAncestor(s, trigger, i);
    });
  }
  phrase.text = JoinSurfaces(s, phrase.tokens);
  return phrase;
}

std::optional<int> ExtractNegation(const ParsedSentence& s, int trigger) {
  for (int c : s.children(trigger)) {
    if (ToLower(s.token(c).dep) == "neg") return c;
  }
  return std::nullopt;
}

std::optional<int> ExtractUncertainty(const ParsedSentence& s, int trigger,
                                      const ExpansionConfig& cfg) {
  for (int c : s.children(trigger)) {
    const Token& t = s.token(c);
    if (ToLower(t.dep) == "aux" && cfg.uncertainty_words.contains(t.lower)) {
      return c;
    }
  }
  return std::nullopt;
}

std::vector<CETriplet> FormTriplets(const TriggerMatch& trigger,
                                    std::span<const LabeledHead> causes,
                                    std::span<const LabeledHead> effects,
                                    const ParsedSentence& s,
                                    const ExpansionConfig& cfg) {
  std::vector<CETriplet> out;
  if (causes.empty() || effects.empty()) return out;
  const TriggerSpan span = MakeTriggerSpan(s, trigger);
  const auto negation = ToArgument(s, ExtractNegation(s, trigger.anchor));
  const auto uncertainty =
      ToArgument(s, ExtractUncertainty(s, trigger.anchor, cfg));
  for (const auto& cause : causes) {
    for (const auto& effect : effects) {
      if (cause.head == effect.head) continue;
      CETriplet t;
      t.doc_id = s.doc_id();
      t.sent_id = s.sent_id();
      t.trigger = span;
      t.cause = ExpandPhrase(s, cause.head, trigger.anchor, cfg);
      t.effect = ExpandPhrase(s, effect.head, trigger.anchor, cfg);
      t.negation = negation;
      t.uncertainty = uncertainty;
      t.cause_rule_id = cause.rule_id;
      t.effect_rule_id = effect.rule_id;
      out.push_back(std::move(t));
    }
  }
  return out;
}

SentenceResult ExtractSentence(const ParsedSentence& s,
                               std::span<const LexiconEntry> lexicon,
                               const RuleSet& rules,
                               const ExpansionConfig& cfg) {
  SentenceResult result;
  const auto triggers = FindTriggers(s, lexicon);
  result.triggers = triggers.size();
  const auto candidates = CandidateHeadwords(s);
  for (const auto& trigger : triggers) {
    std::vector<LabeledHead> causes, effects;
    for (int u : candidates) {
      if (trigger.Contains(u)) continue;
      const PairLabel label =
          ClassifyPair(rules, GenerateFeatures(s, trigger.anchor, u));
      if (label.label == Label::kCause) {
        causes.push_back(LabeledHead{u, *label.rule_id});
      } else if (label.label == Label::kEffect) {
        effects.push_back(LabeledHead{u, *label.rule_id});
      }
    }
    auto triplets = FormTriplets(trigger, causes, effects, s, cfg);
    std::move(triplets.begin(), triplets.end(),
              std::back_inserter(result.triplets));
  }
  return result;
}

CorpusResult ExtractCorpus(const Corpus& corpus,
                           std::span<const LexiconEntry> lexicon,
                           const RuleSet& rules, const ExpansionConfig& cfg,
                           int jobs) {
  std::vector<const ParsedSentence*> sentences;
  for (const auto& doc : corpus.documents) {
    for (const auto& s : doc.sentences) sentences.push_back(&s);
  }
  const size_t n = sentences.size();
  std::vector<SentenceResult> results(n);
  std::vector<std::string> errors(n);

  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      try {
        results[i] = ExtractSentence(*sentences[i], lexicon, rules, cfg);
      } catch (const std::exception& e) {
        errors[i] = sentences[i]->doc_id() + "/" + sentences[i]->sent_id() +
                    ": " + e.what();
      }
    }
  };
  const size_t workers =
      std::min<size_t>(std::max(jobs, 1), std::max<size_t>(n, 1));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  CorpusResult out;
  out.sentences = n;
  for (size_t i = 0; i < n; ++i) {
    out.triggers += results[i].triggers;
    std::move(results[i].triplets.begin(), results[i].triplets.end(),
              std::back_inserter(out.triplets));
    if (!errors[i].empty()) out.diagnostics.push_back(std::move(errors[i]));
  }
  return out;
}

std::vector<uint64_t> TripletCoverage(const RuleSet& rules,
                                      std::span<const CETriplet> triplets) {
  std::map<std::string, size_t, std::less<>> index;
  for (size_t i = 0; i < rules.rules().size(); ++i) {
    index.emplace(rules.rules()[i].id, i);
  }
  std::vector<uint64_t> counts(rules.size(), 0);
  for (const auto& t : triplets) {
    for (const auto* id : {&t.cause_rule_id, &t.effect_rule_id}) {
      auto it = index.find(*id);
      if (it != index.end()) ++counts[it->second];
    }
  }
  return counts;
}

}  // namespace cetrip
