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

// Causal trigger lexicon and trigger lookup.
//
// Lexicon file: one entry per line, tab-separated
//   canonical <TAB> agnostic|specific <TAB> comma-separated variants
// The variants column may be empty or missing. Lines starting with '#' and
// blank lines are ignored.

#ifndef CETRIP_TRIGGER_LEXICON_H_
#define CETRIP_TRIGGER_LEXICON_H_

#include <filesystem>
#include <istream>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cetrip/parse_model.h"

namespace cetrip {

enum class TriggerClass { kAgnostic, kSpecific };

std::string_view TriggerClassName(TriggerClass c);

struct LexiconEntry {
  std::string canonical;
  std::vector<std::string> variants;
  TriggerClass trigger_class = TriggerClass::kSpecific;
  bool is_mwe = false;
};

class LexiconError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A lexicon hit covering tokens [begin, end). anchor is the span token whose
// parent lies outside the span; it plays the role of v in every feature.
// entry points into the lexicon passed to FindTriggers.
struct TriggerMatch {
  int begin = 0;
  int end = 0;
  int anchor = 0;
  const LexiconEntry* entry = nullptr;

  bool Contains(int i) const { return i >= begin && i < end; }
};

// Throws LexiconError (with line number) on duplicate canonical forms,
// empty entries, or an unknown class.
std::vector<LexiconEntry> LoadLexicon(std::istream& in);
std::vector<LexiconEntry> LoadLexiconFile(const std::filesystem::path& path);

// Canonical form plus declared variants, lowercased.
std::set<std::string> TriggerVariants(const LexiconEntry& entry);

// Finds non-overlapping trigger spans in index order. Each word of a form
// matches a token whose lowercased surface or lowercased lemma equals it.
// Overlaps are resolved longest match first, then leftmost, then by lexicon
// order.
std::vector<TriggerMatch> FindTriggers(const ParsedSentence& s,
                                       std::span<const LexiconEntry> lexicon);

}  // namespace cetrip

#endif  // CETRIP_TRIGGER_LEXICON_H_
