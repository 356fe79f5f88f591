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

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace cetrip {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Lowercases and collapses internal whitespace runs to single spaces.
std::string NormalizeForm(std::string_view s) {
  std::string out;
  bool space = false;
  for (char c : Trim(s)) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = true;
      continue;
    }
    if (space && !out.empty()) out += ' ';
    space = false;
    out += c;
  }
  return ToLower(out);
}

std::vector<std::string> Words(std::string_view form) {
  std::vector<std::string> words;
  std::istringstream in{std::string(form)};
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

struct Candidate {
  int begin;
  int end;
  size_t entry;
};

int SpanAnchor(const ParsedSentence& s, int begin, int end) {
  int best = -1;
  for (int i = begin; i < end; ++i) {
    int head = s.token(i).head;
    if (head != kRoot && head >= begin && head < end) continue;
    // Disconnected spans keep the token nearest the root, then the leftmost.
    if (best < 0 || s.depth(i) < s.depth(best)) best = i;
  }
  return best;
}

}  // namespace

std::string_view TriggerClassName(TriggerClass c) {
  return c == TriggerClass::kAgnostic ? "agnostic" : "specific";
}

std::vector<LexiconEntry> LoadLexicon(std::istream& in) {
  std::vector<LexiconEntry> entries;
  std::set<std::string> seen;
  std::string raw;
  size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    return LexiconError("lexicon line " + std::to_string(line_no) + ": " +
                        what);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> fields;
    size_t start = 0;
    while (true) {
      size_t tab = raw.find('\t', start);
      fields.push_back(std::string_view(raw).substr(
          start, tab == std::string::npos ? std::string::npos : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() < 2 || fields.size() > 3) {
      throw fail("expected canonical, class and optional variants");
    }

    LexiconEntry entry;
    entry.canonical = NormalizeForm(fields[0]);
    if (entry.canonical.empty()) throw fail("empty canonical form");
    std::string_view cls = Trim(fields[1]);
    if (cls == "agnostic") {
      entry.trigger_class = TriggerClass::kAgnostic;
    } else if (cls == "specific") {
      entry.trigger_class = TriggerClass::kSpecific;
    } else {
      throw fail("unknown trigger class '" + std::string(cls) + "'");
    }
    entry.is_mwe = Words(entry.canonical).size() >= 2;
    if (fields.size() == 3) {
      std::string_view list = fields[2];
      size_t pos = 0;
      while (pos <= list.size()) {
        size_t comma = list.find(',', pos);
        if (comma == std::string_view::npos) comma = list.size();
        std::string variant = NormalizeForm(list.substr(pos, comma - pos));
        if (!variant.empty() &&
            std::find(entry.variants.begin(), entry.variants.end(),
                      variant) == entry.variants.end()) {
          entry.variants.push_back(std::move(variant));
        }
        pos = comma + 1;
      }
    }
    if (!seen.insert(entry.canonical).second) {
      throw fail("duplicate entry '" + entry.canonical + "'");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<LexiconEntry> LoadLexiconFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LexiconError("cannot open lexicon " + path.string());
  try {
    return LoadLexicon(in);
  } catch (const LexiconError& e) {
    throw LexiconError(path.string() + ": " + e.what());
  }
}

std::set<std::string> TriggerVariants(const LexiconEntry& entry) {
  std::set<std::string> out{ToLower(entry.canonical)};
  for (const auto& v : entry.variants) out.insert(ToLower(v));
  return out;
}

std::vector<TriggerMatch> FindTriggers(const ParsedSentence& s,
                                       std::span<const LexiconEntry> lexicon) {
  const int n = s.size();
  std::vector<std::string> lemmas(n);
  for (int i = 0; i < n; ++i) lemmas[i] = ToLower(s.token(i).lemma);
  auto word_matches = [&](int i, const std::string& w) {
    return s.token(i).lower == w || lemmas[i] == w;
  };

  std::vector<Candidate> candidates;
  for (size_t e = 0; e < lexicon.size(); ++e) {
    for (const auto& form : TriggerVariants(lexicon[e])) {
      const auto words = Words(form);
      const int len = static_cast<int>(words.size());
      for (int b = 0; b + len <= n; ++b) {
        bool ok = true;
        for (int k = 0; k < len && ok; ++k) ok = word_matches(b + k, words[k]);
        if (ok) candidates.push_back(Candidate{b, b + len, e});
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              int la = a.end - a.begin, lb = b.end - b.begin;
              if (la != lb) return la > lb;
              if (a.begin != b.begin) return a.begin < b.begin;
              return a.entry < b.entry;
            });

  std::vector<bool> taken(n, false);
  std::vector<TriggerMatch> matches;
  for (const auto& c : candidates) {
    bool free = true;
    for (int i = c.begin; i < c.end && free; ++i) free = !taken[i];
    if (!free) continue;
    for (int i = c.begin; i < c.end; ++i) taken[i] = true;
    matches.push_back(TriggerMatch{c.begin, c.end,
                                   SpanAnchor(s, c.begin, c.end),
                                   &lexicon[c.entry]});
  }
  std::sort(matches.begin(), matches.end(),
            [](const TriggerMatch& a, const TriggerMatch& b) {
              return a.begin < b.begin;
            });
  return matches;
}

}  // namespace cetrip
