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

#include "test_support.h"

#include <algorithm>
#include <deque>
#include <iterator>
#include <stdexcept>

#ifndef CETRIP_FIXTURE_DIR
#error "CETRIP_FIXTURE_DIR must be defined"
#endif
#ifndef CETRIP_DATA_DIR
#error "CETRIP_DATA_DIR must be defined"
#endif

namespace cetrip::testing {

std::filesystem::path FixturePath(const std::string& name) {
  return std::filesystem::path(CETRIP_FIXTURE_DIR) / name;
}

std::filesystem::path DataPath(const std::string& name) {
  return std::filesystem::path(CETRIP_DATA_DIR) / name;
}

Corpus LoadFixture(const std::string& name) {
  return ReadConlluFile(FixturePath(name), /*strict=*/true);
}

const ParsedSentence& FirstSentence(const Corpus& corpus) {
  for (const auto& doc : corpus.documents) {
    if (!doc.sentences.empty()) return doc.sentences.front();
  }
  throw std::runtime_error("corpus has no sentences");
}

std::vector<LexiconEntry> ShippedLexicon() {
  return LoadLexiconFile(DataPath("causal_triggers.tsv"));
}

RuleSet ShippedRules() { return LoadRulesFile(DataPath("headword_rules.txt")); }

int FindToken(const ParsedSentence& s, const std::string& text) {
  for (const auto& t : s.tokens()) {
    if (t.text == text) return t.index;
  }
  throw std::runtime_error("no token '" + text + "' in " + s.sent_id());
}

ParsedSentence MakeSentence(const std::vector<int>& heads,
                            const std::vector<std::string>& labels,
                            const std::vector<std::string>& words,
                            const std::vector<std::string>& pos_gen,
                            const std::string& sent_id) {
  std::vector<Token> tokens(heads.size());
  for (size_t i = 0; i < heads.size(); ++i) {
    Token& t = tokens[i];
    t.index = static_cast<int>(i);
    t.text = i < words.size() ? words[i] : "w" + std::to_string(i);
    t.lemma = ToLower(t.text);
    t.pos_gen = i < pos_gen.size() ? pos_gen[i] : "NOUN";
    t.pos = t.pos_gen == "VERB" ? "VB" : t.pos_gen == "NOUN" ? "NN" : "XX";
    t.head = heads[i];
    t.dep = heads[i] == kRoot ? "root"
            : i < labels.size() ? labels[i]
                                : "dep";
  }
  return ParsedSentence(std::move(tokens), "doc", sent_id);
}

void ForEachRootedTreeShape(
    int n, const std::function<void(const std::vector<int>&)>& fn) {
  if (n <= 0) return;
  // Level sequences in the order of Beyer and Hedetniemi, starting from the
  // path 0, 1, ..., n-1 and ending at the star 0, 1, 1, ..., 1.
  std::vector<int> level(n);
  for (int i = 0; i < n; ++i) level[i] = i;
  std::vector<int> parents(n);
  std::vector<int> last_at_level(n + 1);
  while (true) {
    parents[0] = kRoot;
    last_at_level[0] = 0;
    for (int i = 1; i < n; ++i) {
      parents[i] = last_at_level[level[i] - 1];
      last_at_level[level[i]] = i;
    }
    fn(parents);

    int p = n - 1;
    while (p > 0 && level[p] <= 1) --p;
    if (p == 0) break;
    int q = p - 1;
    while (level[q] != level[p] - 1) --q;
    const int shift = p - q;
    for (int i = p; i < n; ++i) level[i] = level[i - shift];
  }
}

void ForEachLabeledTree(int n,
                        const std::function<void(const std::vector<int>&)>& fn) {
  if (n <= 0) return;
  // Odometer over head arrays with values in [-1, n).
  std::vector<int> heads(n, kRoot);
  while (true) {
    int roots = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (heads[i] == kRoot) {
        ++roots;
      } else if (heads[i] == i) {
        ok = false;
      }
    }
    if (ok && roots == 1) {
      // Cycle check: every chain must reach the root within n steps.
      for (int i = 0; i < n && ok; ++i) {
        int cur = i;
        int steps = 0;
        while (cur != kRoot && steps <= n) {
          cur = heads[cur];
          ++steps;
        }
        ok = cur == kRoot;
      }
      if (ok) fn(heads);
    }
    int k = 0;
    while (k < n && heads[k] == n - 1) {
      heads[k] = kRoot;
      ++k;
    }
    if (k == n) break;
    ++heads[k];
  }
}

std::vector<int> PermuteTree(const std::vector<int>& parents,
                             const std::vector<int>& perm) {
  std::vector<int> out(parents.size());
  for (size_t k = 0; k < parents.size(); ++k) {
    out[perm[k]] = parents[k] == kRoot ? kRoot : perm[parents[k]];
  }
  return out;
}

uint64_t KnownRootedTreeCount(int n) {
  static constexpr uint64_t kCounts[] = {0,   1,   1,    2,    4,    9,   20,
                                         48,  115, 286,  719,  1842, 4766};
  if (n < 1 || n > 12) throw std::out_of_range("n must be in [1, 12]");
  return kCounts[n];
}

int OracleLca(const std::vector<int>& heads, int a, int b) {
  std::vector<int> chain_a;
  for (int cur = a; cur != kRoot; cur = heads[cur]) chain_a.push_back(cur);
  for (int cur = b; cur != kRoot; cur = heads[cur]) {
    if (std::find(chain_a.begin(), chain_a.end(), cur) != chain_a.end()) {
      return cur;
    }
  }
  throw std::logic_error("no common ancestor");
}

DepPath OraclePath(const ParsedSentence& s, int u, int v) {
  const int n = s.size();
  std::vector<std::vector<int>> adj(n);
  for (const auto& t : s.tokens()) {
    if (!t.is_root()) {
      adj[t.index].push_back(t.head);
      adj[t.head].push_back(t.index);
    }
  }
  std::vector<int> prev(n, -2);
  std::deque<int> queue{u};
  prev[u] = -1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : adj[x]) {
      if (prev[y] == -2) {
        prev[y] = x;
        queue.push_back(y);
      }
    }
  }
  std::vector<int> nodes;
  for (int x = v; x != -1; x = prev[x]) nodes.push_back(x);
  std::reverse(nodes.begin(), nodes.end());  // u ... v

  size_t top = 0;
  for (size_t i = 1; i < nodes.size(); ++i) {
    if (s.depth(nodes[i]) < s.depth(nodes[top])) top = i;
  }
  DepPath path;
  for (size_t i = 0; i < top; ++i) {
    path.up_edges.push_back(ToLower(s.token(nodes[i]).dep));
  }
  for (size_t i = top + 1; i < nodes.size(); ++i) {
    path.down_edges.push_back(ToLower(s.token(nodes[i]).dep));
  }
  for (size_t i = 1; i + 1 < nodes.size(); ++i) {
    path.intermediate_nodes.push_back(nodes[i]);
  }
  return path;
}

std::vector<int> OracleSubtree(const ParsedSentence& s, int i,
                               const LabelSet& excluded) {
  std::vector<int> out;
  for (const auto& t : s.tokens()) {
    bool keep = false;
    for (int cur = t.index; cur != kRoot; cur = s.token(cur).head) {
      if (cur == i) {
        keep = true;
        break;
      }
      if (excluded.contains(ToLower(s.token(cur).dep))) break;
    }
    if (keep) out.push_back(t.index);
  }
  return out;
}

Corpus SyntheticCorpus(size_t n, uint32_t seed) {
  static const char* kFixtures[] = {
      "table1.conllu",       "table2_pedv.conllu",  "mmulv.conllu",
      "negation.conllu",     "uncertainty.conllu",  "table5_scored.conllu",
      "calcitonin.conllu"};
  std::vector<const ParsedSentence*> templates;
  std::vector<Corpus> loaded;
  loaded.reserve(std::size(kFixtures));
  for (const char* name : kFixtures) loaded.push_back(LoadFixture(name));
  for (const auto& c : loaded) {
    for (const auto& d : c.documents) {
      for (const auto& s : d.sentences) templates.push_back(&s);
    }
  }

  static const std::vector<std::string> kWords = {
      "caused", "induces", "inhibited", "led",  "to",      "due",
      "because", "not",    "might",     "cell", "tumor",   "drug",
      "growth",  "apoptosis", "which",  "by",   "of",      "the",
      "patients", "infection"};
  static const std::vector<std::string> kLabels = {
      "nsubj", "dobj", "nsubjpass", "prep", "pobj", "agent", "amod",
      "det",   "punct", "appos",    "advcl", "conj", "relcl", "aux",
      "neg",   "compound"};
  static const std::vector<std::string> kTags = {"NOUN", "VERB", "PROPN",
                                                 "ADP",  "AUX",  "DET"};

  std::mt19937 rng(seed);
  Corpus corpus;
  corpus.source_path = "synthetic";
  corpus.documents.push_back(Document{"synthetic", {}});
  for (size_t i = 0; i < n; ++i) {
    const std::string id = "syn-" + std::to_string(i);
    std::vector<Token> tokens;
    if (i % 3 == 0) {
      tokens = templates[(i / 3) % templates.size()]->tokens();
    } else {
      const int len = 3 + static_cast<int>(rng() % 18);
      // Random recursive tree over a shuffled index order.
      std::vector<int> order(len);
      for (int k = 0; k < len; ++k) order[k] = k;
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<int> heads(len, kRoot);
      for (int k = 1; k < len; ++k) {
        heads[order[k]] = order[rng() % k];
      }
      tokens.resize(len);
      for (int k = 0; k < len; ++k) {
        Token& t = tokens[k];
        t.index = k;
        t.text = kWords[rng() % kWords.size()];
        t.lemma = t.text;
        t.pos_gen = kTags[rng() % kTags.size()];
        t.pos = t.pos_gen == "VERB" ? "VBD" : "NN";
        t.head = heads[k];
        t.dep = heads[k] == kRoot ? "root" : kLabels[rng() % kLabels.size()];
      }
    }
    corpus.documents[0].sentences.emplace_back(std::move(tokens), "synthetic",
                                               id);
  }
  return corpus;
}

}  // namespace cetrip::testing
