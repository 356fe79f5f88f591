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

// Shared helpers for tests: fixture loading, tree enumeration and
// brute-force reference implementations of the tree algebra.

#ifndef CETRIP_TESTS_TEST_SUPPORT_H_
#define CETRIP_TESTS_TEST_SUPPORT_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cetrip/conllu.h"
#include "cetrip/parse_model.h"
#include "cetrip/rule_engine.h"
#include "cetrip/trigger_lexicon.h"

namespace cetrip::testing {

std::filesystem::path FixturePath(const std::string& name);
std::filesystem::path DataPath(const std::string& name);

Corpus LoadFixture(const std::string& name);
const ParsedSentence& FirstSentence(const Corpus& corpus);
std::vector<LexiconEntry> ShippedLexicon();
RuleSet ShippedRules();

// Index of the first token with this surface; throws if absent.
int FindToken(const ParsedSentence& s, const std::string& text);

// Builds a sentence from a head array (kRoot for the root). Token i gets
// surface words[i] (or "w<i>"), lemma = lowercased surface, dep labels[i]
// (forced to "root" at the root), POS tags from pos_gen (default NOUN/NN).
ParsedSentence MakeSentence(const std::vector<int>& heads,
                            const std::vector<std::string>& labels = {},
                            const std::vector<std::string>& words = {},
                            const std::vector<std::string>& pos_gen = {},
                            const std::string& sent_id = "s1");

// Calls fn(parents) once per unlabeled rooted tree shape on n nodes, in the
// canonical level-sequence order. Node 0 is the root (parent kRoot) and the
// nodes are in preorder.
void ForEachRootedTreeShape(int n,
                            const std::function<void(const std::vector<int>&)>&
                                fn);

// Calls fn(heads) once per labeled rooted tree on n nodes (every head array
// that forms a single tree), n^(n-1) arrays in total.
void ForEachLabeledTree(int n,
                        const std::function<void(const std::vector<int>&)>& fn);

// Relabels node k of `parents` as perm[k].
std::vector<int> PermuteTree(const std::vector<int>& parents,
                             const std::vector<int>& perm);

// Number of unlabeled rooted trees on n nodes, for n = 1..12.
uint64_t KnownRootedTreeCount(int n);

// Reference LCA: intersect the explicit ancestor chains.
int OracleLca(const std::vector<int>& heads, int a, int b);

// Reference path: breadth-first search over the undirected tree, then split
// at the shallowest node. Edge labels are those of the child endpoint.
DepPath OraclePath(const ParsedSentence& s, int u, int v);

// Deterministic corpus of n sentences: every third one is a copy of a
// fixture sentence, the rest are random trees over causal and biomedical
// vocabulary. Sentence ids are unique.
Corpus SyntheticCorpus(size_t n, uint32_t seed);

// Reference subtree: tokens whose head chain reaches i without crossing an
// edge carrying an excluded label.
std::vector<int> OracleSubtree(const ParsedSentence& s, int i,
                               const LabelSet& excluded);

}  // namespace cetrip::testing

#endif  // CETRIP_TESTS_TEST_SUPPORT_H_
