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

// Candidate headword selection and the feature-string grammar for a
// (trigger v, candidate headword u) pair.
//
// Feature strings are a stable contract with rule files. Canonical shapes:
//
//   v.text.T  u.text.T                 lowercased surface
//   v.rootword.L  u.rootword.L         lowercased lemma
//   v.POS.P  u.POS.P                   fine tag, uppercase
//   v.POS_gen.G  u.POS_gen.G           coarse tag, uppercase
//   v.parent.text.T  u.parent.text.T   "root" at the sentence root
//   v.parent.dep.D  u.parent.dep.D     "root" at the sentence root
//   ancestor.v.u  ancestor.u.v
//   lca.rootword.L
//   dep.path.S                         S = SerializePath(GetDepPath(u, v))
//   edge.v.u.D  edge.u.v.D             direct edge with its label
//   path.v.u.D                         label D occurs on the u-v path
//   path.W                             word W is an intermediate path node
//
// The families above make up the core grammar. Rules additionally use:
//
//   edge.v.u  edge.u.v                 direct edge, any label
//   v.child.W  v.child.D.W             a child of v with surface W (label D)
//   dep.path.len.1.W>D>u               u's parent has surface W, u's label D
//   u.copula_verb_with_object          u is a form of "be" with a subject

#ifndef CETRIP_FEATURES_H_
#define CETRIP_FEATURES_H_

#include <functional>
#include <initializer_list>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cetrip/parse_model.h"

namespace cetrip {

enum class FeatureFamily {
  kVText,
  kUText,
  kVRootword,
  kURootword,
  kVPos,
  kUPos,
  kVPosGen,
  kUPosGen,
  kVParentText,
  kUParentText,
  kVParentDep,
  kUParentDep,
  kAncestor,
  kLcaRootword,
  kDepPath,
  kLabeledEdge,
  kPathRelation,
  kPathWord,
  // Families beyond the core grammar.
  kEdge,
  kVChild,
  kParentWordPath,
  kCopulaVerbWithObject,
};

bool IsCoreFamily(FeatureFamily family);

class FeatureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Family of a canonical feature string, or nullopt if it fits no family.
std::optional<FeatureFamily> ClassifyFeature(std::string_view feature);

// Maps a feature string as written in a rule file onto its canonical
// spelling: family prefixes are matched case-insensitively, LCA.root_word and
// similar aliases collapse onto lca.rootword, tag values are uppercased and
// every other dynamic part is lowercased. Throws FeatureError for unknown
// families and malformed values.
std::string NormalizeFeature(std::string_view feature);

class FeatureSet {
 public:
  using Storage = std::set<std::string, std::less<>>;

  FeatureSet() = default;
  FeatureSet(std::initializer_list<std::string> features)
      : features_(features) {}

  void Insert(std::string feature) { features_.insert(std::move(feature)); }
  bool Contains(std::string_view feature) const {
    return features_.contains(feature);
  }
  size_t size() const { return features_.size(); }
  bool empty() const { return features_.empty(); }
  Storage::const_iterator begin() const { return features_.begin(); }
  Storage::const_iterator end() const { return features_.end(); }
  const Storage& features() const { return features_; }

  friend bool operator==(const FeatureSet&, const FeatureSet&) = default;

 private:
  Storage features_;
};

// Features of the core grammar only.
FeatureSet CoreFeatures(const FeatureSet& features);

// Verbs not attached as aux, nouns not attached as compound, and any token
// attached as nsubj, nsubjpass, dobj or pobj. Ascending order.
std::vector<int> CandidateHeadwords(const ParsedSentence& s);

// Throws std::invalid_argument when u == v.
FeatureSet GenerateFeatures(const ParsedSentence& s, int v, int u);

}  // namespace cetrip

#endif  // CETRIP_FEATURES_H_
