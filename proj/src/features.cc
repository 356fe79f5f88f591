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

#include "cetrip/features.h"

#include <array>
#include <cctype>

namespace cetrip {
namespace {

enum class ValueKind { kNone, kLower, kUpper, kPath, kParentWordPath };

struct FamilySpec {
  std::string_view canonical;
  std::string_view alias;  // extra accepted spelling, may be empty
  FeatureFamily family;
  ValueKind value;
};

// Order matters: exact names first, then longer prefixes before the shorter
// prefixes they extend.
constexpr std::array<FamilySpec, 25> kFamilies{{
    {"u.copula_verb_with_object", "", FeatureFamily::kCopulaVerbWithObject,
     ValueKind::kNone},
    {"ancestor.v.u", "", FeatureFamily::kAncestor, ValueKind::kNone},
    {"ancestor.u.v", "", FeatureFamily::kAncestor, ValueKind::kNone},
    {"edge.v.u", "", FeatureFamily::kEdge, ValueKind::kNone},
    {"edge.u.v", "", FeatureFamily::kEdge, ValueKind::kNone},
    {"edge.v.u.", "", FeatureFamily::kLabeledEdge, ValueKind::kLower},
    {"edge.u.v.", "", FeatureFamily::kLabeledEdge, ValueKind::kLower},
    {"dep.path.len.1.", "", FeatureFamily::kParentWordPath,
     ValueKind::kParentWordPath},
    {"dep.path.", "", FeatureFamily::kDepPath, ValueKind::kPath},
    {"path.v.u.", "", FeatureFamily::kPathRelation, ValueKind::kLower},
    {"path.", "", FeatureFamily::kPathWord, ValueKind::kLower},
    {"v.child.", "", FeatureFamily::kVChild, ValueKind::kLower},
    {"lca.rootword.", "lca.root_word.", FeatureFamily::kLcaRootword,
     ValueKind::kLower},
    {"v.parent.text.", "", FeatureFamily::kVParentText, ValueKind::kLower},
    {"u.parent.text.", "", FeatureFamily::kUParentText, ValueKind::kLower},
    {"v.parent.dep.", "", FeatureFamily::kVParentDep, ValueKind::kLower},
    {"u.parent.dep.", "", FeatureFamily::kUParentDep, ValueKind::kLower},
    {"v.POS_gen.", "", FeatureFamily::kVPosGen, ValueKind::kUpper},
    {"u.POS_gen.", "", FeatureFamily::kUPosGen, ValueKind::kUpper},
    {"v.POS.", "", FeatureFamily::kVPos, ValueKind::kUpper},
    {"u.POS.", "", FeatureFamily::kUPos, ValueKind::kUpper},
    {"v.text.", "", FeatureFamily::kVText, ValueKind::kLower},
    {"u.text.", "", FeatureFamily::kUText, ValueKind::kLower},
    {"v.rootword.", "v.root_word.", FeatureFamily::kVRootword,
     ValueKind::kLower},
    {"u.rootword.", "u.root_word.", FeatureFamily::kURootword,
     ValueKind::kLower},
}};

bool IsExact(const FamilySpec& spec) { return spec.value == ValueKind::kNone; }

bool HasSpace(std::string_view s) {
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

// Dynamic parts never carry whitespace; missing values become "_".
std::string Value(std::string_view raw) {
  if (raw.empty()) return "_";
  std::string out(raw);
  for (char& c : out) {
    if (std::isspace(static_cast<unsigned char>(c))) c = '_';
  }
  return out;
}

struct Match {
  const FamilySpec* spec;
  std::string_view value;
};

std::optional<Match> Lookup(std::string_view feature) {
  const std::string lower = ToLower(feature);
  for (const auto& spec : kFamilies) {
    for (std::string_view name : {spec.canonical, spec.alias}) {
      if (name.empty()) continue;
      const std::string key = ToLower(name);
      if (IsExact(spec)) {
        if (lower == key) return Match{&spec, {}};
      } else if (lower.size() > key.size() && lower.starts_with(key)) {
        return Match{&spec, feature.substr(key.size())};
      }
    }
  }
  return std::nullopt;
}

std::string NormalizePathValue(std::string_view value) {
  std::string lower = ToLower(value);
  // "<lca>" can only be the LCA marker: up labels sit between '<' pairs and
  // down labels between '>' pairs.
  if (size_t pos = lower.find("<lca>"); pos != std::string::npos) {
    lower.replace(pos + 1, 3, "LCA");
  }
  return SerializePath(ParsePath(lower));
}

std::string NormalizeParentWordPath(std::string_view value) {
  std::string lower = ToLower(value);
  if (!lower.ends_with(">u")) {
    throw FeatureError("parent-word path must end in >u: " + lower);
  }
  lower.resize(lower.size() - 2);
  size_t sep = lower.rfind('>');
  if (sep == std::string::npos || sep == 0 || sep + 1 == lower.size()) {
    throw FeatureError("parent-word path needs W>D>u: " + lower);
  }
  return lower + ">u";
}

}  // namespace

bool IsCoreFamily(FeatureFamily family) {
  switch (family) {
    case FeatureFamily::kEdge:
    case FeatureFamily::kVChild:
    case FeatureFamily::kParentWordPath:
    case FeatureFamily::kCopulaVerbWithObject:
      return false;
    default:
      return true;
  }
}

std::optional<FeatureFamily> ClassifyFeature(std::string_view feature) {
  auto match = Lookup(feature);
  if (!match) return std::nullopt;
  return match->spec->family;
}

std::string NormalizeFeature(std::string_view feature) {
  auto match = Lookup(feature);
  if (!match) {
    throw FeatureError("unknown feature family: " + std::string(feature));
  }
  const FamilySpec& spec = *match->spec;
  if (IsExact(spec)) return std::string(spec.canonical);
  if (HasSpace(match->value)) {
    throw FeatureError("feature contains whitespace: " + std::string(feature));
  }
  std::string value;
  try {
    switch (spec.value) {
      case ValueKind::kLower:
        value = ToLower(match->value);
        break;
      case ValueKind::kUpper:
        value = ToUpper(match->value);
        break;
      case ValueKind::kPath:
        value = NormalizePathValue(match->value);
        break;
      case ValueKind::kParentWordPath:
        value = NormalizeParentWordPath(match->value);
        break;
      case ValueKind::kNone:
        break;
    }
  } catch (const std::invalid_argument& e) {
    throw FeatureError(std::string(feature) + ": " + e.what());
  }
  return std::string(spec.canonical) + value;
}

FeatureSet CoreFeatures(const FeatureSet& features) {
  FeatureSet core;
  for (const auto& f : features) {
    auto family = ClassifyFeature(f);
    if (family && IsCoreFamily(*family)) core.Insert(f);
  }
  return core;
}

std::vector<int> CandidateHeadwords(const ParsedSentence& s) {
  std::vector<int> out;
  for (const auto& t : s.tokens()) {
    const std::string tag = ToUpper(t.pos_gen);
    const std::string dep = ToLower(t.dep);
    const bool verb = tag == "VERB" && dep != "aux";
    const bool noun = (tag == "NOUN" || tag == "PROPN") && dep != "compound";
    const bool noun_like = dep == "nsubj" || dep == "nsubjpass" ||
                           dep == "dobj" || dep == "pobj";
    if (verb || noun || noun_like) out.push_back(t.index);
  }
  return out;
}

FeatureSet GenerateFeatures(const ParsedSentence& s, int v, int u) {
  s.CheckIndex(v);
  s.CheckIndex(u);
  if (u == v) throw std::invalid_argument("feature pair needs u != v");
  const Token& tv = s.token(v);
  const Token& tu = s.token(u);
  FeatureSet f;

  auto lemma = [](const Token& t) { return Value(ToLower(t.lemma)); };
  auto parent_text = [&](const Token& t) {
    return t.is_root() ? std::string(kRootLabel) : Value(s.token(t.head).lower);
  };
  auto dep = [](const Token& t) { return Value(ToLower(t.dep)); };

  f.Insert("v.text." + Value(tv.lower));
  f.Insert("u.text." + Value(tu.lower));
  f.Insert("v.rootword." + lemma(tv));
  f.Insert("u.rootword." + lemma(tu));
  f.Insert("v.POS." + Value(ToUpper(tv.pos)));
  f.Insert("u.POS." + Value(ToUpper(tu.pos)));
  f.Insert("v.POS_gen." + Value(ToUpper(tv.pos_gen)));
  f.Insert("u.POS_gen." + Value(ToUpper(tu.pos_gen)));
  f.Insert("v.parent.text." + parent_text(tv));
  f.Insert("u.parent.text." + parent_text(tu));
  f.Insert("v.parent.dep." + dep(tv));
  f.Insert("u.parent.dep." + dep(tu));

  if (IsAncestor(s, v, u)) f.Insert("ancestor.v.u");
  if (IsAncestor(s, u, v)) f.Insert("ancestor.u.v");
  f.Insert("lca.rootword." + lemma(s.token(Lca(s, u, v))));

  const DepPath path = GetDepPath(s, u, v);
  f.Insert("dep.path." + SerializePath(path));

  if (tu.head == v) {
    f.Insert("edge.v.u." + dep(tu));
    f.Insert("edge.v.u");
  }
  if (tv.head == u) {
    f.Insert("edge.u.v." + dep(tv));
    f.Insert("edge.u.v");
  }

  for (const auto& label : path.up_edges) f.Insert("path.v.u." + Value(label));
  for (const auto& label : path.down_edges) {
    f.Insert("path.v.u." + Value(label));
  }
  for (int node : path.intermediate_nodes) {
    f.Insert("path." + Value(s.token(node).lower));
  }

  for (int c : s.children(v)) {
    const Token& child = s.token(c);
    f.Insert("v.child." + Value(child.lower));
    f.Insert("v.child." + dep(child) + "." + Value(child.lower));
  }

  if (!tu.is_root()) {
    f.Insert("dep.path.len.1." + Value(s.token(tu.head).lower) + ">" +
             dep(tu) + ">u");
  }

  if (ToLower(tu.lemma) == "be") {
    for (int c : s.children(u)) {
      const std::string d = ToLower(s.token(c).dep);
      if (d == "nsubj" || d == "nsubjpass" || d == "csubj" ||
          d == "csubjpass") {
        f.Insert("u.copula_verb_with_object");
        break;
      }
    }
  }
  return f;
}

}  // namespace cetrip
