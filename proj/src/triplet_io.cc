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

#include "cetrip/triplet_io.h"

#include <string>

namespace cetrip {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json PhraseToJson(const Phrase& p) {
  ordered_json j;
  j["head_index"] = p.head;
  j["indices"] = p.tokens;
  j["text"] = p.text;
  j["span"] = p.tokens.empty() ? ordered_json::array()
                               : ordered_json::array({p.first(), p.last()});
  return j;
}

ordered_json ArgumentToJson(const std::optional<ArgumentToken>& a) {
  if (!a) return nullptr;
  return ordered_json{{"index", a->index}, {"text", a->text}};
}

const json& Field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw SchemaError(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

std::string String(const json& j, const char* name) {
  const json& f = Field(j, name);
  if (!f.is_string()) {
    throw SchemaError(std::string("field '") + name + "' must be a string");
  }
  return f.get<std::string>();
}

int Int(const json& j, const char* name) {
  const json& f = Field(j, name);
  if (!f.is_number_integer()) {
    throw SchemaError(std::string("field '") + name + "' must be an integer");
  }
  return f.get<int>();
}

Phrase PhraseFromJson(const json& j, const char* name) {
  const json& p = Field(j, name);
  Phrase out;
  out.head = Int(p, "head_index");
  out.text = String(p, "text");
  const json& indices = Field(p, "indices");
  if (!indices.is_array()) throw SchemaError("indices must be an array");
  for (const auto& i : indices) {
    if (!i.is_number_integer()) throw SchemaError("indices must be integers");
    out.tokens.push_back(i.get<int>());
  }
  return out;
}

std::optional<ArgumentToken> ArgumentFromJson(const json& j,
                                              const char* name) {
  if (!j.contains(name) || j.at(name).is_null()) return std::nullopt;
  const json& a = j.at(name);
  return ArgumentToken{Int(a, "index"), String(a, "text")};
}

}  // namespace

ordered_json TripletToJson(const CETriplet& t) {
  ordered_json j;
  j["doc_id"] = t.doc_id;
  j["sent_id"] = t.sent_id;
  ordered_json trigger;
  trigger["text"] = t.trigger.text;
  trigger["lemma"] = t.trigger.lemma;
  trigger["entry"] = t.trigger.entry;
  trigger["anchor_index"] = t.trigger.anchor;
  trigger["span"] = ordered_json::array({t.trigger.begin, t.trigger.end});
  j["trigger"] = std::move(trigger);
  j["cause"] = PhraseToJson(t.cause);
  j["effect"] = PhraseToJson(t.effect);
  j["negation"] = ArgumentToJson(t.negation);
  j["uncertainty"] = ArgumentToJson(t.uncertainty);
  j["cause_rule_id"] = t.cause_rule_id;
  j["effect_rule_id"] = t.effect_rule_id;
  return j;
}

CETriplet TripletFromJson(const json& j) {
  CETriplet t;
  t.doc_id = String(j, "doc_id");
  t.sent_id = String(j, "sent_id");
  const json& trigger = Field(j, "trigger");
  t.trigger.text = String(trigger, "text");
  t.trigger.lemma = String(trigger, "lemma");
  if (trigger.contains("entry")) t.trigger.entry = String(trigger, "entry");
  t.trigger.anchor = Int(trigger, "anchor_index");
  const json& span = Field(trigger, "span");
  if (!span.is_array() || span.size() != 2 || !span[0].is_number_integer() ||
      !span[1].is_number_integer()) {
    throw SchemaError("trigger span must be [begin, end]");
  }
  t.trigger.begin = span[0].get<int>();
  t.trigger.end = span[1].get<int>();
  t.cause = PhraseFromJson(j, "cause");
  t.effect = PhraseFromJson(j, "effect");
  t.negation = ArgumentFromJson(j, "negation");
  t.uncertainty = ArgumentFromJson(j, "uncertainty");
  t.cause_rule_id = String(j, "cause_rule_id");
  t.effect_rule_id = String(j, "effect_rule_id");
  return t;
}

void WriteJsonl(std::ostream& out, std::span<const CETriplet> triplets) {
  for (const auto& t : triplets) out << TripletToJson(t).dump() << "\n";
}

std::vector<CETriplet> ReadJsonl(std::istream& in) {
  std::vector<CETriplet> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(TripletFromJson(json::parse(line)));
    } catch (const json::exception& e) {
      throw SchemaError("predictions line " + std::to_string(line_no) + ": " +
                        e.what());
    } catch (const SchemaError& e) {
      throw SchemaError("predictions line " + std::to_string(line_no) + ": " +
                        e.what());
    }
  }
  return out;
}

}  // namespace cetrip
