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

// JSON Lines encoding of extracted triplets, one object per line:
//
//   {"doc_id": ..., "sent_id": ...,
//    "trigger": {"text", "lemma", "entry", "anchor_index", "span": [b, e]},
//    "cause": {"head_index", "indices", "text", "span": [first, last]},
//    "effect": {...},
//    "negation": {"index", "text"} | null,
//    "uncertainty": {"index", "text"} | null,
//    "cause_rule_id": ..., "effect_rule_id": ...}
//
// trigger.span is the half-open token range of the trigger; phrase spans are
// inclusive first/last token indices.

#ifndef CETRIP_TRIPLET_IO_H_
#define CETRIP_TRIPLET_IO_H_

#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "cetrip/extraction.h"
#include "json.hpp"

namespace cetrip {

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::ordered_json TripletToJson(const CETriplet& t);

// Throws SchemaError on missing or mistyped fields.
CETriplet TripletFromJson(const nlohmann::json& j);

void WriteJsonl(std::ostream& out, std::span<const CETriplet> triplets);

// Blank lines are skipped; errors name the 1-based line.
std::vector<CETriplet> ReadJsonl(std::istream& in);

}  // namespace cetrip

#endif  // CETRIP_TRIPLET_IO_H_
