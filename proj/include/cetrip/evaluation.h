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

// Scoring of extracted triplets against gold predications, manual-score
// aggregation and knowledge-base novelty filtering.
//
// Gold TSV, one predication per line (# comments and blank lines ignored):
//
//   sent_id  predicate  subject_text  object_text  [subject_cui  object_cui]
//
// Score TSV: triplet line number (1-based, in the predictions file), score.

#ifndef CETRIP_EVALUATION_H_
#define CETRIP_EVALUATION_H_

#include <filesystem>
#include <istream>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cetrip/extraction.h"
#include "json.hpp"

namespace cetrip {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using WordSet = std::set<std::string, std::less<>>;

// Lowercased runs of letters, digits and hyphens that are not stopwords.
// Leading and trailing hyphens are trimmed from each run.
WordSet ContentWords(std::string_view text);
bool IsStopword(std::string_view lowercased_word);

struct GoldPredication {
  std::string sent_id;
  std::string predicate;
  std::string subject_text;
  std::string object_text;
  std::optional<std::string> subject_cui;
  std::optional<std::string> object_cui;
};

std::vector<GoldPredication> LoadGoldTsv(std::istream& in);
std::vector<GoldPredication> LoadGoldTsvFile(const std::filesystem::path& path);

// Content-word overlap on both sides; the trigger and predicate are ignored.
// Throws EvalError when the sentence ids differ.
bool TripletMatchesGold(const CETriplet& t, const GoldPredication& g);

const WordSet& DefaultCausalPredicates();

struct EvalReport {
  size_t tp = 0;
  size_t fp = 0;
  size_t fn = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  // Set when the corresponding ratio had a zero denominator and was
  // reported as 0.
  bool precision_undefined = false;
  bool recall_undefined = false;
  bool f1_undefined = false;

  nlohmann::ordered_json ToJson() const;
  // Fixed-width table with four decimal places.
  std::string ToTable() const;
};

// Fills the ratios and flags from tp/fp/fn.
EvalReport MakeReport(size_t tp, size_t fp, size_t fn);

// Gold predications whose predicate is not in causal_predicates (compared
// case-insensitively) are dropped first. Each remaining gold item is a TP if
// any prediction from the same sentence matches it, else a FN; each
// prediction matching no gold item is a FP.
EvalReport Evaluate(std::span<const CETriplet> predicted,
                    std::span<const GoldPredication> gold,
                    const WordSet& causal_predicates =
                        DefaultCausalPredicates());

struct ScoreRecord {
  size_t triplet_line = 0;
  int score = 0;  // 0, 1 or 2
};

std::vector<ScoreRecord> LoadScoresTsv(std::istream& in);

struct PrecisionPair {
  double strict = 0;
  double lenient = 0;
};

// strict = #(score 2) / n, lenient = sum / 2n. Throws EvalError on an empty
// list or an out-of-range score.
PrecisionPair StrictLenientPrecision(std::span<const ScoreRecord> scores);

std::vector<CETriplet> KbNovelTriplets(std::span<const CETriplet> triplets,
                                       const WordSet& kb_causal_sentences);

}  // namespace cetrip

#endif  // CETRIP_EVALUATION_H_
