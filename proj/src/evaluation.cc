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

#include "cetrip/evaluation.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>

#include "cetrip/parse_model.h"

namespace cetrip {
namespace {

// Articles, prepositions, conjunctions, pronouns, copulas and a few
// auxiliaries.
const WordSet& Stopwords() {
  static const WordSet* words = new WordSet{
      "a",       "an",      "the",     "about",   "above",  "across",
      "after",   "against", "along",   "among",   "around", "as",
      "at",      "before",  "behind",  "below",   "beneath", "beside",
      "between", "beyond",  "by",      "despite", "down",   "during",
      "for",     "from",    "in",      "inside",  "into",   "near",
      "of",      "off",     "on",      "onto",    "out",    "outside",
      "over",    "per",     "since",   "than",    "through", "throughout",
      "to",      "toward",  "towards", "under",   "until",  "up",
      "upon",    "via",     "with",    "within",  "without", "and",
      "or",      "but",     "nor",     "so",      "yet",    "either",
      "neither", "both",    "whether", "although", "because", "if",
      "unless",  "while",   "whereas", "that",    "i",      "me",
      "my",      "we",      "us",      "our",     "you",    "your",
      "he",      "him",     "his",     "she",     "her",    "it",
      "its",     "they",    "them",    "their",   "this",   "these",
      "those",   "which",   "who",     "whom",    "whose",  "what",
      "itself",  "themselves", "be",   "is",      "am",     "are",
      "was",     "were",    "been",    "being",   "has",    "have",
      "had",     "do",      "does",    "did"};
  return *words;
}

bool IsWordChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-';
}

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t tab = line.find('\t', pos);
    out.push_back(line.substr(pos, tab == std::string::npos ? tab : tab - pos));
    if (tab == std::string::npos) break;
    pos = tab + 1;
  }
  if (!out.empty() && !out.back().empty() && out.back().back() == '\r') {
    out.back().pop_back();
  }
  return out;
}

bool Blank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

bool Overlaps(const WordSet& a, const WordSet& b) {
  for (const auto& w : a) {
    if (b.contains(w)) return true;
  }
  return false;
}

double Ratio(size_t num, size_t den, bool* undefined) {
  *undefined = den == 0;
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

bool IsStopword(std::string_view lowercased_word) {
  return Stopwords().contains(lowercased_word);
}

WordSet ContentWords(std::string_view text) {
  WordSet out;
  size_t i = 0;
  while (i < text.size()) {
    if (!IsWordChar(text[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && IsWordChar(text[j])) ++j;
    std::string_view run = text.substr(i, j - i);
    while (!run.empty() && run.front() == '-') run.remove_prefix(1);
    while (!run.empty() && run.back() == '-') run.remove_suffix(1);
    if (!run.empty()) {
      std::string word = ToLower(run);
      if (!IsStopword(word)) out.insert(std::move(word));
    }
    i = j;
  }
  return out;
}

std::vector<GoldPredication> LoadGoldTsv(std::istream& in) {
  std::vector<GoldPredication> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Blank(line) || line.front() == '#') continue;
    auto fail = [&](const std::string& what) {
      return EvalError("gold line " + std::to_string(line_no) + ": " + what);
    };
    auto cols = SplitTabs(line);
    if (cols.size() != 4 && cols.size() != 6) {
      throw fail("expected 4 or 6 tab-separated columns, found " +
                 std::to_string(cols.size()));
    }
    GoldPredication g;
    g.sent_id = cols[0];
    g.predicate = ToUpper(cols[1]);
    g.subject_text = cols[2];
    g.object_text = cols[3];
    if (g.sent_id.empty()) throw fail("empty sent_id");
    if (g.predicate.empty()) throw fail("empty predicate");
    if (Blank(g.subject_text)) throw fail("empty subject text");
    if (Blank(g.object_text)) throw fail("empty object text");
    if (cols.size() == 6) {
      if (!cols[4].empty() && cols[4] != "_") g.subject_cui = cols[4];
      if (!cols[5].empty() && cols[5] != "_") g.object_cui = cols[5];
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<GoldPredication> LoadGoldTsvFile(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw EvalError("cannot open gold file " + path.string());
  try {
    return LoadGoldTsv(in);
  } catch (const EvalError& e) {
    throw EvalError(path.string() + ": " + e.what());
  }
}

bool TripletMatchesGold(const CETriplet& t, const GoldPredication& g) {
  if (t.sent_id != g.sent_id) {
    throw EvalError("sentence mismatch: triplet " + t.sent_id + " vs gold " +
                    g.sent_id);
  }
  return Overlaps(ContentWords(t.cause.text), ContentWords(g.subject_text)) &&
         Overlaps(ContentWords(t.effect.text), ContentWords(g.object_text));
}

const WordSet& DefaultCausalPredicates() {
  static const WordSet* predicates = new WordSet{
      "AFFECTS",  "CAUSES",      "STIMULATES",  "INHIBITS",    "DISRUPTS",
      "PRODUCES", "PRECEDES",    "COMPLICATES", "PREDISPOSES", "PREVENTS"};
  return *predicates;
}

EvalReport MakeReport(size_t tp, size_t fp, size_t fn) {
  EvalReport r;
  r.tp = tp;
  r.fp = fp;
  r.fn = fn;
  r.precision = Ratio(tp, tp + fp, &r.precision_undefined);
  r.recall = Ratio(tp, tp + fn, &r.recall_undefined);
  const double sum = r.precision + r.recall;
  r.f1_undefined = sum == 0;
  r.f1 = sum == 0 ? 0.0 : 2 * r.precision * r.recall / sum;
  return r;
}

nlohmann::ordered_json EvalReport::ToJson() const {
  nlohmann::ordered_json j;
  j["tp"] = tp;
  j["fp"] = fp;
  j["fn"] = fn;
  j["precision"] = precision;
  j["recall"] = recall;
  j["f1"] = f1;
  nlohmann::ordered_json undefined = nlohmann::ordered_json::array();
  if (precision_undefined) undefined.push_back("precision");
  if (recall_undefined) undefined.push_back("recall");
  if (f1_undefined) undefined.push_back("f1");
  if (!undefined.empty()) j["undefined"] = std::move(undefined);
  return j;
}

std::string EvalReport::ToTable() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "%-10s %8s\n%-10s %8zu\n%-10s %8zu\n%-10s %8zu\n"
                "%-10s %8.4f%s\n%-10s %8.4f%s\n%-10s %8.4f%s\n",
                "metric", "value", "TP", tp, "FP", fp, "FN", fn, "precision",
                precision, precision_undefined ? " (undefined)" : "",
                "recall", recall, recall_undefined ? " (undefined)" : "",
                "F1", f1, f1_undefined ? " (undefined)" : "");
  return buf;
}

EvalReport Evaluate(std::span<const CETriplet> predicted,
                    std::span<const GoldPredication> gold,
                    const WordSet& causal_predicates) {
  WordSet upper;
  for (const auto& p : causal_predicates) upper.insert(ToUpper(p));

  std::map<std::string_view, std::vector<size_t>> by_sentence;
  for (size_t i = 0; i < predicted.size(); ++i) {
    by_sentence[predicted[i].sent_id].push_back(i);
  }
  std::vector<bool> matched(predicted.size(), false);
  size_t tp = 0, fn = 0;
  for (const auto& g : gold) {
    if (!upper.contains(ToUpper(g.predicate))) continue;
    bool hit = false;
    auto it = by_sentence.find(g.sent_id);
    if (it != by_sentence.end()) {
      for (size_t i : it->second) {
        if (TripletMatchesGold(predicted[i], g)) {
          hit = true;
          matched[i] = true;
        }
      }
    }
    hit ? ++tp : ++fn;
  }
  const size_t fp = std::count(matched.begin(), matched.end(), false);
  return MakeReport(tp, fp, fn);
}

std::vector<ScoreRecord> LoadScoresTsv(std::istream& in) {
  std::vector<ScoreRecord> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Blank(line) || line.front() == '#') continue;
    auto fail = [&](const std::string& what) {
      return EvalError("scores line " + std::to_string(line_no) + ": " + what);
    };
    auto cols = SplitTabs(line);
    if (cols.size() != 2) throw fail("expected <triplet line>\\t<score>");
    ScoreRecord r;
    auto [p1, e1] = std::from_chars(cols[0].data(),
                                    cols[0].data() + cols[0].size(),
                                    r.triplet_line);
    auto [p2, e2] = std::from_chars(cols[1].data(),
                                    cols[1].data() + cols[1].size(), r.score);
    if (e1 != std::errc() || p1 != cols[0].data() + cols[0].size() ||
        r.triplet_line == 0) {
      throw fail("bad triplet line number '" + cols[0] + "'");
    }
    if (e2 != std::errc() || p2 != cols[1].data() + cols[1].size() ||
        r.score < 0 || r.score > 2) {
      throw fail("score must be 0, 1 or 2, got '" + cols[1] + "'");
    }
    out.push_back(r);
  }
  return out;
}

PrecisionPair StrictLenientPrecision(std::span<const ScoreRecord> scores) {
  if (scores.empty()) throw EvalError("no scores to aggregate");
  size_t full = 0, sum = 0;
  for (const auto& s : scores) {
    if (s.score < 0 || s.score > 2) {
      throw EvalError("score out of range: " + std::to_string(s.score));
    }
    if (s.score == 2) ++full;
    sum += static_cast<size_t>(s.score);
  }
  const double n = static_cast<double>(scores.size());
  return PrecisionPair{static_cast<double>(full) / n,
                       static_cast<double>(sum) / (2 * n)};
}

std::vector<CETriplet> KbNovelTriplets(std::span<const CETriplet> triplets,
                                       const WordSet& kb_causal_sentences) {
  std::vector<CETriplet> out;
  for (const auto& t : triplets) {
    if (!kb_causal_sentences.contains(t.sent_id)) out.push_back(t);
  }
  return out;
}

}  // namespace cetrip
