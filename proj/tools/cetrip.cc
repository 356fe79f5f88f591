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

// cetrip: extract cause-effect triplets from CoNLL-U parses and score them.
//
//   cetrip extract --input parsed.conllu --output triplets.jsonl
//   cetrip rule-stats --output triplets.jsonl
//   cetrip evaluate --input triplets.jsonl --gold gold.tsv
//   cetrip score --scores manual.tsv
//   cetrip novel --input triplets.jsonl --kb kb_sentences.txt
//
// extract writes <output>.coverage.json next to the triplets; rule-stats
// reads it back. Every option may also come from an INI/TOML file given with
// --config.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cetrip/conllu.h"
#include "cetrip/evaluation.h"
#include "cetrip/extraction.h"
#include "cetrip/rule_engine.h"
#include "cetrip/trigger_lexicon.h"
#include "cetrip/triplet_io.h"
#include "json.hpp"

#ifndef CETRIP_DATA_DIR
#define CETRIP_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace cetrip {
namespace {

struct ExtractFlags {
  std::string lexicon = std::string(CETRIP_DATA_DIR) + "/causal_triggers.tsv";
  std::string rules = std::string(CETRIP_DATA_DIR) + "/headword_rules.txt";
  std::vector<std::string> inputs;
  std::string output;
  std::vector<std::string> exclude_deps;
  std::vector<std::string> uncertainty_words;
  bool no_clamp = false;
  bool strict = false;
  bool merge = false;
  int jobs = 1;
};

struct EvaluateFlags {
  std::string predictions;
  std::string gold;
  std::vector<std::string> predicates;
};

struct RuleStatsFlags {
  std::string rules = std::string(CETRIP_DATA_DIR) + "/headword_rules.txt";
  std::string output;
  std::vector<std::string> coverage;
};

struct ScoreFlags {
  std::string scores;
  std::string predictions;
};

struct NovelFlags {
  std::string predictions;
  std::string kb;
  std::string output;
};

fs::path SidecarPath(const std::string& output) {
  return fs::path(output + ".coverage.json");
}

std::vector<CETriplet> ReadPredictions(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open predictions " + path);
  try {
    return ReadJsonl(in);
  } catch (const SchemaError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

json ReadJsonFile(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

// Per-rule counters from a sidecar, keyed by rule id.
struct SidecarCounts {
  uint64_t sentences = 0;
  uint64_t triggers = 0;
  uint64_t triplets = 0;
  std::map<std::string, std::pair<uint64_t, uint64_t>> rules;
};

SidecarCounts ReadSidecar(const fs::path& path) {
  const json j = ReadJsonFile(path);
  SidecarCounts c;
  try {
    c.sentences = j.at("sentences").get<uint64_t>();
    c.triggers = j.at("triggers").get<uint64_t>();
    c.triplets = j.at("triplets").get<uint64_t>();
    for (const auto& r : j.at("rules")) {
      c.rules[r.at("id").get<std::string>()] = {
          r.at("pair_matches").get<uint64_t>(),
          r.at("triplets").get<uint64_t>()};
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(path.string() + ": malformed coverage file: " +
                             e.what());
  }
  return c;
}

void WriteSidecar(const fs::path& path, const std::string& rules_path,
                  const RuleSet& rules, const SidecarCounts& c) {
  ordered_json j;
  j["rules_file"] = rules_path;
  j["sentences"] = c.sentences;
  j["triggers"] = c.triggers;
  j["triplets"] = c.triplets;
  ordered_json list = ordered_json::array();
  for (const auto& r : rules.rules()) {
    auto it = c.rules.find(r.id);
    ordered_json row;
    row["id"] = r.id;
    row["label"] = LabelName(r.label);
    row["pair_matches"] = it == c.rules.end() ? 0 : it->second.first;
    row["triplets"] = it == c.rules.end() ? 0 : it->second.second;
    row["description"] = r.Describe();
    list.push_back(std::move(row));
  }
  j["rules"] = std::move(list);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

int RunExtract(const ExtractFlags& f) {
  const auto lexicon = LoadLexiconFile(f.lexicon);
  RuleSet rules = LoadRulesFile(f.rules);

  ExpansionConfig cfg;
  if (!f.exclude_deps.empty()) {
    cfg.excluded_deps.clear();
    for (const auto& d : f.exclude_deps) cfg.excluded_deps.insert(ToLower(d));
  }
  if (!f.uncertainty_words.empty()) {
    cfg.uncertainty_words.clear();
    for (const auto& w : f.uncertainty_words) {
      cfg.uncertainty_words.insert(ToLower(w));
    }
  }
  cfg.clamp_at_trigger = !f.no_clamp;

  Corpus corpus;
  for (const auto& path : f.inputs) {
    Corpus part = ReadConlluFile(path, f.strict);
    for (auto& d : part.diagnostics) corpus.diagnostics.push_back(d);
    for (auto& doc : part.documents) {
      corpus.documents.push_back(std::move(doc));
    }
  }

  const CorpusResult result =
      ExtractCorpus(corpus, lexicon, rules, cfg, f.jobs);
  const auto triplet_counts = TripletCoverage(rules, result.triplets);
  const auto pair_counts = rules.Counts();

  SidecarCounts counts;
  const fs::path sidecar = SidecarPath(f.output);
  if (f.merge && fs::exists(sidecar)) counts = ReadSidecar(sidecar);
  counts.sentences += result.sentences;
  counts.triggers += result.triggers;
  counts.triplets += result.triplets.size();
  for (size_t i = 0; i < rules.size(); ++i) {
    auto& slot = counts.rules[rules.rules()[i].id];
    slot.first += pair_counts[i];
    slot.second += triplet_counts[i];
  }

  {
    std::ofstream out(f.output, f.merge ? std::ios::app : std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + f.output);
    WriteJsonl(out, result.triplets);
  }
  WriteSidecar(sidecar, f.rules, rules, counts);

  for (const auto& d : corpus.diagnostics) std::cerr << "skipped: " << d << "\n";
  for (const auto& d : result.diagnostics) std::cerr << "error: " << d << "\n";
  std::cerr << "sentences: " << result.sentences << "\n"
            << "triggers: " << result.triggers << "\n"
            << "triplets: " << result.triplets.size() << "\n";
  for (const auto& r : rules.rules()) {
    const auto& slot = counts.rules[r.id];
    if (slot.first == 0 && slot.second == 0) continue;
    std::cerr << "rule " << r.id << ": " << slot.first << " pairs, "
              << slot.second << " triplets\n";
  }
  return result.diagnostics.empty() ? 0 : 1;
}

void PrintCoverageTable(const RuleSet& rules, const SidecarCounts& c,
                        Label label) {
  std::vector<uint64_t> counts;
  for (const auto& r : rules.rules()) {
    auto it = c.rules.find(r.id);
    counts.push_back(it == c.rules.end() ? 0 : it->second.second);
  }
  const auto report = CoverageReport(rules, counts);
  std::printf("%s rules\n%-6s %10s %9s  %s\n", std::string(LabelName(label)).c_str(),
              "Rule", "Coverage", "Share", "Features");
  for (const auto& row : report) {
    if (row.label != label) continue;
    const Rule* rule = rules.Find(row.id);
    std::printf("%-6s %10llu %8.2f%%  %s\n", row.id.c_str(),
                static_cast<unsigned long long>(row.count),
                100.0 * row.fraction, rule->Describe().c_str());
  }
}

int RunRuleStats(const RuleStatsFlags& f) {
  std::vector<fs::path> sidecars;
  for (const auto& p : f.coverage) sidecars.emplace_back(p);
  if (!f.output.empty()) sidecars.push_back(SidecarPath(f.output));
  if (sidecars.empty()) {
    throw std::runtime_error("give --output or --coverage");
  }
  SidecarCounts total;
  for (const auto& path : sidecars) {
    if (!fs::exists(path)) {
      throw std::runtime_error("no coverage file at " + path.string() +
                               "; run extract first");
    }
    const SidecarCounts c = ReadSidecar(path);
    total.sentences += c.sentences;
    total.triggers += c.triggers;
    total.triplets += c.triplets;
    for (const auto& [id, v] : c.rules) {
      total.rules[id].first += v.first;
      total.rules[id].second += v.second;
    }
  }
  const RuleSet rules = LoadRulesFile(f.rules);
  for (const auto& [id, v] : total.rules) {
    if (rules.Find(id) == nullptr) {
      throw std::runtime_error("coverage file names rule " + id +
                               " which is not in " + f.rules);
    }
  }
  std::printf("sentences %llu, triggers %llu, triplets %llu\n\n",
              static_cast<unsigned long long>(total.sentences),
              static_cast<unsigned long long>(total.triggers),
              static_cast<unsigned long long>(total.triplets));
  PrintCoverageTable(rules, total, Label::kCause);
  std::printf("\n");
  PrintCoverageTable(rules, total, Label::kEffect);
  return 0;
}

int RunEvaluate(const EvaluateFlags& f) {
  const auto predicted = ReadPredictions(f.predictions);
  const auto gold = LoadGoldTsvFile(f.gold);
  WordSet predicates;
  for (const auto& p : f.predicates) predicates.insert(ToUpper(p));
  if (predicates.empty()) predicates = DefaultCausalPredicates();
  const EvalReport report = Evaluate(predicted, gold, predicates);
  std::cout << report.ToTable() << report.ToJson().dump() << "\n";
  return 0;
}

int RunScore(const ScoreFlags& f) {
  std::ifstream in(f.scores);
  if (!in) throw std::runtime_error("cannot open scores " + f.scores);
  std::vector<ScoreRecord> scores;
  try {
    scores = LoadScoresTsv(in);
  } catch (const EvalError& e) {
    throw std::runtime_error(f.scores + ": " + e.what());
  }
  if (!f.predictions.empty()) {
    const size_t n = ReadPredictions(f.predictions).size();
    for (const auto& s : scores) {
      if (s.triplet_line > n) {
        throw std::runtime_error("score for triplet line " +
                                 std::to_string(s.triplet_line) + " but " +
                                 f.predictions + " has " + std::to_string(n));
      }
    }
  }
  const PrecisionPair p = StrictLenientPrecision(scores);
  ordered_json j;
  j["n"] = scores.size();
  j["strict"] = p.strict;
  j["lenient"] = p.lenient;
  std::printf("n %zu\nstrict %.4f\nlenient %.4f\n", scores.size(), p.strict,
              p.lenient);
  std::cout << j.dump() << "\n";
  return 0;
}

int RunNovel(const NovelFlags& f) {
  const auto triplets = ReadPredictions(f.predictions);
  std::ifstream in(f.kb);
  if (!in) throw std::runtime_error("cannot open " + f.kb);
  WordSet kb;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    kb.insert(line);
  }
  const auto novel = KbNovelTriplets(triplets, kb);
  if (!f.output.empty()) {
    std::ofstream out(f.output);
    if (!out) throw std::runtime_error("cannot write " + f.output);
    WriteJsonl(out, novel);
  }
  std::printf("triplets %zu\nnovel %zu\n", triplets.size(), novel.size());
  return 0;
}

}  // namespace
}  // namespace cetrip

int main(int argc, char** argv) {
  using namespace cetrip;
  CLI::App app{"Rule-based cause-effect triplet extraction"};
  app.set_config("--config", "", "Read options from an INI/TOML file");
  app.require_subcommand(1);

  ExtractFlags ex;
  auto* extract = app.add_subcommand("extract", "Extract triplets");
  extract->add_option("--lexicon", ex.lexicon, "Trigger lexicon TSV")
      ->check(CLI::ExistingFile)
      ->capture_default_str();
  extract->add_option("--rules", ex.rules, "Headword rule file")
      ->check(CLI::ExistingFile)
      ->capture_default_str();
  extract->add_option("--input", ex.inputs, "CoNLL-U input (repeatable)")
      ->required()
      ->check(CLI::ExistingFile);
  extract->add_option("--output", ex.output, "JSONL output")->required();
  extract
      ->add_option("--exclude-deps", ex.exclude_deps,
                   "Dependents cut from phrases (comma list)")
      ->delimiter(',');
  extract
      ->add_option("--uncertainty-words", ex.uncertainty_words,
                   "Auxiliaries marking uncertainty (comma list)")
      ->delimiter(',');
  extract->add_flag("--no-clamp", ex.no_clamp,
                    "Do not cut phrases at an enclosed trigger");
  extract->add_flag("--strict", ex.strict, "Fail on malformed trees");
  extract->add_flag("--merge", ex.merge,
                    "Append to the output and add to existing coverage");
  extract->add_option("--jobs", ex.jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  RuleStatsFlags rs;
  auto* rule_stats =
      app.add_subcommand("rule-stats", "Per-rule coverage of a prior run");
  rule_stats->add_option("--rules", rs.rules, "Headword rule file")
      ->check(CLI::ExistingFile)
      ->capture_default_str();
  rule_stats->add_option("--output", rs.output,
                         "Output given to a prior extract run");
  rule_stats->add_option("--coverage", rs.coverage,
                         "Coverage file (repeatable, summed)");

  EvaluateFlags ev;
  auto* evaluate =
      app.add_subcommand("evaluate", "Score predictions against gold");
  evaluate->add_option("--input", ev.predictions, "Predictions JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate->add_option("--gold", ev.gold, "Gold predication TSV")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate
      ->add_option("--predicates", ev.predicates,
                   "Causal predicates (comma list)")
      ->delimiter(',');

  ScoreFlags sc;
  auto* score =
      app.add_subcommand("score", "Strict and lenient precision of scores");
  score->add_option("--scores", sc.scores, "TSV of triplet line and score")
      ->required()
      ->check(CLI::ExistingFile);
  score->add_option("--input", sc.predictions,
                    "Predictions JSONL to check line numbers against")
      ->check(CLI::ExistingFile);

  NovelFlags nv;
  auto* novel = app.add_subcommand(
      "novel", "Triplets from sentences without a KB causal predication");
  novel->add_option("--input", nv.predictions, "Predictions JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  novel->add_option("--kb", nv.kb, "File of sentence ids, one per line")
      ->required()
      ->check(CLI::ExistingFile);
  novel->add_option("--output", nv.output, "JSONL of novel triplets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*extract) return RunExtract(ex);
    if (*rule_stats) return RunRuleStats(rs);
    if (*evaluate) return RunEvaluate(ev);
    if (*score) return RunScore(sc);
    if (*novel) return RunNovel(nv);
  } catch (const std::exception& e) {
    std::cerr << "cetrip: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
