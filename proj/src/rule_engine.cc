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

#include "cetrip/rule_engine.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
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

std::string JoinSet(const std::vector<std::string>& set) {
  std::string out;
  for (const auto& f : set) {
    if (!out.empty()) out += ", ";
    out += f;
  }
  return out;
}

bool AnyPresent(const std::vector<std::string>& set, const FeatureSet& f) {
  return std::any_of(set.begin(), set.end(),
                     [&](const std::string& x) { return f.Contains(x); });
}

}  // namespace

std::string_view LabelName(Label label) {
  switch (label) {
    case Label::kCause:
      return "CAUSE";
    case Label::kEffect:
      return "EFFECT";
    case Label::kOther:
      break;
  }
  return "OTHER";
}

std::optional<Label> ParseLabel(std::string_view name) {
  const std::string upper = ToUpper(name);
  if (upper == "CAUSE") return Label::kCause;
  if (upper == "EFFECT") return Label::kEffect;
  if (upper == "OTHER") return Label::kOther;
  return std::nullopt;
}

std::string Rule::Describe() const {
  std::string out = "AND: {" + JoinSet(and_set) + "}";
  if (!or_set.empty()) out += "; OR: {" + JoinSet(or_set) + "}";
  if (!neg_set.empty()) out += "; NEG: {" + JoinSet(neg_set) + "}";
  return out;
}

RuleSet::RuleSet(std::vector<Rule> rules)
    : rules_(std::move(rules)), counters_(rules_.size()) {
  std::set<std::string> ids;
  for (size_t i = 0; i < rules_.size(); ++i) {
    Rule& r = rules_[i];
    r.priority = static_cast<int>(i);
    if (r.id.empty()) throw RuleError("rule at position " +
                                      std::to_string(i) + " has no id");
    if (!ids.insert(r.id).second) {
      throw RuleError("duplicate rule id " + r.id);
    }
    if (r.label == Label::kOther) {
      throw RuleError("rule " + r.id + " cannot assign OTHER");
    }
    if (r.and_set.empty()) {
      throw RuleError("rule " + r.id + " has an empty AND set");
    }
    std::set<std::string> seen;
    for (const auto* set : {&r.and_set, &r.or_set, &r.neg_set}) {
      for (const auto& f : *set) {
        if (!seen.insert(f).second) {
          throw RuleError("rule " + r.id + " lists feature " + f +
                          " more than once");
        }
      }
    }
  }
}

RuleSet::RuleSet(const RuleSet& other)
    : rules_(other.rules_), counters_(other.rules_.size()) {
  for (size_t i = 0; i < counters_.size(); ++i) {
    counters_[i].store(other.counters_[i].load(std::memory_order_relaxed),
                       std::memory_order_relaxed);
  }
}

RuleSet& RuleSet::operator=(const RuleSet& other) {
  if (this != &other) {
    RuleSet copy(other);
    rules_ = std::move(copy.rules_);
    counters_ = std::vector<std::atomic<uint64_t>>(rules_.size());
    for (size_t i = 0; i < counters_.size(); ++i) {
      counters_[i].store(copy.counters_[i].load(std::memory_order_relaxed),
                         std::memory_order_relaxed);
    }
  }
  return *this;
}

const Rule* RuleSet::Find(std::string_view id) const {
  for (const auto& r : rules_) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

size_t RuleSet::CountLabel(Label label) const {
  return std::count_if(rules_.begin(), rules_.end(),
                       [&](const Rule& r) { return r.label == label; });
}

std::vector<uint64_t> RuleSet::Counts() const {
  std::vector<uint64_t> out;
  out.reserve(counters_.size());
  for (const auto& c : counters_) {
    out.push_back(c.load(std::memory_order_relaxed));
  }
  return out;
}

void RuleSet::AddCounts(std::span<const uint64_t> counts) {
  if (counts.size() != counters_.size()) {
    throw RuleError("counter vector has " + std::to_string(counts.size()) +
                    " entries for " + std::to_string(counters_.size()) +
                    " rules");
  }
  for (size_t i = 0; i < counts.size(); ++i) {
    counters_[i].fetch_add(counts[i], std::memory_order_relaxed);
  }
}

void RuleSet::ResetCounts() {
  for (auto& c : counters_) c.store(0, std::memory_order_relaxed);
}

void RuleSet::Increment(size_t rule_index) const {
  counters_.at(rule_index).fetch_add(1, std::memory_order_relaxed);
}

bool RuleMatches(const Rule& rule, const FeatureSet& features) {
  for (const auto& f : rule.and_set) {
    if (!features.Contains(f)) return false;
  }
  if (!rule.or_set.empty() && !AnyPresent(rule.or_set, features)) return false;
  return !AnyPresent(rule.neg_set, features);
}

PairLabel ClassifyPair(const RuleSet& rules, const FeatureSet& features) {
  const auto& list = rules.rules();
  for (size_t i = 0; i < list.size(); ++i) {
    if (RuleMatches(list[i], features)) {
      rules.Increment(i);
      return PairLabel{list[i].label, list[i].id};
    }
  }
  return PairLabel{};
}

RuleSet LoadRules(std::istream& in) {
  std::vector<Rule> rules;
  std::set<std::string> ids;
  std::optional<Rule> current;
  size_t current_line = 0;
  std::string raw;
  size_t line_no = 0;

  auto fail = [&](size_t line, const std::string& what) {
    return RuleError("rules line " + std::to_string(line) + ": " + what);
  };
  auto finish = [&] {
    if (!current) return;
    if (current->and_set.empty()) {
      throw fail(current_line, "rule " + current->id + " has no AND set");
    }
    rules.push_back(std::move(*current));
    current.reset();
  };
  auto parse_set = [&](std::string_view body) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= body.size()) {
      size_t comma = body.find(',', pos);
      if (comma == std::string_view::npos) comma = body.size();
      std::string_view item = Trim(body.substr(pos, comma - pos));
      if (!item.empty()) {
        try {
          out.push_back(NormalizeFeature(item));
        } catch (const FeatureError& e) {
          throw fail(line_no, e.what());
        }
      }
      pos = comma + 1;
    }
    return out;
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = Trim(raw);
    if (line.empty()) {
      finish();
      continue;
    }
    if (line.front() == '#') continue;

    if (line.starts_with("RULE ") || line.starts_with("RULE\t")) {
      finish();
      std::istringstream fields{std::string(line.substr(5))};
      std::string id, label, extra;
      fields >> id >> label;
      if (id.empty() || label.empty() || (fields >> extra)) {
        throw fail(line_no, "expected RULE <id> <CAUSE|EFFECT>");
      }
      auto parsed = ParseLabel(label);
      if (!parsed || *parsed == Label::kOther) {
        throw fail(line_no, "unknown label '" + label + "'");
      }
      if (!ids.insert(id).second) {
        throw fail(line_no, "duplicate rule id " + id);
      }
      current = Rule{};
      current->id = id;
      current->label = *parsed;
      current_line = line_no;
      continue;
    }

    size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw fail(line_no, "expected AND:, OR: or NEG:");
    }
    if (!current) throw fail(line_no, "feature line outside a RULE record");
    const std::string key = ToUpper(Trim(line.substr(0, colon)));
    std::vector<std::string>* target = nullptr;
    if (key == "AND") {
      target = &current->and_set;
    } else if (key == "OR") {
      target = &current->or_set;
    } else if (key == "NEG") {
      target = &current->neg_set;
    } else {
      throw fail(line_no, "unknown set '" + key + "'");
    }
    for (auto& f : parse_set(line.substr(colon + 1))) {
      target->push_back(std::move(f));
    }
  }
  finish();
  return RuleSet(std::move(rules));
}

RuleSet LoadRulesFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw RuleError("cannot open rules file " + path.string());
  try {
    return LoadRules(in);
  } catch (const RuleError& e) {
    throw RuleError(path.string() + ": " + e.what());
  }
}

void WriteRules(std::ostream& out, const RuleSet& rules) {
  bool first = true;
  for (const auto& r : rules.rules()) {
    if (!first) out << "\n";
    first = false;
    out << "RULE " << r.id << " " << LabelName(r.label) << "\n";
    out << "AND: " << JoinSet(r.and_set) << "\n";
    if (!r.or_set.empty()) out << "OR: " << JoinSet(r.or_set) << "\n";
    if (!r.neg_set.empty()) out << "NEG: " << JoinSet(r.neg_set) << "\n";
  }
}

std::vector<CoverageRow> CoverageReport(const RuleSet& rules,
                                        std::span<const uint64_t> counts) {
  const auto& list = rules.rules();
  if (counts.size() != list.size()) {
    throw RuleError("coverage counts do not match the rule set");
  }
  uint64_t totals[2] = {0, 0};
  for (size_t i = 0; i < list.size(); ++i) {
    totals[list[i].label == Label::kCause ? 0 : 1] += counts[i];
  }
  std::vector<CoverageRow> rows;
  for (size_t i = 0; i < list.size(); ++i) {
    const uint64_t total = totals[list[i].label == Label::kCause ? 0 : 1];
    rows.push_back(CoverageRow{
        list[i].id, list[i].label, counts[i],
        total == 0 ? 0.0
                   : static_cast<double>(counts[i]) /
                         static_cast<double>(total)});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const CoverageRow& a, const CoverageRow& b) {
                     return a.count > b.count;
                   });
  return rows;
}

std::vector<CoverageRow> RuleCoverageReport(const RuleSet& rules) {
  const auto counts = rules.Counts();
  return CoverageReport(rules, counts);
}

}  // namespace cetrip
