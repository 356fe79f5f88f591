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

#include "cetrip/conllu.h"

#include <charconv>
#include <fstream>
#include <set>
#include <string_view>
#include <utility>

namespace cetrip {
namespace {

constexpr size_t kColumns = 10;

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool ParseInt(std::string_view s, int* out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string Blank(std::string_view field) {
  return field == "_" ? std::string() : std::string(field);
}

std::string Underscore(const std::string& value) {
  return value.empty() ? "_" : value;
}

struct PendingRow {
  size_t line;
  Token token;
};

class Reader {
 public:
  explicit Reader(const ConlluOptions& options) : options_(options) {}

  Corpus Run(std::istream& in) {
    corpus_.source_path = options_.source_name;
    std::string raw;
    size_t line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      std::string_view line = raw;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (Trim(line).empty()) {
        Flush();
        continue;
      }
      if (line.front() == '#') {
        Comment(line, line_no);
        continue;
      }
      Row(line, line_no);
    }
    Flush();
    return std::move(corpus_);
  }

 private:
  void Comment(std::string_view line, size_t line_no) {
    std::string_view body = Trim(line.substr(1));
    std::string_view key = body, value;
    size_t eq = body.find('=');
    if (eq != std::string_view::npos) {
      key = Trim(body.substr(0, eq));
      value = Trim(body.substr(eq + 1));
    }
    if (key == "newdoc id" || key == "newdoc") {
      if (!rows_.empty()) {
        throw ConlluError(options_.source_name, line_no,
                          "newdoc comment inside a sentence block");
      }
      std::string id(value);
      if (id.empty()) {
        id = options_.source_name + "#" +
             std::to_string(corpus_.documents.size() + 1);
      }
      corpus_.documents.push_back(Document{std::move(id), {}});
    } else if (key == "sent_id") {
      sent_id_ = std::string(value);
    } else if (key == "text") {
      text_ = std::string(value);
    }
    if (block_start_ == 0) block_start_ = line_no;
  }

  void Row(std::string_view line, size_t line_no) {
    if (block_start_ == 0) block_start_ = line_no;
    auto fields = SplitTabs(line);
    if (fields.size() != kColumns) {
      throw ConlluError(options_.source_name, line_no,
                        "expected 10 tab-separated columns, found " +
                            std::to_string(fields.size()));
    }
    std::string_view id = fields[0];
    if (id.find('-') != std::string_view::npos ||
        id.find('.') != std::string_view::npos) {
      return;  // multiword token range or empty node
    }
    int id_value = 0;
    if (!ParseInt(id, &id_value) ||
        id_value != static_cast<int>(rows_.size()) + 1) {
      throw ConlluError(options_.source_name, line_no,
                        "unexpected token ID '" + std::string(id) + "'");
    }
    int head_value = 0;
    if (!ParseInt(fields[6], &head_value) || head_value < 0) {
      throw ConlluError(options_.source_name, line_no,
                        "unparseable HEAD '" + std::string(fields[6]) + "'");
    }

    Token t;
    t.index = id_value - 1;
    t.text = std::string(fields[1]);
    t.lemma = fields[2] == "_" ? ToLower(t.text) : std::string(fields[2]);
    t.pos_gen = Blank(fields[3]);
    t.pos = Blank(fields[4]);
    t.head = head_value - 1;  // HEAD 0 becomes kRoot
    t.dep = ToLower(Blank(fields[7]));
    rows_.push_back(PendingRow{line_no, std::move(t)});
  }

  void Reject(size_t line_no, const std::string& message) {
    if (options_.strict) {
      throw ConlluError(options_.source_name, line_no, message);
    }
    corpus_.diagnostics.push_back(options_.source_name + ":" +
                                  std::to_string(line_no) + ": " + message +
                                  "; sentence skipped");
  }

  void Flush() {
    const size_t start = block_start_;
    block_start_ = 0;
    std::string sent_id = std::move(sent_id_);
    std::string text = std::move(text_);
    sent_id_.clear();
    text_.clear();
    if (rows_.empty()) return;
    std::vector<PendingRow> rows = std::move(rows_);
    rows_.clear();

    if (corpus_.documents.empty()) {
      corpus_.documents.push_back(Document{options_.source_name, {}});
    }
    Document& doc = corpus_.documents.back();
    ++sentence_count_;
    if (sent_id.empty()) sent_id = std::to_string(sentence_count_);
    if (!seen_.insert({doc.doc_id, sent_id}).second) {
      throw ConlluError(options_.source_name, start,
                        "duplicate sent_id '" + sent_id + "' in document '" +
                            doc.doc_id + "'");
    }

    const int n = static_cast<int>(rows.size());
    std::vector<Token> tokens;
    tokens.reserve(n);
    for (auto& row : rows) {
      if (row.token.head >= n) {
        Reject(row.line, "HEAD " + std::to_string(row.token.head + 1) +
                             " references a nonexistent token in a " +
                             std::to_string(n) + "-token sentence");
        return;
      }
      tokens.push_back(std::move(row.token));
    }
    try {
      doc.sentences.emplace_back(std::move(tokens), doc.doc_id, sent_id,
                                 std::move(text));
    } catch (const TreeError& e) {
      Reject(start, e.what());
    }
  }

  const ConlluOptions& options_;
  Corpus corpus_;
  std::vector<PendingRow> rows_;
  std::string sent_id_;
  std::string text_;
  size_t block_start_ = 0;
  size_t sentence_count_ = 0;
  std::set<std::pair<std::string, std::string>> seen_;
};

}  // namespace

size_t Corpus::SentenceCount() const {
  size_t n = 0;
  for (const auto& doc : documents) n += doc.sentences.size();
  return n;
}

ConlluError::ConlluError(const std::string& source, size_t line,
                         const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
      line_(line) {}

Corpus ParseConllu(std::istream& in, const ConlluOptions& options) {
  return Reader(options).Run(in);
}

Corpus ReadConlluFile(const std::filesystem::path& path, bool strict) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  ConlluOptions options;
  options.strict = strict;
  options.source_name = path.string();
  return ParseConllu(in, options);
}

void WriteConllu(std::ostream& out, const Corpus& corpus) {
  for (const auto& doc : corpus.documents) {
    out << "# newdoc id = " << doc.doc_id << "\n";
    for (const auto& s : doc.sentences) {
      out << "# sent_id = " << s.sent_id() << "\n";
      if (!s.raw_text().empty()) out << "# text = " << s.raw_text() << "\n";
      for (const auto& t : s.tokens()) {
        out << t.index + 1 << '\t' << t.text << '\t' << Underscore(t.lemma)
            << '\t' << Underscore(t.pos_gen) << '\t' << Underscore(t.pos)
            << "\t_\t" << t.head + 1 << '\t' << Underscore(t.dep)
            << "\t_\t_\n";
      }
      out << "\n";
    }
  }
}

}  // namespace cetrip
