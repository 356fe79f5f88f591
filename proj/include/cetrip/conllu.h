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

// CoNLL-U reader and writer.
//
// Column mapping: ID -> index (0-based internally), FORM -> text,
// LEMMA -> lemma ("_" falls back to the lowercased form), UPOS -> pos_gen,
// XPOS -> pos, HEAD -> head (0 is the root), DEPREL -> dep. Multiword token
// ranges ("3-4") and empty nodes ("5.1") are skipped. "# newdoc id = ..." and
// "# sent_id = ..." comments set identifiers; "# text = ..." is kept as the
// raw sentence text.

#ifndef CETRIP_CONLLU_H_
#define CETRIP_CONLLU_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cetrip/parse_model.h"

namespace cetrip {

struct Document {
  std::string doc_id;
  std::vector<ParsedSentence> sentences;
};

struct Corpus {
  std::vector<Document> documents;
  std::string source_path;
  // One line per sentence skipped in lenient mode.
  std::vector<std::string> diagnostics;

  size_t SentenceCount() const;
};

// Input errors, always tagged with the 1-based line where they were found.
class ConlluError : public std::runtime_error {
 public:
  ConlluError(const std::string& source, size_t line, const std::string& what);
  size_t line() const { return line_; }

 private:
  size_t line_;
};

struct ConlluOptions {
  // Turn tree-validation failures into ConlluError instead of skipping the
  // sentence with a diagnostic.
  bool strict = false;
  // Used in messages, and as the document id when the input has no
  // "# newdoc" comment before its first sentence.
  std::string source_name = "input";
};

// Column-count errors and duplicate (doc_id, sent_id) pairs always throw.
Corpus ParseConllu(std::istream& in, const ConlluOptions& options = {});

Corpus ReadConlluFile(const std::filesystem::path& path, bool strict = false);

void WriteConllu(std::ostream& out, const Corpus& corpus);

}  // namespace cetrip

#endif  // CETRIP_CONLLU_H_
