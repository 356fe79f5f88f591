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

// Dependency-tree data model and the tree algebra used by feature generation
// and phrase expansion.

#ifndef CETRIP_PARSE_MODEL_H_
#define CETRIP_PARSE_MODEL_H_

#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cetrip {

// Head value of the sentence root.
inline constexpr int kRoot = -1;

// Dependency label of the sentence root, also used as the root's parent text.
inline constexpr std::string_view kRootLabel = "root";

using LabelSet = std::set<std::string, std::less<>>;

struct Token {
  int index = 0;
  std::string text;
  std::string lower;    // lowercased surface
  std::string lemma;
  std::string pos;      // fine-grained tag, e.g. VBD
  std::string pos_gen;  // coarse tag, e.g. VERB
  int head = kRoot;
  std::string dep;

  bool is_root() const { return head == kRoot; }
};

// Raised when a token list does not form a single rooted tree.
class TreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One dependency-parsed sentence. Immutable after construction; the
// constructor rejects anything that is not a single tree.
class ParsedSentence {
 public:
  // Fills Token::lower from Token::text. Throws TreeError on non-contiguous
  // indices, zero or several roots, out-of-range heads, self loops or cycles.
  ParsedSentence(std::vector<Token> tokens, std::string doc_id,
                 std::string sent_id, std::string raw_text = {});

  int size() const { return static_cast<int>(tokens_.size()); }
  const Token& token(int i) const;
  const std::vector<Token>& tokens() const { return tokens_; }
  int root() const { return root_; }
  const std::string& doc_id() const { return doc_id_; }
  const std::string& sent_id() const { return sent_id_; }
  const std::string& raw_text() const { return raw_text_; }

  // Dependents of token i in ascending index order.
  const std::vector<int>& children(int i) const;

  // Number of edges between token i and the root.
  int depth(int i) const;

  // Throws std::out_of_range unless 0 <= i < size().
  void CheckIndex(int i) const;

 private:
  std::vector<Token> tokens_;
  std::string doc_id_;
  std::string sent_id_;
  std::string raw_text_;
  int root_ = kRoot;
  std::vector<std::vector<int>> children_;
  std::vector<int> depth_;
};

// Path between two tokens. up_edges run from u toward the lowest common
// ancestor (starting with u's own label), down_edges from the lowest common
// ancestor toward v (ending with v's own label). intermediate_nodes are the
// tokens strictly between u and v, in path order.
struct DepPath {
  std::vector<std::string> up_edges;
  std::vector<std::string> down_edges;
  std::vector<int> intermediate_nodes;

  // Compares edge sequences only.
  bool SameEdges(const DepPath& other) const {
    return up_edges == other.up_edges && down_edges == other.down_edges;
  }
};

std::vector<int> Children(const ParsedSentence& s, int i);

// True iff a lies on the head chain from d to the root, a != d.
bool IsAncestor(const ParsedSentence& s, int a, int d);

// Lowest common ancestor; a token counts as its own ancestor here.
int Lca(const ParsedSentence& s, int a, int b);

// Token i plus its descendants in ascending order. A descendant whose edge
// to its parent carries a label in excluded_deps is dropped together with
// everything below it. Token i itself is never dropped.
std::vector<int> Subtree(const ParsedSentence& s, int i,
                         const LabelSet& excluded_deps = {});

// Throws std::invalid_argument when u == v.
DepPath GetDepPath(const ParsedSentence& s, int u, int v);

// "u<nsubj<LCA>prep>pcomp>v" style rendering. Labels are lowercased; the
// literal LCA appears only when both edge lists are non-empty.
std::string SerializePath(const DepPath& path);

// Inverse of SerializePath for the edge sequences. Throws
// std::invalid_argument on malformed input.
DepPath ParsePath(std::string_view serialized);

// ASCII lowercase; bytes outside A-Z pass through unchanged.
std::string ToLower(std::string_view s);
std::string ToUpper(std::string_view s);

}  // namespace cetrip

#endif  // CETRIP_PARSE_MODEL_H_
