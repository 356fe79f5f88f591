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

#include "cetrip/parse_model.h"

#include <algorithm>
#include <utility>

namespace cetrip {

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string ToUpper(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

ParsedSentence::ParsedSentence(std::vector<Token> tokens, std::string doc_id,
                               std::string sent_id, std::string raw_text)
    : tokens_(std::move(tokens)),
      doc_id_(std::move(doc_id)),
      sent_id_(std::move(sent_id)),
      raw_text_(std::move(raw_text)) {
  const int n = size();
  if (n == 0) throw TreeError("sentence has no tokens");

  for (int i = 0; i < n; ++i) {
    Token& t = tokens_[i];
    if (t.index != i) {
      throw TreeError("token " + std::to_string(i) + " carries index " +
                      std::to_string(t.index));
    }
    t.lower = ToLower(t.text);
    if (t.head == kRoot) {
      if (root_ != kRoot) {
        throw TreeError("multiple roots: tokens " + std::to_string(root_) +
                        " and " + std::to_string(i));
      }
      root_ = i;
      t.dep = std::string(kRootLabel);
    } else if (t.head < 0 || t.head >= n) {
      throw TreeError("token " + std::to_string(i) + " has head " +
                      std::to_string(t.head) + " outside the sentence");
    } else if (t.head == i) {
      throw TreeError("token " + std::to_string(i) + " is its own head");
    } else if (ToLower(t.dep) == kRootLabel) {
      throw TreeError("non-root token " + std::to_string(i) +
                      " has dependency label root");
    }
  }
  if (root_ == kRoot) throw TreeError("sentence has no root");

  // Depths double as the cycle check: a head chain longer than n tokens
  // cannot reach the root.
  depth_.assign(n, -1);
  depth_[root_] = 0;
  std::vector<int> chain;
  for (int i = 0; i < n; ++i) {
    chain.clear();
    int cur = i;
    while (depth_[cur] < 0) {
      chain.push_back(cur);
      if (static_cast<int>(chain.size()) > n) {
        throw TreeError("cycle in head chain of token " + std::to_string(i));
      }
      cur = tokens_[cur].head;
    }
    int d = depth_[cur];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      depth_[*it] = ++d;
    }
  }

  children_.assign(n, {});
  for (int i = 0; i < n; ++i) {
    if (tokens_[i].head != kRoot) children_[tokens_[i].head].push_back(i);
  }
}

void ParsedSentence::CheckIndex(int i) const {
  if (i < 0 || i >= size()) {
    throw std::out_of_range("token index " + std::to_string(i) +
                            " outside sentence of length " +
                            std::to_string(size()));
  }
}

const Token& ParsedSentence::token(int i) const {
  CheckIndex(i);
  return tokens_[i];
}

const std::vector<int>& ParsedSentence::children(int i) const {
  CheckIndex(i);
  return children_[i];
}

int ParsedSentence::depth(int i) const {
  CheckIndex(i);
  return depth_[i];
}

std::vector<int> Children(const ParsedSentence& s, int i) {
  return s.children(i);
}

bool IsAncestor(const ParsedSentence& s, int a, int d) {
  s.CheckIndex(a);
  s.CheckIndex(d);
  for (int cur = s.token(d).head; cur != kRoot; cur = s.token(cur).head) {
    if (cur == a) return true;
  }
  return false;
}

int Lca(const ParsedSentence& s, int a, int b) {
  s.CheckIndex(a);
  s.CheckIndex(b);
  while (s.depth(a) > s.depth(b)) a = s.token(a).head;
  while (s.depth(b) > s.depth(a)) b = s.token(b).head;
  while (a != b) {
    a = s.token(a).head;
    b = s.token(b).head;
  }
  return a;
}

std::vector<int> Subtree(const ParsedSentence& s, int i,
                         const LabelSet& excluded_deps) {
  s.CheckIndex(i);
  std::vector<int> out;
  std::vector<int> stack{i};
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    for (int c : s.children(cur)) {
      if (!excluded_deps.contains(ToLower(s.token(c).dep))) stack.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DepPath GetDepPath(const ParsedSentence& s, int u, int v) {
  s.CheckIndex(u);
  s.CheckIndex(v);
  if (u == v) throw std::invalid_argument("dependency path needs u != v");
  const int lca = Lca(s, u, v);

  DepPath path;
  for (int cur = u; cur != lca; cur = s.token(cur).head) {
    path.up_edges.push_back(ToLower(s.token(cur).dep));
    if (cur != u) path.intermediate_nodes.push_back(cur);
  }
  if (lca != u && lca != v) path.intermediate_nodes.push_back(lca);

  std::vector<int> down_nodes;
  for (int cur = v; cur != lca; cur = s.token(cur).head) {
    down_nodes.push_back(cur);
  }
  std::reverse(down_nodes.begin(), down_nodes.end());
  for (int node : down_nodes) {
    path.down_edges.push_back(ToLower(s.token(node).dep));
    if (node != v) path.intermediate_nodes.push_back(node);
  }
  return path;
}

std::string SerializePath(const DepPath& path) {
  std::string out = "u";
  if (!path.up_edges.empty()) {
    for (const auto& label : path.up_edges) out += "<" + ToLower(label);
    out += "<";
  }
  if (!path.up_edges.empty() && !path.down_edges.empty()) out += "LCA";
  if (!path.down_edges.empty()) {
    for (const auto& label : path.down_edges) out += ">" + ToLower(label);
    out += ">";
  }
  out += "v";
  return out;
}

namespace {

std::vector<std::string> SplitLabels(std::string_view body, char sep,
                                     std::string_view whole) {
  std::vector<std::string> labels;
  size_t start = 0;
  while (start <= body.size()) {
    size_t end = body.find(sep, start);
    if (end == std::string_view::npos) end = body.size();
    std::string_view label = body.substr(start, end - start);
    if (label.empty() || label.find_first_of("<> ") != std::string_view::npos) {
      throw std::invalid_argument("malformed dependency path: " +
                                  std::string(whole));
    }
    labels.emplace_back(label);
    start = end + 1;
  }
  return labels;
}

}  // namespace

DepPath ParsePath(std::string_view serialized) {
  const std::string_view whole = serialized;
  auto bad = [&] {
    return std::invalid_argument("malformed dependency path: " +
                                 std::string(whole));
  };
  if (serialized.size() < 2 || serialized.front() != 'u' ||
      serialized.back() != 'v') {
    throw bad();
  }
  std::string_view body = serialized.substr(1, serialized.size() - 2);
  DepPath path;
  if (body.empty()) throw bad();

  std::string_view up, down;
  if (body.front() == '<') {
    size_t close = body.rfind('<');
    if (close == 0) throw bad();
    up = body.substr(1, close - 1);
    body = body.substr(close + 1);
    if (!body.empty()) {
      if (body.substr(0, 3) != "LCA") throw bad();
      body = body.substr(3);
      if (body.empty()) throw bad();
    }
  }
  if (!body.empty()) {
    if (body.front() != '>' || body.back() != '>' || body.size() < 3) {
      throw bad();
    }
    down = body.substr(1, body.size() - 2);
  }
  if (up.empty() && down.empty()) throw bad();
  if (!up.empty()) path.up_edges = SplitLabels(up, '<', whole);
  if (!down.empty()) path.down_edges = SplitLabels(down, '>', whole);
  return path;
}

}  // namespace cetrip
