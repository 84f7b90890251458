// Copyright 2026 The TANL Codec Authors.
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


#include "tanl/grammar.h"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>

#include "unicode.h"

namespace anl {
namespace {

constexpr size_t kMaxDepth = 1000;

// Above this many brackets and separators, recovery stays greedy.
constexpr size_t kExactRecoveryLimit = 400;

enum class WordKind { kPlain, kOpen, kClose, kSep };

struct Word {
  std::string_view text;
  size_t begin;
  size_t end;
  WordKind kind;
};

// Whitespace-delimited words. A close bracket glued to the front of a word
// ("]." or "]'s") is split off.
std::vector<Word> lex(std::string_view text) {
  std::vector<Word> out;
  for (std::string_view w : unicode::split_whitespace(text)) {
    size_t begin = static_cast<size_t>(w.data() - text.data());
    while (w.size() > 1 && w.front() == ']') {
      out.push_back({w.substr(0, 1), begin, begin + 1, WordKind::kClose});
      w.remove_prefix(1);
      ++begin;
    }
    WordKind kind = WordKind::kPlain;
    if (w == kGroupOpen) {
      kind = WordKind::kOpen;
    } else if (w == kGroupClose) {
      kind = WordKind::kClose;
    } else if (w == kSep) {
      kind = WordKind::kSep;
    }
    out.push_back({w, begin, begin + w.size(), kind});
  }
  return out;
}

// Appends a word to the trailing PlainText node, creating one if needed.
void append_plain(std::vector<Node> *nodes, std::string_view word) {
  if (!nodes->empty()) {
    if (auto *p = std::get_if<PlainText>(&nodes->back().value)) {
      p->text += ' ';
      p->text += word;
      return;
    }
  }
  nodes->push_back(Node{PlainText{std::string(word)}});
}

std::string join_words(const std::vector<Word> &words, size_t b, size_t e) {
  std::string out;
  for (size_t i = b; i < e; ++i) {
    if (i > b) out += ' ';
    out += words[i].text;
  }
  return out;
}

struct GroupResult {
  bool ok = false;
  size_t next = 0;  // index after the closing bracket
  Group group;
  std::vector<ParseIssue> issues;
  // Set on failure when the group was closed with no content.
  std::optional<ParseIssue> empty;
};

class Parser {
 public:
  explicit Parser(std::vector<Word> words)
      : words_(std::move(words)), memo_(words_.size()) {}

  ParseResult run() {
    ParseResult result;
    size_t i = 0;
    while (i < words_.size()) {
      const Word &w = words_[i];
      if (w.kind == WordKind::kOpen) {
        const GroupResult &g = group(i, 1);
        if (g.ok) {
          result.tree.nodes.push_back(Node{g.group});
          result.issues.insert(result.issues.end(), g.issues.begin(),
                               g.issues.end());
          i = g.next;
          continue;
        }
        result.issues.push_back(failure_issue(g, i));
      } else if (w.kind == WordKind::kClose) {
        result.issues.push_back(
            {ParseIssue::Kind::kStrayClose, w.begin, w.end});
      }
      append_plain(&result.tree.nodes, w.text);
      ++i;
    }
    return result;
  }

 private:
  ParseIssue failure_issue(const GroupResult &g, size_t open) const {
    if (g.empty) return *g.empty;
    return {ParseIssue::Kind::kUnclosedGroup, words_[open].begin,
            words_[open].end};
  }

  const GroupResult &group(size_t open, size_t depth) {
    if (!memo_[open]) {
      memo_[open] = std::make_unique<GroupResult>(compute(open, depth));
    }
    return *memo_[open];
  }

  GroupResult compute(size_t open, size_t depth) {
    GroupResult r;
    size_t i = open + 1;
    // Content.
    while (true) {
      if (i >= words_.size()) return r;
      const Word &w = words_[i];
      if (w.kind == WordKind::kOpen && depth < kMaxDepth) {
        const GroupResult &sub = group(i, depth + 1);
        if (sub.ok) {
          r.group.content.push_back(Node{sub.group});
          r.issues.insert(r.issues.end(), sub.issues.begin(), sub.issues.end());
          i = sub.next;
          continue;
        }
        r.issues.push_back(failure_issue(sub, i));
        append_plain(&r.group.content, w.text);
        ++i;
        continue;
      }
      if (w.kind == WordKind::kOpen) {
        r.issues.push_back({ParseIssue::Kind::kUnclosedGroup, w.begin, w.end});
        append_plain(&r.group.content, w.text);
        ++i;
        continue;
      }
      if (w.kind == WordKind::kClose) {
        if (r.group.content.empty()) {
          r.empty = ParseIssue{ParseIssue::Kind::kEmptyGroup, words_[open].begin,
                               w.end};
          return r;
        }
        r.ok = true;
        r.next = i + 1;
        return r;
      }
      if (w.kind == WordKind::kSep) {
        if (r.group.content.empty()) {
          r.empty = ParseIssue{ParseIssue::Kind::kEmptyGroup,
                               words_[open].begin, w.end};
          return r;
        }
        break;
      }
      append_plain(&r.group.content, w.text);
      ++i;
    }
    // Segments: i points at the first "|".
    size_t seg_begin = i + 1;
    for (size_t j = i + 1;; ++j) {
      if (j >= words_.size()) return r;
      const Word &w = words_[j];
      if (w.kind == WordKind::kSep || w.kind == WordKind::kClose) {
        add_segment(seg_begin, j, &r);
        seg_begin = j + 1;
        if (w.kind == WordKind::kClose) {
          r.ok = true;
          r.next = j + 1;
          return r;
        }
      } else if (w.kind == WordKind::kOpen) {
        r.issues.push_back({ParseIssue::Kind::kUnclosedGroup, w.begin, w.end});
      }
    }
  }

  void add_segment(size_t b, size_t e, GroupResult *r) const {
    if (b == e) {
      const size_t at = words_[b - 1].end;
      r->issues.push_back({ParseIssue::Kind::kEmptySegment, at, at});
      return;
    }
    const size_t byte_begin = words_[b].begin;
    const size_t byte_end = words_[e - 1].end;
    size_t eq = e;
    size_t eq_count = 0;
    for (size_t k = b; k < e; ++k) {
      if (words_[k].text == kRel) {
        if (eq_count++ == 0) eq = k;
      }
    }
    if (eq_count == 0) {
      r->group.segments.push_back(Tag{join_words(words_, b, e)});
      return;
    }
    if (eq_count > 1 || eq == b || eq + 1 == e) {
      r->issues.push_back(
          {ParseIssue::Kind::kMalformedRelClause, byte_begin, byte_end});
      return;
    }
    r->group.segments.push_back(
        RelClause{join_words(words_, b, eq), join_words(words_, eq + 1, e)});
  }

  std::vector<Word> words_;
  std::vector<std::unique_ptr<GroupResult>> memo_;
};

bool is_bracket_issue(const ParseIssue &issue) {
  return issue.kind == ParseIssue::Kind::kUnclosedGroup ||
         issue.kind == ParseIssue::Kind::kStrayClose ||
         issue.kind == ParseIssue::Kind::kEmptyGroup;
}

// Chooses which brackets to keep so that the number of well-formed groups is
// maximal. Interval dynamic program over the significant words ("[", "]",
// "|"); plain words never change a count.
class Recovery {
 public:
  explicit Recovery(const std::vector<Word> &words) : words_(words) {
    const size_t n = words_.size();
    next_.assign(n + 1, n);
    for (size_t i = n; i-- > 0;) {
      next_[i] = words_[i].kind == WordKind::kPlain ? next_[i + 1] : i;
    }
    for (size_t i = 0; i < n; ++i) {
      if (words_[i].kind != WordKind::kPlain) {
        rank_[i] = sig_.size();
        sig_.push_back(i);
      }
    }
  }

  size_t significant() const { return sig_.size(); }

  // For every bracket word, whether it is kept.
  std::vector<bool> solve() {
    const size_t m = sig_.size();
    seq_.assign(m * (m + 1), kUnset);
    grp_.assign(m * m, kUnset);
    top_.assign(m + 1, kUnset);
    keep_.assign(words_.size(), false);
    mark_top(0);
    return keep_;
  }

 private:
  static constexpr int kInvalid = -1;
  static constexpr int kUnset = -2;

  // Items of a group's content in [a, e): no "|" at this level.
  int seq(size_t a, size_t e) {
    const size_t p = next_[a];
    if (p >= e) return 0;
    int &memo = seq_[rank_.at(p) * (sig_.size() + 1) + end_rank(e)];
    if (memo != kUnset) return memo;
    int best = kInvalid;
    switch (words_[p].kind) {
      case WordKind::kSep:
        break;
      case WordKind::kClose:
      case WordKind::kPlain:
        best = seq(p + 1, e);
        break;
      case WordKind::kOpen: {
        best = seq(p + 1, e);
        for (size_t c = p + 1; c < e; ++c) {
          if (words_[c].kind != WordKind::kClose) continue;
          const int g = grp(p, c);
          const int rest = g == kInvalid ? kInvalid : seq(c + 1, e);
          if (rest != kInvalid) best = std::max(best, g + rest);
        }
        break;
      }
    }
    return memo = best;
  }

  // A group opened at p and closed at c.
  int grp(size_t p, size_t c) {
    int &memo = grp_[rank_.at(p) * sig_.size() + rank_.at(c)];
    if (memo != kUnset) return memo;
    int best = kInvalid;
    if (p + 1 < c) {
      best = seq(p + 1, c);
      for (size_t s = p + 2; s < c; ++s) {
        if (words_[s].kind == WordKind::kSep) best = std::max(best, seq(p + 1, s));
      }
    }
    return memo = best == kInvalid ? kInvalid : best + 1;
  }

  int top(size_t a) {
    const size_t p = next_[a];
    if (p >= words_.size()) return 0;
    int &memo = top_[rank_.at(p)];
    if (memo != kUnset) return memo;
    int best = top(p + 1);
    if (words_[p].kind == WordKind::kOpen) {
      for (size_t c = p + 1; c < words_.size(); ++c) {
        if (words_[c].kind != WordKind::kClose) continue;
        const int g = grp(p, c);
        if (g != kInvalid) best = std::max(best, g + top(c + 1));
      }
    }
    return memo = best;
  }

  // Nullopt when demoting p reaches `target` groups, else the earliest close.
  std::optional<size_t> pick_close(size_t p, size_t limit, int target,
                                   const std::function<int(size_t)> &rest) {
    if (rest(p + 1) == target) return std::nullopt;
    for (size_t c = p + 1; c < limit; ++c) {
      if (words_[c].kind != WordKind::kClose) continue;
      const int g = grp(p, c);
      if (g == kInvalid) continue;
      const int r = rest(c + 1);
      if (r != kInvalid && g + r == target) return c;
    }
    return std::nullopt;
  }

  void mark_top(size_t a) {
    while (true) {
      const size_t p = next_[a];
      if (p >= words_.size()) return;
      if (words_[p].kind == WordKind::kOpen) {
        const auto c = pick_close(p, words_.size(), top(p),
                                  [this](size_t x) { return top(x); });
        if (c) {
          mark_group(p, *c);
          a = *c + 1;
          continue;
        }
      }
      a = p + 1;
    }
  }

  void mark_seq(size_t a, size_t e) {
    while (true) {
      const size_t p = next_[a];
      if (p >= e) return;
      if (words_[p].kind == WordKind::kOpen) {
        const auto c = pick_close(p, e, seq(p, e),
                                  [this, e](size_t x) { return seq(x, e); });
        if (c) {
          mark_group(p, *c);
          a = *c + 1;
          continue;
        }
      }
      a = p + 1;
    }
  }

  void mark_group(size_t p, size_t c) {
    keep_[p] = keep_[c] = true;
    const int target = grp(p, c) - 1;
    if (seq(p + 1, c) == target) {
      mark_seq(p + 1, c);
      return;
    }
    for (size_t s = p + 2; s < c; ++s) {
      if (words_[s].kind == WordKind::kSep && seq(p + 1, s) == target) {
        mark_seq(p + 1, s);
        return;
      }
    }
  }

  size_t end_rank(size_t e) const {
    return e >= words_.size() ? sig_.size() : rank_.at(e);
  }

  const std::vector<Word> &words_;
  std::vector<size_t> next_;
  std::vector<size_t> sig_;
  std::map<size_t, size_t> rank_;
  std::vector<int> seq_;
  std::vector<int> grp_;
  std::vector<int> top_;
  std::vector<bool> keep_;
};

ParseResult parse_words(std::vector<Word> words) {
  ParseResult greedy = Parser(words).run();
  if (std::none_of(greedy.issues.begin(), greedy.issues.end(), is_bracket_issue)) {
    return greedy;
  }
  Recovery recovery(words);
  if (recovery.significant() > kExactRecoveryLimit) return greedy;
  const std::vector<bool> keep = recovery.solve();
  std::vector<ParseIssue> demoted;
  for (size_t i = 0; i < words.size(); ++i) {
    Word &w = words[i];
    if (keep[i] || (w.kind != WordKind::kOpen && w.kind != WordKind::kClose)) {
      continue;
    }
    if (w.kind == WordKind::kClose) {
      demoted.push_back({ParseIssue::Kind::kStrayClose, w.begin, w.end});
    } else if (i + 1 < words.size() && (words[i + 1].kind == WordKind::kClose ||
                                        words[i + 1].kind == WordKind::kSep)) {
      demoted.push_back({ParseIssue::Kind::kEmptyGroup, w.begin, words[i + 1].end});
    } else {
      demoted.push_back({ParseIssue::Kind::kUnclosedGroup, w.begin, w.end});
    }
    w.kind = WordKind::kPlain;
  }
  ParseResult result = Parser(std::move(words)).run();
  result.issues.insert(result.issues.end(), demoted.begin(), demoted.end());
  std::stable_sort(result.issues.begin(), result.issues.end(),
                   [](const ParseIssue &a, const ParseIssue &b) { return a.begin < b.begin; });
  return result;
}

void check_words(std::string_view text, const char *what) {
  auto words = unicode::split_whitespace(text);
  if (words.empty()) throw GrammarError(std::string("empty ") + what);
  std::string normalized;
  for (std::string_view w : words) {
    if (is_structural_token(w) || (w.size() > 1 && w.front() == ']')) {
      throw GrammarError(std::string(what) + " contains special token in '" +
                         std::string(text) + "'");
    }
    if (!normalized.empty()) normalized += ' ';
    normalized += w;
  }
  if (normalized != text) {
    throw GrammarError(std::string(what) + " is not single-spaced: '" +
                       std::string(text) + "'");
  }
}

void serialize_nodes(const std::vector<Node> &nodes, std::string *out);

void emit(std::string_view word, std::string *out) {
  if (!out->empty()) *out += ' ';
  *out += word;
}

void serialize_group(const Group &g, std::string *out) {
  if (g.content.empty()) throw GrammarError("group with empty content");
  emit(kGroupOpen, out);
  serialize_nodes(g.content, out);
  for (const Segment &s : g.segments) {
    emit(kSep, out);
    if (const Tag *t = std::get_if<Tag>(&s)) {
      check_words(t->text, "tag");
      emit(t->text, out);
    } else {
      const RelClause &rc = std::get<RelClause>(s);
      check_words(rc.label, "relation label");
      check_words(rc.target, "relation target");
      emit(rc.label, out);
      emit(kRel, out);
      emit(rc.target, out);
    }
  }
  emit(kGroupClose, out);
}

void serialize_nodes(const std::vector<Node> &nodes, std::string *out) {
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (const PlainText *p = std::get_if<PlainText>(&nodes[i].value)) {
      if (i > 0 && std::holds_alternative<PlainText>(nodes[i - 1].value)) {
        throw GrammarError("adjacent plain text nodes");
      }
      check_words(p->text, "plain text");
      emit(p->text, out);
    } else {
      serialize_group(std::get<Group>(nodes[i].value), out);
    }
  }
}

void strip_nodes(const std::vector<Node> &nodes, std::optional<size_t> parent,
                 std::vector<std::string> *tokens,
                 std::vector<StrippedGroup> *groups) {
  for (const Node &n : nodes) {
    if (const PlainText *p = std::get_if<PlainText>(&n.value)) {
      for (std::string_view w : unicode::split_whitespace(p->text)) {
        tokens->emplace_back(w);
      }
      continue;
    }
    const Group &g = std::get<Group>(n.value);
    const size_t index = groups->size();
    groups->push_back({Span{tokens->size(), tokens->size()}, g.segments, parent});
    strip_nodes(g.content, index, tokens, groups);
    (*groups)[index].span.end = tokens->size();
  }
}

}  // namespace

std::optional<SpecialToken> special_token(std::string_view word) {
  if (word == kGroupOpen) return SpecialToken::kGroupOpen;
  if (word == kGroupClose) return SpecialToken::kGroupClose;
  if (word == kSep) return SpecialToken::kSep;
  if (word == kRel) return SpecialToken::kRel;
  if (word == kTaskSep) return SpecialToken::kTaskSep;
  return std::nullopt;
}

bool is_structural_token(std::string_view word) {
  auto s = special_token(word);
  return s && *s != SpecialToken::kTaskSep;
}

std::string_view issue_name(ParseIssue::Kind kind) {
  switch (kind) {
    case ParseIssue::Kind::kUnclosedGroup:
      return "UNCLOSED_GROUP";
    case ParseIssue::Kind::kStrayClose:
      return "STRAY_CLOSE";
    case ParseIssue::Kind::kEmptyGroup:
      return "EMPTY_GROUP";
    case ParseIssue::Kind::kMalformedRelClause:
      return "MALFORMED_REL_CLAUSE";
    case ParseIssue::Kind::kEmptySegment:
      return "EMPTY_SEGMENT";
  }
  return "UNKNOWN";
}

ParseResult parse(std::string_view text) { return parse_words(lex(text)); }

std::string serialize(const AnnotatedTree &tree) {
  std::string out;
  serialize_nodes(tree.nodes, &out);
  return out;
}

StripResult strip(const AnnotatedTree &tree) {
  std::vector<std::string> tokens;
  StripResult result;
  strip_nodes(tree.nodes, std::nullopt, &tokens, &result.groups);
  result.cleaned = TokenSeq::FromTokens(tokens);
  return result;
}

}  // namespace anl
