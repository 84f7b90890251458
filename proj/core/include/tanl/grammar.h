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

// Surface syntax of augmented natural language:
//
//   text   := (word | group)*
//   group  := "[" (word | group)+ ("|" segment)* "]"
//   segment:= word+                         -- a tag
//           | word+ "=" word+               -- a relation clause
//
// Special tokens are recognized only when they stand alone between
// whitespace; "[abc]" is a plain word. The parser is total: malformed
// brackets are demoted to plain words and reported.

#ifndef TANL_GRAMMAR_H_
#define TANL_GRAMMAR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tanl/token_seq.h"
#include "tanl/types.h"

namespace anl {

enum class SpecialToken { kGroupOpen, kGroupClose, kSep, kRel, kTaskSep };

inline constexpr std::string_view kGroupOpen = "[";
inline constexpr std::string_view kGroupClose = "]";
inline constexpr std::string_view kSep = "|";
inline constexpr std::string_view kRel = "=";
inline constexpr std::string_view kTaskSep = ":";

std::optional<SpecialToken> special_token(std::string_view word);

// True for "[", "]", "|" and "=": the tokens that may not appear as plain
// words inside encodable text. The task separator ":" is only special as a
// dataset prefix.
bool is_structural_token(std::string_view word);

// Thrown by serialize() for trees that cannot be written unambiguously.
class GrammarError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Tag {
  std::string text;
  bool operator==(const Tag &) const = default;
};

struct RelClause {
  std::string label;
  std::string target;
  bool operator==(const RelClause &) const = default;
};

using Segment = std::variant<Tag, RelClause>;

struct PlainText {
  std::string text;
  bool operator==(const PlainText &) const = default;
};

struct Node;

struct Group {
  std::vector<Node> content;
  std::vector<Segment> segments;

  bool operator==(const Group &other) const;
};

struct Node {
  std::variant<PlainText, Group> value;

  bool operator==(const Node &other) const { return value == other.value; }
};

inline bool Group::operator==(const Group &other) const {
  return content == other.content && segments == other.segments;
}

struct AnnotatedTree {
  std::vector<Node> nodes;
  bool operator==(const AnnotatedTree &) const = default;
};

struct ParseIssue {
  enum class Kind {
    kUnclosedGroup,
    kStrayClose,
    kEmptyGroup,
    kMalformedRelClause,
    kEmptySegment,
  };
  Kind kind;
  size_t begin = 0;  // byte range in the parsed string
  size_t end = 0;

  bool operator==(const ParseIssue &) const = default;
};

std::string_view issue_name(ParseIssue::Kind kind);

struct ParseResult {
  AnnotatedTree tree;
  std::vector<ParseIssue> issues;
};

// Never throws. Well-formed groups always become Group nodes; everything
// else degrades to PlainText and is reported.
ParseResult parse(std::string_view text);

// Writes the tree with exactly one space between tokens. Throws GrammarError
// on empty groups, empty segments, or text containing structural tokens.
std::string serialize(const AnnotatedTree &tree);

// A group located in the cleaned token sequence produced by strip().
struct StrippedGroup {
  Span span;  // cleaned-token coordinates
  std::vector<Segment> segments;
  std::optional<size_t> parent;  // index of the enclosing group
};

struct StripResult {
  TokenSeq cleaned;
  std::vector<StrippedGroup> groups;  // pre-order (opening bracket order)
};

// Removes all annotation, keeping the plain text of the sentence and the
// position of every group within it.
StripResult strip(const AnnotatedTree &tree);

}  // namespace anl

#endif  // TANL_GRAMMAR_H_
