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


#include <gtest/gtest.h>

#include "generators.h"
#include "oracles.h"
#include "tanl/grammar.h"

namespace anl {
namespace {

using Kind = ParseIssue::Kind;

size_t count_groups(const std::vector<Node> &nodes) {
  size_t n = 0;
  for (const Node &node : nodes) {
    if (const auto *g = std::get_if<Group>(&node.value)) n += 1 + count_groups(g->content);
  }
  return n;
}

bool has_issue(const ParseResult &r, Kind kind) {
  for (const ParseIssue &i : r.issues) {
    if (i.kind == kind) return true;
  }
  return false;
}

Node plain(std::string text) { return Node{PlainText{std::move(text)}}; }

TEST(SpecialTokenTest, Recognition) {
  EXPECT_EQ(special_token("["), SpecialToken::kGroupOpen);
  EXPECT_EQ(special_token("="), SpecialToken::kRel);
  EXPECT_EQ(special_token(":"), SpecialToken::kTaskSep);
  EXPECT_FALSE(special_token("[abc]"));
  EXPECT_TRUE(is_structural_token("|"));
  EXPECT_FALSE(is_structural_token(":"));
}

TEST(ParseTest, PlainTextOnly) {
  const ParseResult r = parse("no brackets at all");
  ASSERT_EQ(r.tree.nodes.size(), 1u);
  EXPECT_EQ(r.tree.nodes[0], plain("no brackets at all"));
  EXPECT_TRUE(r.issues.empty());
}

TEST(ParseTest, NestedGroupWithRelation) {
  const ParseResult r = parse(
      "[ Tolkien | person ] 's epic novel [ The Lord of the Rings | book | "
      "author = Tolkien ] was published");
  EXPECT_TRUE(r.issues.empty());
  ASSERT_EQ(r.tree.nodes.size(), 4u);
  const auto &g = std::get<Group>(r.tree.nodes[2].value);
  EXPECT_EQ(g.content, std::vector<Node>{plain("The Lord of the Rings")});
  ASSERT_EQ(g.segments.size(), 2u);
  EXPECT_EQ(g.segments[0], Segment{Tag{"book"}});
  EXPECT_EQ(g.segments[1], (Segment{RelClause{"author", "Tolkien"}}));
}

TEST(ParseTest, NestedGroups) {
  const ParseResult r = parse("signs of [ [ lithium | drug ] toxicity | disease ] .");
  EXPECT_TRUE(r.issues.empty());
  EXPECT_EQ(count_groups(r.tree.nodes), 2u);
}

TEST(ParseTest, UnclosedGroupIsDemoted) {
  const ParseResult r = parse("[ [ lithium | drug toxicity | disease ] .");
  EXPECT_TRUE(has_issue(r, Kind::kUnclosedGroup));
  EXPECT_EQ(count_groups(r.tree.nodes), 1u);
  EXPECT_EQ(std::get<PlainText>(r.tree.nodes[0].value).text, "[");
}

TEST(ParseTest, StrayClose) {
  const ParseResult r = parse("a ] b");
  EXPECT_TRUE(has_issue(r, Kind::kStrayClose));
  EXPECT_EQ(r.tree.nodes, std::vector<Node>{plain("a ] b")});
}

TEST(ParseTest, EmptyGroup) {
  EXPECT_TRUE(has_issue(parse("x [ | person ] y"), Kind::kEmptyGroup));
  EXPECT_TRUE(has_issue(parse("[ ]"), Kind::kEmptyGroup));
}

TEST(ParseTest, MalformedRelClauseKeepsGroup) {
  const ParseResult r = parse("[ a | t | r = ] b");
  EXPECT_TRUE(has_issue(r, Kind::kMalformedRelClause));
  EXPECT_EQ(count_groups(r.tree.nodes), 1u);
  EXPECT_TRUE(has_issue(parse("[ a | = b ]"), Kind::kMalformedRelClause));
  EXPECT_TRUE(has_issue(parse("[ a | r = b = c ]"), Kind::kMalformedRelClause));
}

TEST(ParseTest, EmptySegment) {
  const ParseResult r = parse("[ a | | t ]");
  EXPECT_TRUE(has_issue(r, Kind::kEmptySegment));
  EXPECT_EQ(count_groups(r.tree.nodes), 1u);
}

TEST(ParseTest, GluedBracketsArePlainWords) {
  const ParseResult r = parse("x=y [abc] a|b");
  EXPECT_TRUE(r.issues.empty());
  EXPECT_EQ(r.tree.nodes, std::vector<Node>{plain("x=y [abc] a|b")});
}

TEST(ParseTest, CloseGluedToFollowingPunctuation) {
  const ParseResult r = parse("[ lithium | drug ].");
  EXPECT_EQ(count_groups(r.tree.nodes), 1u);
  EXPECT_EQ(r.tree.nodes.back(), plain("."));
}

TEST(ParseTest, SeparatorOutsideGroupIsPlain) {
  const ParseResult r = parse("a | b");
  EXPECT_EQ(r.tree.nodes, std::vector<Node>{plain("a | b")});
}

TEST(ParseTest, IssueByteRanges) {
  const std::string text = "ok ] no";
  const ParseResult r = parse(text);
  ASSERT_EQ(r.issues.size(), 1u);
  EXPECT_EQ(text.substr(r.issues[0].begin, r.issues[0].end - r.issues[0].begin), "]");
}

TEST(ParseRecoveryTest, MatchesExhaustiveOracleOnExample) {
  const std::string text =
      "Six days after starting acyclovir she exhibited signs of [ [ lithium | drug "
      "toxicity | disease ] .";
  EXPECT_EQ(count_groups(parse(text).tree.nodes), testing::max_recoverable_groups(text));
}

TEST(ParseRecoveryTest, MatchesExhaustiveOracleOnRandomStrings) {
  testing::Rng rng(7);
  const char *alphabet[] = {"[", "]", "|", "a", "b", "="};
  for (int trial = 0; trial < 20000; ++trial) {
    const size_t n = testing::uniform(rng, 0, 10);
    std::string text;
    for (size_t i = 0; i < n; ++i) {
      if (i) text += ' ';
      text += alphabet[testing::uniform(rng, 0, 5)];
    }
    ASSERT_EQ(count_groups(parse(text).tree.nodes), testing::max_recoverable_groups(text))
        << text;
  }
}

TEST(SerializeTest, EmptyTree) { EXPECT_EQ(serialize(AnnotatedTree{}), ""); }

TEST(SerializeTest, SingleSpaces) {
  AnnotatedTree tree;
  tree.nodes = {plain("signs of"),
                Node{Group{{plain("lithium")}, {Tag{"drug"}, RelClause{"r", "x y"}}}},
                plain(".")};
  EXPECT_EQ(serialize(tree), "signs of [ lithium | drug | r = x y ] .");
}

TEST(SerializeTest, RejectsUnwritableTrees) {
  AnnotatedTree empty_group;
  empty_group.nodes = {Node{Group{{}, {Tag{"t"}}}}};
  EXPECT_THROW(serialize(empty_group), GrammarError);
  AnnotatedTree bracket_text;
  bracket_text.nodes = {plain("a ] b")};
  EXPECT_THROW(serialize(bracket_text), GrammarError);
  AnnotatedTree empty_tag;
  empty_tag.nodes = {Node{Group{{plain("a")}, {Tag{""}}}}};
  EXPECT_THROW(serialize(empty_tag), GrammarError);
}

TEST(StripTest, NoGroups) {
  const StripResult s = strip(parse("just words here").tree);
  EXPECT_EQ(s.cleaned.texts(), (std::vector<std::string>{"just", "words", "here"}));
  EXPECT_TRUE(s.groups.empty());
}

TEST(StripTest, GroupSpansAndParents) {
  const StripResult s = strip(parse("signs of [ [ lithium | drug ] toxicity | disease ] .").tree);
  EXPECT_EQ(s.cleaned.texts(),
            (std::vector<std::string>{"signs", "of", "lithium", "toxicity", "."}));
  ASSERT_EQ(s.groups.size(), 2u);
  EXPECT_EQ(s.groups[0].span, (Span{2, 4}));
  EXPECT_FALSE(s.groups[0].parent);
  EXPECT_EQ(s.groups[1].span, (Span{2, 3}));
  EXPECT_EQ(s.groups[1].parent, 0u);
}

TEST(GrammarPropertyTest, ParseInvertsSerialize) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 10000; ++trial) {
    const AnnotatedTree tree = testing::random_tree(rng, 3, 8);
    const std::string text = serialize(tree);
    const ParseResult r = parse(text);
    ASSERT_TRUE(r.issues.empty()) << text;
    ASSERT_EQ(r.tree, tree) << text;
  }
}

TEST(GrammarPropertyTest, ParseIsTotal) {
  testing::Rng rng(13);
  const char *alphabet[] = {"[", "]", "|", "=", ":", "a", "bc", "]x", "[y", "é"};
  for (int trial = 0; trial < 20000; ++trial) {
    const size_t n = testing::uniform(rng, 0, 30);
    std::string text;
    for (size_t i = 0; i < n; ++i) {
      text += testing::chance(rng, 0.2) ? "  " : " ";
      text += alphabet[testing::uniform(rng, 0, 9)];
    }
    ParseResult r;
    ASSERT_NO_THROW(r = parse(text)) << text;
    const StripResult s = strip(r.tree);
    for (const StrippedGroup &g : s.groups) {
      ASSERT_LE(g.span.end, s.cleaned.size());
      ASSERT_LT(g.span.start, g.span.end);
    }
    if (!r.issues.empty()) continue;
    std::string written;
    try {
      written = serialize(r.tree);
    } catch (const GrammarError &) {
      continue;  // "=" or "|" as plain text
    }
    ASSERT_EQ(parse(written).tree, r.tree) << text;
  }
}

}  // namespace
}  // namespace anl
