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

#include <algorithm>

#include "generators.h"
#include "oracles.h"
#include "tanl/coref.h"

namespace anl {
namespace {

MentionGroup group(std::initializer_list<Span> spans) {
  MentionGroup g;
  for (const Span &s : spans) g.push_back({s});
  return g;
}

TokenSeq words(size_t n) {
  std::vector<std::string> t;
  for (size_t i = 0; i < n; ++i) t.push_back("w" + std::to_string(i));
  return TokenSeq::FromTokens(t);
}

TEST(ResolveCorefTest, SingleUntaggedMention) {
  const CorefResolution r = resolve_coref_groups({{{0, 1}, std::nullopt, "w0"}}, words(3));
  ASSERT_EQ(r.groups.size(), 1u);
  EXPECT_EQ(r.groups[0], group({{0, 1}}));
  EXPECT_EQ(r.unresolved, 0u);
}

TEST(ResolveCorefTest, NearestEarlierMention) {
  const TokenSeq doc = tokenize("he met him and he left", Granularity::kWhitespace);
  const std::vector<TaggedMention> m = {{{0, 1}, std::nullopt, "he"},
                                        {{2, 3}, std::nullopt, "him"},
                                        {{4, 5}, "he", "he"}};
  const CorefResolution r = resolve_coref_groups(m, doc);
  EXPECT_EQ(r.groups, (std::vector<MentionGroup>{group({{0, 1}, {4, 5}}), group({{2, 3}})}));

  const TokenSeq doc2 = tokenize("he said he left he", Granularity::kWhitespace);
  const std::vector<TaggedMention> m2 = {{{0, 1}, std::nullopt, "he"},
                                         {{2, 3}, std::nullopt, "he"},
                                         {{4, 5}, "he", "he"}};
  const CorefResolution r2 = resolve_coref_groups(m2, doc2);
  EXPECT_EQ(r2.groups, (std::vector<MentionGroup>{group({{0, 1}}), group({{2, 3}, {4, 5}})}));
}

TEST(ResolveCorefTest, NearestMatchesBruteForce) {
  testing::Rng rng(29);
  const std::vector<std::string> vocab = {"a", "b", "c"};
  for (int trial = 0; trial < 500; ++trial) {
    const size_t n = testing::uniform(rng, 1, 10);
    std::vector<std::string> t(n);
    for (auto &w : t) w = vocab[testing::uniform(rng, 0, 2)];
    const TokenSeq doc = TokenSeq::FromTokens(t);
    std::vector<TaggedMention> mentions;
    for (size_t i = 0; i < n; ++i) {
      std::optional<std::string> tag;
      if (i > 0 && testing::chance(rng, 0.6)) tag = vocab[testing::uniform(rng, 0, 2)];
      mentions.push_back({{i, i + 1}, tag, t[i]});
    }
    // Oracle: scan every earlier mention and keep the last match.
    std::vector<MentionGroup> links;
    size_t unresolved = 0;
    for (size_t i = 0; i < n; ++i) {
      links.push_back(group({{i, i + 1}}));
      if (!mentions[i].antecedent) continue;
      std::optional<size_t> best;
      for (size_t j = 0; j < i; ++j) {
        if (t[j] == *mentions[i].antecedent) best = j;
      }
      if (best) {
        links.push_back(group({{*best, *best + 1}, {i, i + 1}}));
      } else {
        ++unresolved;
      }
    }
    const CorefResolution r = resolve_coref_groups(mentions, doc);
    ASSERT_EQ(r.groups, testing::naive_merge(links));
    ASSERT_EQ(r.unresolved, unresolved);
  }
}

TEST(ChunkingTest, Config) {
  EXPECT_NO_THROW((ChunkingConfig{6, 2}.check()));
  EXPECT_THROW((ChunkingConfig{6, 0}.check()), std::invalid_argument);
  EXPECT_THROW((ChunkingConfig{6, 6}.check()), std::invalid_argument);
}

TEST(ChunkingTest, HandExample) {
  const auto chunks = chunk_document(words(10), {6, 2});
  ASSERT_EQ(chunks.size(), 2u);
  EXPECT_EQ(chunks[0].span(), (Span{0, 6}));
  EXPECT_EQ(chunks[1].span(), (Span{4, 10}));
  EXPECT_EQ(chunks[1].tokens[0].text, "w4");
}

TEST(ChunkingTest, ShortDocumentIsOneChunk) {
  const auto chunks = chunk_document(words(5), {6, 2});
  ASSERT_EQ(chunks.size(), 1u);
  EXPECT_EQ(chunks[0].span(), (Span{0, 5}));
}

TEST(ChunkingTest, CoverageReproducesDocument) {
  for (size_t n : {0u, 1u, 7u, 50u, 101u}) {
    for (const ChunkingConfig cfg : {ChunkingConfig{6, 2}, ChunkingConfig{10, 9},
                                     ChunkingConfig{4, 1}}) {
      const TokenSeq doc = words(n);
      std::vector<std::string> rebuilt;
      size_t covered = 0;
      for (const Chunk &c : chunk_document(doc, cfg)) {
        ASSERT_LE(c.offset, covered);
        for (size_t i = covered - c.offset; i < c.tokens.size(); ++i) {
          rebuilt.push_back(c.tokens[i].text);
        }
        covered = c.span().end;
      }
      EXPECT_EQ(rebuilt, doc.texts());
    }
  }
}

TEST(SliceTest, DropsMentionsOutsideChunk) {
  StructuredExample doc;
  doc.task = TaskKind::kCoreference;
  doc.tokens = words(10);
  doc.mention_groups = {group({{1, 2}, {5, 7}}), group({{3, 5}, {8, 9}})};
  const Chunk chunk{4, TokenSeq::FromTokens({"w4", "w5", "w6", "w7", "w8", "w9"})};
  const StructuredExample s = slice_coref_example(doc, chunk);
  EXPECT_EQ(s.tokens, chunk.tokens);
  EXPECT_EQ(s.mention_groups,
            (std::vector<MentionGroup>{group({{1, 3}}), group({{4, 5}})}));
  EXPECT_EQ(shift_groups(s.mention_groups, 4),
            (std::vector<MentionGroup>{group({{5, 7}}), group({{8, 9}})}));
}

TEST(MergeTest, SharedMentionMerges) {
  EXPECT_EQ(merge_chunk_groups({group({{1, 2}, {5, 7}}), group({{5, 7}, {9, 10}})}),
            (std::vector<MentionGroup>{group({{1, 2}, {5, 7}, {9, 10}})}));
}

TEST(MergeTest, DisjointGroupsUnchanged) {
  const std::vector<MentionGroup> g = {group({{0, 1}, {3, 4}}), group({{5, 6}})};
  EXPECT_EQ(merge_chunk_groups(g), g);
}

TEST(MergeTest, TransitiveChain) {
  const std::vector<MentionGroup> g = {group({{0, 1}, {2, 3}}), group({{4, 5}, {6, 7}}),
                                       group({{2, 3}, {4, 5}})};
  EXPECT_EQ(merge_chunk_groups(g), testing::naive_merge(g));
  EXPECT_EQ(merge_chunk_groups(g).size(), 1u);
}

TEST(MergeTest, MatchesClosureOracleAndIsPermutationInvariant) {
  testing::Rng rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<MentionGroup> g(testing::uniform(rng, 0, 8));
    for (auto &grp : g) {
      const size_t k = testing::uniform(rng, 1, 3);
      for (size_t i = 0; i < k; ++i) {
        const size_t s = testing::uniform(rng, 0, 12);
        grp.push_back({{s, s + 1}});
      }
    }
    const auto merged = merge_chunk_groups(g);
    ASSERT_EQ(merged, testing::naive_merge(g));
    std::shuffle(g.begin(), g.end(), rng);
    for (auto &grp : g) std::shuffle(grp.begin(), grp.end(), rng);
    ASSERT_EQ(merge_chunk_groups(g), merged);
  }
}

}  // namespace
}  // namespace anl
