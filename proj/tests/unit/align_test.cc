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

#include <cmath>

#include "generators.h"
#include "oracles.h"
#include "tanl/align.h"

namespace anl {
namespace {

using Words = std::vector<std::string>;

TEST(EditDistanceTest, Basics) {
  EXPECT_DOUBLE_EQ(normalized_edit_distance("", ""), 0.0);
  EXPECT_DOUBLE_EQ(normalized_edit_distance("abc", "abc"), 0.0);
  EXPECT_DOUBLE_EQ(normalized_edit_distance("ABC", "abc"), 0.0);
  EXPECT_DOUBLE_EQ(normalized_edit_distance("abc", ""), 1.0);
  EXPECT_DOUBLE_EQ(normalized_edit_distance("kitten", "sitting"), 3.0 / 7.0);
}

TEST(EditDistanceTest, CountsCodePoints) {
  EXPECT_DOUBLE_EQ(normalized_edit_distance("café", "cafe"), 0.25);
  EXPECT_DOUBLE_EQ(normalized_edit_distance("É", "é"), 0.0);
}

TEST(SubstitutionScoreTest, Range) {
  EXPECT_DOUBLE_EQ(substitution_score("aciclovir", "acyclovir"), 1.0 - 2.0 / 9.0);
  EXPECT_DOUBLE_EQ(substitution_score("ab", "xy"), -1.0);
  EXPECT_DOUBLE_EQ(substitution_score("Aciclovir", "acyclovir"), 7.0 / 9.0);
}

TEST(AlignParamsTest, Check) {
  AlignParams p;
  EXPECT_NO_THROW(p.check());
  p.gap = 1.0;
  EXPECT_THROW(p.check(), std::invalid_argument);
  p.gap = std::nan("");
  EXPECT_THROW(p.check(), std::invalid_argument);
}

TEST(NwAlignTest, IdenticalSequences) {
  const Words w = {"a", "b", "c", "d"};
  const AlignmentMap m = nw_align(w, w);
  EXPECT_DOUBLE_EQ(m.score, 4.0);
  for (size_t i = 0; i < w.size(); ++i) EXPECT_EQ(m.to_input[i], i);
}

TEST(NwAlignTest, EmptySides) {
  EXPECT_DOUBLE_EQ(nw_align(Words{}, Words{"a", "b"}).score, -1.0);
  const AlignmentMap m = nw_align(Words{"a"}, Words{});
  ASSERT_EQ(m.to_input.size(), 1u);
  EXPECT_FALSE(m.to_input[0]);
}

TEST(NwAlignTest, InsertedWordIsGapped) {
  const AlignmentMap m = nw_align(Words{"a", "extra", "b"}, Words{"a", "b"});
  EXPECT_EQ(m.to_input[0], 0u);
  EXPECT_FALSE(m.to_input[1]);
  EXPECT_EQ(m.to_input[2], 1u);
}

TEST(NwAlignTest, AciclovirProjectsOntoAcyclovir) {
  const Words input = {"Six", "days", "after", "starting", "acyclovir", "she",
                       "exhibited", "signs", "of", "lithium", "toxicity", "."};
  Words output = input;
  output[4] = "Aciclovir";
  const AlignmentMap m = nw_align(output, input);
  EXPECT_EQ(project_span({4, 5}, m), (Span{4, 5}));
  EXPECT_DOUBLE_EQ(m.score, 11.0 + 7.0 / 9.0);
}

TEST(NwAlignTest, MatchesBruteForceOnSmallAlphabet) {
  const Words alphabet = {"a", "b", "ab", "xy"};
  testing::Rng rng(3);
  for (int trial = 0; trial < 3000; ++trial) {
    Words out(testing::uniform(rng, 0, 6));
    Words in(testing::uniform(rng, 0, 6));
    for (auto &w : out) w = alphabet[testing::uniform(rng, 0, 3)];
    for (auto &w : in) w = alphabet[testing::uniform(rng, 0, 3)];
    const double expected = testing::brute_force_alignment_score(out, in, -0.5);
    const AlignmentMap m = nw_align(out, in);
    ASSERT_NEAR(m.score, expected, 1e-9);
    ASSERT_NEAR(testing::alignment_score_of(out, in, m.to_input, -0.5), expected, 1e-9);
  }
}

TEST(NwAlignTest, LinearSpaceSolverIsOptimal) {
  const Words alphabet = {"the", "cat", "sat", "on", "a", "mat", "Cat", "hat"};
  testing::Rng rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    Words out(testing::uniform(rng, 0, 40));
    Words in(testing::uniform(rng, 0, 40));
    for (auto &w : out) w = alphabet[testing::uniform(rng, 0, 7)];
    for (auto &w : in) w = alphabet[testing::uniform(rng, 0, 7)];
    const AlignmentMap q = nw_align_quadratic(out, in);
    const AlignmentMap l = nw_align_linear_space(out, in);
    ASSERT_NEAR(q.score, l.score, 1e-9);
    ASSERT_NEAR(testing::alignment_score_of(out, in, l.to_input, -0.5), l.score, 1e-9);
    std::optional<size_t> last;
    for (const auto &j : l.to_input) {
      if (!j) continue;
      if (last) {
        ASSERT_LT(*last, *j);
      }
      last = j;
    }
  }
}

TEST(NwAlignTest, SwitchesSolverBySize) {
  AlignParams p;
  p.linear_space_cells = 4;
  const Words a = {"x", "y", "z"};
  EXPECT_NEAR(nw_align(a, a, p).score, 3.0, 1e-12);
}

TEST(ProjectSpanTest, Rules) {
  AlignmentMap identity;
  for (size_t i = 0; i < 8; ++i) identity.to_input.push_back(i);
  EXPECT_EQ(project_span({4, 5}, identity), (Span{4, 5}));

  AlignmentMap m;
  m.to_input = {0, std::nullopt, 3, std::nullopt};
  EXPECT_EQ(project_span({0, 3}, m), (Span{0, 4}));
  EXPECT_EQ(project_span({1, 2}, m), std::nullopt);
  EXPECT_EQ(project_span({3, 4}, m), std::nullopt);
}

TEST(ProjectSpanTest, SubThresholdDropsWeakPairs) {
  AlignParams p;
  p.sub_threshold = 0.0;
  const AlignmentMap m = nw_align(Words{"zzz", "b"}, Words{"qqq", "b"}, p);
  EXPECT_EQ(project_span({0, 1}, m), std::nullopt);
  EXPECT_EQ(project_span({1, 2}, m), (Span{1, 2}));
}

}  // namespace
}  // namespace anl
