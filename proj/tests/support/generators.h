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


// Random examples, trees and perturbations for property tests.

#ifndef TANL_TESTS_SUPPORT_GENERATORS_H_
#define TANL_TESTS_SUPPORT_GENERATORS_H_

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "tanl/grammar.h"
#include "tanl/schema.h"
#include "tanl/types.h"

namespace anl::testing {

using Rng = std::mt19937_64;

inline constexpr TaskKind kAllTasks[] = {
    TaskKind::kEntityRelation, TaskKind::kNer,       TaskKind::kRelationClassification,
    TaskKind::kSrl,            TaskKind::kEvent,     TaskKind::kCoreference,
    TaskKind::kDst};

struct GenConfig {
  size_t min_tokens = 1;
  size_t max_tokens = 24;
  // Every token of a sentence is different. Needed where groups are located
  // by text alone.
  bool distinct_tokens = false;
  // Draw words from the first `vocabulary_size` entries of vocabulary().
  size_t vocabulary_size = 0;  // 0 = all
  size_t max_depth = 3;
};

// Words that are safe as tokens: no structural tokens, no leading "]".
const std::vector<std::string> &vocabulary();

TaskSchema synthetic_schema(TaskKind task);

// A valid example in the encodable domain: entity (mention) texts are unique
// within the example, so relation tails and antecedent tags are unambiguous.
StructuredExample random_example(TaskKind task, const TaskSchema &schema, Rng &rng,
                                 const GenConfig &cfg = {});

// A well-formed tree: normalized text, no adjacent plain nodes, non-empty
// groups, depth <= max_depth and at most max_groups groups.
AnnotatedTree random_tree(Rng &rng, size_t max_depth = 3, size_t max_groups = 8);

// Applies up to floor(rate * n) character edits to the n characters of
// plain words outside every group. Edits keep words non-empty and never
// produce special tokens.
std::string perturb_plain_text(const std::string &target, double rate, Rng &rng);

// Uniform integer in [lo, hi].
size_t uniform(Rng &rng, size_t lo, size_t hi);
bool chance(Rng &rng, double p);

}  // namespace anl::testing

#endif  // TANL_TESTS_SUPPORT_GENERATORS_H_
