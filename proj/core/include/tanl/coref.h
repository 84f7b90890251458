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

// Coreference-specific machinery: antecedent resolution, document chunking,
// and merging of chunk-level groups.

#ifndef TANL_COREF_H_
#define TANL_COREF_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tanl/token_seq.h"
#include "tanl/types.h"

namespace anl {

struct TaggedMention {
  Span span;
  std::optional<std::string> antecedent;  // text of an earlier mention
  std::string generated_text;  // text of the mention in the generated output
};

struct CorefResolution {
  std::vector<MentionGroup> groups;
  size_t unresolved = 0;  // tags that named no earlier mention
};

// Links every tagged mention to the nearest earlier mention (in (start, end)
// order) whose text equals the tag, and returns the connected components,
// sorted. Untagged mentions start their own group; mentions with
// unresolvable tags are kept as their own group and counted.
CorefResolution resolve_coref_groups(const std::vector<TaggedMention> &mentions,
                                     const TokenSeq &input);

struct ChunkingConfig {
  size_t max_length = 1024;
  size_t overlap = 128;

  // Throws std::invalid_argument unless 0 < overlap < max_length.
  void check() const;
};

struct Chunk {
  size_t offset = 0;  // document position of the chunk's first token
  TokenSeq tokens;

  Span span() const { return {offset, offset + tokens.size()}; }
};

// Chunks start every max_length - overlap tokens until one reaches the end
// of the document. A document no longer than max_length is one chunk.
std::vector<Chunk> chunk_document(const TokenSeq &doc, const ChunkingConfig &cfg);

// Restriction of a coreference example to a chunk, in chunk coordinates.
// Mentions not wholly inside the chunk are dropped, as are emptied groups.
StructuredExample slice_coref_example(const StructuredExample &doc,
                                      const Chunk &chunk);

// Shifts chunk-level groups into document coordinates.
std::vector<MentionGroup> shift_groups(const std::vector<MentionGroup> &groups,
                                       size_t offset);

// Connected components under "shares a mention" (exact span equality),
// each sorted and deduplicated, ordered by first mention.
std::vector<MentionGroup> merge_chunk_groups(
    const std::vector<MentionGroup> &groups);

}  // namespace anl

#endif  // TANL_COREF_H_
