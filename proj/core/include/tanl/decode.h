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

// Decoding of generated text back into structured objects:
//
//   1. parse and strip the annotation, producing a cleaned sentence;
//   2. align the cleaned sentence with the input and project every group
//      span onto input tokens;
//   3. resolve each relation tail to the closest entity with the same text,
//      discarding relations without one;
//   4. discard entities and relations whose label is not in the schema.
//
// Degradation is reported in DecodeReport, never thrown.

#ifndef TANL_DECODE_H_
#define TANL_DECODE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tanl/align.h"
#include "tanl/grammar.h"
#include "tanl/schema.h"
#include "tanl/token_seq.h"
#include "tanl/types.h"

namespace anl {

enum class ErrorKind { kReconstruction, kFormat, kEntity, kLabel };

std::string_view error_name(ErrorKind kind);

// Generation-error classes of one output sentence.
struct ErrorFlags {
  // Cleaned output differs from the input; abridged: a group text is not
  // found in the input.
  bool reconstruction = false;
  bool format = false;          // any parse issue
  bool entity = false;          // a relation tail matches no entity
  bool label = false;           // a type outside the schema

  bool any() const { return reconstruction || format || entity || label; }
  bool has(ErrorKind kind) const;
  void set(ErrorKind kind);
  std::vector<ErrorKind> kinds() const;
  bool operator==(const ErrorFlags &) const = default;
};

struct DecodeReport {
  StructuredExample example;
  size_t discarded_entities = 0;
  size_t discarded_relations = 0;
  std::vector<ParseIssue> issues;
  ErrorFlags flags;
};

struct DecodeOptions {
  AlignParams align;
  // When false, each group is located at the first exact occurrence of its
  // text in the input instead of through the alignment.
  bool use_alignment = true;
  EncoderMode mode = EncoderMode::kNatural;
};

// A group of the generated sentence located in both coordinate systems.
struct LocatedGroup {
  Span cleaned;
  std::optional<Span> input;  // nullopt if it could not be located
  std::vector<Segment> segments;
  std::optional<size_t> parent;
  std::string cleaned_text;  // group tokens of the cleaned output
};

struct LocatedOutput {
  TokenSeq cleaned;
  std::vector<LocatedGroup> groups;  // pre-order
  std::vector<ParseIssue> issues;
  bool reconstruction = false;
};

// Steps 1 and 2.
LocatedOutput locate(std::string_view generated, const TokenSeq &input,
                     const DecodeOptions &options = {});

// First occurrence of `needle` as a contiguous token run in `haystack`.
std::optional<Span> find_tokens(const TokenSeq &haystack,
                                const std::vector<std::string> &needle);

// A possible relation tail: an entity with its text on both sides.
struct TailCandidate {
  Span input;
  std::string cleaned_text;
  std::string input_text;
};

// Among candidates other than `host` whose text equals `target` (after
// whitespace normalization, case-sensitive; either the generated text or
// the input text may match), the one whose start is closest to the host's
// start. Ties go to the earlier entity.
std::optional<size_t> resolve_tail(std::string_view target,
                                   std::span<const TailCandidate> candidates,
                                   size_t host);

// Full pipeline for entity-based schemas (entity/relation extraction, NER):
// the first tag of a group is the entity type, every relation clause is a
// relation with the group as head.
DecodeReport decode(std::string_view generated, const TokenSeq &input,
                    const TaskSchema &schema, const DecodeOptions &options = {});

// The error classes of decode() for the same arguments.
ErrorFlags classify_errors(std::string_view generated, const TokenSeq &input,
                           const TaskSchema &schema,
                           const DecodeOptions &options = {});

}  // namespace anl

#endif  // TANL_DECODE_H_
