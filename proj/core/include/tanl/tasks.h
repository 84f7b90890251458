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

// Per-task input/target formats and their decoders.
//
//   task                 input                        target
//   -------------------- ---------------------------- ---------------------------
//   entity/relation      sentence                     [ e | type | rel = tail ]
//   NER                  sentence                     [ e | type ]
//   relation classif.    sentence with [ h ] [ t ]    relationship between
//                        + "The relationship          [ h ] and [ t ] = type
//                        between [ h ] and [ t ] is"
//   SRL                  sentence with [ predicate ]  [ arg | role ]
//   event (triggers)     sentence                     [ trigger | type ]
//   event (arguments)    sentence with                [ arg | type | role =
//                        [ trigger | type ]             trigger ]
//   coreference          document chunk               [ mention | antecedent ]
//   DST                  [ user ] : ... [ agent ] :   [ belief ] slot value,
//                                                     ... [ belief ]

#ifndef TANL_TASKS_H_
#define TANL_TASKS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tanl/decode.h"
#include "tanl/schema.h"
#include "tanl/types.h"

namespace anl {

class EncodeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Which earlier mention a coreference tag names.
enum class CorefReference {
  kFirstMention,     // the first mention of the group
  kPreviousMention,  // the closest earlier mention of the group
};

// Relation classification layouts.
enum class RelationFormat {
  // Input ends with "The relationship between [ h ] and [ t ] is"; target
  // repeats the phrase followed by "= type".
  kPhrase,
  // Same input; the target is the type alone.
  kLabelOnly,
  // Input marks the entities as [ h | head ] and [ t | tail ] with no
  // trailing phrase; the target is as in kPhrase.
  kInlineMarkers,
};

struct EncodeOptions {
  EncoderMode mode = EncoderMode::kNatural;
  CorefReference coref_reference = CorefReference::kFirstMention;
  RelationFormat relation_format = RelationFormat::kPhrase;
};

// Throws EncodeError for invalid examples or text containing standalone
// "[", "]", "|" or "=".
std::string encode_input(const StructuredExample &ex, const TaskSchema &schema,
                         const EncodeOptions &options = {});
std::string encode_target(const StructuredExample &ex, const TaskSchema &schema,
                          const EncodeOptions &options = {});

struct TaskDecodeOptions {
  DecodeOptions decode;
  EncodeOptions encode;  // the format the target was written in
};

// Decodes `generated` against the input side of an example (tokens, marked
// items, predicate, triggers, dialogue turns). The returned example carries
// the input side plus the decoded payload, in canonical form.
DecodeReport decode_task(std::string_view generated,
                         const StructuredExample &input,
                         const TaskSchema &schema,
                         const TaskDecodeOptions &options = {});

// Multi-dataset prefixing: "name : input".
std::string with_dataset_prefix(std::string_view dataset,
                                std::string_view input);
// Inverse of with_dataset_prefix(). The name is nullopt (and the text
// unchanged) when there is no standalone ":" separator.
std::pair<std::optional<std::string>, std::string> strip_dataset_prefix(
    std::string_view text);

// One complete target per relation type of the schema, in schema order.
// Throws std::invalid_argument for non-categorical tasks or schemas with no
// relation types.
std::vector<std::pair<std::string, std::string>> build_candidates(
    const StructuredExample &input, const TaskSchema &schema,
    const EncodeOptions &options = {});

// Index of the highest score; the earliest on ties. Throws
// std::invalid_argument when scores is empty or has non-finite values.
size_t select_by_likelihood(std::span<const double> scores);

}  // namespace anl

#endif  // TANL_TASKS_H_
