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

// Line-delimited JSON example files and JSON schema files.
//
// Example record (one per line; keys other than "tokens", "task" and
// "dataset" appear only when non-empty):
//
//   {"format_version": 1, "task": "entity_relation", "dataset": "conll04",
//    "tokens": ["Tolkien", "'s", ...],
//    "gaps": ["", "", " ", ...],                  // only if not single spaces
//    "entities": [{"start": 0, "end": 1, "type": "person", "children": []}],
//    "relations": [{"type": "author", "head_index": 1, "tail_index": 0}],
//    "frames": [{"predicate": {"start": 6, "end": 7},
//                "arguments": [{"start": 0, "end": 4, "role": "A0"}]}],
//    "triggers": [{"start": 3, "end": 4, "type": "Attack"}],
//    "arguments": [{"start": 0, "end": 2, "type": "PER", "role": "Target",
//                   "trigger_index": 0}],
//    "mention_groups": [[{"start": 0, "end": 2}, {"start": 7, "end": 8}]],
//    "turns": [{"speaker": "user", "text": "..."}],
//    "state": {"hotel area": "not given"},
//    "relation_type": "voice type",
//    "marked": {"head": {"start": 0, "end": 2}, "tail": {...}, "trigger": 0}}
//
// Entity indices (head_index, tail_index) refer to the pre-order traversal
// of the nested entity list.
//
// Schema file:
//
//   {"format_version": 1, "task": "entity_relation", "dataset": "ace2005",
//    "entity_types": [...], "relation_types": [...], "roles": [...],
//    "trigger_types": [...], "slots": [...],
//    "label_map": {"PHYS": "physical", ...}}

#ifndef TANL_IO_H_
#define TANL_IO_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tanl/metrics.h"
#include "tanl/schema.h"
#include "tanl/types.h"

namespace anl::io {

inline constexpr int kFormatVersion = 1;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A record that could not be converted; carries the 1-based line number.
class RecordError : public std::runtime_error {
 public:
  RecordError(size_t line, const std::string &message);
  size_t line() const { return line_; }

 private:
  size_t line_;
};

nlohmann::json to_json(const StructuredExample &ex);
// Throws std::invalid_argument on missing keys, wrong types, unknown task,
// or structural violations (e.g. out-of-range indices).
StructuredExample from_json(const nlohmann::json &record);

nlohmann::json schema_to_json(const TaskSchema &schema);
TaskSchema schema_from_json(const nlohmann::json &doc);

nlohmann::json report_to_json(const metrics::MetricReport &report);

struct LineError {
  size_t line = 0;
  std::string message;
};

struct ReadResult {
  std::vector<StructuredExample> examples;
  std::vector<LineError> errors;
};

// Reads line-delimited JSON. Blank lines are skipped. Malformed records are
// reported and skipped, or thrown as RecordError when `strict`.
// Throws IoError if the file cannot be opened. "-" reads standard input.
ReadResult read_examples(const std::string &path, bool strict = false);
ReadResult read_examples(std::istream &in, bool strict = false);

void write_examples(const std::vector<StructuredExample> &examples,
                    const std::string &path);
void write_examples(const std::vector<StructuredExample> &examples,
                    std::ostream &out);

TaskSchema read_schema(const std::string &path);
void write_schema(const TaskSchema &schema, const std::string &path);

// An encoded (input, target) pair.
struct EncodedPair {
  std::string input;
  std::string target;
  bool operator==(const EncodedPair &) const = default;
};

struct NamedStream {
  std::string name;
  std::vector<EncodedPair> pairs;
};

// Concatenates the streams, prefixes every input with "name : ", and
// shuffles deterministically from `seed`. Throws std::invalid_argument when
// there is no stream, a name repeats, or a name is empty or contains a
// standalone ":".
std::vector<EncodedPair> mix_datasets(const std::vector<NamedStream> &streams,
                                      uint64_t seed);

}  // namespace anl::io

#endif  // TANL_IO_H_
