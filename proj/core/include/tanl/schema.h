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

#ifndef TANL_SCHEMA_H_
#define TANL_SCHEMA_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tanl/types.h"

namespace anl {

// How labels are written in targets.
enum class EncoderMode {
  kNatural,   // natural words ("person", "works for")
  kNumeric,   // 1-based position within the label category ("3", "1")
  kAbridged,  // natural words, groups only with no text between them
};

std::string_view mode_name(EncoderMode mode);
std::optional<EncoderMode> parse_mode_name(std::string_view name);

enum class LabelCategory { kEntity, kRelation, kRole, kTrigger };

// Per-dataset registry of label sets and the dataset-label <-> natural-label
// map. Labels without a map entry are their own natural label.
class TaskSchema {
 public:
  TaskSchema() = default;
  TaskSchema(TaskKind task, std::string dataset) : task_(task),
                                                   dataset_(std::move(dataset)) {}

  TaskKind task() const { return task_; }
  const std::string &dataset() const { return dataset_; }

  const std::vector<std::string> &labels(LabelCategory category) const;
  const std::vector<std::string> &entity_types() const { return entity_types_; }
  const std::vector<std::string> &relation_types() const { return relation_types_; }
  const std::vector<std::string> &roles() const { return roles_; }
  const std::vector<std::string> &trigger_types() const { return trigger_types_; }
  const std::vector<std::string> &slots() const { return slots_; }
  const std::map<std::string, std::string> &label_map() const { return to_natural_; }

  TaskSchema &set_labels(LabelCategory category, std::vector<std::string> labels);
  TaskSchema &set_slots(std::vector<std::string> slots);
  TaskSchema &map_label(const std::string &label, const std::string &natural);

  bool has_label(LabelCategory category, std::string_view label) const;
  bool has_slot(std::string_view slot) const;

  std::string natural(std::string_view label) const;

  // The label as written in a target under `mode`.
  std::string surface(LabelCategory category, std::string_view label,
                      EncoderMode mode) const;

  // Inverse of surface(): the dataset label written as `text`, if it belongs
  // to `category`.
  std::optional<std::string> resolve(LabelCategory category,
                                     std::string_view text,
                                     EncoderMode mode) const;

  // Empty iff the label map is a bijection, all labels are non-empty, and
  // no natural label contains a standalone special token.
  std::vector<std::string> violations() const;

 private:
  TaskKind task_ = TaskKind::kEntityRelation;
  std::string dataset_;
  std::vector<std::string> entity_types_;
  std::vector<std::string> relation_types_;
  std::vector<std::string> roles_;
  std::vector<std::string> trigger_types_;
  std::vector<std::string> slots_;
  std::map<std::string, std::string> to_natural_;
  std::map<std::string, std::string> from_natural_;
};

}  // namespace anl

#endif  // TANL_SCHEMA_H_
