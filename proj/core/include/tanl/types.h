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

// Structured-object model shared by every task.

#ifndef TANL_TYPES_H_
#define TANL_TYPES_H_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tanl/token_seq.h"

namespace anl {

enum class TaskKind {
  kEntityRelation,
  kNer,
  kRelationClassification,
  kSrl,
  kEvent,
  kCoreference,
  kDst,
};

std::string_view task_name(TaskKind task);
// Returns nullopt for unknown names.
std::optional<TaskKind> parse_task_name(std::string_view name);

// Half-open token range [start, end).
struct Span {
  size_t start = 0;
  size_t end = 0;

  size_t length() const { return end - start; }
  bool contains(const Span &other) const {
    return start <= other.start && other.end <= end;
  }
  bool overlaps(const Span &other) const {
    return start < other.end && other.start < end;
  }
  auto operator<=>(const Span &) const = default;
};

// Orders spans by start, longer first on ties: the pre-order of a nesting.
inline bool nesting_order(const Span &a, const Span &b) {
  if (a.start != b.start) return a.start < b.start;
  return a.end > b.end;
}

struct Entity {
  Span span;
  std::optional<std::string> type;
  std::vector<Entity> children;

  bool operator==(const Entity &) const = default;
};

// An entity seen through the pre-order flattening of an entity forest.
struct FlatEntity {
  Span span;
  std::optional<std::string> type;
  size_t depth = 0;

  bool operator==(const FlatEntity &) const = default;
};

// Pre-order traversal of the forest. Relation indices refer to this order.
std::vector<FlatEntity> flatten_entities(const std::vector<Entity> &forest);

// Builds a forest from flat entities by span containment. Entities are
// sorted into nesting order first; `order` (if given) receives, for every
// input position, its index in the resulting pre-order.
// Throws std::invalid_argument on crossing or duplicate spans.
std::vector<Entity> build_entity_forest(const std::vector<FlatEntity> &flat,
                                        std::vector<size_t> *order = nullptr);

struct Relation {
  std::string type;
  size_t head = 0;  // pre-order entity index
  size_t tail = 0;

  auto operator<=>(const Relation &) const = default;
};

struct SrlArgument {
  Span span;
  std::string role;

  auto operator<=>(const SrlArgument &) const = default;
};

struct SrlFrame {
  Span predicate;
  std::vector<SrlArgument> arguments;

  bool operator==(const SrlFrame &) const = default;
};

struct EventTrigger {
  Span span;
  std::string type;

  auto operator<=>(const EventTrigger &) const = default;
};

struct EventArgument {
  Span span;
  std::string type;  // entity type of the argument
  std::string role;
  size_t trigger = 0;  // index into the example's triggers

  auto operator<=>(const EventArgument &) const = default;
};

struct Mention {
  Span span;

  auto operator<=>(const Mention &) const = default;
};

// Mentions sorted by (start, end); the first one is the canonical antecedent.
using MentionGroup = std::vector<Mention>;

enum class Speaker { kUser, kAgent };

struct DialogueTurn {
  Speaker speaker = Speaker::kUser;
  std::string text;

  bool operator==(const DialogueTurn &) const = default;
};

inline constexpr std::string_view kNotGiven = "not given";

struct DialogueState {
  std::vector<DialogueTurn> turns;
  std::map<std::string, std::string> state;  // slot name -> value

  bool operator==(const DialogueState &) const = default;
};

// Input-side annotations that are given rather than predicted.
struct MarkedItems {
  std::optional<Span> head;  // relation classification
  std::optional<Span> tail;
  std::optional<size_t> trigger;  // event argument extraction

  bool operator==(const MarkedItems &) const = default;
};

// One task-tagged example. Only the payload fields of `task` are populated:
//   entity/relation, NER   entities (+ relations)
//   relation classif.      marked.head/tail (+ relation_type)
//   SRL                    frames (exactly one for encoding)
//   event                  triggers (+ marked.trigger and arguments)
//   coreference            mention_groups
//   DST                    dialogue
struct StructuredExample {
  TaskKind task = TaskKind::kEntityRelation;
  std::string dataset;
  TokenSeq tokens;

  std::vector<Entity> entities;
  std::vector<Relation> relations;
  std::vector<SrlFrame> frames;
  std::vector<EventTrigger> triggers;
  std::vector<EventArgument> arguments;
  std::vector<MentionGroup> mention_groups;
  std::optional<DialogueState> dialogue;
  std::optional<std::string> relation_type;
  MarkedItems marked;

  bool operator==(const StructuredExample &) const = default;
};

// Sorts every collection into its canonical order and removes exact
// duplicates, remapping relation and trigger indices. Two examples describe
// the same structure iff their canonical forms compare equal.
StructuredExample canonicalize(const StructuredExample &ex);

// Copy of `ex` without its predicted payload; keeps tokens, marked items,
// frames' predicates, triggers when a trigger is marked, and dialogue turns.
StructuredExample input_side(const StructuredExample &ex);

class TaskSchema;

// Core invariants that hold regardless of the schema: span bounds, nesting,
// index validity, group ordering. Empty iff the example is well-formed.
std::vector<std::string> structural_violations(const StructuredExample &ex);

// structural_violations() plus schema membership of every label and payload
// consistency with the task kind.
std::vector<std::string> validate_example(const StructuredExample &ex,
                                          const TaskSchema &schema);

}  // namespace anl

#endif  // TANL_TYPES_H_
