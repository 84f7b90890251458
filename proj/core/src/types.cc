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

#include "tanl/types.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "tanl/schema.h"

namespace anl {
namespace {

constexpr std::pair<TaskKind, std::string_view> kTaskNames[] = {
    {TaskKind::kEntityRelation, "entity_relation"},
    {TaskKind::kNer, "ner"},
    {TaskKind::kRelationClassification, "relation_classification"},
    {TaskKind::kSrl, "srl"},
    {TaskKind::kEvent, "event"},
    {TaskKind::kCoreference, "coreference"},
    {TaskKind::kDst, "dst"},
};

std::string span_string(const Span &s) {
  return "[" + std::to_string(s.start) + "," + std::to_string(s.end) + ")";
}

bool span_in_bounds(const Span &s, size_t n) {
  return s.start < s.end && s.end <= n;
}

void flatten_into(const std::vector<Entity> &forest, size_t depth,
                  std::vector<FlatEntity> *out) {
  for (const Entity &e : forest) {
    out->push_back({e.span, e.type, depth});
    flatten_into(e.children, depth + 1, out);
  }
}

void check_forest(const std::vector<Entity> &forest, const Span *parent,
                  size_t n, std::vector<std::string> *out) {
  for (size_t i = 0; i < forest.size(); ++i) {
    const Span &s = forest[i].span;
    if (!span_in_bounds(s, n)) {
      out->push_back("entity span " + span_string(s) + " out of bounds");
    }
    if (parent != nullptr && (!parent->contains(s) || *parent == s)) {
      out->push_back("entity span " + span_string(s) +
                     " not strictly inside parent " + span_string(*parent));
    }
    if (i > 0) {
      const Span &prev = forest[i - 1].span;
      if (prev.end > s.start) {
        out->push_back("sibling entities " + span_string(prev) + " and " +
                       span_string(s) + " overlap or are out of order");
      }
    }
    check_forest(forest[i].children, &s, n, out);
  }
}

// Builds the subtree of `nodes` rooted at children of `parent` (-1: roots).
std::vector<Entity> assemble(const std::vector<FlatEntity> &sorted,
                             const std::vector<std::vector<size_t>> &children,
                             const std::vector<size_t> &roots) {
  std::vector<Entity> out;
  out.reserve(roots.size());
  for (size_t idx : roots) {
    Entity e;
    e.span = sorted[idx].span;
    e.type = sorted[idx].type;
    e.children = assemble(sorted, children, children[idx]);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::string_view task_name(TaskKind task) {
  for (const auto &[kind, name] : kTaskNames) {
    if (kind == task) return name;
  }
  return "unknown";
}

std::optional<TaskKind> parse_task_name(std::string_view name) {
  for (const auto &[kind, n] : kTaskNames) {
    if (n == name) return kind;
  }
  return std::nullopt;
}

std::vector<FlatEntity> flatten_entities(const std::vector<Entity> &forest) {
  std::vector<FlatEntity> out;
  flatten_into(forest, 0, &out);
  return out;
}

std::vector<Entity> build_entity_forest(const std::vector<FlatEntity> &flat,
                                        std::vector<size_t> *order) {
  std::vector<size_t> perm(flat.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    return nesting_order(flat[a].span, flat[b].span);
  });

  std::vector<FlatEntity> sorted;
  sorted.reserve(flat.size());
  for (size_t idx : perm) sorted.push_back(flat[idx]);

  std::vector<std::vector<size_t>> children(sorted.size());
  std::vector<size_t> roots;
  std::vector<size_t> stack;
  for (size_t i = 0; i < sorted.size(); ++i) {
    const Span &s = sorted[i].span;
    while (!stack.empty() && !sorted[stack.back()].span.contains(s)) {
      if (sorted[stack.back()].span.overlaps(s)) {
        throw std::invalid_argument("crossing entity spans " +
                                    span_string(sorted[stack.back()].span) +
                                    " and " + span_string(s));
      }
      stack.pop_back();
    }
    if (!stack.empty() && sorted[stack.back()].span == s) {
      throw std::invalid_argument("duplicate entity span " + span_string(s));
    }
    if (stack.empty()) {
      roots.push_back(i);
    } else {
      children[stack.back()].push_back(i);
    }
    stack.push_back(i);
  }

  if (order != nullptr) {
    order->assign(flat.size(), 0);
    for (size_t rank = 0; rank < perm.size(); ++rank) (*order)[perm[rank]] = rank;
  }
  return assemble(sorted, children, roots);
}

StructuredExample canonicalize(const StructuredExample &ex) {
  StructuredExample out = ex;

  // Entities and relations.
  std::vector<size_t> order;
  out.entities = build_entity_forest(flatten_entities(ex.entities), &order);
  for (Relation &r : out.relations) {
    if (r.head < order.size()) r.head = order[r.head];
    if (r.tail < order.size()) r.tail = order[r.tail];
  }
  std::sort(out.relations.begin(), out.relations.end());
  out.relations.erase(std::unique(out.relations.begin(), out.relations.end()),
                      out.relations.end());

  // SRL frames.
  for (SrlFrame &f : out.frames) {
    std::sort(f.arguments.begin(), f.arguments.end());
    f.arguments.erase(std::unique(f.arguments.begin(), f.arguments.end()),
                      f.arguments.end());
  }
  std::sort(out.frames.begin(), out.frames.end(),
            [](const SrlFrame &a, const SrlFrame &b) {
              return a.predicate < b.predicate;
            });

  // Triggers: sort, merge duplicates, remap arguments and the marked one.
  std::vector<size_t> perm(ex.triggers.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    return ex.triggers[a] < ex.triggers[b];
  });
  std::vector<size_t> trigger_map(ex.triggers.size());
  out.triggers.clear();
  for (size_t idx : perm) {
    if (out.triggers.empty() || !(out.triggers.back() == ex.triggers[idx])) {
      out.triggers.push_back(ex.triggers[idx]);
    }
    trigger_map[idx] = out.triggers.size() - 1;
  }
  for (EventArgument &a : out.arguments) {
    if (a.trigger < trigger_map.size()) a.trigger = trigger_map[a.trigger];
  }
  std::sort(out.arguments.begin(), out.arguments.end(),
            [](const EventArgument &a, const EventArgument &b) {
              return std::tie(a.trigger, a.span, a.role, a.type) <
                     std::tie(b.trigger, b.span, b.role, b.type);
            });
  out.arguments.erase(std::unique(out.arguments.begin(), out.arguments.end()),
                      out.arguments.end());
  if (out.marked.trigger && *out.marked.trigger < trigger_map.size()) {
    out.marked.trigger = trigger_map[*out.marked.trigger];
  }

  // Mention groups.
  out.mention_groups.clear();
  for (MentionGroup g : ex.mention_groups) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    if (!g.empty()) out.mention_groups.push_back(std::move(g));
  }
  std::sort(out.mention_groups.begin(), out.mention_groups.end());
  return out;
}

StructuredExample input_side(const StructuredExample &ex) {
  StructuredExample out;
  out.task = ex.task;
  out.dataset = ex.dataset;
  out.tokens = ex.tokens;
  out.marked = ex.marked;
  for (const SrlFrame &f : ex.frames) out.frames.push_back({f.predicate, {}});
  if (ex.marked.trigger) out.triggers = ex.triggers;
  if (ex.dialogue) out.dialogue = DialogueState{ex.dialogue->turns, {}};
  return out;
}

std::vector<std::string> structural_violations(const StructuredExample &ex) {
  std::vector<std::string> out;
  const size_t n = ex.tokens.size();

  // Token offsets.
  for (size_t i = 0; i < n; ++i) {
    const Token &t = ex.tokens[i];
    if (t.end < t.begin || (i > 0 && t.begin < ex.tokens[i - 1].end)) {
      out.push_back("token offsets not monotone at " + std::to_string(i));
    }
  }

  check_forest(ex.entities, nullptr, n, &out);
  const size_t num_entities = flatten_entities(ex.entities).size();
  for (const Relation &r : ex.relations) {
    if (r.head >= num_entities || r.tail >= num_entities) {
      out.push_back("relation '" + r.type + "' references a missing entity");
    } else if (r.head == r.tail) {
      out.push_back("relation '" + r.type + "' has head == tail");
    }
  }

  for (const SrlFrame &f : ex.frames) {
    if (!span_in_bounds(f.predicate, n)) {
      out.push_back("predicate span " + span_string(f.predicate) +
                    " out of bounds");
    }
    for (const SrlArgument &a : f.arguments) {
      if (!span_in_bounds(a.span, n)) {
        out.push_back("argument span " + span_string(a.span) + " out of bounds");
      } else if (a.span.overlaps(f.predicate)) {
        out.push_back("argument span " + span_string(a.span) +
                      " overlaps the predicate");
      }
    }
  }

  for (const EventTrigger &t : ex.triggers) {
    if (!span_in_bounds(t.span, n)) {
      out.push_back("trigger span " + span_string(t.span) + " out of bounds");
    }
  }
  for (const EventArgument &a : ex.arguments) {
    if (!span_in_bounds(a.span, n)) {
      out.push_back("event argument span " + span_string(a.span) +
                    " out of bounds");
    }
    if (a.trigger >= ex.triggers.size()) {
      out.push_back("event argument references a missing trigger");
    }
  }
  if (ex.marked.trigger && *ex.marked.trigger >= ex.triggers.size()) {
    out.push_back("marked trigger index out of range");
  }

  std::set<Span> seen_mentions;
  for (const MentionGroup &g : ex.mention_groups) {
    if (g.empty()) out.push_back("empty mention group");
    for (size_t i = 0; i < g.size(); ++i) {
      if (!span_in_bounds(g[i].span, n)) {
        out.push_back("mention span " + span_string(g[i].span) +
                      " out of bounds");
      }
      if (i > 0 && !(g[i - 1] < g[i])) {
        out.push_back("mention group not sorted by (start, end)");
      }
      if (!seen_mentions.insert(g[i].span).second) {
        out.push_back("mention " + span_string(g[i].span) +
                      " appears more than once");
      }
    }
  }

  for (const auto *marked : {&ex.marked.head, &ex.marked.tail}) {
    if (*marked && !span_in_bounds(**marked, n)) {
      out.push_back("marked span " + span_string(**marked) + " out of bounds");
    }
  }
  if (ex.marked.head && ex.marked.tail &&
      ex.marked.head->overlaps(*ex.marked.tail)) {
    out.push_back("marked head and tail overlap");
  }

  // Payload must match the task.
  const TaskKind task = ex.task;
  auto forbid = [&](bool present, const char *what) {
    if (present) {
      out.push_back(std::string(what) + " not allowed for task " +
                    std::string(task_name(task)));
    }
  };
  const bool entity_task =
      task == TaskKind::kEntityRelation || task == TaskKind::kNer;
  forbid(!entity_task && !ex.entities.empty(), "entities");
  forbid(task != TaskKind::kEntityRelation && !ex.relations.empty(),
         "relations");
  forbid(task != TaskKind::kSrl && !ex.frames.empty(), "frames");
  forbid(task != TaskKind::kEvent &&
             (!ex.triggers.empty() || !ex.arguments.empty() ||
              ex.marked.trigger.has_value()),
         "event payload");
  forbid(task != TaskKind::kCoreference && !ex.mention_groups.empty(),
         "mention groups");
  forbid(task != TaskKind::kDst && ex.dialogue.has_value(), "dialogue");
  forbid(task != TaskKind::kRelationClassification &&
             (ex.relation_type || ex.marked.head || ex.marked.tail),
         "relation classification payload");
  if (task == TaskKind::kRelationClassification &&
      !(ex.marked.head && ex.marked.tail)) {
    out.push_back("relation classification requires marked head and tail");
  }
  if (task == TaskKind::kDst && !ex.dialogue) {
    out.push_back("dst example without dialogue");
  }
  if (task == TaskKind::kEvent && !ex.marked.trigger && !ex.arguments.empty()) {
    out.push_back("event arguments require a marked trigger");
  }
  if (ex.marked.trigger) {
    for (const EventArgument &a : ex.arguments) {
      if (a.trigger != *ex.marked.trigger) {
        out.push_back("event argument attached to an unmarked trigger");
        break;
      }
    }
  }
  return out;
}

std::vector<std::string> validate_example(const StructuredExample &ex,
                                          const TaskSchema &schema) {
  std::vector<std::string> out = structural_violations(ex);
  if (ex.task != schema.task()) {
    out.push_back("example task " + std::string(task_name(ex.task)) +
                  " does not match schema task " +
                  std::string(task_name(schema.task())));
  }
  auto check = [&](LabelCategory category, const std::string &label,
                   const char *what) {
    if (!schema.has_label(category, label)) {
      out.push_back(std::string(what) + " label '" + label +
                    "' not in schema");
    }
  };
  for (const FlatEntity &e : flatten_entities(ex.entities)) {
    if (!e.type) {
      out.push_back("entity " + span_string(e.span) + " has no type");
    } else {
      check(LabelCategory::kEntity, *e.type, "entity");
    }
  }
  for (const Relation &r : ex.relations) {
    check(LabelCategory::kRelation, r.type, "relation");
  }
  if (ex.relation_type) {
    check(LabelCategory::kRelation, *ex.relation_type, "relation");
  }
  for (const SrlFrame &f : ex.frames) {
    for (const SrlArgument &a : f.arguments) {
      check(LabelCategory::kRole, a.role, "role");
    }
  }
  for (const EventTrigger &t : ex.triggers) {
    check(LabelCategory::kTrigger, t.type, "trigger");
  }
  for (const EventArgument &a : ex.arguments) {
    check(LabelCategory::kEntity, a.type, "entity");
    check(LabelCategory::kRole, a.role, "role");
  }
  if (ex.dialogue) {
    for (const auto &[slot, value] : ex.dialogue->state) {
      if (!schema.has_slot(slot)) {
        out.push_back("slot '" + slot + "' not in schema");
      }
    }
    for (const std::string &slot : schema.slots()) {
      if (!ex.dialogue->state.contains(slot)) {
        out.push_back("slot '" + slot + "' missing from state");
      }
    }
  }
  return out;
}

}  // namespace anl
