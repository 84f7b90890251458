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


#include "generators.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tanl/tasks.h"

namespace anl::testing {
namespace {

constexpr auto kEntity = LabelCategory::kEntity;
constexpr auto kRelation = LabelCategory::kRelation;
constexpr auto kRole = LabelCategory::kRole;
constexpr auto kTrigger = LabelCategory::kTrigger;

template <typename T>
const T &pick(Rng &rng, const std::vector<T> &items) {
  return items[uniform(rng, 0, items.size() - 1)];
}

TokenSeq random_tokens(Rng &rng, const GenConfig &cfg) {
  const auto &vocab = vocabulary();
  const size_t limit =
      cfg.vocabulary_size == 0 ? vocab.size() : std::min(cfg.vocabulary_size, vocab.size());
  size_t n = uniform(rng, cfg.min_tokens, cfg.max_tokens);
  std::vector<std::string> words;
  if (cfg.distinct_tokens) {
    n = std::min(n, limit);
    std::vector<size_t> idx(limit);
    for (size_t i = 0; i < limit; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (size_t i = 0; i < n; ++i) words.push_back(vocab[idx[i]]);
  } else {
    for (size_t i = 0; i < n; ++i) words.push_back(vocab[uniform(rng, 0, limit - 1)]);
  }
  std::vector<std::string> gaps(n + 1);
  for (size_t i = 1; i < n; ++i) {
    const size_t r = uniform(rng, 0, 19);
    gaps[i] = r < 2 ? "" : r == 2 ? "  " : r == 3 ? "\n" : " ";
  }
  if (chance(rng, 0.1)) gaps[0] = " ";
  if (chance(rng, 0.1)) gaps[n] = "\n";
  return TokenSeq::FromTokensAndGaps(words, gaps);
}

// Non-crossing spans in [b, e), nested up to `depth` more levels.
std::vector<Entity> random_forest(Rng &rng, size_t b, size_t e, size_t depth,
                                  double density) {
  std::vector<Entity> out;
  size_t pos = b;
  while (pos < e) {
    if (!chance(rng, density)) {
      ++pos;
      continue;
    }
    const size_t len = uniform(rng, 1, std::min<size_t>(5, e - pos));
    Entity ent;
    ent.span = {pos, pos + len};
    if (depth > 0 && len > 1) {
      for (Entity &child : random_forest(rng, pos, pos + len, depth - 1, density)) {
        if (child.span != ent.span) ent.children.push_back(std::move(child));
      }
    }
    out.push_back(std::move(ent));
    pos += len;
  }
  return out;
}

std::vector<Span> random_disjoint(Rng &rng, size_t n, double density,
                                  const std::vector<Span> &avoid = {}) {
  std::vector<Span> out;
  for (const Entity &e : random_forest(rng, 0, n, 0, density)) {
    const bool clash = std::any_of(avoid.begin(), avoid.end(),
                                   [&](const Span &a) { return a.overlaps(e.span); });
    if (!clash) out.push_back(e.span);
  }
  return out;
}

bool unique_texts(const TokenSeq &tokens, const std::vector<Span> &spans) {
  std::set<std::string> seen;
  for (const Span &s : spans) {
    if (!seen.insert(tokens.join(s.start, s.end)).second) return false;
  }
  return true;
}

void assign_types(std::vector<Entity> *forest, const std::vector<std::string> &types,
                  Rng &rng) {
  for (Entity &e : *forest) {
    e.type = pick(rng, types);
    assign_types(&e.children, types, rng);
  }
}

std::vector<Span> flat_spans(const std::vector<Entity> &forest) {
  std::vector<Span> out;
  for (const FlatEntity &f : flatten_entities(forest)) out.push_back(f.span);
  return out;
}

std::optional<StructuredExample> try_example(TaskKind task, const TaskSchema &schema,
                                             Rng &rng, const GenConfig &cfg) {
  StructuredExample ex;
  ex.task = task;
  ex.dataset = schema.dataset();
  if (task != TaskKind::kDst) ex.tokens = random_tokens(rng, cfg);
  const size_t n = ex.tokens.size();
  switch (task) {
    case TaskKind::kEntityRelation:
    case TaskKind::kNer: {
      ex.entities = random_forest(rng, 0, n, cfg.max_depth, 0.3);
      assign_types(&ex.entities, schema.entity_types(), rng);
      const auto spans = flat_spans(ex.entities);
      if (!unique_texts(ex.tokens, spans)) return std::nullopt;
      if (task == TaskKind::kEntityRelation && spans.size() >= 2) {
        std::set<Relation> rels;
        const size_t count = uniform(rng, 0, std::min<size_t>(4, spans.size()));
        for (size_t i = 0; i < count; ++i) {
          const size_t h = uniform(rng, 0, spans.size() - 1);
          const size_t t = uniform(rng, 0, spans.size() - 1);
          if (h != t) rels.insert({pick(rng, schema.relation_types()), h, t});
        }
        ex.relations.assign(rels.begin(), rels.end());
      }
      break;
    }
    case TaskKind::kRelationClassification: {
      const auto spans = random_disjoint(rng, n, 0.4);
      if (spans.size() < 2) return std::nullopt;
      const size_t h = uniform(rng, 0, spans.size() - 1);
      size_t t = uniform(rng, 0, spans.size() - 2);
      if (t >= h) ++t;
      ex.marked.head = spans[h];
      ex.marked.tail = spans[t];
      ex.relation_type = pick(rng, schema.relation_types());
      break;
    }
    case TaskKind::kSrl: {
      if (n == 0) return std::nullopt;
      const size_t p = uniform(rng, 0, n - 1);
      SrlFrame frame;
      frame.predicate = {p, p + 1};
      for (const Span &s : random_disjoint(rng, n, 0.3, {frame.predicate})) {
        frame.arguments.push_back({s, pick(rng, schema.roles())});
      }
      ex.frames = {std::move(frame)};
      break;
    }
    case TaskKind::kEvent: {
      const auto trigger_spans = random_disjoint(rng, n, 0.2);
      if (!unique_texts(ex.tokens, trigger_spans)) return std::nullopt;
      for (const Span &s : trigger_spans) {
        ex.triggers.push_back({s, pick(rng, schema.trigger_types())});
      }
      if (!ex.triggers.empty() && chance(rng, 0.6)) {
        const size_t marked = uniform(rng, 0, ex.triggers.size() - 1);
        ex.marked.trigger = marked;
        for (const Span &s :
             random_disjoint(rng, n, 0.3, {ex.triggers[marked].span})) {
          const std::string type = pick(rng, schema.entity_types());
          std::set<std::string> roles;
          const size_t count = uniform(rng, 1, 2);
          for (size_t i = 0; i < count; ++i) roles.insert(pick(rng, schema.roles()));
          for (const std::string &role : roles) {
            ex.arguments.push_back({s, type, role, marked});
          }
        }
      }
      break;
    }
    case TaskKind::kCoreference: {
      const auto spans = flat_spans(random_forest(rng, 0, n, 1, 0.35));
      if (!unique_texts(ex.tokens, spans)) return std::nullopt;
      if (!spans.empty()) {
        const size_t k = uniform(rng, 1, spans.size());
        std::vector<MentionGroup> groups(k);
        for (size_t i = 0; i < spans.size(); ++i) {
          groups[i < k ? i : uniform(rng, 0, k - 1)].push_back({spans[i]});
        }
        for (MentionGroup &g : groups) std::sort(g.begin(), g.end());
        ex.mention_groups = std::move(groups);
      }
      break;
    }
    case TaskKind::kDst: {
      static const std::vector<std::string> kValues = {
          "cheap", "north", "monday", "two", "yes", "no", "indian food",
          "the gonville hotel", "7:30", "don't care", "4", "moderate price"};
      DialogueState d;
      const size_t turns = uniform(rng, 1, 4);
      for (size_t i = 0; i < turns; ++i) {
        GenConfig turn_cfg = cfg;
        turn_cfg.min_tokens = 1;
        turn_cfg.max_tokens = 10;
        d.turns.push_back({i % 2 == 0 ? Speaker::kUser : Speaker::kAgent,
                           detokenize(random_tokens(rng, turn_cfg))});
      }
      for (const std::string &slot : schema.slots()) {
        d.state[slot] = chance(rng, 0.5) ? std::string(kNotGiven) : pick(rng, kValues);
      }
      ex.dialogue = std::move(d);
      break;
    }
  }
  return ex;
}

}  // namespace

size_t uniform(Rng &rng, size_t lo, size_t hi) {
  return std::uniform_int_distribution<size_t>(lo, hi)(rng);
}

bool chance(Rng &rng, double p) { return std::bernoulli_distribution(p)(rng); }

const std::vector<std::string> &vocabulary() {
  static const std::vector<std::string> kWords = {
      "the", "of", "and", "a", "in", "to", "was", "for", "on", "with", "said",
      "John", "Smith", "Boston", "University", "company", "river", "Paris",
      "works", "lives", "near", "acyclovir", "lithium", "toxicity", "drug",
      "'s", "n't", ",", ".", "(", ")", "``", "''", "-", "?", ":", ";", "1,214",
      "U.S.", "1954-1955", "50-mile-wide", "e.g.", "Ünïcödé", "naïve", "東京",
      "Zürich", "O'Neil", "x=y", "a|b", "[abc]", "(HIV)", "AP-1", "%", "$", "&",
      "Mr.", "Dr.", "year", "report", "market", "shares", "court", "law", "week",
      "patients", "after", "before", "summit", "leader", "minister", "city",
      "state", "country", "team", "game", "season", "bank", "deal", "plan",
      "night", "home", "village", "office"};
  return kWords;
}

TaskSchema synthetic_schema(TaskKind task) {
  TaskSchema s(task, "synthetic");
  switch (task) {
    case TaskKind::kEntityRelation:
    case TaskKind::kNer:
      s.set_labels(kEntity, {"PER", "ORG", "LOC", "MISC", "cell_type"});
      s.map_label("PER", "person");
      s.map_label("ORG", "organization");
      s.map_label("LOC", "location");
      s.map_label("cell_type", "cell type");
      if (task == TaskKind::kEntityRelation) {
        s.set_labels(kRelation, {"Work_For", "Live_In", "part-of", "Kill"});
        s.map_label("Work_For", "works for");
        s.map_label("Live_In", "lives in");
      }
      break;
    case TaskKind::kRelationClassification:
      s.set_labels(kRelation,
                   {"per:title", "org:founded_by", "no_relation", "P412", "spouse"});
      s.map_label("per:title", "title");
      s.map_label("org:founded_by", "founded by");
      s.map_label("no_relation", "no relation");
      s.map_label("P412", "voice type");
      break;
    case TaskKind::kSrl:
      s.set_labels(kRole, {"A0", "A1", "AM-TMP", "AM-LOC", "R-A0"});
      s.map_label("A0", "subject");
      s.map_label("A1", "object");
      s.map_label("AM-TMP", "temporal");
      break;
    case TaskKind::kEvent:
      s.set_labels(kTrigger, {"Attack", "Injure", "Meet"});
      s.set_labels(kEntity, {"PER", "TIME", "GPE"});
      s.set_labels(kRole, {"Target", "Time-Within", "Place"});
      s.map_label("Attack", "attack");
      s.map_label("Injure", "injury");
      s.map_label("PER", "individual");
      s.map_label("TIME", "time");
      s.map_label("Time-Within", "attack time");
      s.map_label("Place", "place");
      break;
    case TaskKind::kCoreference:
      break;
    case TaskKind::kDst:
      s.set_slots({"hotel area", "hotel book day", "hotel name", "train day",
                   "train leave at", "restaurant food"});
      break;
  }
  const auto violations = s.violations();
  if (!violations.empty()) throw std::logic_error(violations.front());
  return s;
}

StructuredExample random_example(TaskKind task, const TaskSchema &schema, Rng &rng,
                                 const GenConfig &cfg) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    if (auto ex = try_example(task, schema, rng, cfg)) return *ex;
  }
  throw std::runtime_error("could not generate an example");
}

namespace {

std::string random_words(Rng &rng, size_t lo, size_t hi) {
  static const std::vector<std::string> kWords = {
      "alpha", "beta", "gamma", "x=y", "a|b", "[q]", "'s", ",", ".", ":", "東京",
      "naïve", "1,214", "works", "for", "in"};
  std::string out;
  const size_t n = uniform(rng, lo, hi);
  for (size_t i = 0; i < n; ++i) {
    if (i > 0) out += ' ';
    out += pick(rng, kWords);
  }
  return out;
}

std::vector<Node> random_nodes(Rng &rng, size_t depth, size_t *groups_left,
                               bool nonempty) {
  std::vector<Node> out;
  const size_t n = uniform(rng, nonempty ? 1 : 0, 4);
  for (size_t i = 0; i < n; ++i) {
    const bool last_plain =
        !out.empty() && std::holds_alternative<PlainText>(out.back().value);
    const bool want_group = depth > 0 && *groups_left > 0 && (last_plain || chance(rng, 0.5));
    if (!want_group) {
      if (last_plain) continue;
      out.push_back({PlainText{random_words(rng, 1, 3)}});
      continue;
    }
    --*groups_left;
    Group g;
    g.content = random_nodes(rng, depth - 1, groups_left, true);
    const size_t segments = uniform(rng, 0, 3);
    for (size_t k = 0; k < segments; ++k) {
      if (chance(rng, 0.4)) {
        g.segments.emplace_back(
            RelClause{random_words(rng, 1, 2), random_words(rng, 1, 3)});
      } else {
        g.segments.emplace_back(Tag{random_words(rng, 1, 2)});
      }
    }
    out.push_back({std::move(g)});
  }
  if (nonempty && out.empty()) out.push_back({PlainText{random_words(rng, 1, 2)}});
  return out;
}

}  // namespace

AnnotatedTree random_tree(Rng &rng, size_t max_depth, size_t max_groups) {
  size_t groups_left = max_groups;
  return {random_nodes(rng, max_depth, &groups_left, false)};
}

std::string perturb_plain_text(const std::string &target, double rate, Rng &rng) {
  std::vector<std::string> words = tokenize(target, Granularity::kWhitespace).texts();
  std::vector<size_t> plain;
  size_t chars = 0;
  int depth = 0;
  for (size_t i = 0; i < words.size(); ++i) {
    if (words[i] == kGroupOpen) {
      ++depth;
    } else if (words[i] == kGroupClose) {
      depth = std::max(0, depth - 1);
    } else if (depth == 0) {
      plain.push_back(i);
      chars += words[i].size();
    }
  }
  if (plain.empty()) return target;
  const size_t edits = uniform(rng, 0, static_cast<size_t>(rate * static_cast<double>(chars)));
  static const std::string kLetters = "abcdefghijklmnopqrstuvwxyz";
  for (size_t e = 0; e < edits; ++e) {
    std::string &w = words[pick(rng, plain)];
    const std::string before = w;
    const size_t at = uniform(rng, 0, w.size() - 1);
    const char letter = kLetters[uniform(rng, 0, kLetters.size() - 1)];
    switch (uniform(rng, 0, 2)) {
      case 0:
        w[at] = letter;
        break;
      case 1:
        if (w.size() > 1) w.erase(at, 1);
        break;
      default:
        w.insert(at, 1, letter);
        break;
    }
    if (special_token(w) || w.front() == ']') w = before;
  }
  std::string out;
  for (const std::string &w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

}  // namespace anl::testing
