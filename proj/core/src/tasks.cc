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


#include "tanl/tasks.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "tanl/coref.h"
#include "unicode.h"

namespace anl {
namespace {

constexpr std::string_view kRelationPhrase = "relationship between";
constexpr std::string_view kBelief = "belief";

// One bracketed region of a rendered sentence.
struct Mark {
  Span span;
  std::vector<std::string> segments;  // rendered segment texts
};

// A rendered word: either a sentence token or a piece of annotation.
struct Item {
  std::string text;
  std::optional<size_t> token;
  size_t depth = 0;  // number of enclosing groups
};

void check_words(std::string_view text, const std::string &what) {
  auto words = unicode::split_whitespace(text);
  if (words.empty()) throw EncodeError("empty " + what);
  for (std::string_view w : words) {
    if (is_structural_token(w) || (w.size() > 1 && w.front() == ']')) {
      throw EncodeError(what + " contains a special token: '" +
                        std::string(text) + "'");
    }
  }
}

void check_tokens(const TokenSeq &tokens) {
  for (const Token &t : tokens.tokens()) {
    if (t.text.empty() || unicode::split_whitespace(t.text).size() != 1 ||
        unicode::split_whitespace(t.text)[0].size() != t.text.size()) {
      throw EncodeError("token '" + t.text + "' is empty or contains spaces");
    }
    check_words(t.text, "token");
  }
}

void check_structure(const StructuredExample &ex) {
  auto violations = structural_violations(ex);
  if (!violations.empty()) throw EncodeError(violations.front());
  check_tokens(ex.tokens);
}

void check_valid(const StructuredExample &ex, const TaskSchema &schema) {
  auto violations = validate_example(ex, schema);
  if (!violations.empty()) throw EncodeError(violations.front());
  check_tokens(ex.tokens);
}

std::string segment_text(std::string_view text, const std::string &what) {
  check_words(text, what);
  return normalize_whitespace(text);
}

std::string rel_segment(std::string_view label, std::string_view target) {
  return segment_text(label, "relation label") + " " + std::string(kRel) + " " +
         segment_text(target, "relation target");
}

void render_range(const TokenSeq &tokens, size_t b, size_t e,
                  const std::vector<Mark> &marks, size_t *k, size_t depth,
                  std::vector<Item> *out) {
  size_t pos = b;
  while (*k < marks.size() && marks[*k].span.start < e) {
    const Mark &m = marks[*k];
    if (m.span.end > e) throw EncodeError("crossing annotated spans");
    for (; pos < m.span.start; ++pos) out->push_back({tokens[pos].text, pos, depth});
    ++*k;
    out->push_back({std::string(kGroupOpen), std::nullopt, depth});
    render_range(tokens, m.span.start, m.span.end, marks, k, depth + 1, out);
    for (const std::string &s : m.segments) {
      out->push_back({std::string(kSep), std::nullopt, depth});
      out->push_back({s, std::nullopt, depth});
    }
    out->push_back({std::string(kGroupClose), std::nullopt, depth});
    pos = m.span.end;
  }
  for (; pos < e; ++pos) out->push_back({tokens[pos].text, pos, depth});
}

std::vector<Item> render(const TokenSeq &tokens, std::vector<Mark> marks) {
  std::stable_sort(marks.begin(), marks.end(), [](const Mark &a, const Mark &b) {
    return nesting_order(a.span, b.span);
  });
  for (size_t i = 0; i < marks.size(); ++i) {
    const Span &s = marks[i].span;
    if (s.start >= s.end || s.end > tokens.size()) {
      throw EncodeError("annotated span out of bounds");
    }
    if (i > 0 && marks[i - 1].span == s) {
      throw EncodeError("two annotations share a span");
    }
  }
  std::vector<Item> out;
  size_t k = 0;
  render_range(tokens, 0, tokens.size(), marks, &k, 0, &out);
  return out;
}

// Tokens keep their recorded gaps; anything next to annotation gets a
// single space.
std::string join_input(const TokenSeq &tokens, const std::vector<Item> &items) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i > 0) {
      const Item &prev = items[i - 1];
      if (prev.token && items[i].token && *items[i].token == *prev.token + 1) {
        out += tokens.gaps()[*items[i].token];
      } else {
        out += ' ';
      }
    }
    out += items[i].text;
  }
  return out;
}

std::string join_target(const std::vector<Item> &items, bool abridged) {
  std::string out;
  for (const Item &item : items) {
    if (abridged && item.depth == 0 && item.token) continue;
    if (!out.empty()) out += ' ';
    out += item.text;
  }
  return out;
}

std::string span_text(const TokenSeq &tokens, const Span &s) {
  return tokens.join(s.start, s.end);
}

// --- Input side ----------------------------------------------------------

std::string rc_phrase(const StructuredExample &ex) {
  return std::string(kRelationPhrase) + " [ " +
         span_text(ex.tokens, *ex.marked.head) + " ] and [ " +
         span_text(ex.tokens, *ex.marked.tail) + " ]";
}

std::string encode_dialogue(const DialogueState &d) {
  std::string out;
  for (const DialogueTurn &t : d.turns) {
    if (!out.empty()) out += ' ';
    out += t.speaker == Speaker::kUser ? "[ user ] : " : "[ agent ] : ";
    std::string text = normalize_whitespace(t.text);
    if (!text.empty()) check_words(text, "dialogue turn");
    out += text;
  }
  return out;
}

// --- Targets -------------------------------------------------------------

std::string entity_target(const StructuredExample &ex, const TaskSchema &schema,
                          EncoderMode mode) {
  const auto flat = flatten_entities(ex.entities);
  std::vector<Mark> marks;
  for (size_t i = 0; i < flat.size(); ++i) {
    Mark m;
    m.span = flat[i].span;
    m.segments.push_back(segment_text(
        schema.surface(LabelCategory::kEntity, *flat[i].type, mode), "type"));
    std::vector<const Relation *> own;
    for (const Relation &r : ex.relations) {
      if (r.head == i) own.push_back(&r);
    }
    const auto &order = schema.relation_types();
    auto rank = [&](const std::string &t) {
      return std::find(order.begin(), order.end(), t) - order.begin();
    };
    std::stable_sort(own.begin(), own.end(), [&](const Relation *a, const Relation *b) {
      if (a->tail != b->tail) return a->tail < b->tail;
      return rank(a->type) < rank(b->type);
    });
    for (const Relation *r : own) {
      m.segments.push_back(
          rel_segment(schema.surface(LabelCategory::kRelation, r->type, mode),
                      span_text(ex.tokens, flat[r->tail].span)));
    }
    marks.push_back(std::move(m));
  }
  return join_target(render(ex.tokens, std::move(marks)),
                     mode == EncoderMode::kAbridged);
}

std::string rc_target(const StructuredExample &ex, const TaskSchema &schema,
                      const EncodeOptions &options) {
  if (!ex.relation_type) throw EncodeError("relation type missing");
  const std::string label = segment_text(
      schema.surface(LabelCategory::kRelation, *ex.relation_type,
                     options.mode == EncoderMode::kNumeric ? EncoderMode::kNumeric
                                                           : EncoderMode::kNatural),
      "relation type");
  if (options.relation_format == RelationFormat::kLabelOnly) return label;
  return rc_phrase(ex) + " " + std::string(kRel) + " " + label;
}

std::string srl_target(const StructuredExample &ex, const TaskSchema &schema,
                       EncoderMode mode) {
  if (ex.frames.size() != 1) throw EncodeError("SRL needs exactly one frame");
  std::vector<Mark> marks;
  for (const SrlArgument &a : ex.frames[0].arguments) {
    marks.push_back(
        {a.span, {segment_text(schema.surface(LabelCategory::kRole, a.role, mode),
                               "role")}});
  }
  return join_target(render(ex.tokens, std::move(marks)),
                     mode == EncoderMode::kAbridged);
}

std::string event_target(const StructuredExample &ex, const TaskSchema &schema,
                         EncoderMode mode) {
  std::vector<Mark> marks;
  if (!ex.marked.trigger) {
    for (const EventTrigger &t : ex.triggers) {
      marks.push_back(
          {t.span, {segment_text(schema.surface(LabelCategory::kTrigger, t.type, mode),
                                 "trigger type")}});
    }
  } else {
    const EventTrigger &trigger = ex.triggers[*ex.marked.trigger];
    const std::string trigger_text = span_text(ex.tokens, trigger.span);
    std::map<Span, Mark> by_span;
    std::map<Span, std::string> types;
    std::vector<EventArgument> args = ex.arguments;
    std::sort(args.begin(), args.end());
    for (const EventArgument &a : args) {
      auto [it, inserted] = types.emplace(a.span, a.type);
      if (!inserted && it->second != a.type) {
        throw EncodeError("argument span with two entity types");
      }
      Mark &m = by_span[a.span];
      if (inserted) {
        m.span = a.span;
        m.segments.push_back(segment_text(
            schema.surface(LabelCategory::kEntity, a.type, mode), "type"));
      }
      m.segments.push_back(rel_segment(
          schema.surface(LabelCategory::kRole, a.role, mode), trigger_text));
    }
    for (auto &[span, m] : by_span) marks.push_back(std::move(m));
  }
  return join_target(render(ex.tokens, std::move(marks)),
                     mode == EncoderMode::kAbridged);
}

std::string coref_target(const StructuredExample &ex, const EncodeOptions &options) {
  std::vector<Mark> marks;
  for (const MentionGroup &g : ex.mention_groups) {
    for (size_t i = 0; i < g.size(); ++i) {
      Mark m;
      m.span = g[i].span;
      if (i > 0) {
        const Span ref = options.coref_reference == CorefReference::kFirstMention
                             ? g[0].span
                             : g[i - 1].span;
        m.segments.push_back(span_text(ex.tokens, ref));
      }
      marks.push_back(std::move(m));
    }
  }
  return join_target(render(ex.tokens, std::move(marks)),
                     options.mode == EncoderMode::kAbridged);
}

std::vector<std::string> words_of(std::string_view text) {
  std::vector<std::string> out;
  for (std::string_view w : unicode::split_whitespace(text)) out.emplace_back(w);
  return out;
}

// Longest slot whose words are a proper prefix of `clause`.
std::optional<std::string> match_slot(const std::vector<std::string> &clause,
                                      const std::vector<std::string> &slots,
                                      size_t *consumed) {
  std::optional<std::string> best;
  size_t best_len = 0;
  for (const std::string &slot : slots) {
    const auto words = words_of(slot);
    if (words.empty() || words.size() >= clause.size() || words.size() <= best_len) {
      continue;
    }
    if (std::equal(words.begin(), words.end(), clause.begin())) {
      best = slot;
      best_len = words.size();
    }
  }
  *consumed = best_len;
  return best;
}

std::string dst_target(const StructuredExample &ex, const TaskSchema &schema) {
  const std::string open = "[ " + std::string(kBelief) + " ]";
  std::string body;
  for (const std::string &slot : schema.slots()) {
    check_words(slot, "slot");
    auto it = ex.dialogue->state.find(slot);
    const std::string value = normalize_whitespace(
        it == ex.dialogue->state.end() ? std::string(kNotGiven) : it->second);
    check_words(value, "slot value");
    const auto value_words = words_of(value);
    for (const std::string &w : value_words) {
      if (w.back() == ',') throw EncodeError("slot value word ends with ','");
    }
    std::vector<std::string> clause = words_of(slot);
    clause.insert(clause.end(), value_words.begin(), value_words.end());
    size_t consumed = 0;
    if (match_slot(clause, schema.slots(), &consumed) != slot) {
      throw EncodeError("value of slot '" + slot + "' is ambiguous");
    }
    if (!body.empty()) body += ", ";
    body += normalize_whitespace(slot) + " " + value;
  }
  return body.empty() ? open + " " + open : open + " " + body + " " + open;
}

// --- Decoding ------------------------------------------------------------

struct Kept {
  size_t group;
  Span span;
  std::string label;
};

const Tag *first_tag(const LocatedGroup &g) {
  for (const Segment &s : g.segments) {
    if (const Tag *t = std::get_if<Tag>(&s)) return t;
  }
  return nullptr;
}

bool clashes(const std::vector<Kept> &kept, const Span &span) {
  return std::any_of(kept.begin(), kept.end(), [&](const Kept &k) {
    return k.span == span || (k.span.overlaps(span) && !k.span.contains(span) &&
                              !span.contains(k.span));
  });
}

// Groups whose first tag resolves in `category`, located in the input, and
// compatible with the groups kept before them.
std::vector<Kept> keep_labelled(const LocatedOutput &loc, const TaskSchema &schema,
                                LabelCategory category, EncoderMode mode,
                                DecodeReport *report) {
  std::vector<Kept> kept;
  for (size_t gi = 0; gi < loc.groups.size(); ++gi) {
    const LocatedGroup &g = loc.groups[gi];
    const Tag *tag = first_tag(g);
    std::optional<std::string> label;
    if (tag != nullptr) {
      label = schema.resolve(category, tag->text, mode);
      if (!label) report->flags.label = true;
    }
    if (!label || !g.input || clashes(kept, *g.input)) {
      ++report->discarded_entities;
      continue;
    }
    kept.push_back({gi, *g.input, *label});
  }
  return kept;
}

void init_report(const LocatedOutput &loc, const StructuredExample &input,
                 DecodeReport *report) {
  report->issues = loc.issues;
  report->flags.format = !loc.issues.empty();
  report->flags.reconstruction = loc.reconstruction;
  report->example = input_side(input);
}

void decode_srl(std::string_view generated, const StructuredExample &input,
                const TaskSchema &schema, const DecodeOptions &opts,
                DecodeReport *report) {
  const LocatedOutput loc = locate(generated, input.tokens, opts);
  init_report(loc, input, report);
  std::vector<Kept> kept = keep_labelled(loc, schema, LabelCategory::kRole,
                                         opts.mode, report);
  if (report->example.frames.empty()) return;
  SrlFrame &frame = report->example.frames.front();
  for (const Kept &k : kept) {
    if (k.span.overlaps(frame.predicate)) {
      ++report->discarded_entities;
      continue;
    }
    frame.arguments.push_back({k.span, k.label});
  }
}

void decode_event(std::string_view generated, const StructuredExample &input,
                  const TaskSchema &schema, const DecodeOptions &opts,
                  DecodeReport *report) {
  const LocatedOutput loc = locate(generated, input.tokens, opts);
  init_report(loc, input, report);
  StructuredExample &ex = report->example;
  if (!input.marked.trigger) {
    for (const Kept &k : keep_labelled(loc, schema, LabelCategory::kTrigger,
                                       opts.mode, report)) {
      ex.triggers.push_back({k.span, k.label});
    }
    return;
  }
  const size_t trigger = *input.marked.trigger;
  const Span trigger_span = input.triggers.at(trigger).span;
  const std::string trigger_text = span_text(input.tokens, trigger_span);
  std::vector<Kept> kept = keep_labelled(loc, schema, LabelCategory::kEntity,
                                         opts.mode, report);
  for (const Kept &k : kept) {
    const LocatedGroup &g = loc.groups[k.group];
    for (const Segment &s : g.segments) {
      const RelClause *rc = std::get_if<RelClause>(&s);
      if (rc == nullptr) continue;
      const auto role = schema.resolve(LabelCategory::kRole, rc->label, opts.mode);
      const std::string target = normalize_whitespace(rc->target);
      const bool matches = target == trigger_text;
      if (!role) report->flags.label = true;
      if (!matches) report->flags.entity = true;
      if (!role || !matches) {
        ++report->discarded_relations;
        continue;
      }
      ex.arguments.push_back({k.span, k.label, *role, trigger});
    }
  }
}

void decode_coref(std::string_view generated, const StructuredExample &input,
                  const DecodeOptions &opts, DecodeReport *report) {
  const LocatedOutput loc = locate(generated, input.tokens, opts);
  init_report(loc, input, report);
  std::vector<TaggedMention> mentions;
  std::set<Span> seen;
  for (const LocatedGroup &g : loc.groups) {
    if (!g.input || !seen.insert(*g.input).second) {
      ++report->discarded_entities;
      continue;
    }
    TaggedMention m;
    m.span = *g.input;
    m.generated_text = g.cleaned_text;
    if (const Tag *t = first_tag(g)) m.antecedent = t->text;
    mentions.push_back(std::move(m));
  }
  CorefResolution res = resolve_coref_groups(mentions, input.tokens);
  if (res.unresolved > 0) report->flags.entity = true;
  report->example.mention_groups = std::move(res.groups);
}

void decode_rc(std::string_view generated, const StructuredExample &input,
               const TaskSchema &schema, const TaskDecodeOptions &opts,
               DecodeReport *report) {
  report->example = input_side(input);
  const std::vector<std::string> words = words_of(generated);
  const EncoderMode mode = opts.decode.mode == EncoderMode::kNumeric
                               ? EncoderMode::kNumeric
                               : EncoderMode::kNatural;
  std::string label_text;
  if (opts.encode.relation_format == RelationFormat::kLabelOnly) {
    label_text = normalize_whitespace(generated);
  } else {
    size_t eq = words.size();
    for (size_t i = words.size(); i-- > 0;) {
      if (words[i] == kRel) {
        eq = i;
        break;
      }
    }
    if (eq == words.size()) {
      report->flags.format = true;
      return;
    }
    std::string phrase;
    for (size_t i = 0; i < eq; ++i) phrase += (i ? " " : "") + words[i];
    for (size_t i = eq + 1; i < words.size(); ++i) {
      label_text += (i > eq + 1 ? " " : "") + words[i];
    }
    if (input.marked.head && input.marked.tail && phrase != rc_phrase(input)) {
      report->flags.reconstruction = true;
    }
  }
  const auto type = schema.resolve(LabelCategory::kRelation, label_text, mode);
  if (!type) {
    report->flags.label = true;
    return;
  }
  report->example.relation_type = *type;
}

void decode_dst(std::string_view generated, const StructuredExample &input,
                const TaskSchema &schema, DecodeReport *report) {
  report->example = input_side(input);
  const std::vector<std::string> words = words_of(generated);
  auto delimiter_at = [&](size_t i) {
    return i + 3 <= words.size() && words[i] == kGroupOpen &&
           words[i + 1] == kBelief && words[i + 2] == kGroupClose;
  };
  size_t begin = 0;
  while (begin < words.size() && !delimiter_at(begin)) ++begin;
  size_t end = words.size();
  if (begin == words.size()) {
    report->flags.format = true;
    begin = 0;
  } else {
    if (begin != 0) report->flags.format = true;
    begin += 3;
    end = begin;
    while (end < words.size() && !delimiter_at(end)) ++end;
    if (end == words.size() || end + 3 != words.size()) report->flags.format = true;
  }

  std::map<std::string, std::string> state;
  for (const std::string &slot : schema.slots()) state[slot] = std::string(kNotGiven);
  std::set<std::string> assigned;
  std::vector<std::string> clause;
  auto flush = [&] {
    if (clause.empty()) return;
    size_t consumed = 0;
    const auto slot = match_slot(clause, schema.slots(), &consumed);
    if (!slot) {
      report->flags.label = true;
    } else if (assigned.insert(*slot).second) {
      std::string value;
      for (size_t i = consumed; i < clause.size(); ++i) {
        value += (i > consumed ? " " : "") + clause[i];
      }
      state[*slot] = value;
    }
    clause.clear();
  };
  for (size_t i = begin; i < end; ++i) {
    std::string w = words[i];
    const bool last = w.back() == ',';
    if (last) w.pop_back();
    if (!w.empty()) clause.push_back(std::move(w));
    if (last) flush();
  }
  flush();
  DialogueState d = input.dialogue.value_or(DialogueState{});
  d.state = std::move(state);
  report->example.dialogue = std::move(d);
}

}  // namespace

std::string encode_input(const StructuredExample &ex, const TaskSchema &schema,
                         const EncodeOptions &options) {
  check_structure(ex);
  switch (ex.task) {
    case TaskKind::kEntityRelation:
    case TaskKind::kNer:
    case TaskKind::kCoreference:
      return join_input(ex.tokens, render(ex.tokens, {}));
    case TaskKind::kEvent: {
      std::vector<Mark> marks;
      if (ex.marked.trigger) {
        const EventTrigger &t = ex.triggers[*ex.marked.trigger];
        marks.push_back(
            {t.span, {segment_text(schema.natural(t.type), "trigger type")}});
      }
      return join_input(ex.tokens, render(ex.tokens, std::move(marks)));
    }
    case TaskKind::kSrl: {
      if (ex.frames.size() != 1) throw EncodeError("SRL needs exactly one frame");
      return join_input(ex.tokens, render(ex.tokens, {{ex.frames[0].predicate, {}}}));
    }
    case TaskKind::kRelationClassification: {
      const bool inline_markers =
          options.relation_format == RelationFormat::kInlineMarkers;
      std::vector<Mark> marks = {
          {*ex.marked.head, inline_markers ? std::vector<std::string>{"head"}
                                           : std::vector<std::string>{}},
          {*ex.marked.tail, inline_markers ? std::vector<std::string>{"tail"}
                                           : std::vector<std::string>{}}};
      std::string out = join_input(ex.tokens, render(ex.tokens, std::move(marks)));
      if (!inline_markers) {
        out += " The " + rc_phrase(ex) + " is";
      }
      return out;
    }
    case TaskKind::kDst:
      return encode_dialogue(*ex.dialogue);
  }
  throw EncodeError("unknown task");
}

std::string encode_target(const StructuredExample &ex, const TaskSchema &schema,
                          const EncodeOptions &options) {
  check_valid(ex, schema);
  switch (ex.task) {
    case TaskKind::kEntityRelation:
    case TaskKind::kNer:
      return entity_target(ex, schema, options.mode);
    case TaskKind::kRelationClassification:
      return rc_target(ex, schema, options);
    case TaskKind::kSrl:
      return srl_target(ex, schema, options.mode);
    case TaskKind::kEvent:
      return event_target(ex, schema, options.mode);
    case TaskKind::kCoreference:
      return coref_target(ex, options);
    case TaskKind::kDst:
      return dst_target(ex, schema);
  }
  throw EncodeError("unknown task");
}

DecodeReport decode_task(std::string_view generated,
                         const StructuredExample &input,
                         const TaskSchema &schema,
                         const TaskDecodeOptions &options) {
  DecodeReport report;
  const DecodeOptions &opts = options.decode;
  switch (input.task) {
    case TaskKind::kEntityRelation:
    case TaskKind::kNer: {
      report = decode(generated, input.tokens, schema, opts);
      StructuredExample ex = input_side(input);
      ex.entities = std::move(report.example.entities);
      ex.relations = std::move(report.example.relations);
      report.example = std::move(ex);
      break;
    }
    case TaskKind::kRelationClassification:
      decode_rc(generated, input, schema, options, &report);
      break;
    case TaskKind::kSrl:
      decode_srl(generated, input, schema, opts, &report);
      break;
    case TaskKind::kEvent:
      decode_event(generated, input, schema, opts, &report);
      break;
    case TaskKind::kCoreference:
      decode_coref(generated, input, opts, &report);
      break;
    case TaskKind::kDst:
      decode_dst(generated, input, schema, &report);
      break;
  }
  report.example = canonicalize(report.example);
  return report;
}

std::string with_dataset_prefix(std::string_view dataset, std::string_view input) {
  return std::string(dataset) + " " + std::string(kTaskSep) + " " +
         std::string(input);
}

std::pair<std::optional<std::string>, std::string> strip_dataset_prefix(
    std::string_view text) {
  for (std::string_view w : unicode::split_whitespace(text)) {
    if (w != kTaskSep) continue;
    const size_t at = static_cast<size_t>(w.data() - text.data());
    std::string_view name = text.substr(0, at);
    if (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    std::string_view rest = text.substr(at + w.size());
    if (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    const auto name_words = unicode::split_whitespace(name);
    const bool valid =
        !name_words.empty() &&
        std::none_of(name_words.begin(), name_words.end(),
                     [](std::string_view n) { return is_structural_token(n); });
    if (!valid) break;
    return {std::string(name), std::string(rest)};
  }
  return {std::nullopt, std::string(text)};
}

std::vector<std::pair<std::string, std::string>> build_candidates(
    const StructuredExample &input, const TaskSchema &schema,
    const EncodeOptions &options) {
  if (input.task != TaskKind::kRelationClassification) {
    throw std::invalid_argument("candidates need a relation classification task");
  }
  if (schema.relation_types().empty()) {
    throw std::invalid_argument("schema has no relation types");
  }
  std::vector<std::pair<std::string, std::string>> out;
  StructuredExample ex = input_side(input);
  for (const std::string &label : schema.relation_types()) {
    ex.relation_type = label;
    out.emplace_back(label, encode_target(ex, schema, options));
  }
  return out;
}

size_t select_by_likelihood(std::span<const double> scores) {
  if (scores.empty()) throw std::invalid_argument("no candidate scores");
  size_t best = 0;
  for (size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i])) {
      throw std::invalid_argument("non-finite candidate score");
    }
    if (scores[i] > scores[best]) best = i;
  }
  return best;
}

}  // namespace anl
