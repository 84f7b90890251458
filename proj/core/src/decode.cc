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


#include "tanl/decode.h"

#include <algorithm>
#include <cstdlib>

namespace anl {
namespace {

constexpr ErrorKind kErrorKinds[] = {ErrorKind::kReconstruction,
                                     ErrorKind::kFormat, ErrorKind::kEntity,
                                     ErrorKind::kLabel};

AlignmentMap identity_map(size_t n) {
  AlignmentMap map;
  map.to_input.reserve(n);
  for (size_t i = 0; i < n; ++i) map.to_input.emplace_back(i);
  map.score = static_cast<double>(n);
  return map;
}

size_t distance(size_t a, size_t b) { return a > b ? a - b : b - a; }

}  // namespace

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kReconstruction:
      return "RECONSTRUCTION";
    case ErrorKind::kFormat:
      return "FORMAT";
    case ErrorKind::kEntity:
      return "ENTITY";
    case ErrorKind::kLabel:
      return "LABEL";
  }
  return "UNKNOWN";
}

bool ErrorFlags::has(ErrorKind kind) const {
  switch (kind) {
    case ErrorKind::kReconstruction:
      return reconstruction;
    case ErrorKind::kFormat:
      return format;
    case ErrorKind::kEntity:
      return entity;
    case ErrorKind::kLabel:
      return label;
  }
  return false;
}

void ErrorFlags::set(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kReconstruction:
      reconstruction = true;
      break;
    case ErrorKind::kFormat:
      format = true;
      break;
    case ErrorKind::kEntity:
      entity = true;
      break;
    case ErrorKind::kLabel:
      label = true;
      break;
  }
}

std::vector<ErrorKind> ErrorFlags::kinds() const {
  std::vector<ErrorKind> out;
  for (ErrorKind k : kErrorKinds) {
    if (has(k)) out.push_back(k);
  }
  return out;
}

std::optional<Span> find_tokens(const TokenSeq &haystack,
                                const std::vector<std::string> &needle) {
  if (needle.empty() || needle.size() > haystack.size()) return std::nullopt;
  for (size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
    size_t k = 0;
    while (k < needle.size() && haystack[i + k].text == needle[k]) ++k;
    if (k == needle.size()) return Span{i, i + needle.size()};
  }
  return std::nullopt;
}

LocatedOutput locate(std::string_view generated, const TokenSeq &input,
                     const DecodeOptions &options) {
  ParseResult parsed = parse(generated);
  StripResult stripped = strip(parsed.tree);

  LocatedOutput out;
  out.cleaned = std::move(stripped.cleaned);
  out.issues = std::move(parsed.issues);
  out.reconstruction = out.cleaned.texts() != input.texts();

  const bool aligned =
      options.use_alignment && options.mode != EncoderMode::kAbridged;
  AlignmentMap map;
  if (aligned) {
    map = out.reconstruction ? nw_align(out.cleaned, input, options.align)
                             : identity_map(input.size());
  }

  out.groups.reserve(stripped.groups.size());
  for (StrippedGroup &g : stripped.groups) {
    LocatedGroup lg;
    lg.cleaned = g.span;
    lg.segments = std::move(g.segments);
    lg.parent = g.parent;
    lg.cleaned_text = out.cleaned.join(g.span.start, g.span.end);
    if (aligned) {
      lg.input = project_span(g.span, map);
    } else {
      std::vector<std::string> needle;
      for (size_t i = g.span.start; i < g.span.end; ++i) {
        needle.push_back(out.cleaned[i].text);
      }
      lg.input = find_tokens(input, needle);
    }
    out.groups.push_back(std::move(lg));
  }
  if (options.mode == EncoderMode::kAbridged) {
    out.reconstruction = std::any_of(out.groups.begin(), out.groups.end(),
                                     [](const LocatedGroup &g) { return !g.input; });
  }
  return out;
}

std::optional<size_t> resolve_tail(std::string_view target,
                                   std::span<const TailCandidate> candidates,
                                   size_t host) {
  const std::string wanted = normalize_whitespace(target);
  if (host >= candidates.size()) return std::nullopt;
  const size_t origin = candidates[host].input.start;
  std::optional<size_t> best;
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (i == host) continue;
    const TailCandidate &c = candidates[i];
    if (c.cleaned_text != wanted && c.input_text != wanted) continue;
    if (!best) {
      best = i;
      continue;
    }
    const TailCandidate &b = candidates[*best];
    const size_t d = distance(c.input.start, origin);
    const size_t bd = distance(b.input.start, origin);
    if (d < bd || (d == bd && c.input < b.input)) best = i;
  }
  return best;
}

DecodeReport decode(std::string_view generated, const TokenSeq &input,
                    const TaskSchema &schema, const DecodeOptions &options) {
  LocatedOutput loc = locate(generated, input, options);

  DecodeReport report;
  report.issues = loc.issues;
  report.flags.reconstruction = loc.reconstruction;
  report.flags.format = !loc.issues.empty();

  // Located, tagged groups: the entities seen by tail resolution.
  struct Located {
    size_t group;
    Span span;
    std::optional<std::string> type;
  };
  std::vector<Located> located;
  std::vector<TailCandidate> candidates;
  for (size_t gi = 0; gi < loc.groups.size(); ++gi) {
    const LocatedGroup &g = loc.groups[gi];
    const Tag *tag = nullptr;
    for (const Segment &s : g.segments) {
      if ((tag = std::get_if<Tag>(&s)) != nullptr) break;
    }
    std::optional<std::string> type;
    if (tag != nullptr) {
      type = schema.resolve(LabelCategory::kEntity, tag->text, options.mode);
      if (!type) report.flags.label = true;
    }
    if (tag == nullptr || !g.input) continue;
    const Span span = *g.input;
    const bool clash = std::any_of(located.begin(), located.end(), [&](const auto &e) {
      return e.span == span ||
             (e.span.overlaps(span) && !e.span.contains(span) &&
              !span.contains(e.span));
    });
    if (clash) continue;
    located.push_back({gi, span, type});
    candidates.push_back({span, g.cleaned_text, input.join(span.start, span.end)});
  }

  std::vector<Relation> relations;  // indices into `located`
  size_t total_relations = 0;
  for (const LocatedGroup &g : loc.groups) {
    for (const Segment &s : g.segments) {
      total_relations += std::holds_alternative<RelClause>(s) ? 1 : 0;
    }
  }
  for (size_t host = 0; host < located.size(); ++host) {
    for (const Segment &s : loc.groups[located[host].group].segments) {
      const RelClause *rc = std::get_if<RelClause>(&s);
      if (rc == nullptr) continue;
      const auto type =
          schema.resolve(LabelCategory::kRelation, rc->label, options.mode);
      const auto tail = resolve_tail(rc->target, candidates, host);
      if (!type) report.flags.label = true;
      if (!tail) report.flags.entity = true;
      if (type && tail) relations.push_back({*type, host, *tail});
    }
  }

  // Step 4.
  std::vector<FlatEntity> kept;
  std::vector<std::optional<size_t>> kept_index(located.size());
  for (size_t i = 0; i < located.size(); ++i) {
    if (!located[i].type) continue;
    kept_index[i] = kept.size();
    kept.push_back({located[i].span, located[i].type, 0});
  }
  std::vector<Relation> surviving;
  for (const Relation &r : relations) {
    if (kept_index[r.head] && kept_index[r.tail]) {
      surviving.push_back({r.type, *kept_index[r.head], *kept_index[r.tail]});
    }
  }
  relations = std::move(surviving);
  report.discarded_entities = loc.groups.size() - kept.size();
  report.discarded_relations = total_relations - relations.size();

  StructuredExample &ex = report.example;
  ex.task = schema.task();
  ex.dataset = schema.dataset();
  ex.tokens = input;
  std::vector<size_t> order;
  ex.entities = build_entity_forest(kept, &order);
  for (Relation &r : relations) {
    r.head = order[r.head];
    r.tail = order[r.tail];
  }
  ex.relations = std::move(relations);
  ex = canonicalize(ex);
  return report;
}

ErrorFlags classify_errors(std::string_view generated, const TokenSeq &input,
                           const TaskSchema &schema,
                           const DecodeOptions &options) {
  return decode(generated, input, schema, options).flags;
}

}  // namespace anl
