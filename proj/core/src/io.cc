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


#include "tanl/io.h"

#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <set>

#include "tanl/grammar.h"
#include "tanl/tasks.h"
#include "unicode.h"

namespace anl::io {
namespace {

using nlohmann::json;

json span_json(const Span &s) { return {{"start", s.start}, {"end", s.end}}; }

Span span_from(const json &j) {
  return {j.at("start").get<size_t>(), j.at("end").get<size_t>()};
}

json entity_json(const Entity &e) {
  json j = span_json(e.span);
  if (e.type) j["type"] = *e.type;
  json children = json::array();
  for (const Entity &c : e.children) children.push_back(entity_json(c));
  j["children"] = std::move(children);
  return j;
}

Entity entity_from(const json &j) {
  Entity e;
  e.span = span_from(j);
  if (j.contains("type")) e.type = j.at("type").get<std::string>();
  if (j.contains("children")) {
    for (const json &c : j.at("children")) e.children.push_back(entity_from(c));
  }
  return e;
}

std::string_view speaker_name(Speaker s) {
  return s == Speaker::kUser ? "user" : "agent";
}

Speaker speaker_from(const std::string &name) {
  if (name == "user") return Speaker::kUser;
  if (name == "agent") return Speaker::kAgent;
  throw std::invalid_argument("unknown speaker '" + name + "'");
}

json labels_json(const std::vector<std::string> &labels) {
  return json(labels);
}

json score_json(const metrics::Score &s) {
  return {{"precision", s.precision()},
          {"recall", s.recall()},
          {"f1", s.f1()},
          {"precision_num", s.precision_num},
          {"precision_den", s.precision_den},
          {"recall_num", s.recall_num},
          {"recall_den", s.recall_den}};
}

// Uniform integer in [0, bound] by rejection, independent of the standard
// library's distribution implementations.
uint64_t uniform(std::mt19937_64 &rng, uint64_t bound) {
  if (bound == std::numeric_limits<uint64_t>::max()) return rng();
  const uint64_t range = bound + 1;
  const uint64_t limit = std::numeric_limits<uint64_t>::max() -
                         std::numeric_limits<uint64_t>::max() % range;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % range;
}

}  // namespace

RecordError::RecordError(size_t line, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

json to_json(const StructuredExample &ex) {
  json j;
  j["format_version"] = kFormatVersion;
  j["task"] = std::string(task_name(ex.task));
  j["dataset"] = ex.dataset;
  j["tokens"] = ex.tokens.texts();
  if (!ex.tokens.has_default_gaps()) j["gaps"] = ex.tokens.gaps();
  if (!ex.entities.empty()) {
    json arr = json::array();
    for (const Entity &e : ex.entities) arr.push_back(entity_json(e));
    j["entities"] = std::move(arr);
  }
  if (!ex.relations.empty()) {
    json arr = json::array();
    for (const Relation &r : ex.relations) {
      arr.push_back({{"type", r.type}, {"head_index", r.head}, {"tail_index", r.tail}});
    }
    j["relations"] = std::move(arr);
  }
  if (!ex.frames.empty()) {
    json arr = json::array();
    for (const SrlFrame &f : ex.frames) {
      json args = json::array();
      for (const SrlArgument &a : f.arguments) {
        json aj = span_json(a.span);
        aj["role"] = a.role;
        args.push_back(std::move(aj));
      }
      arr.push_back({{"predicate", span_json(f.predicate)}, {"arguments", args}});
    }
    j["frames"] = std::move(arr);
  }
  if (!ex.triggers.empty()) {
    json arr = json::array();
    for (const EventTrigger &t : ex.triggers) {
      json tj = span_json(t.span);
      tj["type"] = t.type;
      arr.push_back(std::move(tj));
    }
    j["triggers"] = std::move(arr);
  }
  if (!ex.arguments.empty()) {
    json arr = json::array();
    for (const EventArgument &a : ex.arguments) {
      json aj = span_json(a.span);
      aj["type"] = a.type;
      aj["role"] = a.role;
      aj["trigger_index"] = a.trigger;
      arr.push_back(std::move(aj));
    }
    j["arguments"] = std::move(arr);
  }
  if (!ex.mention_groups.empty()) {
    json arr = json::array();
    for (const MentionGroup &g : ex.mention_groups) {
      json gj = json::array();
      for (const Mention &m : g) gj.push_back(span_json(m.span));
      arr.push_back(std::move(gj));
    }
    j["mention_groups"] = std::move(arr);
  }
  if (ex.dialogue) {
    json turns = json::array();
    for (const DialogueTurn &t : ex.dialogue->turns) {
      turns.push_back({{"speaker", speaker_name(t.speaker)}, {"text", t.text}});
    }
    j["turns"] = std::move(turns);
    j["state"] = ex.dialogue->state;
  }
  if (ex.relation_type) j["relation_type"] = *ex.relation_type;
  if (ex.marked.head || ex.marked.tail || ex.marked.trigger) {
    json m = json::object();
    if (ex.marked.head) m["head"] = span_json(*ex.marked.head);
    if (ex.marked.tail) m["tail"] = span_json(*ex.marked.tail);
    if (ex.marked.trigger) m["trigger"] = *ex.marked.trigger;
    j["marked"] = std::move(m);
  }
  return j;
}

StructuredExample from_json(const json &record) {
  StructuredExample ex;
  try {
    if (!record.is_object()) throw std::invalid_argument("record is not an object");
    if (record.contains("format_version") &&
        record.at("format_version").get<int>() != kFormatVersion) {
      throw std::invalid_argument("unsupported format_version");
    }
    const std::string task = record.at("task").get<std::string>();
    const auto kind = parse_task_name(task);
    if (!kind) throw std::invalid_argument("unknown task '" + task + "'");
    ex.task = *kind;
    ex.dataset = record.value("dataset", std::string());
    const auto tokens = record.at("tokens").get<std::vector<std::string>>();
    if (record.contains("gaps")) {
      ex.tokens = TokenSeq::FromTokensAndGaps(
          tokens, record.at("gaps").get<std::vector<std::string>>());
    } else {
      ex.tokens = TokenSeq::FromTokens(tokens);
    }
    if (record.contains("entities")) {
      for (const json &e : record.at("entities")) ex.entities.push_back(entity_from(e));
    }
    if (record.contains("relations")) {
      for (const json &r : record.at("relations")) {
        ex.relations.push_back({r.at("type").get<std::string>(),
                                r.at("head_index").get<size_t>(),
                                r.at("tail_index").get<size_t>()});
      }
    }
    if (record.contains("frames")) {
      for (const json &f : record.at("frames")) {
        SrlFrame frame;
        frame.predicate = span_from(f.at("predicate"));
        for (const json &a : f.at("arguments")) {
          frame.arguments.push_back({span_from(a), a.at("role").get<std::string>()});
        }
        ex.frames.push_back(std::move(frame));
      }
    }
    if (record.contains("triggers")) {
      for (const json &t : record.at("triggers")) {
        ex.triggers.push_back({span_from(t), t.at("type").get<std::string>()});
      }
    }
    if (record.contains("arguments")) {
      for (const json &a : record.at("arguments")) {
        ex.arguments.push_back({span_from(a), a.at("type").get<std::string>(),
                                a.at("role").get<std::string>(),
                                a.at("trigger_index").get<size_t>()});
      }
    }
    if (record.contains("mention_groups")) {
      for (const json &g : record.at("mention_groups")) {
        MentionGroup group;
        for (const json &m : g) group.push_back({span_from(m)});
        ex.mention_groups.push_back(std::move(group));
      }
    }
    if (record.contains("turns") || record.contains("state")) {
      DialogueState d;
      if (record.contains("turns")) {
        for (const json &t : record.at("turns")) {
          d.turns.push_back({speaker_from(t.at("speaker").get<std::string>()),
                             t.at("text").get<std::string>()});
        }
      }
      if (record.contains("state")) {
        d.state = record.at("state").get<std::map<std::string, std::string>>();
      }
      ex.dialogue = std::move(d);
    }
    if (record.contains("relation_type")) {
      ex.relation_type = record.at("relation_type").get<std::string>();
    }
    if (record.contains("marked")) {
      const json &m = record.at("marked");
      if (m.contains("head")) ex.marked.head = span_from(m.at("head"));
      if (m.contains("tail")) ex.marked.tail = span_from(m.at("tail"));
      if (m.contains("trigger")) ex.marked.trigger = m.at("trigger").get<size_t>();
    }
  } catch (const json::exception &e) {
    throw std::invalid_argument(e.what());
  }
  const auto violations = structural_violations(ex);
  if (!violations.empty()) throw std::invalid_argument(violations.front());
  return ex;
}

json schema_to_json(const TaskSchema &schema) {
  return {{"format_version", kFormatVersion},
          {"task", std::string(task_name(schema.task()))},
          {"dataset", schema.dataset()},
          {"entity_types", labels_json(schema.entity_types())},
          {"relation_types", labels_json(schema.relation_types())},
          {"roles", labels_json(schema.roles())},
          {"trigger_types", labels_json(schema.trigger_types())},
          {"slots", labels_json(schema.slots())},
          {"label_map", schema.label_map()}};
}

TaskSchema schema_from_json(const json &doc) {
  try {
    if (doc.contains("format_version") &&
        doc.at("format_version").get<int>() != kFormatVersion) {
      throw std::invalid_argument("unsupported format_version");
    }
    const std::string task = doc.at("task").get<std::string>();
    const auto kind = parse_task_name(task);
    if (!kind) throw std::invalid_argument("unknown task '" + task + "'");
    TaskSchema schema(*kind, doc.value("dataset", std::string()));
    auto list = [&](const char *key) {
      return doc.contains(key) ? doc.at(key).get<std::vector<std::string>>()
                               : std::vector<std::string>{};
    };
    schema.set_labels(LabelCategory::kEntity, list("entity_types"));
    schema.set_labels(LabelCategory::kRelation, list("relation_types"));
    schema.set_labels(LabelCategory::kRole, list("roles"));
    schema.set_labels(LabelCategory::kTrigger, list("trigger_types"));
    schema.set_slots(list("slots"));
    if (doc.contains("label_map")) {
      for (const auto &[label, natural] :
           doc.at("label_map").get<std::map<std::string, std::string>>()) {
        schema.map_label(label, natural);
      }
    }
    const auto violations = schema.violations();
    if (!violations.empty()) throw std::invalid_argument(violations.front());
    return schema;
  } catch (const json::exception &e) {
    throw std::invalid_argument(e.what());
  }
}

json report_to_json(const metrics::MetricReport &report) {
  json metrics_json = json::object();
  for (const auto &[name, entry] : report.metrics) {
    json j = score_json(entry.score);
    if (!entry.per_type.empty()) {
      json per_type = json::object();
      for (const auto &[type, s] : entry.per_type) per_type[type] = score_json(s);
      j["per_type"] = std::move(per_type);
    }
    if (entry.macro_f1) j["macro_f1"] = *entry.macro_f1;
    metrics_json[name] = std::move(j);
  }
  return {{"metrics", std::move(metrics_json)}, {"summary", report.summary}};
}

ReadResult read_examples(std::istream &in, bool strict) {
  ReadResult result;
  std::string line;
  size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (unicode::split_whitespace(line).empty()) continue;
    try {
      result.examples.push_back(from_json(json::parse(line)));
    } catch (const std::exception &e) {
      if (strict) throw RecordError(number, e.what());
      result.errors.push_back({number, e.what()});
    }
  }
  return result;
}

ReadResult read_examples(const std::string &path, bool strict) {
  if (path == "-") return read_examples(std::cin, strict);
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_examples(in, strict);
}

void write_examples(const std::vector<StructuredExample> &examples,
                    std::ostream &out) {
  for (const StructuredExample &ex : examples) out << to_json(ex).dump() << '\n';
  if (!out) throw IoError("write failed");
}

void write_examples(const std::vector<StructuredExample> &examples,
                    const std::string &path) {
  if (path == "-") {
    write_examples(examples, std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_examples(examples, out);
}

TaskSchema read_schema(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception &e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return schema_from_json(doc);
}

void write_schema(const TaskSchema &schema, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << schema_to_json(schema).dump(2) << '\n';
  if (!out) throw IoError("write failed");
}

std::vector<EncodedPair> mix_datasets(const std::vector<NamedStream> &streams,
                                      uint64_t seed) {
  if (streams.empty()) throw std::invalid_argument("no dataset to mix");
  std::set<std::string> names;
  for (const NamedStream &s : streams) {
    const auto words = unicode::split_whitespace(s.name);
    if (words.empty()) throw std::invalid_argument("empty dataset name");
    for (std::string_view w : words) {
      if (special_token(w)) {
        throw std::invalid_argument("dataset name '" + s.name +
                                    "' contains a special token");
      }
    }
    if (!names.insert(s.name).second) {
      throw std::invalid_argument("duplicate dataset name '" + s.name + "'");
    }
  }
  std::vector<EncodedPair> out;
  for (const NamedStream &s : streams) {
    for (const EncodedPair &p : s.pairs) {
      out.push_back({with_dataset_prefix(s.name, p.input), p.target});
    }
  }
  std::mt19937_64 rng(seed);
  for (size_t i = out.size(); i > 1; --i) {
    const size_t j = static_cast<size_t>(uniform(rng, i - 1));
    std::swap(out[i - 1], out[j]);
  }
  return out;
}

}  // namespace anl::io
