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


#include "cli.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tanl/align.h"
#include "tanl/coref.h"
#include "tanl/decode.h"
#include "tanl/io.h"
#include "tanl/metrics.h"
#include "tanl/schema.h"
#include "tanl/tasks.h"

namespace anl::cli {
namespace {

using nlohmann::json;

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class LogLevel { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

class Logger {
 public:
  explicit Logger(std::ostream &err) : err_(err) {
    const char *env = std::getenv("TANL_LOG");
    const std::string v = env == nullptr ? "" : env;
    if (v == "error") {
      level_ = LogLevel::kError;
    } else if (v == "info") {
      level_ = LogLevel::kInfo;
    } else if (v == "debug") {
      level_ = LogLevel::kDebug;
    }
  }

  void log(LogLevel level, const std::string &message) {
    if (level > level_) return;
    static constexpr const char *kNames[] = {"error", "warn", "info", "debug"};
    err_ << "tanl: " << kNames[static_cast<int>(level)] << ": " << message
         << '\n';
  }

 private:
  std::ostream &err_;
  LogLevel level_ = LogLevel::kWarn;
};

struct Options {
  std::string schema;
  std::string input = "-";
  std::vector<std::string> inputs;  // mix: name=path
  std::string output = "-";
  std::string gold;
  std::string mode = "natural";
  std::string coref_reference = "first";
  std::string relation_format = "phrase";
  bool no_alignment = false;
  double gap = -0.5;
  std::optional<double> sub_threshold;
  bool relation_strict = false;
  uint64_t seed = 0;
  bool prefix_datasets = false;
  size_t chunk_size = 1024;
  size_t chunk_overlap = 128;
  unsigned jobs = 1;
  bool strict = false;
};

// An input or output stream that is either a file or a standard stream.
class InputFile {
 public:
  InputFile(const std::string &path, std::istream &std_in) {
    if (path == "-") {
      stream_ = &std_in;
      return;
    }
    file_ = std::make_unique<std::ifstream>(path);
    if (!*file_) throw DataError("cannot open '" + path + "'");
    stream_ = file_.get();
  }
  std::istream &get() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream *stream_ = nullptr;
};

class OutputFile {
 public:
  OutputFile(const std::string &path, std::ostream &std_out) {
    if (path == "-") {
      stream_ = &std_out;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw DataError("cannot open '" + path + "' for writing");
    stream_ = file_.get();
  }
  std::ostream &get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream *stream_ = nullptr;
};

// Applies `fn` to every non-blank line, `jobs` lines at a time in parallel,
// and hands results to `sink` in input order. Failed records are logged and
// skipped, or abort the run when `strict`.
void for_each_record(std::istream &in, const Options &opts, Logger &log,
                     const std::function<std::string(const json &)> &fn,
                     const std::function<void(size_t, std::string)> &sink) {
  const size_t batch = 64 * std::max(1u, opts.jobs);
  std::string line;
  size_t number = 0;
  bool eof = false;
  while (!eof) {
    std::vector<std::pair<size_t, std::string>> lines;
    while (lines.size() < batch) {
      if (!std::getline(in, line)) {
        eof = true;
        break;
      }
      ++number;
      if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
      lines.emplace_back(number, line);
    }
    std::vector<std::string> results(lines.size());
    std::vector<std::string> errors(lines.size());
    std::vector<char> ok(lines.size(), 0);
    auto work = [&](size_t first, size_t stride) {
      for (size_t i = first; i < lines.size(); i += stride) {
        try {
          results[i] = fn(json::parse(lines[i].second));
          ok[i] = 1;
        } catch (const std::exception &e) {
          errors[i] = e.what();
        }
      }
    };
    const size_t workers = std::min<size_t>(std::max(1u, opts.jobs), lines.size());
    if (workers <= 1) {
      work(0, 1);
    } else {
      std::vector<std::thread> threads;
      for (size_t t = 0; t < workers; ++t) threads.emplace_back(work, t, workers);
      for (std::thread &t : threads) t.join();
    }
    for (size_t i = 0; i < lines.size(); ++i) {
      if (!ok[i]) {
        if (opts.strict) throw io::RecordError(lines[i].first, errors[i]);
        log.log(LogLevel::kWarn,
                "line " + std::to_string(lines[i].first) + ": " + errors[i]);
        continue;
      }
      sink(lines[i].first, std::move(results[i]));
    }
  }
}

EncodeOptions encode_options(const Options &opts) {
  EncodeOptions e;
  e.mode = *parse_mode_name(opts.mode);
  e.coref_reference = opts.coref_reference == "previous"
                          ? CorefReference::kPreviousMention
                          : CorefReference::kFirstMention;
  if (opts.relation_format == "label") {
    e.relation_format = RelationFormat::kLabelOnly;
  } else if (opts.relation_format == "inline") {
    e.relation_format = RelationFormat::kInlineMarkers;
  }
  return e;
}

TaskDecodeOptions decode_options(const Options &opts) {
  TaskDecodeOptions d;
  d.encode = encode_options(opts);
  d.decode.mode = d.encode.mode;
  d.decode.use_alignment = !opts.no_alignment;
  d.decode.align.gap = opts.gap;
  if (opts.sub_threshold) d.decode.align.sub_threshold = *opts.sub_threshold;
  d.decode.align.check();
  return d;
}

ChunkingConfig chunking(const Options &opts) {
  ChunkingConfig cfg{opts.chunk_size, opts.chunk_overlap};
  cfg.check();
  return cfg;
}

TaskSchema load_schema(const Options &opts) {
  if (opts.schema.empty()) throw std::invalid_argument("--schema is required");
  try {
    return io::read_schema(opts.schema);
  } catch (const std::exception &e) {
    throw DataError(e.what());
  }
}

// A decode record: an example (or "text") plus a "generated" string, or a
// list of strings for chunked coreference documents.
StructuredExample record_example(json rec, const TaskSchema &schema) {
  if (!rec.contains("tokens") && rec.contains("text")) {
    const TokenSeq t = tokenize(rec.at("text").get<std::string>());
    rec["tokens"] = t.texts();
    if (!t.has_default_gaps()) rec["gaps"] = t.gaps();
  }
  if (!rec.contains("task")) rec["task"] = std::string(task_name(schema.task()));
  if (!rec.contains("dataset")) rec["dataset"] = schema.dataset();
  rec.erase("text");
  rec.erase("generated");
  rec.erase("scores");
  return io::from_json(rec);
}

DecodeReport decode_record(const json &rec, const TaskSchema &schema,
                           const Options &opts) {
  const StructuredExample ex = record_example(rec, schema);
  const json &generated = rec.at("generated");
  const TaskDecodeOptions dopts = decode_options(opts);
  if (!generated.is_array()) {
    return decode_task(generated.get<std::string>(), ex, schema, dopts);
  }
  if (ex.task != TaskKind::kCoreference) {
    throw std::invalid_argument("chunked output is only defined for coreference");
  }
  const std::vector<Chunk> chunks = chunk_document(ex.tokens, chunking(opts));
  if (generated.size() != chunks.size()) {
    throw std::invalid_argument("expected " + std::to_string(chunks.size()) +
                                " generated chunks, got " +
                                std::to_string(generated.size()));
  }
  DecodeReport merged;
  merged.example = input_side(ex);
  std::vector<MentionGroup> groups;
  const StructuredExample doc = input_side(ex);
  for (size_t i = 0; i < chunks.size(); ++i) {
    const StructuredExample part = slice_coref_example(doc, chunks[i]);
    DecodeReport r = decode_task(generated[i].get<std::string>(), part, schema, dopts);
    for (ErrorKind k : r.flags.kinds()) merged.flags.set(k);
    merged.discarded_entities += r.discarded_entities;
    merged.issues.insert(merged.issues.end(), r.issues.begin(), r.issues.end());
    auto shifted = shift_groups(r.example.mention_groups, chunks[i].offset);
    groups.insert(groups.end(), shifted.begin(), shifted.end());
  }
  merged.example.mention_groups = merge_chunk_groups(groups);
  return merged;
}

json error_names(const ErrorFlags &flags) {
  json arr = json::array();
  for (ErrorKind k : flags.kinds()) arr.push_back(std::string(error_name(k)));
  return arr;
}

std::string encode_pair(const std::string &input, const std::string &target,
                        const std::string &dataset, const Options &opts) {
  json j;
  j["input"] = opts.prefix_datasets ? with_dataset_prefix(dataset, input) : input;
  j["target"] = target;
  return j.dump();
}

int cmd_encode(const Options &opts, std::istream &in, std::ostream &out,
               Logger &log) {
  const TaskSchema schema = load_schema(opts);
  const EncodeOptions eopts = encode_options(opts);
  const ChunkingConfig cfg = chunking(opts);
  InputFile input(opts.input, in);
  OutputFile output(opts.output, out);
  size_t count = 0;
  for_each_record(
      input.get(), opts, log,
      [&](const json &rec) {
        const StructuredExample ex = io::from_json(rec);
        const std::string dataset = ex.dataset.empty() ? schema.dataset() : ex.dataset;
        if (ex.task == TaskKind::kCoreference && ex.tokens.size() > cfg.max_length) {
          std::string lines;
          for (const Chunk &c : chunk_document(ex.tokens, cfg)) {
            const StructuredExample part = slice_coref_example(ex, c);
            if (!lines.empty()) lines += '\n';
            json j = json::parse(encode_pair(encode_input(part, schema, eopts),
                                             encode_target(part, schema, eopts),
                                             dataset, opts));
            j["offset"] = c.offset;
            lines += j.dump();
          }
          return lines;
        }
        return encode_pair(encode_input(ex, schema, eopts),
                           encode_target(ex, schema, eopts), dataset, opts);
      },
      [&](size_t, std::string line) {
        output.get() << line << '\n';
        ++count;
      });
  log.log(LogLevel::kInfo, "encoded " + std::to_string(count) + " records");
  return 0;
}

int cmd_decode(const Options &opts, std::istream &in, std::ostream &out,
               Logger &log) {
  const TaskSchema schema = load_schema(opts);
  decode_options(opts);
  InputFile input(opts.input, in);
  OutputFile output(opts.output, out);
  for_each_record(
      input.get(), opts, log,
      [&](const json &rec) {
        const DecodeReport r = decode_record(rec, schema, opts);
        json j = io::to_json(r.example);
        j["errors"] = error_names(r.flags);
        return j.dump();
      },
      [&](size_t, std::string line) { output.get() << line << '\n'; });
  return 0;
}

int cmd_errors(const Options &opts, std::istream &in, std::ostream &out,
               Logger &log) {
  const TaskSchema schema = load_schema(opts);
  decode_options(opts);
  InputFile input(opts.input, in);
  constexpr ErrorKind kKinds[] = {ErrorKind::kReconstruction, ErrorKind::kFormat,
                                  ErrorKind::kEntity, ErrorKind::kLabel};
  std::map<std::string, size_t> counts;
  for (ErrorKind k : kKinds) counts[std::string(error_name(k))] = 0;
  size_t total = 0;
  size_t any = 0;
  json per_record = json::array();
  for_each_record(
      input.get(), opts, log,
      [&](const json &rec) {
        return error_names(decode_record(rec, schema, opts).flags).dump();
      },
      [&](size_t line, std::string result) {
        const json names = json::parse(result);
        ++total;
        if (!names.empty()) ++any;
        for (const auto &n : names) ++counts[n.get<std::string>()];
        per_record.push_back({{"line", line}, {"errors", names}});
      });
  auto percent = [&](size_t n) {
    return total == 0 ? 0.0 : 100.0 * static_cast<double>(n) / static_cast<double>(total);
  };
  json summary;
  summary["records"] = total;
  summary["counts"] = counts;
  json pct = json::object();
  for (const auto &[name, n] : counts) pct[name] = percent(n);
  summary["percent"] = pct;
  summary["any"] = {{"count", any}, {"percent", percent(any)}};
  summary["per_record"] = per_record;
  OutputFile output(opts.output, out);
  output.get() << summary.dump(2) << '\n';
  return 0;
}

int cmd_align(const Options &opts, std::istream &in, std::ostream &out,
              Logger &log) {
  AlignParams params;
  params.gap = opts.gap;
  if (opts.sub_threshold) params.sub_threshold = *opts.sub_threshold;
  params.check();
  auto tokens_of = [](const json &j) {
    if (j.is_array()) return j.get<std::vector<std::string>>();
    return tokenize(j.get<std::string>(), Granularity::kWhitespace).texts();
  };
  InputFile input(opts.input, in);
  OutputFile output(opts.output, out);
  for_each_record(
      input.get(), opts, log,
      [&](const json &rec) {
        const AlignmentMap map =
            nw_align(tokens_of(rec.at("output")), tokens_of(rec.at("input")), params);
        json to_input = json::array();
        for (const auto &t : map.to_input) {
          to_input.push_back(t ? json(*t) : json(nullptr));
        }
        return json{{"to_input", to_input}, {"score", map.score}}.dump();
      },
      [&](size_t, std::string line) { output.get() << line << '\n'; });
  return 0;
}

std::vector<StructuredExample> read_all(const std::string &path, std::istream &in,
                                        const Options &opts, Logger &log) {
  InputFile input(path, in);
  io::ReadResult r = io::read_examples(input.get(), opts.strict);
  for (const io::LineError &e : r.errors) {
    log.log(LogLevel::kWarn, path + ": line " + std::to_string(e.line) + ": " +
                                 e.message);
  }
  return std::move(r.examples);
}

int cmd_eval(const Options &opts, std::istream &in, std::ostream &out,
             Logger &log) {
  if (opts.gold.empty()) throw std::invalid_argument("--gold is required");
  const auto gold = read_all(opts.gold, in, opts, log);
  const auto pred = read_all(opts.input, in, opts, log);
  if (gold.size() != pred.size()) {
    throw DataError("gold has " + std::to_string(gold.size()) +
                    " records, predictions have " + std::to_string(pred.size()));
  }
  const metrics::MetricReport report = metrics::evaluate(
      pred, gold,
      opts.relation_strict ? metrics::RelationMatch::kStrict
                           : metrics::RelationMatch::kBoundaries);
  OutputFile output(opts.output, out);
  output.get() << io::report_to_json(report).dump(2) << '\n';
  return 0;
}

int cmd_candidates(const Options &opts, std::istream &in, std::ostream &out,
                   Logger &log) {
  const TaskSchema schema = load_schema(opts);
  const EncodeOptions eopts = encode_options(opts);
  InputFile input(opts.input, in);
  OutputFile output(opts.output, out);
  for_each_record(
      input.get(), opts, log,
      [&](const json &rec) {
        const StructuredExample ex = record_example(rec, schema);
        const auto candidates = build_candidates(ex, schema, eopts);
        json j;
        json arr = json::array();
        for (const auto &[label, target] : candidates) {
          arr.push_back({{"label", label}, {"target", target}});
        }
        j["candidates"] = std::move(arr);
        if (rec.contains("scores")) {
          const auto scores = rec.at("scores").get<std::vector<double>>();
          if (scores.size() != candidates.size()) {
            throw std::invalid_argument("expected " +
                                        std::to_string(candidates.size()) +
                                        " scores");
          }
          j["prediction"] = candidates[select_by_likelihood(scores)].first;
        }
        return j.dump();
      },
      [&](size_t, std::string line) { output.get() << line << '\n'; });
  return 0;
}

int cmd_mix(const Options &opts, std::istream &in, std::ostream &out,
            Logger &log) {
  if (opts.inputs.empty()) throw std::invalid_argument("mix needs --input name=path");
  std::vector<io::NamedStream> streams;
  for (const std::string &spec : opts.inputs) {
    const size_t eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("expected name=path, got '" + spec + "'");
    }
    io::NamedStream s;
    s.name = spec.substr(0, eq);
    InputFile input(spec.substr(eq + 1), in);
    for_each_record(
        input.get(), opts, log,
        [](const json &rec) {
          return json{{"input", rec.at("input").get<std::string>()},
                      {"target", rec.at("target").get<std::string>()}}
              .dump();
        },
        [&](size_t, std::string line) {
          const json j = json::parse(line);
          s.pairs.push_back({j.at("input"), j.at("target")});
        });
    streams.push_back(std::move(s));
  }
  std::vector<io::EncodedPair> mixed;
  try {
    mixed = io::mix_datasets(streams, opts.seed);
  } catch (const std::invalid_argument &e) {
    throw DataError(e.what());
  }
  OutputFile output(opts.output, out);
  for (const io::EncodedPair &p : mixed) {
    output.get() << json{{"input", p.input}, {"target", p.target}}.dump() << '\n';
  }
  return 0;
}

void add_common(CLI::App *cmd, Options *opts) {
  cmd->add_option("--output,-o", opts->output, "Output path ('-' for stdout)");
  cmd->add_option("--jobs,-j", opts->jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  cmd->add_flag("--strict", opts->strict, "Fail on the first malformed record");
}

void add_format(CLI::App *cmd, Options *opts) {
  cmd->add_option("--mode", opts->mode, "Label encoding")
      ->check(CLI::IsMember({"natural", "numeric", "abridged"}));
  cmd->add_option("--coref-reference", opts->coref_reference,
                  "Antecedent named by coreference tags")
      ->check(CLI::IsMember({"first", "previous"}));
  cmd->add_option("--relation-format", opts->relation_format,
                  "Relation classification layout")
      ->check(CLI::IsMember({"phrase", "label", "inline"}));
  cmd->add_option("--chunk-size", opts->chunk_size, "Coreference chunk length");
  cmd->add_option("--chunk-overlap", opts->chunk_overlap,
                  "Tokens shared by consecutive chunks");
}

void add_alignment(CLI::App *cmd, Options *opts) {
  cmd->add_flag("--no-alignment", opts->no_alignment,
                "Locate groups by first exact match instead of alignment");
  cmd->add_option("--gap", opts->gap, "Gap penalty");
  cmd->add_option("--sub-threshold", opts->sub_threshold,
                  "Treat aligned pairs scoring below this as gaps");
}

}  // namespace

int run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err) {
  Logger log(err);
  Options opts;
  CLI::App app{"Augmented natural language codec for structured prediction"};
  app.name("tanl");
  app.require_subcommand(1, 1);

  CLI::App *encode = app.add_subcommand("encode", "Encode examples as input/target pairs");
  CLI::App *decode = app.add_subcommand("decode", "Decode generated text into examples");
  CLI::App *align = app.add_subcommand("align", "Align token sequences");
  CLI::App *eval = app.add_subcommand("eval", "Score predictions against gold");
  CLI::App *errors = app.add_subcommand("errors", "Classify generation errors");
  CLI::App *candidates =
      app.add_subcommand("candidates", "Build relation classification candidates");
  CLI::App *mix = app.add_subcommand("mix", "Mix encoded datasets with prefixes");

  for (CLI::App *cmd : {encode, decode, errors, candidates}) {
    cmd->add_option("--schema,-s", opts.schema, "Schema JSON file")->required();
    cmd->add_option("--input,-i", opts.input, "Input path ('-' for stdin)");
    add_common(cmd, &opts);
    add_format(cmd, &opts);
  }
  for (CLI::App *cmd : {decode, errors}) add_alignment(cmd, &opts);
  encode->add_flag("--prefix-datasets", opts.prefix_datasets,
                   "Prefix inputs with 'dataset : '");

  align->add_option("--input,-i", opts.input, "Input path ('-' for stdin)");
  add_common(align, &opts);
  align->add_option("--gap", opts.gap, "Gap penalty");
  align->add_option("--sub-threshold", opts.sub_threshold,
                    "Treat aligned pairs scoring below this as gaps");

  eval->add_option("--gold,-g", opts.gold, "Gold examples")->required();
  eval->add_option("--input,-i", opts.input, "Predicted examples");
  eval->add_flag("--relation-strict", opts.relation_strict,
                 "Require head and tail entity types for relations");
  add_common(eval, &opts);

  mix->add_option("--input,-i", opts.inputs, "name=path of an encoded dataset")
      ->required();
  mix->add_option("--seed", opts.seed, "Shuffle seed");
  add_common(mix, &opts);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (encode->parsed()) return cmd_encode(opts, in, out, log);
    if (decode->parsed()) return cmd_decode(opts, in, out, log);
    if (align->parsed()) return cmd_align(opts, in, out, log);
    if (eval->parsed()) return cmd_eval(opts, in, out, log);
    if (errors->parsed()) return cmd_errors(opts, in, out, log);
    if (candidates->parsed()) return cmd_candidates(opts, in, out, log);
    if (mix->parsed()) return cmd_mix(opts, in, out, log);
  } catch (const DataError &e) {
    log.log(LogLevel::kError, e.what());
    return 2;
  } catch (const io::RecordError &e) {
    log.log(LogLevel::kError, e.what());
    return 2;
  } catch (const io::IoError &e) {
    log.log(LogLevel::kError, e.what());
    return 2;
  } catch (const std::invalid_argument &e) {
    log.log(LogLevel::kError, e.what());
    return 1;
  } catch (const std::exception &e) {
    log.log(LogLevel::kError, e.what());
    return 2;
  }
  return 1;
}

}  // namespace anl::cli
