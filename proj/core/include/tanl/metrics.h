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

// Evaluation metrics. Corpus-level functions take predictions and gold
// examples aligned by position and throw std::invalid_argument on a length
// mismatch.

#ifndef TANL_METRICS_H_
#define TANL_METRICS_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tanl/types.h"

namespace anl::metrics {

// Precision and recall as explicit fractions so that corpus aggregation is
// a plain sum. For counting metrics precision_num == recall_num == tp.
struct Score {
  double precision_num = 0;
  double precision_den = 0;  // predicted count
  double recall_num = 0;
  double recall_den = 0;     // gold count

  double precision() const;  // 0 when precision_den == 0
  double recall() const;     // 0 when recall_den == 0
  double f1() const;         // 0 when precision + recall == 0

  Score &operator+=(const Score &other);
};

Score counts(double tp, double predicted, double gold);

struct MetricEntry {
  Score score;
  std::map<std::string, Score> per_type;
  // Unweighted mean of per-type F1 over types with a prediction or a gold
  // item; nullopt without a per-type breakdown.
  std::optional<double> macro_f1;
};

struct MetricReport {
  std::map<std::string, MetricEntry> metrics;
  std::map<std::string, double> summary;  // e.g. "avg_f1", "joint_accuracy"

  const MetricEntry &at(const std::string &name) const { return metrics.at(name); }
};

enum class RelationMatch {
  kStrict,      // type, head span, tail span, and both entity types
  kBoundaries,  // type, head span and tail span
};

// "entity": correct iff span and type match.
MetricReport entity_f1(std::span<const StructuredExample> pred,
                       std::span<const StructuredExample> gold);

// "relation".
MetricReport relation_f1(std::span<const StructuredExample> pred,
                         std::span<const StructuredExample> gold,
                         RelationMatch match = RelationMatch::kStrict);

// "trigger_id", "trigger_cl", "argument_id", "argument_cl".
MetricReport event_scores(std::span<const StructuredExample> pred,
                          std::span<const StructuredExample> gold);

// "srl": correct iff predicate span, argument span and role match.
MetricReport srl_f1(std::span<const StructuredExample> pred,
                    std::span<const StructuredExample> gold);

// Per-document coreference scores.
Score muc(const std::vector<MentionGroup> &pred,
          const std::vector<MentionGroup> &gold);
Score b_cubed(const std::vector<MentionGroup> &pred,
              const std::vector<MentionGroup> &gold);
Score ceaf_phi4(const std::vector<MentionGroup> &pred,
                const std::vector<MentionGroup> &gold);

// "muc", "b_cubed", "ceaf_phi4" summed over documents; summary "avg_f1" is
// the mean of the three F1 values.
MetricReport coref_scores(std::span<const StructuredExample> pred,
                          std::span<const StructuredExample> gold);
MetricReport coref_scores(const std::vector<MentionGroup> &pred,
                          const std::vector<MentionGroup> &gold);

// summary "joint_accuracy": fraction of turns whose whole state matches.
// Throws std::invalid_argument when the slot sets of a pair differ.
MetricReport dst_joint_accuracy(std::span<const DialogueState> pred,
                                std::span<const DialogueState> gold);
MetricReport dst_joint_accuracy(std::span<const StructuredExample> pred,
                                std::span<const StructuredExample> gold);

// Maximum-weight one-to-one assignment of rows to columns (rectangular
// allowed). Returns, for each row, its column or -1.
std::vector<int> max_weight_assignment(
    const std::vector<std::vector<double>> &weights);

// Dispatches on the task of the gold examples.
MetricReport evaluate(std::span<const StructuredExample> pred,
                      std::span<const StructuredExample> gold,
                      RelationMatch match = RelationMatch::kStrict);

}  // namespace anl::metrics

#endif  // TANL_METRICS_H_
