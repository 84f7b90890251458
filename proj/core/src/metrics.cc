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


#include "tanl/metrics.h"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <tuple>

namespace anl::metrics {
namespace {

void check_sizes(size_t pred, size_t gold) {
  if (pred != gold) {
    throw std::invalid_argument("prediction and gold corpora differ in length: " +
                                std::to_string(pred) + " vs " +
                                std::to_string(gold));
  }
}

// Micro counts over two item sets of one document, with a per-type split.
template <typename Item, typename TypeOf>
void accumulate(const std::set<Item> &pred, const std::set<Item> &gold,
                TypeOf type_of, MetricEntry *entry) {
  double tp = 0;
  for (const Item &p : pred) {
    const bool hit = gold.contains(p);
    tp += hit ? 1 : 0;
    Score &s = entry->per_type[type_of(p)];
    s.precision_den += 1;
    if (hit) {
      s.precision_num += 1;
      s.recall_num += 1;
    }
  }
  for (const Item &g : gold) entry->per_type[type_of(g)].recall_den += 1;
  entry->score += counts(tp, static_cast<double>(pred.size()),
                         static_cast<double>(gold.size()));
}

template <typename Item>
void accumulate(const std::set<Item> &pred, const std::set<Item> &gold,
                MetricEntry *entry) {
  double tp = 0;
  for (const Item &p : pred) tp += gold.contains(p) ? 1 : 0;
  entry->score += counts(tp, static_cast<double>(pred.size()),
                         static_cast<double>(gold.size()));
}

void finish_macro(MetricEntry *entry) {
  if (entry->per_type.empty()) {
    entry->macro_f1 = 0.0;
    return;
  }
  double sum = 0;
  for (const auto &[type, s] : entry->per_type) sum += s.f1();
  entry->macro_f1 = sum / static_cast<double>(entry->per_type.size());
}

using EntityKey = std::tuple<Span, std::string>;

std::set<EntityKey> entity_set(const StructuredExample &ex) {
  std::set<EntityKey> out;
  for (const FlatEntity &e : flatten_entities(ex.entities)) {
    out.emplace(e.span, e.type.value_or(""));
  }
  return out;
}

using RelationKey =
    std::tuple<std::string, Span, std::string, Span, std::string>;

std::set<RelationKey> relation_set(const StructuredExample &ex,
                                   RelationMatch match) {
  const auto flat = flatten_entities(ex.entities);
  std::set<RelationKey> out;
  for (const Relation &r : ex.relations) {
    if (r.head >= flat.size() || r.tail >= flat.size()) continue;
    const FlatEntity &h = flat[r.head];
    const FlatEntity &t = flat[r.tail];
    if (match == RelationMatch::kStrict) {
      out.emplace(r.type, h.span, h.type.value_or(""), t.span, t.type.value_or(""));
    } else {
      out.emplace(r.type, h.span, "", t.span, "");
    }
  }
  return out;
}

size_t overlap(const MentionGroup &a, const MentionGroup &b) {
  size_t n = 0;
  for (const Mention &m : a) {
    if (std::binary_search(b.begin(), b.end(), m)) ++n;
  }
  return n;
}

std::vector<MentionGroup> sorted_groups(const std::vector<MentionGroup> &groups) {
  std::vector<MentionGroup> out;
  for (MentionGroup g : groups) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    if (!g.empty()) out.push_back(std::move(g));
  }
  return out;
}

// Sum over clusters of |K| - |partitions of K induced by `response`|, and the
// sum of |K| - 1: the numerator and denominator of one MUC side.
std::pair<double, double> muc_side(const std::vector<MentionGroup> &key,
                                   const std::vector<MentionGroup> &response) {
  std::map<Mention, size_t> cluster_of;
  for (size_t i = 0; i < response.size(); ++i) {
    for (const Mention &m : response[i]) cluster_of[m] = i;
  }
  double num = 0;
  double den = 0;
  for (const MentionGroup &k : key) {
    std::set<size_t> parts;
    size_t unmatched = 0;
    for (const Mention &m : k) {
      auto it = cluster_of.find(m);
      if (it == cluster_of.end()) {
        ++unmatched;
      } else {
        parts.insert(it->second);
      }
    }
    num += static_cast<double>(k.size() - parts.size() - unmatched);
    den += static_cast<double>(k.size() - 1);
  }
  return {num, den};
}

double b_cubed_side(const std::vector<MentionGroup> &key,
                    const std::vector<MentionGroup> &response) {
  std::map<Mention, size_t> cluster_of;
  for (size_t i = 0; i < response.size(); ++i) {
    for (const Mention &m : response[i]) cluster_of[m] = i;
  }
  double sum = 0;
  for (const MentionGroup &k : key) {
    for (const Mention &m : k) {
      auto it = cluster_of.find(m);
      if (it == cluster_of.end()) continue;
      sum += static_cast<double>(overlap(k, response[it->second])) /
             static_cast<double>(k.size());
    }
  }
  return sum;
}

size_t mention_count(const std::vector<MentionGroup> &groups) {
  size_t n = 0;
  for (const MentionGroup &g : groups) n += g.size();
  return n;
}

}  // namespace

double Score::precision() const {
  return precision_den > 0 ? precision_num / precision_den : 0.0;
}

double Score::recall() const {
  return recall_den > 0 ? recall_num / recall_den : 0.0;
}

double Score::f1() const {
  const double p = precision();
  const double r = recall();
  return p + r > 0 ? 2 * p * r / (p + r) : 0.0;
}

Score &Score::operator+=(const Score &other) {
  precision_num += other.precision_num;
  precision_den += other.precision_den;
  recall_num += other.recall_num;
  recall_den += other.recall_den;
  return *this;
}

Score counts(double tp, double predicted, double gold) {
  return {tp, predicted, tp, gold};
}

MetricReport entity_f1(std::span<const StructuredExample> pred,
                       std::span<const StructuredExample> gold) {
  check_sizes(pred.size(), gold.size());
  MetricReport report;
  MetricEntry &entry = report.metrics["entity"];
  for (size_t i = 0; i < gold.size(); ++i) {
    accumulate(entity_set(pred[i]), entity_set(gold[i]),
               [](const EntityKey &k) { return std::get<1>(k); }, &entry);
  }
  finish_macro(&entry);
  return report;
}

MetricReport relation_f1(std::span<const StructuredExample> pred,
                         std::span<const StructuredExample> gold,
                         RelationMatch match) {
  check_sizes(pred.size(), gold.size());
  MetricReport report;
  MetricEntry &entry = report.metrics["relation"];
  for (size_t i = 0; i < gold.size(); ++i) {
    accumulate(relation_set(pred[i], match), relation_set(gold[i], match),
               [](const RelationKey &k) { return std::get<0>(k); }, &entry);
  }
  finish_macro(&entry);
  return report;
}

MetricReport event_scores(std::span<const StructuredExample> pred,
                          std::span<const StructuredExample> gold) {
  check_sizes(pred.size(), gold.size());
  MetricReport report;
  MetricEntry &trigger_id = report.metrics["trigger_id"];
  MetricEntry &trigger_cl = report.metrics["trigger_cl"];
  MetricEntry &argument_id = report.metrics["argument_id"];
  MetricEntry &argument_cl = report.metrics["argument_cl"];

  using ArgId = std::tuple<Span, Span>;
  using ArgCl = std::tuple<Span, Span, std::string>;
  struct Sets {
    std::set<Span> tid;
    std::set<EventTrigger> tcl;
    std::set<ArgId> aid;
    std::set<ArgCl> acl;
  };
  auto sets_of = [](const StructuredExample &ex) {
    Sets s;
    for (const EventTrigger &t : ex.triggers) {
      s.tid.insert(t.span);
      s.tcl.insert(t);
    }
    for (const EventArgument &a : ex.arguments) {
      if (a.trigger >= ex.triggers.size()) continue;
      const Span trigger = ex.triggers[a.trigger].span;
      s.aid.emplace(a.span, trigger);
      s.acl.emplace(a.span, trigger, a.role);
    }
    return s;
  };
  for (size_t i = 0; i < gold.size(); ++i) {
    const Sets p = sets_of(pred[i]);
    const Sets g = sets_of(gold[i]);
    accumulate(p.tid, g.tid, &trigger_id);
    accumulate(p.tcl, g.tcl, [](const EventTrigger &t) { return t.type; },
               &trigger_cl);
    accumulate(p.aid, g.aid, &argument_id);
    accumulate(p.acl, g.acl, [](const ArgCl &a) { return std::get<2>(a); },
               &argument_cl);
  }
  finish_macro(&trigger_cl);
  finish_macro(&argument_cl);
  return report;
}

MetricReport srl_f1(std::span<const StructuredExample> pred,
                    std::span<const StructuredExample> gold) {
  check_sizes(pred.size(), gold.size());
  using Key = std::tuple<Span, Span, std::string>;
  auto set_of = [](const StructuredExample &ex) {
    std::set<Key> out;
    for (const SrlFrame &f : ex.frames) {
      for (const SrlArgument &a : f.arguments) out.emplace(f.predicate, a.span, a.role);
    }
    return out;
  };
  MetricReport report;
  MetricEntry &entry = report.metrics["srl"];
  for (size_t i = 0; i < gold.size(); ++i) {
    accumulate(set_of(pred[i]), set_of(gold[i]),
               [](const Key &k) { return std::get<2>(k); }, &entry);
  }
  finish_macro(&entry);
  return report;
}

Score muc(const std::vector<MentionGroup> &pred,
          const std::vector<MentionGroup> &gold) {
  const auto p = sorted_groups(pred);
  const auto g = sorted_groups(gold);
  const auto [rn, rd] = muc_side(g, p);
  const auto [pn, pd] = muc_side(p, g);
  return {pn, pd, rn, rd};
}

Score b_cubed(const std::vector<MentionGroup> &pred,
              const std::vector<MentionGroup> &gold) {
  const auto p = sorted_groups(pred);
  const auto g = sorted_groups(gold);
  return {b_cubed_side(p, g), static_cast<double>(mention_count(p)),
          b_cubed_side(g, p), static_cast<double>(mention_count(g))};
}

Score ceaf_phi4(const std::vector<MentionGroup> &pred,
                const std::vector<MentionGroup> &gold) {
  const auto p = sorted_groups(pred);
  const auto g = sorted_groups(gold);
  std::vector<std::vector<double>> sim(g.size(), std::vector<double>(p.size()));
  for (size_t i = 0; i < g.size(); ++i) {
    for (size_t j = 0; j < p.size(); ++j) {
      sim[i][j] = 2.0 * static_cast<double>(overlap(g[i], p[j])) /
                  static_cast<double>(g[i].size() + p[j].size());
    }
  }
  double total = 0;
  const std::vector<int> assignment = max_weight_assignment(sim);
  for (size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] >= 0) total += sim[i][static_cast<size_t>(assignment[i])];
  }
  return {total, static_cast<double>(p.size()), total,
          static_cast<double>(g.size())};
}

MetricReport coref_scores(std::span<const StructuredExample> pred,
                          std::span<const StructuredExample> gold) {
  check_sizes(pred.size(), gold.size());
  MetricReport report;
  MetricEntry &m = report.metrics["muc"];
  MetricEntry &b = report.metrics["b_cubed"];
  MetricEntry &c = report.metrics["ceaf_phi4"];
  for (size_t i = 0; i < gold.size(); ++i) {
    m.score += muc(pred[i].mention_groups, gold[i].mention_groups);
    b.score += b_cubed(pred[i].mention_groups, gold[i].mention_groups);
    c.score += ceaf_phi4(pred[i].mention_groups, gold[i].mention_groups);
  }
  report.summary["avg_f1"] = (m.score.f1() + b.score.f1() + c.score.f1()) / 3.0;
  return report;
}

MetricReport coref_scores(const std::vector<MentionGroup> &pred,
                          const std::vector<MentionGroup> &gold) {
  StructuredExample p;
  StructuredExample g;
  p.task = g.task = TaskKind::kCoreference;
  p.mention_groups = pred;
  g.mention_groups = gold;
  return coref_scores(std::span<const StructuredExample>(&p, 1),
                      std::span<const StructuredExample>(&g, 1));
}

MetricReport dst_joint_accuracy(std::span<const DialogueState> pred,
                                std::span<const DialogueState> gold) {
  check_sizes(pred.size(), gold.size());
  double correct = 0;
  for (size_t i = 0; i < gold.size(); ++i) {
    const auto &p = pred[i].state;
    const auto &g = gold[i].state;
    const bool same_slots =
        p.size() == g.size() &&
        std::equal(p.begin(), p.end(), g.begin(),
                   [](const auto &a, const auto &b) { return a.first == b.first; });
    if (!same_slots) {
      throw std::invalid_argument("slot sets differ at turn " + std::to_string(i));
    }
    if (p == g) correct += 1;
  }
  MetricReport report;
  const double total = static_cast<double>(gold.size());
  report.metrics["joint_accuracy"].score = counts(correct, total, total);
  report.summary["joint_accuracy"] = total > 0 ? correct / total : 0.0;
  return report;
}

MetricReport dst_joint_accuracy(std::span<const StructuredExample> pred,
                                std::span<const StructuredExample> gold) {
  check_sizes(pred.size(), gold.size());
  std::vector<DialogueState> p;
  std::vector<DialogueState> g;
  for (size_t i = 0; i < gold.size(); ++i) {
    p.push_back(pred[i].dialogue.value_or(DialogueState{}));
    g.push_back(gold[i].dialogue.value_or(DialogueState{}));
  }
  return dst_joint_accuracy(std::span<const DialogueState>(p),
                            std::span<const DialogueState>(g));
}

std::vector<int> max_weight_assignment(
    const std::vector<std::vector<double>> &weights) {
  const size_t rows = weights.size();
  size_t cols = 0;
  for (const auto &r : weights) cols = std::max(cols, r.size());
  const size_t n = std::max(rows, cols);
  if (n == 0) return {};

  // Hungarian algorithm (potentials form) minimizing the negated weights on
  // an n x n matrix padded with zeros; indices are 1-based inside.
  auto cost = [&](size_t i, size_t j) {
    if (i < rows && j < weights[i].size()) return -weights[i][j];
    return 0.0;
  };
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1), v(n + 1);
  std::vector<size_t> p(n + 1), way(n + 1);
  for (size_t i = 1; i <= n; ++i) {
    p[0] = i;
    size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const size_t i0 = p[j0];
      double delta = inf;
      size_t j1 = 0;
      for (size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> out(rows, -1);
  for (size_t j = 1; j <= n; ++j) {
    const size_t i = p[j];
    if (i >= 1 && i <= rows && j - 1 < weights[i - 1].size()) {
      out[i - 1] = static_cast<int>(j - 1);
    }
  }
  return out;
}

MetricReport evaluate(std::span<const StructuredExample> pred,
                      std::span<const StructuredExample> gold,
                      RelationMatch match) {
  check_sizes(pred.size(), gold.size());
  if (gold.empty()) return {};
  switch (gold.front().task) {
    case TaskKind::kEntityRelation: {
      MetricReport report = entity_f1(pred, gold);
      MetricReport rel = relation_f1(pred, gold, match);
      report.metrics.merge(rel.metrics);
      return report;
    }
    case TaskKind::kNer:
      return entity_f1(pred, gold);
    case TaskKind::kRelationClassification: {
      MetricReport report;
      MetricEntry &entry = report.metrics["relation"];
      double correct = 0;
      for (size_t i = 0; i < gold.size(); ++i) {
        std::set<std::string> p;
        std::set<std::string> g;
        if (pred[i].relation_type) p.insert(*pred[i].relation_type);
        if (gold[i].relation_type) g.insert(*gold[i].relation_type);
        accumulate(p, g, [](const std::string &t) { return t; }, &entry);
        if (pred[i].relation_type == gold[i].relation_type) correct += 1;
      }
      finish_macro(&entry);
      report.summary["accuracy"] = correct / static_cast<double>(gold.size());
      return report;
    }
    case TaskKind::kSrl:
      return srl_f1(pred, gold);
    case TaskKind::kEvent:
      return event_scores(pred, gold);
    case TaskKind::kCoreference:
      return coref_scores(pred, gold);
    case TaskKind::kDst:
      return dst_joint_accuracy(pred, gold);
  }
  return {};
}

}  // namespace anl::metrics
