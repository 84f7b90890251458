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


#include "tanl/coref.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace anl {
namespace {

class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  size_t find(size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<size_t> parent_;
};

std::vector<MentionGroup> components(const std::vector<Mention> &mentions,
                                     UnionFind *uf) {
  std::map<size_t, MentionGroup> by_root;
  for (size_t i = 0; i < mentions.size(); ++i) {
    by_root[uf->find(i)].push_back(mentions[i]);
  }
  std::vector<MentionGroup> out;
  out.reserve(by_root.size());
  for (auto &[root, g] : by_root) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CorefResolution resolve_coref_groups(const std::vector<TaggedMention> &mentions,
                                     const TokenSeq &input) {
  std::vector<size_t> order(mentions.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return mentions[a].span < mentions[b].span;
  });

  std::vector<Mention> sorted;
  std::vector<std::string> generated;
  std::vector<std::string> surface;
  for (size_t idx : order) {
    const Span &s = mentions[idx].span;
    sorted.push_back({s});
    generated.push_back(normalize_whitespace(mentions[idx].generated_text));
    surface.push_back(input.join(s.start, std::min(s.end, input.size())));
  }

  CorefResolution res;
  UnionFind uf(sorted.size());
  for (size_t i = 0; i < sorted.size(); ++i) {
    const auto &tag = mentions[order[i]].antecedent;
    if (!tag) continue;
    const std::string wanted = normalize_whitespace(*tag);
    bool found = false;
    for (size_t j = i; j-- > 0;) {
      if (generated[j] == wanted || surface[j] == wanted) {
        uf.unite(i, j);
        found = true;
        break;
      }
    }
    if (!found) ++res.unresolved;
  }
  res.groups = components(sorted, &uf);
  return res;
}

void ChunkingConfig::check() const {
  if (overlap == 0 || overlap >= max_length) {
    throw std::invalid_argument("chunking needs 0 < overlap < max_length");
  }
}

std::vector<Chunk> chunk_document(const TokenSeq &doc, const ChunkingConfig &cfg) {
  cfg.check();
  std::vector<Chunk> out;
  const size_t n = doc.size();
  const size_t stride = cfg.max_length - cfg.overlap;
  for (size_t start = 0;; start += stride) {
    const size_t end = std::min(n, start + cfg.max_length);
    std::vector<std::string> tokens;
    std::vector<std::string> gaps;
    gaps.emplace_back();
    for (size_t i = start; i < end; ++i) {
      tokens.push_back(doc[i].text);
      gaps.push_back(i + 1 < end ? doc.gaps()[i + 1] : std::string());
    }
    out.push_back({start, TokenSeq::FromTokensAndGaps(tokens, gaps)});
    if (end >= n) break;
  }
  return out;
}

StructuredExample slice_coref_example(const StructuredExample &doc,
                                      const Chunk &chunk) {
  StructuredExample out;
  out.task = doc.task;
  out.dataset = doc.dataset;
  out.tokens = chunk.tokens;
  const Span window = chunk.span();
  for (const MentionGroup &g : doc.mention_groups) {
    MentionGroup kept;
    for (const Mention &m : g) {
      if (window.contains(m.span)) {
        kept.push_back({{m.span.start - window.start, m.span.end - window.start}});
      }
    }
    if (!kept.empty()) out.mention_groups.push_back(std::move(kept));
  }
  std::sort(out.mention_groups.begin(), out.mention_groups.end());
  return out;
}

std::vector<MentionGroup> shift_groups(const std::vector<MentionGroup> &groups,
                                       size_t offset) {
  std::vector<MentionGroup> out = groups;
  for (MentionGroup &g : out) {
    for (Mention &m : g) {
      m.span.start += offset;
      m.span.end += offset;
    }
  }
  return out;
}

std::vector<MentionGroup> merge_chunk_groups(
    const std::vector<MentionGroup> &groups) {
  std::vector<Mention> mentions;
  for (const MentionGroup &g : groups) {
    mentions.insert(mentions.end(), g.begin(), g.end());
  }
  std::sort(mentions.begin(), mentions.end());
  mentions.erase(std::unique(mentions.begin(), mentions.end()), mentions.end());
  auto index_of = [&](const Mention &m) {
    return static_cast<size_t>(
        std::lower_bound(mentions.begin(), mentions.end(), m) - mentions.begin());
  };
  UnionFind uf(mentions.size());
  for (const MentionGroup &g : groups) {
    for (size_t i = 1; i < g.size(); ++i) uf.unite(index_of(g[0]), index_of(g[i]));
  }
  return components(mentions, &uf);
}

}  // namespace anl
