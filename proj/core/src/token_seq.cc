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

#include "tanl/token_seq.h"

#include <stdexcept>

#include "unicode.h"

namespace anl {

TokenSeq TokenSeq::FromTokens(const std::vector<std::string> &tokens) {
  std::vector<std::string> gaps(tokens.size() + 1);
  for (size_t i = 1; i < tokens.size(); ++i) gaps[i] = " ";
  return FromTokensAndGaps(tokens, gaps);
}

TokenSeq TokenSeq::FromTokensAndGaps(const std::vector<std::string> &tokens,
                                     const std::vector<std::string> &gaps) {
  if (gaps.size() != tokens.size() + 1) {
    throw std::invalid_argument("TokenSeq: expected one more gap than tokens");
  }
  TokenSeq seq;
  seq.gaps_ = gaps;
  size_t offset = gaps[0].size();
  seq.tokens_.reserve(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) {
    seq.tokens_.push_back({tokens[i], offset, offset + tokens[i].size()});
    offset += tokens[i].size() + gaps[i + 1].size();
  }
  return seq;
}

std::vector<std::string> TokenSeq::texts() const {
  std::vector<std::string> out;
  out.reserve(tokens_.size());
  for (const Token &t : tokens_) out.push_back(t.text);
  return out;
}

bool TokenSeq::has_default_gaps() const {
  if (!gaps_.front().empty() || !gaps_.back().empty()) return false;
  for (size_t i = 1; i + 1 < gaps_.size(); ++i) {
    if (gaps_[i] != " ") return false;
  }
  return true;
}

std::string TokenSeq::join(size_t begin, size_t end) const {
  std::string out;
  for (size_t i = begin; i < end && i < tokens_.size(); ++i) {
    if (i > begin) out += ' ';
    out += tokens_[i].text;
  }
  return out;
}

std::string TokenSeq::surface(size_t begin, size_t end) const {
  std::string out;
  for (size_t i = begin; i < end && i < tokens_.size(); ++i) {
    if (i > begin) out += gaps_[i];
    out += tokens_[i].text;
  }
  return out;
}

TokenSeq tokenize(std::string_view text, Granularity granularity) {
  std::vector<std::string> tokens;
  std::vector<std::string> gaps;
  const auto cps = unicode::decode(text);

  size_t gap_start = 0;
  size_t i = 0;
  while (i < cps.size()) {
    if (unicode::is_space(cps[i].value)) {
      ++i;
      continue;
    }
    // [i, j) is a maximal non-space chunk.
    size_t j = i;
    while (j < cps.size() && !unicode::is_space(cps[j].value)) ++j;
    gaps.emplace_back(text.substr(gap_start, cps[i].offset - gap_start));

    auto piece = [&](size_t a, size_t b) {
      const size_t from = cps[a].offset;
      const size_t to = cps[b - 1].offset + cps[b - 1].length;
      return std::string(text.substr(from, to - from));
    };

    if (granularity == Granularity::kWhitespace) {
      tokens.push_back(piece(i, j));
    } else {
      size_t lo = i;
      size_t hi = j;
      std::vector<std::string> trailing;
      while (lo < hi && unicode::is_punct(cps[lo].value)) {
        tokens.push_back(piece(lo, lo + 1));
        gaps.emplace_back();
        ++lo;
      }
      while (hi > lo && unicode::is_punct(cps[hi - 1].value)) {
        trailing.push_back(piece(hi - 1, hi));
        --hi;
      }
      if (lo < hi) {
        tokens.push_back(piece(lo, hi));
        gaps.emplace_back();
      }
      for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) {
        tokens.push_back(*it);
        gaps.emplace_back();
      }
      // Every token pushed above added an empty gap after it; the last one is
      // replaced by the real gap following the chunk.
      gaps.pop_back();
    }
    gap_start = cps[j - 1].offset + cps[j - 1].length;
    i = j;
  }
  gaps.emplace_back(text.substr(gap_start));
  return TokenSeq::FromTokensAndGaps(tokens, gaps);
}

std::string detokenize(const TokenSeq &seq) {
  std::string out = seq.gaps()[0];
  for (size_t i = 0; i < seq.size(); ++i) {
    out += seq[i].text;
    out += seq.gaps()[i + 1];
  }
  return out;
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  for (std::string_view word : unicode::split_whitespace(text)) {
    if (!out.empty()) out += ' ';
    out += word;
  }
  return out;
}

}  // namespace anl
