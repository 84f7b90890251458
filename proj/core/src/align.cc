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


#include "tanl/align.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "unicode.h"

namespace anl {
namespace {

size_t levenshtein(const std::u32string &a, const std::u32string &b) {
  if (a.size() < b.size()) return levenshtein(b, a);
  std::vector<size_t> row(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    size_t diag = row[0];
    row[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      const size_t up = row[j];
      row[j] = std::min({up + 1, row[j - 1] + 1,
                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

double ned_folded(const std::u32string &a, const std::u32string &b) {
  const size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 0;
  return static_cast<double>(levenshtein(a, b)) / static_cast<double>(longest);
}

// Folded tokens of both sides, with substitution scores computed on demand.
class Scorer {
 public:
  Scorer(const std::vector<std::string> &output,
         const std::vector<std::string> &input) {
    out_.reserve(output.size());
    for (const auto &t : output) out_.push_back(unicode::folded(t));
    in_.reserve(input.size());
    for (const auto &t : input) in_.push_back(unicode::folded(t));
  }

  double sub(size_t i, size_t j) const {
    if (out_[i] == in_[j]) return 1.0;
    return 1.0 - 2.0 * ned_folded(out_[i], in_[j]);
  }

 private:
  std::vector<std::u32string> out_;
  std::vector<std::u32string> in_;
};

enum Step : unsigned char { kDiag, kUp, kLeft };

// Quadratic DP over output[ob, oe) x input[ib, ie), writing into `map`.
void quadratic(const Scorer &s, double gap, size_t ob, size_t oe, size_t ib,
               size_t ie, std::vector<std::optional<size_t>> *map) {
  const size_t n = oe - ob;
  const size_t m = ie - ib;
  std::vector<double> prev(m + 1), cur(m + 1);
  std::vector<unsigned char> step((n + 1) * (m + 1));
  for (size_t j = 0; j <= m; ++j) {
    prev[j] = gap * static_cast<double>(j);
    step[j] = kLeft;
  }
  for (size_t i = 1; i <= n; ++i) {
    cur[0] = gap * static_cast<double>(i);
    step[i * (m + 1)] = kUp;
    for (size_t j = 1; j <= m; ++j) {
      const double diag = prev[j - 1] + s.sub(ob + i - 1, ib + j - 1);
      const double up = prev[j] + gap;
      const double left = cur[j - 1] + gap;
      double best = diag;
      unsigned char st = kDiag;
      if (up > best) {
        best = up;
        st = kUp;
      }
      if (left > best) {
        best = left;
        st = kLeft;
      }
      cur[j] = best;
      step[i * (m + 1) + j] = st;
    }
    std::swap(prev, cur);
  }
  size_t i = n;
  size_t j = m;
  while (i > 0 || j > 0) {
    const unsigned char st = step[i * (m + 1) + j];
    if (st == kDiag) {
      (*map)[ob + i - 1] = ib + j - 1;
      --i;
      --j;
    } else if (st == kUp) {
      (*map)[ob + i - 1] = std::nullopt;
      --i;
    } else {
      --j;
    }
  }
}

// Last row of the forward DP for output[ob, oe) against input[ib, ie).
std::vector<double> forward_row(const Scorer &s, double gap, size_t ob,
                                size_t oe, size_t ib, size_t ie) {
  const size_t m = ie - ib;
  std::vector<double> prev(m + 1), cur(m + 1);
  for (size_t j = 0; j <= m; ++j) prev[j] = gap * static_cast<double>(j);
  for (size_t i = ob; i < oe; ++i) {
    cur[0] = prev[0] + gap;
    for (size_t j = 1; j <= m; ++j) {
      cur[j] = std::max({prev[j - 1] + s.sub(i, ib + j - 1), prev[j] + gap,
                         cur[j - 1] + gap});
    }
    std::swap(prev, cur);
  }
  return prev;
}

// Row k holds the best score of output[ob, oe) against input[ib + k, ie).
std::vector<double> backward_row(const Scorer &s, double gap, size_t ob,
                                 size_t oe, size_t ib, size_t ie) {
  const size_t m = ie - ib;
  std::vector<double> prev(m + 1), cur(m + 1);
  for (size_t k = 0; k <= m; ++k) prev[k] = gap * static_cast<double>(m - k);
  for (size_t i = oe; i-- > ob;) {
    cur[m] = prev[m] + gap;
    for (size_t k = m; k-- > 0;) {
      cur[k] = std::max({prev[k + 1] + s.sub(i, ib + k), prev[k] + gap,
                         cur[k + 1] + gap});
    }
    std::swap(prev, cur);
  }
  return prev;
}

void hirschberg(const Scorer &s, double gap, size_t ob, size_t oe, size_t ib,
                size_t ie, std::vector<std::optional<size_t>> *map) {
  const size_t n = oe - ob;
  const size_t m = ie - ib;
  if (n == 0) return;
  if (n == 1 || m <= 1) {
    quadratic(s, gap, ob, oe, ib, ie, map);
    return;
  }
  const size_t mid = ob + n / 2;
  const std::vector<double> left = forward_row(s, gap, ob, mid, ib, ie);
  const std::vector<double> right = backward_row(s, gap, mid, oe, ib, ie);
  size_t split = 0;
  double best = left[0] + right[0];
  for (size_t k = 1; k <= m; ++k) {
    const double v = left[k] + right[k];
    if (v > best) {
      best = v;
      split = k;
    }
  }
  hirschberg(s, gap, ob, mid, ib, ib + split, map);
  hirschberg(s, gap, mid, oe, ib + split, ie, map);
}

double score_of(const Scorer &s, double gap,
                const std::vector<std::optional<size_t>> &map, size_t m) {
  double score = 0;
  size_t aligned = 0;
  for (size_t i = 0; i < map.size(); ++i) {
    if (map[i]) {
      score += s.sub(i, *map[i]);
      ++aligned;
    }
  }
  return score + gap * static_cast<double>(map.size() + m - 2 * aligned);
}

void apply_threshold(const Scorer &s, const AlignParams &params,
                     AlignmentMap *map) {
  if (!(params.sub_threshold > -std::numeric_limits<double>::infinity())) {
    return;
  }
  for (size_t i = 0; i < map->to_input.size(); ++i) {
    auto &target = map->to_input[i];
    if (target && s.sub(i, *target) < params.sub_threshold) target.reset();
  }
}

AlignmentMap solve(const std::vector<std::string> &output,
                   const std::vector<std::string> &input,
                   const AlignParams &params, bool linear) {
  params.check();
  const Scorer s(output, input);
  AlignmentMap map;
  map.to_input.assign(output.size(), std::nullopt);
  if (linear) {
    hirschberg(s, params.gap, 0, output.size(), 0, input.size(), &map.to_input);
  } else {
    quadratic(s, params.gap, 0, output.size(), 0, input.size(), &map.to_input);
  }
  map.score = score_of(s, params.gap, map.to_input, input.size());
  apply_threshold(s, params, &map);
  return map;
}

}  // namespace

void AlignParams::check() const {
  if (!std::isfinite(gap) || gap >= 1.0) {
    throw std::invalid_argument("gap penalty must be finite and below 1");
  }
  if (std::isnan(sub_threshold)) {
    throw std::invalid_argument("substitution threshold is NaN");
  }
}

double normalized_edit_distance(std::string_view a, std::string_view b) {
  return ned_folded(unicode::folded(a), unicode::folded(b));
}

double substitution_score(std::string_view a, std::string_view b) {
  return 1.0 - 2.0 * normalized_edit_distance(a, b);
}

AlignmentMap nw_align(const std::vector<std::string> &output,
                      const std::vector<std::string> &input,
                      const AlignParams &params) {
  const double cells = static_cast<double>(output.size() + 1) *
                       static_cast<double>(input.size() + 1);
  const bool linear = params.linear_space_cells != 0 &&
                      cells > static_cast<double>(params.linear_space_cells);
  return solve(output, input, params, linear);
}

AlignmentMap nw_align(const TokenSeq &output, const TokenSeq &input,
                      const AlignParams &params) {
  return nw_align(output.texts(), input.texts(), params);
}

AlignmentMap nw_align_quadratic(const std::vector<std::string> &output,
                                const std::vector<std::string> &input,
                                const AlignParams &params) {
  return solve(output, input, params, false);
}

AlignmentMap nw_align_linear_space(const std::vector<std::string> &output,
                                   const std::vector<std::string> &input,
                                   const AlignParams &params) {
  return solve(output, input, params, true);
}

std::optional<Span> project_span(const Span &span, const AlignmentMap &map) {
  std::optional<size_t> lo;
  std::optional<size_t> hi;
  for (size_t i = span.start; i < span.end && i < map.to_input.size(); ++i) {
    if (const auto &t = map.to_input[i]) {
      lo = lo ? std::min(*lo, *t) : *t;
      hi = hi ? std::max(*hi, *t) : *t;
    }
  }
  if (!lo) return std::nullopt;
  return Span{*lo, *hi + 1};
}

}  // namespace anl
