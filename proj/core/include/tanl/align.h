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

// Needleman-Wunsch global alignment of a cleaned generated sentence against
// the original input, and projection of spans through the alignment.

#ifndef TANL_ALIGN_H_
#define TANL_ALIGN_H_

#include <cstddef>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "tanl/token_seq.h"
#include "tanl/types.h"

namespace anl {

struct AlignParams {
  // Score of aligning a token against nothing. Must be below 1, the score of
  // an exact match.
  double gap = -0.5;

  // Aligned pairs scoring below this are treated as gaps when projecting.
  double sub_threshold = -std::numeric_limits<double>::infinity();

  // Switch to the linear-space (Hirschberg) solver when the DP table would
  // exceed this many cells. 0 disables the switch.
  size_t linear_space_cells = size_t{1} << 24;

  // Throws std::invalid_argument when the invariants above do not hold.
  void check() const;
};

// Levenshtein distance over case-folded code points, divided by the longer
// length. 0 for two empty strings.
double normalized_edit_distance(std::string_view a, std::string_view b);

// 1 - 2 * normalized_edit_distance(a, b), in [-1, 1].
double substitution_score(std::string_view a, std::string_view b);

struct AlignmentMap {
  // For each output token, the aligned input token or nullopt for a gap.
  std::vector<std::optional<size_t>> to_input;
  double score = 0;
};

// Optimal global alignment. With the quadratic solver, traceback ties prefer
// a diagonal step, then leaving the output token unaligned, then skipping the
// input token. The linear-space solver returns an alignment of equal score
// but may break ties differently.
AlignmentMap nw_align(const std::vector<std::string> &output,
                      const std::vector<std::string> &input,
                      const AlignParams &params = {});
AlignmentMap nw_align(const TokenSeq &output, const TokenSeq &input,
                      const AlignParams &params = {});

// Forces a solver regardless of params.linear_space_cells.
AlignmentMap nw_align_quadratic(const std::vector<std::string> &output,
                                const std::vector<std::string> &input,
                                const AlignParams &params = {});
AlignmentMap nw_align_linear_space(const std::vector<std::string> &output,
                                   const std::vector<std::string> &input,
                                   const AlignParams &params = {});

// [min, max + 1) over the input positions aligned to the span, or nullopt
// if every position in the span is a gap.
std::optional<Span> project_span(const Span &span, const AlignmentMap &map);

}  // namespace anl

#endif  // TANL_ALIGN_H_
