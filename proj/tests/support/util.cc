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


#include "util.h"

#include <stdexcept>

#include "tanl/decode.h"
#include "tanl/io.h"

namespace anl::testing {

TokenSeq seq_from(std::string_view surface, std::string_view tokens) {
  const TokenSeq words = tokenize(tokens, Granularity::kWhitespace);
  std::vector<std::string> gaps;
  size_t pos = 0;
  for (const Token &t : words.tokens()) {
    const size_t at = surface.find(t.text, pos);
    if (at == std::string_view::npos) {
      throw std::invalid_argument("token '" + t.text + "' not found in surface");
    }
    const std::string_view gap = surface.substr(pos, at - pos);
    if (gap.find_first_not_of(" \t\n") != std::string_view::npos) {
      throw std::invalid_argument("surface text skipped before '" + t.text + "'");
    }
    gaps.emplace_back(gap);
    pos = at + t.text.size();
  }
  gaps.emplace_back(surface.substr(pos));
  return TokenSeq::FromTokensAndGaps(words.texts(), gaps);
}

Span span_of(const TokenSeq &seq, std::string_view phrase, size_t occurrence) {
  const auto needle = tokenize(phrase, Granularity::kWhitespace).texts();
  for (size_t i = 0; i + needle.size() <= seq.size(); ++i) {
    bool match = true;
    for (size_t j = 0; j < needle.size() && match; ++j) {
      match = seq[i + j].text == needle[j];
    }
    if (match && occurrence-- == 0) return {i, i + needle.size()};
  }
  throw std::invalid_argument("phrase '" + std::string(phrase) + "' not found");
}

std::string dump(const StructuredExample &ex) {
  return io::to_json(canonicalize(ex)).dump();
}

std::string source_path(std::string_view relative) {
  return std::string(TANL_SOURCE_DIR) + "/" + std::string(relative);
}

TaskSchema load_schema(std::string_view name) {
  return io::read_schema(source_path("schemas/" + std::string(name) + ".json"));
}

}  // namespace anl::testing
