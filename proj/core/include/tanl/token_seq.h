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

#ifndef TANL_TOKEN_SEQ_H_
#define TANL_TOKEN_SEQ_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace anl {

// A token and its byte range [begin, end) in the detokenized source.
struct Token {
  std::string text;
  size_t begin = 0;
  size_t end = 0;

  bool operator==(const Token &) const = default;
};

// Token granularity used by tokenize().
enum class Granularity {
  // Split on whitespace only.
  kWhitespace,
  // Split on whitespace, then peel leading/trailing punctuation characters
  // into separate one-character tokens.
  kWord,
};

// An ordered token sequence that remembers the whitespace between tokens, so
// that detokenize() reproduces the source string exactly.
//
// gaps().size() == size() + 1: gaps()[0] precedes the first token and
// gaps()[size()] trails the last one.
class TokenSeq {
 public:
  TokenSeq() : gaps_(1) {}

  // Builds a sequence from bare token texts joined by single spaces.
  static TokenSeq FromTokens(const std::vector<std::string> &tokens);

  // Builds a sequence from tokens and explicit gaps. Throws
  // std::invalid_argument unless gaps.size() == tokens.size() + 1.
  static TokenSeq FromTokensAndGaps(const std::vector<std::string> &tokens,
                                    const std::vector<std::string> &gaps);

  size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const Token &operator[](size_t i) const { return tokens_[i]; }
  const std::vector<Token> &tokens() const { return tokens_; }
  const std::vector<std::string> &gaps() const { return gaps_; }

  // Token texts only.
  std::vector<std::string> texts() const;

  // True if every inner gap is a single space and the outer gaps are empty.
  bool has_default_gaps() const;

  // Texts of tokens [begin, end) joined by single spaces.
  std::string join(size_t begin, size_t end) const;

  // Texts of tokens [begin, end) joined by their recorded inner gaps.
  std::string surface(size_t begin, size_t end) const;

  bool operator==(const TokenSeq &) const = default;

 private:
  std::vector<Token> tokens_;
  std::vector<std::string> gaps_;
};

TokenSeq tokenize(std::string_view text,
                  Granularity granularity = Granularity::kWord);

std::string detokenize(const TokenSeq &seq);

// Splits on whitespace and re-joins with single spaces.
std::string normalize_whitespace(std::string_view text);

}  // namespace anl

#endif  // TANL_TOKEN_SEQ_H_
