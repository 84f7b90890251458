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

// Minimal UTF-8 helpers. Invalid bytes decode to themselves as one code point
// each so that every routine here is total over arbitrary byte strings.

#ifndef TANL_SRC_UNICODE_H_
#define TANL_SRC_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace anl::unicode {

struct CodePoint {
  char32_t value;
  size_t offset;  // byte offset of the first byte
  size_t length;  // encoded length in bytes
};

std::vector<CodePoint> decode(std::string_view text);

bool is_space(char32_t c);
bool is_punct(char32_t c);
char32_t fold_case(char32_t c);

// Case-folded code points of `text`.
std::u32string folded(std::string_view text);

// Splits on whitespace.
std::vector<std::string_view> split_whitespace(std::string_view text);

}  // namespace anl::unicode

#endif  // TANL_SRC_UNICODE_H_
