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


// Small helpers for building examples by hand.

#ifndef TANL_TESTS_SUPPORT_UTIL_H_
#define TANL_TESTS_SUPPORT_UTIL_H_

#include <string>
#include <string_view>

#include "tanl/schema.h"
#include "tanl/token_seq.h"
#include "tanl/types.h"

namespace anl::testing {

// Tokens given as a space-separated list, with gaps taken from `surface`.
// Throws std::invalid_argument if the tokens do not spell out `surface`.
TokenSeq seq_from(std::string_view surface, std::string_view tokens);

// The `occurrence`-th run of tokens equal to the words of `phrase`.
Span span_of(const TokenSeq &seq, std::string_view phrase, size_t occurrence = 0);

// Canonical JSON of an example, for failure messages.
std::string dump(const StructuredExample &ex);

// Path of a file in the source tree.
std::string source_path(std::string_view relative);

TaskSchema load_schema(std::string_view name);

}  // namespace anl::testing

#endif  // TANL_TESTS_SUPPORT_UTIL_H_
