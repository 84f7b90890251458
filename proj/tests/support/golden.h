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


// Worked input/output pairs with their structured form.

#ifndef TANL_TESTS_SUPPORT_GOLDEN_H_
#define TANL_TESTS_SUPPORT_GOLDEN_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tanl/decode.h"
#include "tanl/schema.h"
#include "tanl/tasks.h"
#include "tanl/types.h"

namespace anl::testing {

struct GoldenCase {
  std::string name;
  TaskSchema schema;
  StructuredExample example;
  EncodeOptions options;
  std::string input;   // expected encode_input
  std::string target;  // expected encode_target
};

// A generated string that differs from any encoder output.
struct GoldenDecode {
  std::string name;
  TaskSchema schema;
  StructuredExample example;  // expected decode result
  std::string generated;
  ErrorFlags flags;
};

std::vector<GoldenCase> golden_cases();
std::vector<GoldenDecode> golden_decodes();

TaskSchema make_schema(
    TaskKind task, std::string dataset,
    std::vector<std::pair<LabelCategory, std::vector<std::string>>> labels,
    const std::map<std::string, std::string> &naturals = {});

}  // namespace anl::testing

#endif  // TANL_TESTS_SUPPORT_GOLDEN_H_
