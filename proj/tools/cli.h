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


// Batch front end over line-delimited JSON files.
//
//   tanl encode     --schema S --input gold.jsonl [--output pairs.jsonl]
//   tanl decode     --schema S --input gen.jsonl  [--output pred.jsonl]
//   tanl align      --input pairs.jsonl
//   tanl eval       --gold gold.jsonl --input pred.jsonl
//   tanl errors     --schema S --input gen.jsonl
//   tanl candidates --schema S --input rc.jsonl
//   tanl mix        --input name=pairs.jsonl ... --seed N
//
// Exit status: 0 success, 1 usage error, 2 data error.

#ifndef TANL_TOOLS_CLI_H_
#define TANL_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace anl::cli {

// Runs one command line. `args` excludes the program name. "-" paths refer
// to `in` and `out`.
int run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err);

}  // namespace anl::cli

#endif  // TANL_TOOLS_CLI_H_
