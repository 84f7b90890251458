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


#include <benchmark/benchmark.h>

#include <string>

#include "generators.h"
#include "tanl/tasks.h"

namespace {

using anl::TaskKind;
using anl::testing::Rng;

void BM_EncodeDecode(benchmark::State &state) {
  const auto task = static_cast<TaskKind>(state.range(0));
  const anl::TaskSchema schema = anl::testing::synthetic_schema(task);
  Rng rng(3);
  anl::testing::GenConfig cfg;
  cfg.min_tokens = 12;
  cfg.max_tokens = 24;
  const anl::StructuredExample ex = anl::testing::random_example(task, schema, rng, cfg);
  const std::string target = anl::encode_target(ex, schema);
  for (auto _ : state) {
    benchmark::DoNotOptimize(anl::decode_task(anl::encode_target(ex, schema), ex, schema));
  }
  state.SetLabel(std::string(anl::task_name(task)));
}
BENCHMARK(BM_EncodeDecode)->DenseRange(0, 6);

}  // namespace
