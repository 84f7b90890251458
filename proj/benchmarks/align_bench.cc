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
#include <vector>

#include "generators.h"
#include "tanl/align.h"

namespace {

using anl::testing::Rng;

std::vector<std::string> random_words(Rng &rng, size_t n) {
  const auto &vocab = anl::testing::vocabulary();
  std::vector<std::string> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    out.push_back(vocab[anl::testing::uniform(rng, 0, vocab.size() - 1)]);
  }
  return out;
}

void BM_AlignQuadratic(benchmark::State &state) {
  Rng rng(7);
  const auto n = static_cast<size_t>(state.range(0));
  const auto out = random_words(rng, n);
  const auto in = random_words(rng, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(anl::nw_align_quadratic(out, in));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AlignQuadratic)->RangeMultiplier(2)->Range(8, 512)->Complexity();

void BM_AlignLinearSpace(benchmark::State &state) {
  Rng rng(7);
  const auto n = static_cast<size_t>(state.range(0));
  const auto out = random_words(rng, n);
  const auto in = random_words(rng, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(anl::nw_align_linear_space(out, in));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AlignLinearSpace)->RangeMultiplier(2)->Range(8, 512)->Complexity();

}  // namespace
