// Copyright 2026 The Stylo Authors.
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

#include <vector>

#include "stylo/batch.hpp"
#include "stylo/generator.hpp"

namespace stylo {
namespace {

const FeatureSchema& schema() { return FeatureSchema::default_schema(); }

struct Workload {
  std::vector<Document> documents;
  std::vector<const Document*> pointers;
  Lexicon lexicon;
  std::vector<FeatureVector> vectors;
  ReferenceModel model;
};

const Workload& workload() {
  static const Workload w = [] {
    GeneratorProfile profile = GeneratorProfile::default_profile();
    for (auto& c : profile.clusters) {
      c.train_docs = 400;
      c.test_docs = 0;
    }
    const auto corpus = generate_corpus(profile, schema(), 1);
    Workload out;
    out.lexicon = Lexicon(corpus.lexicon);
    for (const auto& g : corpus.documents) {
      out.documents.push_back(parse_annotated(g.text, schema(), g.id));
    }
    for (const auto& d : out.documents) out.pointers.push_back(&d);
    out.vectors = extract_batch_serial(out.pointers, schema(), out.lexicon);
    std::vector<LabeledVector> training;
    for (std::size_t i = 0; i < out.vectors.size(); ++i) {
      training.push_back({out.vectors[i], corpus.documents[i].label});
    }
    out.model = build_references(training);
    return out;
  }();
  return w;
}

void BM_ExtractSerial(benchmark::State& state) {
  const auto& w = workload();
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_batch_serial(w.pointers, schema(), w.lexicon));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(w.pointers.size()));
}

void BM_ExtractParallel(benchmark::State& state) {
  const auto& w = workload();
  const BatchOptions batch{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_batch(w.pointers, schema(), w.lexicon, {}, batch));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(w.pointers.size()));
}

void BM_ClassifySerial(benchmark::State& state) {
  const auto& w = workload();
  for (auto _ : state) benchmark::DoNotOptimize(classify_batch_serial(w.model, w.vectors));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(w.vectors.size()));
}

void BM_ClassifyParallel(benchmark::State& state) {
  const auto& w = workload();
  const BatchOptions batch{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(classify_batch(w.model, w.vectors, batch));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(w.vectors.size()));
}

BENCHMARK(BM_ExtractSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtractParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace stylo

BENCHMARK_MAIN();
