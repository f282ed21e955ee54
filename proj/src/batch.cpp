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

#include "stylo/batch.hpp"

#include <omp.h>

#include <exception>
#include <limits>

namespace stylo {
namespace {

// Runs body(i) for i in [0, n) across threads. If any iteration throws, the
// exception from the lowest index is rethrown so failures are reproducible.
template <typename Body>
void parallel_for(std::size_t n, const BatchOptions& batch, Body body) {
  std::exception_ptr first_error;
  std::size_t first_index = std::numeric_limits<std::size_t>::max();
  const int threads = batch.threads > 0 ? batch.threads : omp_get_max_threads();
  const auto count = static_cast<std::ptrdiff_t>(n);

#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(stylo_batch_error)
      {
        if (static_cast<std::size_t>(i) < first_index) {
          first_index = static_cast<std::size_t>(i);
          first_error = std::current_exception();
        }
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

std::vector<const Document*> document_pointers(const Corpus& corpus) {
  std::vector<const Document*> out;
  out.reserve(corpus.documents.size());
  for (const auto& d : corpus.documents) out.push_back(&d.document);
  return out;
}

std::vector<FeatureVector> extract_batch(std::span<const Document* const> documents,
                                         const FeatureSchema& schema, const Lexicon& lexicon,
                                         ExtractOptions options, BatchOptions batch) {
  std::vector<FeatureVector> out(documents.size());
  parallel_for(documents.size(), batch, [&](std::size_t i) {
    out[i] = extract_all(*documents[i], schema, lexicon, options);
  });
  return out;
}

std::vector<FeatureVector> extract_batch_serial(std::span<const Document* const> documents,
                                                const FeatureSchema& schema,
                                                const Lexicon& lexicon, ExtractOptions options) {
  std::vector<FeatureVector> out;
  out.reserve(documents.size());
  for (const Document* doc : documents) out.push_back(extract_all(*doc, schema, lexicon, options));
  return out;
}

std::vector<VoteResult> classify_batch(const ReferenceModel& model,
                                       std::span<const FeatureVector> tests, BatchOptions batch) {
  std::vector<VoteResult> out(tests.size());
  parallel_for(tests.size(), batch,
               [&](std::size_t i) { out[i] = classify_vote(model, tests[i]); });
  return out;
}

std::vector<VoteResult> classify_batch_serial(const ReferenceModel& model,
                                              std::span<const FeatureVector> tests) {
  std::vector<VoteResult> out;
  out.reserve(tests.size());
  for (const auto& t : tests) out.push_back(classify_vote(model, t));
  return out;
}

std::vector<LexicalProfile> profile_batch(std::span<const Document* const> documents,
                                          BatchOptions batch) {
  std::vector<LexicalProfile> out(documents.size());
  parallel_for(documents.size(), batch,
               [&](std::size_t i) { out[i] = lexical_profile(*documents[i]); });
  return out;
}

std::vector<LexicalProfile> profile_batch_serial(std::span<const Document* const> documents) {
  std::vector<LexicalProfile> out;
  out.reserve(documents.size());
  for (const Document* doc : documents) out.push_back(lexical_profile(*doc));
  return out;
}

}  // namespace stylo
