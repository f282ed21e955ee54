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

#ifndef STYLO_BATCH_HPP_
#define STYLO_BATCH_HPP_

#include <span>
#include <vector>

#include "stylo/classify.hpp"
#include "stylo/corpus.hpp"
#include "stylo/features.hpp"

// Document-parallel kernels. Each *_serial function is the reference the
// OpenMP version is tested against; both return results in input order.
namespace stylo {

struct BatchOptions {
  int threads = 0;  // 0 = OpenMP default
};

std::vector<const Document*> document_pointers(const Corpus& corpus);

std::vector<FeatureVector> extract_batch(std::span<const Document* const> documents,
                                         const FeatureSchema& schema, const Lexicon& lexicon,
                                         ExtractOptions options = {}, BatchOptions batch = {});
std::vector<FeatureVector> extract_batch_serial(std::span<const Document* const> documents,
                                                const FeatureSchema& schema,
                                                const Lexicon& lexicon,
                                                ExtractOptions options = {});

std::vector<VoteResult> classify_batch(const ReferenceModel& model,
                                       std::span<const FeatureVector> tests,
                                       BatchOptions batch = {});
std::vector<VoteResult> classify_batch_serial(const ReferenceModel& model,
                                              std::span<const FeatureVector> tests);

std::vector<LexicalProfile> profile_batch(std::span<const Document* const> documents,
                                          BatchOptions batch = {});
std::vector<LexicalProfile> profile_batch_serial(std::span<const Document* const> documents);

}  // namespace stylo

#endif  // STYLO_BATCH_HPP_
