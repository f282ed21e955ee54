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

#ifndef STYLO_GENERATOR_HPP_
#define STYLO_GENERATOR_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stylo/features.hpp"
#include "stylo/schema.hpp"

namespace stylo {

// Per-cluster style distributions for the synthetic corpus generator.
// Weight maps are keyed by schema symbols; unspecified keys weigh 0.
struct ClusterProfile {
  std::string label;
  std::size_t train_docs = 0;
  std::size_t test_docs = 0;
  std::pair<std::size_t, std::size_t> sentences_per_doc{10, 20};
  std::array<double, layout::kWordLengthBins> word_length_weights{};
  std::array<double, layout::kSentenceBins> sentence_length_weights{};
  double punctuation_rate = 0.0;  // per gap between phrase units
  std::map<std::string, double> punctuation_weights;
  std::map<std::string, double> terminator_weights;
  std::map<std::string, double> chunk_weights;
  std::pair<std::size_t, std::size_t> chunk_size{1, 3};
  double unchunked_rate = 0.0;
  std::map<std::string, double> pos_weights;
  double unk_rate = 0.0;
  double dialog_rate = 0.0;  // per sentence
  double oov_rate = 0.0;     // per word
  std::size_t vocabulary_size = 500;
};

struct GeneratorProfile {
  std::vector<ClusterProfile> clusters;

  static const GeneratorProfile& default_profile();
  static std::string_view default_profile_json();
  static GeneratorProfile from_json(std::string_view text);
  static GeneratorProfile load(const std::filesystem::path& path);

  // Throws ValidationError for anything the schema cannot express.
  void validate(const FeatureSchema& schema) const;
};

struct GeneratedDocument {
  std::string id;  // manifest-relative path
  std::string label;
  bool is_test = false;
  std::string text;       // annotated format
  FeatureArray expected;  // F1-F76 from the generator's own tallies
};

struct GeneratedCorpus {
  std::vector<GeneratedDocument> documents;
  std::vector<std::string> lexicon;  // sorted
};

GeneratedCorpus generate_corpus(const GeneratorProfile& profile, const FeatureSchema& schema,
                                std::uint64_t seed);

// Writes docs/, manifest.tsv, train.tsv, test.tsv (when any test docs),
// lexicon.txt, ledger.tsv and schema.json under out_dir.
void write_corpus(const GeneratedCorpus& corpus, const FeatureSchema& schema,
                  const std::filesystem::path& out_dir);

std::map<std::string, FeatureArray> read_ledger(const std::filesystem::path& path);

}  // namespace stylo

#endif  // STYLO_GENERATOR_HPP_
