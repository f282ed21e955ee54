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

#ifndef STYLO_FEATURES_HPP_
#define STYLO_FEATURES_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "stylo/corpus.hpp"
#include "stylo/schema.hpp"

namespace stylo {

inline constexpr std::size_t kFeatureDimension = 76;

// Offsets of each marker block; index i holds marker F(i+1).
namespace layout {
inline constexpr std::size_t kWordLength = 0;       // F1-F10
inline constexpr std::size_t kSentenceLength = 10;  // F11-F20
inline constexpr std::size_t kPunctPerWord = 20;    // F21
inline constexpr std::size_t kPunctuation = 21;     // F22-F31
inline constexpr std::size_t kChunkShare = 31;      // F32-F40
inline constexpr std::size_t kChunkCoverage = 40;   // F41-F49
inline constexpr std::size_t kPos = 49;             // F50-F73
inline constexpr std::size_t kDialog = 73;          // F74
inline constexpr std::size_t kOutOfLexicon = 74;    // F75
inline constexpr std::size_t kHapax = 75;           // F76

inline constexpr std::size_t kTokenBlockEnd = kChunkShare;
inline constexpr std::size_t kChunkBlockEnd = kDialog;

inline constexpr std::size_t kWordLengthBins = 10;
inline constexpr std::size_t kSentenceBins = 10;
inline constexpr std::size_t kSentenceBinWidth = 10;
}  // namespace layout

using FeatureArray = std::array<double, kFeatureDimension>;

struct FeatureVector {
  std::string doc_id;
  std::string schema_hash;
  FeatureArray values{};

  bool operator==(const FeatureVector&) const = default;
};

struct LexicalProfile {
  std::size_t vocabulary_size = 0;
  std::size_t token_count = 0;
  std::size_t hapax_count = 0;

  // V/N; 0 for an empty profile.
  double type_token_ratio() const;
  bool operator==(const LexicalProfile&) const = default;
};

struct ExtractOptions {
  // Zero-fill F32-F73 for raw documents instead of raising ModeError.
  bool allow_partial = false;
};

// Word-length bin (0-based) for a word of `code_points` characters.
std::size_t word_length_bin(std::size_t code_points);
std::size_t sentence_length_bin(std::size_t words);

// F1-F31 into out[0..31).
void extract_token_features(const Document& document, const FeatureSchema& schema,
                            std::span<double, layout::kTokenBlockEnd> out);
// F32-F73 into out[0..42).
void extract_chunk_features(const Document& document, const FeatureSchema& schema,
                            std::span<double, layout::kChunkBlockEnd - layout::kChunkShare> out,
                            ExtractOptions options = {});
// F74-F76 into out[0..3).
void extract_context_features(const Document& document, const Lexicon& lexicon,
                              std::span<double, kFeatureDimension - layout::kDialog> out);

FeatureVector extract_all(const Document& document, const FeatureSchema& schema,
                          const Lexicon& lexicon, ExtractOptions options = {});

LexicalProfile lexical_profile(const Document& document);

// "doc_id\tF1\t...\tF76"
std::string feature_dump_header();
// One TSV row, 9 significant digits, no trailing newline.
std::string feature_dump_row(const FeatureVector& vector);

// Locale-independent formatting; '.' is always the decimal point.
std::string format_general(double value, int significant_digits);
std::string format_fixed(double value, int decimals);

}  // namespace stylo

#endif  // STYLO_FEATURES_HPP_
