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

#ifndef STYLO_SCHEMA_HPP_
#define STYLO_SCHEMA_HPP_

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace stylo {

inline constexpr std::size_t kPosTagCount = 24;
inline constexpr std::size_t kPunctuationCount = 10;
inline constexpr std::size_t kChunkTypeCount = 9;

inline constexpr std::string_view kUnknownTag = "UNK";

inline constexpr std::array<std::string_view, kChunkTypeCount> kChunkTypes = {
    "NP", "VGF", "VGNF", "VGNN", "JJP", "RBP", "CCP", "FRAGP", "OTHERS"};

std::optional<std::size_t> chunk_type_index(std::string_view type);

struct QuotePair {
  std::string open;
  std::string close;

  bool operator==(const QuotePair&) const = default;
};

// Tag inventory and symbol sets that fix the meaning of every feature index.
// Immutable once built; all strings are stored in NFC.
//
// The punctuation universe (what makes a token punctuation) is the tracked
// set plus every quote character plus extra_punctuation. Only the tracked
// set gets its own feature slot.
class FeatureSchema {
 public:
  // Validates and normalizes; throws ValidationError.
  static FeatureSchema create(std::vector<std::string> pos_tagset,
                              std::vector<std::string> punctuation_set,
                              std::vector<QuotePair> quote_pairs,
                              std::vector<std::string> extra_punctuation = {});

  static const FeatureSchema& default_schema();

  static FeatureSchema from_json(std::string_view text);
  static FeatureSchema load(const std::filesystem::path& path);
  std::string to_json() const;

  const std::vector<std::string>& pos_tagset() const { return pos_tagset_; }
  const std::vector<std::string>& punctuation_set() const { return punctuation_set_; }
  const std::vector<QuotePair>& quote_pairs() const { return quote_pairs_; }
  const std::vector<std::string>& extra_punctuation() const { return extra_punctuation_; }

  std::optional<std::size_t> pos_index(std::string_view tag) const;
  std::optional<std::size_t> punctuation_index(std::string_view surface) const;

  // True iff the surface is non-empty and decomposes entirely into entries
  // of the punctuation universe.
  bool is_punctuation(std::string_view surface) const;

  // Longest universe entry that is a prefix of text; 0 if none.
  std::size_t match_punctuation(std::string_view text) const;

  // Lowercase hex SHA-256 of the canonical serialization.
  const std::string& hash() const { return hash_; }

  std::string canonical_form() const;

 private:
  FeatureSchema() = default;

  std::vector<std::string> pos_tagset_;
  std::vector<std::string> punctuation_set_;
  std::vector<QuotePair> quote_pairs_;
  std::vector<std::string> extra_punctuation_;
  std::vector<std::string> universe_;  // sorted by descending byte length
  std::unordered_map<std::string, std::size_t> pos_lookup_;
  std::unordered_map<std::string, std::size_t> punct_lookup_;
  std::string hash_;
};

}  // namespace stylo

#endif  // STYLO_SCHEMA_HPP_
