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

#ifndef STYLO_CORPUS_HPP_
#define STYLO_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "stylo/schema.hpp"

namespace stylo {

enum class Terminator { kDari, kQuestion, kExclamation, kEndOfDocument };
enum class SourceMode { kRaw, kAnnotated };

// U+0964 BENGALI DANDA, '?' or '!'.
std::optional<Terminator> terminator_of(std::string_view surface);
std::string_view to_string(SourceMode mode);
SourceMode parse_source_mode(std::string_view text);

struct AnnotatedToken {
  std::string surface;
  std::string pos;
  std::string chunk_tag;
  bool is_punctuation = false;

  bool operator==(const AnnotatedToken&) const = default;
};

struct Sentence {
  std::vector<AnnotatedToken> tokens;
  Terminator terminator = Terminator::kEndOfDocument;

  std::size_t word_count() const;
  bool operator==(const Sentence&) const = default;
};

// Half-open range of document-global token indices.
struct DialogSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const DialogSpan&) const = default;
};

struct Document {
  std::string id;
  std::vector<Sentence> sentences;
  std::vector<DialogSpan> dialogs;
  SourceMode source_mode = SourceMode::kAnnotated;

  std::size_t token_count() const;
  std::size_t word_count() const;
  // Flattened view in document order.
  std::vector<const AnnotatedToken*> tokens() const;

  bool operator==(const Document&) const = default;
};

struct LabeledDocument {
  Document document;
  std::string label;
};

struct Corpus {
  std::vector<LabeledDocument> documents;
  std::vector<std::string> clusters;  // first-appearance order
};

class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(const std::vector<std::string>& words);

  bool contains(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::unordered_set<std::string> entries_;
};

// Parses CoNLL-style "surface<TAB>pos<TAB>chunk" lines. `source` prefixes
// error messages and becomes the document id.
Document parse_annotated(std::string_view text, const FeatureSchema& schema,
                         std::string_view source = "<input>");

Document parse_raw(std::string_view text, const FeatureSchema& schema,
                   std::string_view source = "<input>");

std::vector<DialogSpan> find_dialog_spans(const Document& document,
                                          const FeatureSchema& schema);

Document detect_dialogs(Document document, const FeatureSchema& schema);

// Inverse of parse_annotated. Throws ValidationError for surfaces that the
// format cannot carry.
std::string serialize_annotated(const Document& document);

struct ManifestOptions {
  bool allow_empty = false;
};

Corpus load_corpus(const std::filesystem::path& manifest, const FeatureSchema& schema,
                   ManifestOptions options = {});

Lexicon load_lexicon(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace stylo

#endif  // STYLO_CORPUS_HPP_
