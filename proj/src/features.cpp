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

#include "stylo/features.hpp"

#include <algorithm>
#include <charconv>
#include <system_error>
#include <unordered_map>

#include "stylo/error.hpp"
#include "stylo/unicode.hpp"

namespace stylo {
namespace {

double percent(std::size_t numerator, std::size_t denominator) {
  if (denominator == 0) return 0.0;
  return 100.0 * static_cast<double>(numerator) / static_cast<double>(denominator);
}

// Chunk type of a BIO tag, or -1 for "O".
int chunk_type_of(std::string_view tag) {
  if (tag.size() < 3) return -1;
  const auto idx = chunk_type_index(tag.substr(2));
  return idx ? static_cast<int>(*idx) : -1;
}

}  // namespace

double LexicalProfile::type_token_ratio() const {
  if (token_count == 0) return 0.0;
  return static_cast<double>(vocabulary_size) / static_cast<double>(token_count);
}

std::size_t word_length_bin(std::size_t code_points) {
  return std::min(std::max<std::size_t>(code_points, 1), layout::kWordLengthBins) - 1;
}

std::size_t sentence_length_bin(std::size_t words) {
  return std::min(words / layout::kSentenceBinWidth, layout::kSentenceBins - 1);
}

void extract_token_features(const Document& document, const FeatureSchema& schema,
                            std::span<double, layout::kTokenBlockEnd> out) {
  std::array<std::size_t, layout::kWordLengthBins> length_bins{};
  std::array<std::size_t, layout::kSentenceBins> sentence_bins{};
  std::array<std::size_t, kPunctuationCount> punct_bins{};
  std::size_t words = 0;
  std::size_t punct = 0;

  for (const auto& sentence : document.sentences) {
    std::size_t sentence_words = 0;
    for (const auto& token : sentence.tokens) {
      if (token.is_punctuation) {
        ++punct;
        if (const auto idx = schema.punctuation_index(token.surface)) ++punct_bins[*idx];
      } else {
        ++words;
        ++sentence_words;
        ++length_bins[word_length_bin(unicode::code_point_count(token.surface))];
      }
    }
    ++sentence_bins[sentence_length_bin(sentence_words)];
  }

  const std::size_t sentences = document.sentences.size();
  for (std::size_t k = 0; k < length_bins.size(); ++k) {
    out[layout::kWordLength + k] = percent(length_bins[k], words);
  }
  for (std::size_t b = 0; b < sentence_bins.size(); ++b) {
    out[layout::kSentenceLength + b] = percent(sentence_bins[b], sentences);
  }
  out[layout::kPunctPerWord] = percent(punct, words);
  for (std::size_t j = 0; j < punct_bins.size(); ++j) {
    out[layout::kPunctuation + j] = percent(punct_bins[j], punct);
  }
}

void extract_chunk_features(const Document& document, const FeatureSchema& schema,
                            std::span<double, layout::kChunkBlockEnd - layout::kChunkShare> out,
                            ExtractOptions options) {
  std::fill(out.begin(), out.end(), 0.0);
  if (document.source_mode == SourceMode::kRaw) {
    if (options.allow_partial) return;
    throw ModeError("document '" + document.id +
                    "' is raw text; chunk and POS markers need annotated input "
                    "(or --allow-partial to zero-fill them)");
  }

  std::array<std::size_t, kChunkTypeCount> chunks{};
  std::array<std::size_t, kChunkTypeCount> covered{};
  std::array<std::size_t, kPosTagCount> tags{};
  std::size_t total_chunks = 0;
  std::size_t words = 0;
  std::size_t tagged = 0;

  for (const auto& sentence : document.sentences) {
    int current = -1;
    for (const auto& token : sentence.tokens) {
      const int type = chunk_type_of(token.chunk_tag);
      if (type < 0) {
        current = -1;
      } else if (token.chunk_tag.front() == 'B' || type != current) {
        current = type;
        ++chunks[static_cast<std::size_t>(type)];
        ++total_chunks;
      }
      if (!token.is_punctuation) {
        ++words;
        if (current >= 0) ++covered[static_cast<std::size_t>(current)];
      }
      if (token.pos != kUnknownTag) {
        if (const auto idx = schema.pos_index(token.pos)) {
          ++tags[*idx];
          ++tagged;
        }
      }
    }
  }

  constexpr std::size_t base = layout::kChunkShare;
  for (std::size_t t = 0; t < kChunkTypeCount; ++t) {
    out[layout::kChunkShare - base + t] = percent(chunks[t], total_chunks);
    out[layout::kChunkCoverage - base + t] = percent(covered[t], words);
  }
  for (std::size_t p = 0; p < kPosTagCount; ++p) {
    out[layout::kPos - base + p] = percent(tags[p], tagged);
  }
}

void extract_context_features(const Document& document, const Lexicon& lexicon,
                              std::span<double, kFeatureDimension - layout::kDialog> out) {
  const auto tokens = document.tokens();
  std::size_t words = 0;
  std::size_t out_of_lexicon = 0;
  std::unordered_map<std::string_view, std::size_t> frequency;
  for (const auto* token : tokens) {
    if (token->is_punctuation) continue;
    ++words;
    if (!lexicon.contains(token->surface)) ++out_of_lexicon;
    ++frequency[token->surface];
  }
  std::size_t hapax = 0;
  for (const auto& [surface, count] : frequency) hapax += count == 1 ? 1 : 0;

  std::size_t dialog_words = 0;
  for (const auto& span : document.dialogs) {
    for (std::size_t i = span.begin; i < span.end && i < tokens.size(); ++i) {
      dialog_words += tokens[i]->is_punctuation ? 0 : 1;
    }
  }

  double dialog = 0.0;
  if (!document.dialogs.empty() && words > 0) {
    const double mean = static_cast<double>(dialog_words) /
                        static_cast<double>(document.dialogs.size());
    dialog = 100.0 * mean / static_cast<double>(words);
  }
  out[0] = dialog;
  out[1] = percent(out_of_lexicon, words);
  out[2] = percent(hapax, words);
}

FeatureVector extract_all(const Document& document, const FeatureSchema& schema,
                          const Lexicon& lexicon, ExtractOptions options) {
  FeatureVector v;
  v.doc_id = document.id;
  v.schema_hash = schema.hash();
  std::span<double, kFeatureDimension> all(v.values);
  extract_token_features(document, schema, all.subspan<0, layout::kTokenBlockEnd>());
  extract_chunk_features(
      document, schema,
      all.subspan<layout::kChunkShare, layout::kChunkBlockEnd - layout::kChunkShare>(), options);
  extract_context_features(document, lexicon, all.subspan<layout::kDialog>());
  return v;
}

LexicalProfile lexical_profile(const Document& document) {
  std::unordered_map<std::string_view, std::size_t> frequency;
  LexicalProfile p;
  for (const auto& sentence : document.sentences) {
    for (const auto& token : sentence.tokens) {
      if (token.is_punctuation) continue;
      ++p.token_count;
      ++frequency[token.surface];
    }
  }
  p.vocabulary_size = frequency.size();
  for (const auto& [surface, count] : frequency) p.hapax_count += count == 1 ? 1 : 0;
  return p;
}

std::string format_general(double value, int significant_digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general,
                                 significant_digits);
  if (res.ec != std::errc()) throw Error("number formatting failed");
  return std::string(buf, res.ptr);
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
  if (res.ec != std::errc()) throw Error("number formatting failed");
  return std::string(buf, res.ptr);
}

std::string feature_dump_header() {
  std::string out = "doc_id";
  for (std::size_t i = 1; i <= kFeatureDimension; ++i) out += "\tF" + std::to_string(i);
  return out;
}

std::string feature_dump_row(const FeatureVector& vector) {
  std::string out = vector.doc_id;
  for (double v : vector.values) {
    out += '\t';
    out += format_general(v, 9);
  }
  return out;
}

}  // namespace stylo
