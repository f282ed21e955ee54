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

#include "stylo/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "stylo/error.hpp"
#include "stylo/unicode.hpp"

namespace stylo {
namespace {

constexpr std::string_view kDari = "।";

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

struct ChunkTag {
  char prefix;  // 'B', 'I' or 'O'
  std::string_view type;
};

std::optional<ChunkTag> parse_chunk_tag(std::string_view tag) {
  if (tag == "O") return ChunkTag{'O', {}};
  if (tag.size() < 3 || tag[1] != '-' || (tag[0] != 'B' && tag[0] != 'I')) return std::nullopt;
  const std::string_view type = tag.substr(2);
  if (!chunk_type_index(type)) return std::nullopt;
  return ChunkTag{tag[0], type};
}

void close_sentence(Document& doc, Sentence& current) {
  if (current.tokens.empty()) return;
  const auto term = terminator_of(current.tokens.back().surface);
  current.terminator = term.value_or(Terminator::kEndOfDocument);
  doc.sentences.push_back(std::move(current));
  current = Sentence{};
}

}  // namespace

std::optional<Terminator> terminator_of(std::string_view surface) {
  if (surface == kDari) return Terminator::kDari;
  if (surface == "?") return Terminator::kQuestion;
  if (surface == "!") return Terminator::kExclamation;
  return std::nullopt;
}

std::string_view to_string(SourceMode mode) {
  return mode == SourceMode::kRaw ? "raw" : "annotated";
}

SourceMode parse_source_mode(std::string_view text) {
  if (text == "raw") return SourceMode::kRaw;
  if (text == "annotated") return SourceMode::kAnnotated;
  throw ValidationError("unknown document mode '" + std::string(text) +
                        "' (expected raw or annotated)");
}

std::size_t Sentence::word_count() const {
  std::size_t n = 0;
  for (const auto& t : tokens) n += t.is_punctuation ? 0 : 1;
  return n;
}

std::size_t Document::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.tokens.size();
  return n;
}

std::size_t Document::word_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.word_count();
  return n;
}

std::vector<const AnnotatedToken*> Document::tokens() const {
  std::vector<const AnnotatedToken*> out;
  out.reserve(token_count());
  for (const auto& s : sentences) {
    for (const auto& t : s.tokens) out.push_back(&t);
  }
  return out;
}

Lexicon::Lexicon(const std::vector<std::string>& words) {
  for (const auto& w : words) entries_.insert(unicode::nfc(w));
}

bool Lexicon::contains(std::string_view word) const {
  return entries_.count(unicode::nfc(word)) > 0;
}

Document parse_annotated(std::string_view text, const FeatureSchema& schema,
                         std::string_view source) {
  try {
    unicode::validate_utf8(text);
  } catch (const DecodeError& e) {
    throw DecodeError(std::string(source) + ": " + e.what());
  }

  Document doc;
  doc.id = std::string(source);
  doc.source_mode = SourceMode::kAnnotated;
  Sentence current;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  const std::string src(source);

  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.starts_with('#')) continue;
    if (is_blank(line)) {
      close_sentence(doc, current);
      continue;
    }

    const auto fields = split_tabs(line);
    if (fields.size() != 3) {
      throw ParseError(src, line_no,
                       "expected 3 tab-separated fields, got " + std::to_string(fields.size()));
    }
    std::string surface = unicode::nfc(fields[0]);
    if (surface.empty()) throw ParseError(src, line_no, "empty surface");
    for (char32_t cp : unicode::decode(surface)) {
      if (unicode::is_whitespace(cp)) {
        throw ParseError(src, line_no, "surface contains whitespace");
      }
    }

    const std::string_view pos_tag = fields[1];
    if (pos_tag != kUnknownTag && !schema.pos_index(pos_tag)) {
      throw ParseError(src, line_no, "unknown POS tag '" + std::string(pos_tag) + "'");
    }

    const auto chunk = parse_chunk_tag(fields[2]);
    if (!chunk) {
      throw ParseError(src, line_no, "invalid chunk tag '" + std::string(fields[2]) + "'");
    }
    if (chunk->prefix == 'I') {
      const auto prev = current.tokens.empty()
                            ? std::nullopt
                            : parse_chunk_tag(current.tokens.back().chunk_tag);
      if (!prev || prev->prefix == 'O' || prev->type != chunk->type) {
        throw ParseError(src, line_no,
                         "chunk tag '" + std::string(fields[2]) +
                             "' does not continue a chunk of the same type");
      }
    }

    AnnotatedToken token;
    token.is_punctuation = schema.is_punctuation(surface);
    token.surface = std::move(surface);
    token.pos = std::string(pos_tag);
    token.chunk_tag = std::string(fields[2]);
    current.tokens.push_back(std::move(token));
  }
  close_sentence(doc, current);
  return detect_dialogs(std::move(doc), schema);
}

Document parse_raw(std::string_view text, const FeatureSchema& schema, std::string_view source) {
  try {
    unicode::validate_utf8(text);
  } catch (const DecodeError& e) {
    throw DecodeError(std::string(source) + ": " + e.what());
  }
  const std::string normalized = unicode::nfc(text);

  Document doc;
  doc.id = std::string(source);
  doc.source_mode = SourceMode::kRaw;
  Sentence current;
  std::string word;

  auto emit = [&](std::string surface, bool punct) {
    AnnotatedToken t;
    t.surface = std::move(surface);
    t.pos = std::string(kUnknownTag);
    t.chunk_tag = "O";
    t.is_punctuation = punct;
    const bool ends = punct && terminator_of(t.surface).has_value();
    current.tokens.push_back(std::move(t));
    if (ends) close_sentence(doc, current);
  };
  auto flush_word = [&] {
    if (!word.empty()) emit(std::exchange(word, {}), false);
  };

  std::string_view rest = normalized;
  while (!rest.empty()) {
    const std::size_t punct = schema.match_punctuation(rest);
    if (punct > 0) {
      flush_word();
      emit(std::string(rest.substr(0, punct)), true);
      rest.remove_prefix(punct);
      continue;
    }
    std::size_t len = 1;
    while (len < rest.size() && (static_cast<unsigned char>(rest[len]) & 0xC0) == 0x80) ++len;
    const char32_t cp = unicode::decode(rest.substr(0, len)).front();
    if (unicode::is_whitespace(cp)) {
      flush_word();
    } else {
      word.append(rest.substr(0, len));
    }
    rest.remove_prefix(len);
  }
  flush_word();
  close_sentence(doc, current);
  return detect_dialogs(std::move(doc), schema);
}

std::vector<DialogSpan> find_dialog_spans(const Document& document, const FeatureSchema& schema) {
  const auto tokens = document.tokens();
  const std::size_t n = tokens.size();

  // Global index one past the last non-terminator token of each token's sentence.
  std::vector<std::size_t> sentence_stop(n);
  {
    std::size_t base = 0;
    for (const auto& s : document.sentences) {
      std::size_t stop = base + s.tokens.size();
      if (!s.tokens.empty() && terminator_of(s.tokens.back().surface)) --stop;
      for (std::size_t k = 0; k < s.tokens.size(); ++k) sentence_stop[base + k] = stop;
      base += s.tokens.size();
    }
  }

  std::vector<DialogSpan> spans;
  std::size_t i = 0;
  while (i < n) {
    const QuotePair* pair = nullptr;
    for (const auto& q : schema.quote_pairs()) {
      if (tokens[i]->surface == q.open) {
        pair = &q;
        break;
      }
    }
    if (pair == nullptr) {
      ++i;
      continue;
    }
    std::size_t close = i + 1;
    while (close < n && tokens[close]->surface != pair->close) ++close;
    std::size_t end = close;
    std::size_t next = close + 1;
    if (close >= n) {
      end = std::max(sentence_stop[i], i + 1);
      next = end;
    }
    if (end > i + 1) spans.push_back({i + 1, end});
    i = next;
  }
  return spans;
}

Document detect_dialogs(Document document, const FeatureSchema& schema) {
  document.dialogs = find_dialog_spans(document, schema);
  return document;
}

std::string serialize_annotated(const Document& document) {
  std::string out;
  for (std::size_t s = 0; s < document.sentences.size(); ++s) {
    if (s > 0) out += '\n';
    for (const auto& t : document.sentences[s].tokens) {
      if (t.surface.starts_with('#')) {
        throw ValidationError("surface '" + t.surface + "' cannot be serialized (leading '#')");
      }
      out += t.surface;
      out += '\t';
      out += t.pos;
      out += '\t';
      out += t.chunk_tag;
      out += '\n';
    }
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return buf.str();
}

Corpus load_corpus(const std::filesystem::path& manifest, const FeatureSchema& schema,
                   ManifestOptions options) {
  const std::string text = read_file(manifest);
  const std::filesystem::path base = manifest.parent_path();
  const std::string src = manifest.string();

  Corpus corpus;
  std::unordered_map<std::string, std::size_t> seen_ids;
  std::size_t line_no = 0;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.starts_with('#') || is_blank(line)) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 3) {
      throw ParseError(src, line_no,
                       "expected path<TAB>cluster_label<TAB>mode, got " +
                           std::to_string(fields.size()) + " fields");
    }
    const std::string id(fields[0]);
    const std::string label(fields[1]);
    if (id.empty() || label.empty()) throw ParseError(src, line_no, "empty path or label");
    SourceMode mode;
    try {
      mode = parse_source_mode(fields[2]);
    } catch (const ValidationError& e) {
      throw ParseError(src, line_no, e.what());
    }
    if (auto [it, fresh] = seen_ids.emplace(id, line_no); !fresh) {
      throw ValidationError(src + ":" + std::to_string(line_no) + ": duplicate document id '" +
                            id + "' (first seen on line " + std::to_string(it->second) + ")");
    }

    const std::filesystem::path doc_path = base / id;
    std::error_code ec;
    if (!std::filesystem::is_regular_file(doc_path, ec)) {
      throw IoError(src + ":" + std::to_string(line_no) + ": missing file " + doc_path.string());
    }
    const std::string body = read_file(doc_path);
    Document doc = mode == SourceMode::kRaw ? parse_raw(body, schema, doc_path.string())
                                            : parse_annotated(body, schema, doc_path.string());
    doc.id = id;

    if (std::find(corpus.clusters.begin(), corpus.clusters.end(), label) == corpus.clusters.end()) {
      corpus.clusters.push_back(label);
    }
    corpus.documents.push_back({std::move(doc), label});
  }
  if (corpus.documents.empty() && !options.allow_empty) {
    throw ValidationError(src + ": no documents");
  }
  return corpus;
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    unicode::validate_utf8(text);
  } catch (const DecodeError& e) {
    throw DecodeError(path.string() + ": " + e.what());
  }
  std::vector<std::string> words;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t");
    words.push_back(line.substr(first, last - first + 1));
  }
  return Lexicon(words);
}

}  // namespace stylo
