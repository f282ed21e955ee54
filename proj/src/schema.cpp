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

#include "stylo/schema.hpp"

#include <openssl/evp.h>
#include <unicode/brkiter.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include "json.hpp"
#include "stylo/error.hpp"
#include "stylo/unicode.hpp"

namespace stylo {
namespace {

std::size_t grapheme_count(const std::string& s) {
  UErrorCode status = U_ZERO_ERROR;
  std::unique_ptr<icu::BreakIterator> it(
      icu::BreakIterator::createCharacterInstance(icu::Locale::getRoot(), status));
  if (U_FAILURE(status)) throw Error("ICU break iterator unavailable");
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(s);
  it->setText(u);
  std::size_t n = 0;
  it->first();
  while (it->next() != icu::BreakIterator::DONE) ++n;
  return n;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

std::string normalized_symbol(const std::string& s, const char* what) {
  unicode::validate_utf8(s);
  std::string n = unicode::nfc(s);
  if (n.empty()) throw ValidationError(std::string("empty ") + what + " entry in schema");
  return n;
}

void require_single_grapheme(const std::string& s, const char* what) {
  if (grapheme_count(s) != 1) {
    throw ValidationError(std::string(what) + " entry '" + s +
                          "' must be a single character or grapheme");
  }
  for (char32_t cp : unicode::decode(s)) {
    if (unicode::is_whitespace(cp)) {
      throw ValidationError(std::string(what) + " entry must not contain whitespace");
    }
  }
}

}  // namespace

std::optional<std::size_t> chunk_type_index(std::string_view type) {
  for (std::size_t i = 0; i < kChunkTypes.size(); ++i) {
    if (kChunkTypes[i] == type) return i;
  }
  return std::nullopt;
}

FeatureSchema FeatureSchema::create(std::vector<std::string> pos_tagset,
                                    std::vector<std::string> punctuation_set,
                                    std::vector<QuotePair> quote_pairs,
                                    std::vector<std::string> extra_punctuation) {
  FeatureSchema s;
  if (pos_tagset.size() != kPosTagCount) {
    throw ValidationError("pos_tagset must list exactly 24 tags, got " +
                          std::to_string(pos_tagset.size()));
  }
  if (punctuation_set.size() != kPunctuationCount) {
    throw ValidationError("punctuation_set must list exactly 10 entries, got " +
                          std::to_string(punctuation_set.size()));
  }
  for (auto& tag : pos_tagset) {
    tag = normalized_symbol(tag, "pos_tagset");
    if (tag == kUnknownTag) throw ValidationError("pos_tagset must not contain UNK");
    if (tag.find_first_of("\t\n\r ") != std::string::npos) {
      throw ValidationError("pos_tagset entry '" + tag + "' contains whitespace");
    }
    if (!s.pos_lookup_.emplace(tag, s.pos_lookup_.size()).second) {
      throw ValidationError("duplicate pos_tagset entry '" + tag + "'");
    }
  }
  for (auto& p : punctuation_set) {
    p = normalized_symbol(p, "punctuation_set");
    require_single_grapheme(p, "punctuation_set");
    if (!s.punct_lookup_.emplace(p, s.punct_lookup_.size()).second) {
      throw ValidationError("duplicate punctuation_set entry '" + p + "'");
    }
  }
  for (auto& q : quote_pairs) {
    q.open = normalized_symbol(q.open, "quote_pairs");
    q.close = normalized_symbol(q.close, "quote_pairs");
    require_single_grapheme(q.open, "quote_pairs");
    require_single_grapheme(q.close, "quote_pairs");
  }
  for (auto& e : extra_punctuation) {
    e = normalized_symbol(e, "extra_punctuation");
    require_single_grapheme(e, "extra_punctuation");
  }

  std::set<std::string> universe(punctuation_set.begin(), punctuation_set.end());
  for (const auto& q : quote_pairs) {
    universe.insert(q.open);
    universe.insert(q.close);
  }
  universe.insert(extra_punctuation.begin(), extra_punctuation.end());
  // Sentence terminators are always punctuation.
  universe.insert({"।", "?", "!"});
  s.universe_.assign(universe.begin(), universe.end());
  std::stable_sort(s.universe_.begin(), s.universe_.end(),
                   [](const std::string& a, const std::string& b) { return a.size() > b.size(); });

  s.pos_tagset_ = std::move(pos_tagset);
  s.punctuation_set_ = std::move(punctuation_set);
  s.quote_pairs_ = std::move(quote_pairs);
  s.extra_punctuation_ = std::move(extra_punctuation);
  s.hash_ = sha256_hex(s.canonical_form());
  return s;
}

const FeatureSchema& FeatureSchema::default_schema() {
  // BIS/IIIT shallow-parser tags minus UNK and ECH.
  static const FeatureSchema schema = create(
      {"NN", "NST", "NNP", "PRP", "DEM", "VM", "VAUX", "JJ", "RB", "PSP", "RP", "CC",
       "WQ", "QF", "QC", "QO", "CL", "INTF", "INJ", "NEG", "UT", "SYM", "XC", "RDP"},
      {"।", "?", "!", ",", ";", ":", "-", "'", "\"", "("},
      {{"“", "”"}, {"\"", "\""}},
      {")", "‘", "’", ".", "॥"});
  return schema;
}

FeatureSchema FeatureSchema::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("schema is not valid JSON: ") + e.what());
  }
  try {
    std::vector<QuotePair> quotes;
    if (j.contains("quote_pairs")) {
      for (const auto& pair : j.at("quote_pairs")) {
        if (!pair.is_array() || pair.size() != 2) {
          throw ValidationError("quote_pairs entries must be [open, close]");
        }
        quotes.push_back({pair[0].get<std::string>(), pair[1].get<std::string>()});
      }
    }
    std::vector<std::string> extra;
    if (j.contains("extra_punctuation")) {
      extra = j.at("extra_punctuation").get<std::vector<std::string>>();
    }
    return create(j.at("pos_tagset").get<std::vector<std::string>>(),
                  j.at("punctuation_set").get<std::vector<std::string>>(),
                  std::move(quotes), std::move(extra));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("schema: ") + e.what());
  }
}

FeatureSchema FeatureSchema::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read schema file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return from_json(buf.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

std::string FeatureSchema::to_json() const {
  nlohmann::ordered_json j;
  j["pos_tagset"] = pos_tagset_;
  j["punctuation_set"] = punctuation_set_;
  auto quotes = nlohmann::ordered_json::array();
  for (const auto& q : quote_pairs_) quotes.push_back({q.open, q.close});
  j["quote_pairs"] = quotes;
  j["extra_punctuation"] = extra_punctuation_;
  return j.dump(2) + "\n";
}

std::string FeatureSchema::canonical_form() const {
  std::string out = "pos_tagset";
  for (const auto& t : pos_tagset_) out += "\t" + t;
  out += "\npunctuation_set";
  for (const auto& p : punctuation_set_) out += "\t" + p;
  out += "\nquote_pairs";
  for (const auto& q : quote_pairs_) out += "\t" + q.open + " " + q.close;
  out += "\nextra_punctuation";
  for (const auto& e : extra_punctuation_) out += "\t" + e;
  out += "\n";
  return out;
}

std::optional<std::size_t> FeatureSchema::pos_index(std::string_view tag) const {
  auto it = pos_lookup_.find(std::string(tag));
  if (it == pos_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FeatureSchema::punctuation_index(std::string_view surface) const {
  auto it = punct_lookup_.find(std::string(surface));
  if (it == punct_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t FeatureSchema::match_punctuation(std::string_view text) const {
  for (const auto& p : universe_) {
    if (text.starts_with(p)) return p.size();
  }
  return 0;
}

bool FeatureSchema::is_punctuation(std::string_view surface) const {
  if (surface.empty()) return false;
  while (!surface.empty()) {
    const std::size_t n = match_punctuation(surface);
    if (n == 0) return false;
    surface.remove_prefix(n);
  }
  return true;
}

}  // namespace stylo
