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

#include "stylo/generator.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "stylo/corpus.hpp"
#include "stylo/error.hpp"
#include "stylo/model_io.hpp"
#include "stylo/unicode.hpp"

namespace stylo {
namespace detail {
extern const std::string_view kDefaultProfileJson;
}  // namespace detail

namespace {

// mt19937_64 output is fixed by the standard; the <random> distributions
// are not, so sampling is done by hand to keep output identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::size_t below(std::size_t n) {
    const std::uint64_t bound = n;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  }

  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

  bool chance(double p) { return p > 0.0 && uniform() < p; }

  std::size_t weighted(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double x = uniform() * total;
    std::size_t last = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] <= 0.0) continue;
      last = i;
      if (x < weights[i]) return i;
      x -= weights[i];
    }
    return last;
  }

 private:
  std::mt19937_64 engine_;
};

// Bengali letters that are stable under NFC: consonants U+0995-U+09B9 and
// independent vowels U+0985-U+0994, minus unassigned code points.
const std::vector<std::string>& alphabet() {
  static const std::vector<std::string> letters = [] {
    std::vector<std::string> out;
    for (char32_t cp = 0x0985; cp <= 0x0994; ++cp) {
      if (cp == 0x098D || cp == 0x098E || cp == 0x0991 || cp == 0x0992) continue;
      out.push_back(unicode::encode(cp));
    }
    for (char32_t cp = 0x0995; cp <= 0x09B9; ++cp) {
      if (cp == 0x09A9 || cp == 0x09B1 || (cp >= 0x09B3 && cp <= 0x09B5)) continue;
      out.push_back(unicode::encode(cp));
    }
    return out;
  }();
  return letters;
}

std::string random_word(Rng& rng, std::size_t length) {
  const auto& letters = alphabet();
  std::string w;
  for (std::size_t i = 0; i < length; ++i) w += letters[rng.below(letters.size())];
  return w;
}

std::size_t length_for_bin(Rng& rng, std::size_t bin) {
  return bin + 1 < layout::kWordLengthBins ? bin + 1 : rng.between(10, 13);
}

std::vector<double> weights_in_order(const std::map<std::string, double>& weights,
                                     const std::vector<std::string>& order) {
  std::vector<double> out;
  out.reserve(order.size());
  for (const auto& key : order) {
    const auto it = weights.find(key);
    out.push_back(it == weights.end() ? 0.0 : it->second);
  }
  return out;
}

std::vector<std::string> keys_of(const std::map<std::string, double>& weights) {
  std::vector<std::string> out;
  for (const auto& [k, w] : weights) out.push_back(k);
  return out;
}

bool any_positive(const auto& weights) {
  return std::any_of(std::begin(weights), std::end(weights), [](double w) { return w > 0.0; });
}

void check_weights(const auto& weights, const std::string& what) {
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw ValidationError(what + ": weights must be >= 0");
  }
  if (!any_positive(weights)) throw ValidationError(what + ": needs a positive weight");
}

void check_rate(double r, const std::string& what) {
  if (!(r >= 0.0 && r <= 1.0)) throw ValidationError(what + " must lie in [0, 1]");
}

std::vector<double> values_of(const std::map<std::string, double>& m) {
  std::vector<double> out;
  for (const auto& [k, v] : m) out.push_back(v);
  return out;
}

const QuotePair* dialog_quotes(const FeatureSchema& schema) {
  for (const auto& q : schema.quote_pairs()) {
    if (q.open == "\"" && q.close == "\"") return &q;
  }
  return schema.quote_pairs().empty() ? nullptr : &schema.quote_pairs().front();
}

// Running tallies that become the ground-truth ledger.
struct Tally {
  std::array<std::size_t, layout::kWordLengthBins> length_bins{};
  std::array<std::size_t, layout::kSentenceBins> sentence_bins{};
  std::array<std::size_t, kPunctuationCount> punct_bins{};
  std::array<std::size_t, kChunkTypeCount> chunk_bins{};
  std::array<std::size_t, kChunkTypeCount> covered{};
  std::array<std::size_t, kPosTagCount> pos_bins{};
  std::size_t words = 0;
  std::size_t punct = 0;
  std::size_t sentences = 0;
  std::size_t chunks = 0;
  std::size_t tagged = 0;
  std::size_t dialogs = 0;
  std::size_t dialog_words = 0;
  std::size_t oov = 0;
  std::unordered_map<std::string, std::size_t> frequency;

  FeatureArray features() const {
    auto pct = [](std::size_t a, std::size_t b) {
      return b == 0 ? 0.0 : 100.0 * static_cast<double>(a) / static_cast<double>(b);
    };
    FeatureArray f{};
    for (std::size_t i = 0; i < length_bins.size(); ++i) {
      f[layout::kWordLength + i] = pct(length_bins[i], words);
    }
    for (std::size_t i = 0; i < sentence_bins.size(); ++i) {
      f[layout::kSentenceLength + i] = pct(sentence_bins[i], sentences);
    }
    f[layout::kPunctPerWord] = pct(punct, words);
    for (std::size_t i = 0; i < punct_bins.size(); ++i) {
      f[layout::kPunctuation + i] = pct(punct_bins[i], punct);
    }
    for (std::size_t i = 0; i < kChunkTypeCount; ++i) {
      f[layout::kChunkShare + i] = pct(chunk_bins[i], chunks);
      f[layout::kChunkCoverage + i] = pct(covered[i], words);
    }
    for (std::size_t i = 0; i < pos_bins.size(); ++i) {
      f[layout::kPos + i] = pct(pos_bins[i], tagged);
    }
    if (dialogs > 0 && words > 0) {
      f[layout::kDialog] = 100.0 *
                           (static_cast<double>(dialog_words) / static_cast<double>(dialogs)) /
                           static_cast<double>(words);
    }
    f[layout::kOutOfLexicon] = pct(oov, words);
    std::size_t hapax = 0;
    for (const auto& [w, n] : frequency) hapax += n == 1 ? 1 : 0;
    f[layout::kHapax] = pct(hapax, words);
    return f;
  }
};

class DocumentWriter {
 public:
  DocumentWriter(const FeatureSchema& schema, Tally& tally) : schema_(schema), tally_(tally) {
    symbol_tag_ = schema.pos_index("SYM") ? "SYM" : std::string(kUnknownTag);
  }

  void word(const std::string& surface, const std::string& pos, const std::string& chunk_tag,
            int chunk_type, std::size_t length_bin, bool oov) {
    line(surface, pos, chunk_tag);
    ++tally_.words;
    ++tally_.length_bins[length_bin];
    if (chunk_type >= 0) ++tally_.covered[static_cast<std::size_t>(chunk_type)];
    if (oov) ++tally_.oov;
    ++tally_.frequency[surface];
    count_pos(pos);
  }

  void punctuation(const std::string& surface) {
    line(surface, symbol_tag_, "O");
    ++tally_.punct;
    if (const auto idx = schema_.punctuation_index(surface)) ++tally_.punct_bins[*idx];
    count_pos(symbol_tag_);
  }

  void chunk_started(std::size_t type) {
    ++tally_.chunks;
    ++tally_.chunk_bins[type];
  }

  void end_sentence(std::size_t words) {
    ++tally_.sentences;
    ++tally_.sentence_bins[sentence_length_bin(words)];
    text_ += '\n';
  }

  std::string take_text() { return std::move(text_); }

 private:
  void line(const std::string& surface, const std::string& pos, const std::string& chunk) {
    text_ += surface;
    text_ += '\t';
    text_ += pos;
    text_ += '\t';
    text_ += chunk;
    text_ += '\n';
  }

  void count_pos(const std::string& pos) {
    if (const auto idx = schema_.pos_index(pos)) {
      ++tally_.pos_bins[*idx];
      ++tally_.tagged;
    }
  }

  const FeatureSchema& schema_;
  Tally& tally_;
  std::string symbol_tag_;
  std::string text_;
};

struct Vocabulary {
  std::array<std::vector<std::string>, layout::kWordLengthBins> pools;
};

class ClusterGenerator {
 public:
  ClusterGenerator(const ClusterProfile& profile, const FeatureSchema& schema,
                   const Vocabulary& vocabulary, const std::unordered_set<std::string>& lexicon)
      : p_(profile),
        schema_(schema),
        vocab_(vocabulary),
        lexicon_(lexicon),
        quotes_(dialog_quotes(schema)) {
    std::vector<std::string> chunk_order(kChunkTypes.begin(), kChunkTypes.end());
    chunk_weights_ = weights_in_order(p_.chunk_weights, chunk_order);
    pos_weights_ = weights_in_order(p_.pos_weights, schema.pos_tagset());
    punct_symbols_ = keys_of(p_.punctuation_weights);
    punct_weights_ = values_of(p_.punctuation_weights);
    terminators_ = keys_of(p_.terminator_weights);
    terminator_weights_ = values_of(p_.terminator_weights);
  }

  // Returns the annotated text and the expected features.
  std::pair<std::string, FeatureArray> document(Rng& rng) {
    Tally tally;
    DocumentWriter out(schema_, tally);
    const std::size_t sentences =
        rng.between(p_.sentences_per_doc.first, p_.sentences_per_doc.second);
    for (std::size_t s = 0; s < sentences; ++s) sentence(rng, out, tally);
    return {out.take_text(), tally.features()};
  }

 private:
  struct Unit {
    int type;  // chunk type index, -1 for a bare word
    std::size_t size;
  };

  void sentence(Rng& rng, DocumentWriter& out, Tally& tally) {
    const std::vector<double> bins(p_.sentence_length_weights.begin(),
                                   p_.sentence_length_weights.end());
    const std::size_t bin = rng.weighted(bins);
    const std::size_t n = bin + 1 < layout::kSentenceBins
                              ? rng.between(std::max<std::size_t>(1, bin * 10), bin * 10 + 9)
                              : rng.between(90, 110);

    std::vector<Unit> units;
    for (std::size_t left = n; left > 0;) {
      if (rng.chance(p_.unchunked_rate)) {
        units.push_back({-1, 1});
        left -= 1;
        continue;
      }
      const auto type = static_cast<int>(rng.weighted(chunk_weights_));
      const std::size_t size =
          std::min(left, rng.between(p_.chunk_size.first, p_.chunk_size.second));
      units.push_back({type, size});
      left -= size;
    }

    std::size_t dialog_first = units.size();
    std::size_t dialog_last = units.size();
    if (quotes_ != nullptr && rng.chance(p_.dialog_rate)) {
      dialog_first = rng.below(units.size());
      dialog_last = rng.between(dialog_first, units.size() - 1);
      ++tally.dialogs;
    }

    for (std::size_t u = 0; u < units.size(); ++u) {
      if (u > 0 && rng.chance(p_.punctuation_rate)) {
        out.punctuation(punct_symbols_[rng.weighted(punct_weights_)]);
      }
      if (u == dialog_first) out.punctuation(quotes_->open);
      const Unit& unit = units[u];
      if (unit.type >= 0) out.chunk_started(static_cast<std::size_t>(unit.type));
      for (std::size_t k = 0; k < unit.size; ++k) {
        std::string tag = "O";
        if (unit.type >= 0) {
          tag = (k == 0 ? "B-" : "I-") +
                std::string(kChunkTypes[static_cast<std::size_t>(unit.type)]);
        }
        emit_word(rng, out, tag, unit.type);
        if (u >= dialog_first && u <= dialog_last) ++tally.dialog_words;
      }
      if (u == dialog_last) out.punctuation(quotes_->close);
    }
    out.punctuation(terminators_[rng.weighted(terminator_weights_)]);
    out.end_sentence(n);
  }

  void emit_word(Rng& rng, DocumentWriter& out, const std::string& chunk_tag, int chunk_type) {
    const std::vector<double> lengths(p_.word_length_weights.begin(), p_.word_length_weights.end());
    const std::size_t bin = rng.weighted(lengths);
    std::string surface;
    bool oov = false;
    if (rng.chance(p_.oov_rate)) {
      for (int attempt = 0; attempt < 64 && !oov; ++attempt) {
        surface = random_word(rng, length_for_bin(rng, bin));
        oov = lexicon_.count(surface) == 0;
      }
    }
    if (!oov) {
      const auto& pool = vocab_.pools[bin];
      surface = pool[rng.below(pool.size())];
    }
    const std::string pos = rng.chance(p_.unk_rate)
                                ? std::string(kUnknownTag)
                                : schema_.pos_tagset()[rng.weighted(pos_weights_)];
    out.word(surface, pos, chunk_tag, chunk_type, bin, oov);
  }

  const ClusterProfile& p_;
  const FeatureSchema& schema_;
  const Vocabulary& vocab_;
  const std::unordered_set<std::string>& lexicon_;
  const QuotePair* quotes_;
  std::vector<double> chunk_weights_;
  std::vector<double> pos_weights_;
  std::vector<std::string> punct_symbols_;
  std::vector<double> punct_weights_;
  std::vector<std::string> terminators_;
  std::vector<double> terminator_weights_;
};

Vocabulary build_vocabulary(const ClusterProfile& p, Rng& rng,
                            std::unordered_set<std::string>& lexicon) {
  Vocabulary v;
  double total = 0.0;
  for (double w : p.word_length_weights) total += w;
  for (std::size_t bin = 0; bin < layout::kWordLengthBins; ++bin) {
    const double w = p.word_length_weights[bin];
    if (w <= 0.0) continue;
    // Leave headroom for out-of-lexicon words among short lengths.
    std::size_t capacity = SIZE_MAX;
    if (bin == 0) capacity = alphabet().size() / 2;
    if (bin == 1) capacity = alphabet().size() * alphabet().size() / 2;
    const auto wanted = static_cast<std::size_t>(
        std::max(1.0, std::round(static_cast<double>(p.vocabulary_size) * w / total)));
    const std::size_t target = std::min(wanted, capacity);
    auto& pool = v.pools[bin];
    for (std::size_t attempts = 0; pool.size() < target && attempts < target * 64; ++attempts) {
      std::string word = random_word(rng, length_for_bin(rng, bin));
      if (lexicon.insert(word).second) pool.push_back(std::move(word));
    }
    if (pool.empty()) {
      // Every candidate already belongs to another cluster; share one.
      for (const auto& word : lexicon) {
        if (unicode::code_point_count(word) == bin + 1 ||
            (bin + 1 == layout::kWordLengthBins && unicode::code_point_count(word) >= 10)) {
          pool.push_back(word);
          break;
        }
      }
    }
    if (pool.empty()) throw ValidationError("could not build vocabulary for '" + p.label + "'");
  }
  return v;
}

std::pair<std::size_t, std::size_t> read_range(const nlohmann::json& j, const char* key,
                                               std::pair<std::size_t, std::size_t> fallback) {
  if (!j.contains(key)) return fallback;
  const auto& r = j.at(key);
  if (!r.is_array() || r.size() != 2) {
    throw ValidationError(std::string(key) + " must be [min, max]");
  }
  return {r[0].get<std::size_t>(), r[1].get<std::size_t>()};
}

template <std::size_t N>
std::array<double, N> read_bins(const nlohmann::json& j, const char* key) {
  const auto v = j.at(key).get<std::vector<double>>();
  if (v.size() != N) {
    throw ValidationError(std::string(key) + " must have " + std::to_string(N) + " entries");
  }
  std::array<double, N> out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

std::map<std::string, double> read_weights(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return {};
  std::map<std::string, double> out;
  for (const auto& [k, v] : j.at(key).items()) out[unicode::nfc(k)] = v.get<double>();
  return out;
}

}  // namespace

std::string_view GeneratorProfile::default_profile_json() { return detail::kDefaultProfileJson; }

const GeneratorProfile& GeneratorProfile::default_profile() {
  static const GeneratorProfile profile = from_json(default_profile_json());
  return profile;
}

GeneratorProfile GeneratorProfile::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("profile is not valid JSON: ") + e.what());
  }
  GeneratorProfile profile;
  try {
    for (const auto& c : j.at("clusters")) {
      ClusterProfile p;
      p.label = c.at("label").get<std::string>();
      p.train_docs = c.value("train_docs", std::size_t{0});
      p.test_docs = c.value("test_docs", std::size_t{0});
      p.sentences_per_doc = read_range(c, "sentences_per_doc", p.sentences_per_doc);
      p.word_length_weights = read_bins<layout::kWordLengthBins>(c, "word_length_weights");
      p.sentence_length_weights = read_bins<layout::kSentenceBins>(c, "sentence_length_weights");
      p.punctuation_rate = c.value("punctuation_rate", 0.0);
      p.punctuation_weights = read_weights(c, "punctuation_weights");
      p.terminator_weights = read_weights(c, "terminator_weights");
      p.chunk_weights = read_weights(c, "chunk_weights");
      p.chunk_size = read_range(c, "chunk_size", p.chunk_size);
      p.unchunked_rate = c.value("unchunked_rate", 0.0);
      p.pos_weights = read_weights(c, "pos_weights");
      p.unk_rate = c.value("unk_rate", 0.0);
      p.dialog_rate = c.value("dialog_rate", 0.0);
      p.oov_rate = c.value("oov_rate", 0.0);
      p.vocabulary_size = c.value("vocabulary_size", p.vocabulary_size);
      profile.clusters.push_back(std::move(p));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("profile: ") + e.what());
  }
  return profile;
}

GeneratorProfile GeneratorProfile::load(const std::filesystem::path& path) {
  try {
    return from_json(read_file(path));
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void GeneratorProfile::validate(const FeatureSchema& schema) const {
  if (clusters.empty()) throw ValidationError("profile defines no clusters");
  std::set<std::string> labels;
  for (const auto& p : clusters) {
    const std::string where = "cluster '" + p.label + "'";
    if (p.label.empty() ||
        !std::all_of(p.label.begin(), p.label.end(), [](char ch) {
          return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-';
        })) {
      throw ValidationError(where + ": labels must be non-empty [A-Za-z0-9_-]");
    }
    if (!labels.insert(p.label).second) throw ValidationError(where + ": duplicate label");
    if (p.train_docs + p.test_docs == 0) throw ValidationError(where + ": no documents");
    if (p.sentences_per_doc.first > p.sentences_per_doc.second) {
      throw ValidationError(where + ": sentences_per_doc min exceeds max");
    }
    if (p.chunk_size.first < 1 || p.chunk_size.first > p.chunk_size.second) {
      throw ValidationError(where + ": chunk_size must satisfy 1 <= min <= max");
    }
    check_weights(p.word_length_weights, where + " word_length_weights");
    check_weights(p.sentence_length_weights, where + " sentence_length_weights");
    check_weights(values_of(p.terminator_weights), where + " terminator_weights");
    for (const auto& [t, w] : p.terminator_weights) {
      if (!terminator_of(t)) throw ValidationError(where + ": '" + t + "' is not a terminator");
    }
    if (p.punctuation_rate > 0.0) {
      check_weights(values_of(p.punctuation_weights), where + " punctuation_weights");
    }
    for (const auto& [sym, w] : p.punctuation_weights) {
      bool is_quote = false;
      for (const auto& q : schema.quote_pairs()) is_quote |= sym == q.open || sym == q.close;
      if (!schema.is_punctuation(sym) || terminator_of(sym) || is_quote) {
        throw ValidationError(where + ": '" + sym +
                              "' must be non-terminator, non-quote schema punctuation");
      }
    }
    if (p.unchunked_rate < 1.0) check_weights(values_of(p.chunk_weights), where + " chunk_weights");
    for (const auto& [t, w] : p.chunk_weights) {
      if (!chunk_type_index(t)) throw ValidationError(where + ": unknown chunk type '" + t + "'");
    }
    if (p.unk_rate < 1.0) check_weights(values_of(p.pos_weights), where + " pos_weights");
    for (const auto& [t, w] : p.pos_weights) {
      if (!schema.pos_index(t)) {
        throw ValidationError(where + ": POS tag '" + t + "' not in schema");
      }
    }
    check_rate(p.punctuation_rate, where + " punctuation_rate");
    check_rate(p.unchunked_rate, where + " unchunked_rate");
    check_rate(p.unk_rate, where + " unk_rate");
    check_rate(p.dialog_rate, where + " dialog_rate");
    check_rate(p.oov_rate, where + " oov_rate");
    if (p.dialog_rate > 0.0 && schema.quote_pairs().empty()) {
      throw ValidationError(where + ": dialog_rate needs a quote pair in the schema");
    }
    if (p.vocabulary_size == 0) throw ValidationError(where + ": vocabulary_size must be >= 1");
  }
}

GeneratedCorpus generate_corpus(const GeneratorProfile& profile, const FeatureSchema& schema,
                                std::uint64_t seed) {
  profile.validate(schema);
  Rng rng(seed);

  std::unordered_set<std::string> lexicon;
  std::vector<Vocabulary> vocabularies;
  vocabularies.reserve(profile.clusters.size());
  for (const auto& p : profile.clusters) vocabularies.push_back(build_vocabulary(p, rng, lexicon));

  GeneratedCorpus corpus;
  for (std::size_t c = 0; c < profile.clusters.size(); ++c) {
    const auto& p = profile.clusters[c];
    ClusterGenerator gen(p, schema, vocabularies[c], lexicon);
    for (std::size_t d = 0; d < p.train_docs + p.test_docs; ++d) {
      const bool test = d >= p.train_docs;
      const std::size_t number = test ? d - p.train_docs + 1 : d + 1;
      char name[32];
      std::snprintf(name, sizeof name, "%s-%03zu.conll", test ? "test" : "train", number);
      GeneratedDocument doc;
      doc.id = "docs/" + p.label + "-" + name;
      doc.label = p.label;
      doc.is_test = test;
      std::tie(doc.text, doc.expected) = gen.document(rng);
      corpus.documents.push_back(std::move(doc));
    }
  }
  corpus.lexicon.assign(lexicon.begin(), lexicon.end());
  std::sort(corpus.lexicon.begin(), corpus.lexicon.end());
  return corpus;
}

void write_corpus(const GeneratedCorpus& corpus, const FeatureSchema& schema,
                  const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir / "docs", ec);
  if (ec) throw IoError("cannot create " + (out_dir / "docs").string() + ": " + ec.message());

  std::string manifest, train, test, ledger = feature_dump_header() + "\n";
  bool any_test = false;
  for (const auto& doc : corpus.documents) {
    save_text(out_dir / doc.id, doc.text);
    const std::string line = doc.id + "\t" + doc.label + "\tannotated\n";
    manifest += line;
    (doc.is_test ? test : train) += line;
    any_test |= doc.is_test;
    ledger += doc.id;
    for (double v : doc.expected) ledger += "\t" + format_general(v, 17);
    ledger += "\n";
  }
  std::string lexicon;
  for (const auto& w : corpus.lexicon) lexicon += w + "\n";

  save_text(out_dir / "manifest.tsv", manifest);
  save_text(out_dir / "train.tsv", train);
  if (any_test) save_text(out_dir / "test.tsv", test);
  save_text(out_dir / "lexicon.txt", lexicon);
  save_text(out_dir / "ledger.tsv", ledger);
  save_text(out_dir / "schema.json", schema.to_json());
}

std::map<std::string, FeatureArray> read_ledger(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  std::istringstream lines(text);
  std::string line;
  std::map<std::string, FeatureArray> out;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line_no == 1 || line.empty()) continue;
    std::istringstream fields(line);
    std::string id, cell;
    std::getline(fields, id, '\t');
    FeatureArray values{};
    std::size_t i = 0;
    while (std::getline(fields, cell, '\t')) {
      if (i >= kFeatureDimension) throw ParseError(path.string(), line_no, "too many columns");
      double v = 0.0;
      const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (res.ec != std::errc()) throw ParseError(path.string(), line_no, "bad number");
      values[i++] = v;
    }
    if (i != kFeatureDimension) throw ParseError(path.string(), line_no, "expected 76 values");
    out.emplace(std::move(id), values);
  }
  return out;
}

}  // namespace stylo
