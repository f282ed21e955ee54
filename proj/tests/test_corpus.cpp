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

#include <algorithm>
#include <random>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "stylo/corpus.hpp"
#include "stylo/error.hpp"
#include "stylo/generator.hpp"
#include "stylo/model_io.hpp"

namespace stylo {
namespace {

const FeatureSchema& schema() { return FeatureSchema::default_schema(); }

std::vector<std::string> surfaces(const Sentence& s) {
  std::vector<std::string> out;
  for (const auto& t : s.tokens) out.push_back(t.surface);
  return out;
}

std::size_t terminator_count(const std::string& text) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 3, "।") == 0) ++n;
    if (text[i] == '?' || text[i] == '!') ++n;
  }
  return n;
}

TEST_CASE("parse_annotated: minimal document") {
  const Document doc = parse_annotated("রাম\tNN\tB-NP\n।\tSYM\tO\n", schema());
  REQUIRE(doc.sentences.size() == 1);
  REQUIRE(doc.sentences[0].tokens.size() == 2);
  CHECK_FALSE(doc.sentences[0].tokens[0].is_punctuation);
  CHECK(doc.sentences[0].tokens[1].is_punctuation);
  CHECK(doc.sentences[0].terminator == Terminator::kDari);
  CHECK(doc.source_mode == SourceMode::kAnnotated);
}

TEST_CASE("parse_annotated: empty input has no sentences") {
  CHECK(parse_annotated("", schema()).sentences.empty());
  CHECK(parse_annotated("# only a comment\n\n\n", schema()).sentences.empty());
}

TEST_CASE("parse_annotated: three-sentence fixture") {
  const Document doc = parse_annotated(read_file(oracle::fixture("three_sentences.conll")),
                                       schema(), "three_sentences.conll");
  REQUIRE(doc.sentences.size() == 3);
  CHECK(doc.sentences[0].tokens.size() == 4);
  CHECK(doc.sentences[1].tokens.size() == 3);
  CHECK(doc.sentences[2].tokens.size() == 5);
  CHECK(doc.sentences[0].terminator == Terminator::kDari);
  CHECK(doc.sentences[1].terminator == Terminator::kQuestion);
  CHECK(doc.sentences[2].terminator == Terminator::kDari);
  CHECK(doc.sentences[2].word_count() == 3);
}

TEST_CASE("parse_annotated: errors carry line numbers") {
  SUBCASE("wrong field count") {
    try {
      parse_annotated("রাম\tNN\tB-NP\nগেল\tVM\n", schema(), "f.conll");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("f.conll:2") != std::string::npos);
    }
  }
  SUBCASE("I- without a chunk") {
    try {
      parse_annotated("a\tNN\tO\nb\tNN\tI-NP\n", schema());
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("I- of a different type") {
    CHECK_THROWS_AS(parse_annotated("a\tNN\tB-NP\nb\tNN\tI-VGF\n", schema()), ParseError);
  }
  SUBCASE("I- cannot continue across a sentence break") {
    try {
      parse_annotated("a\tNN\tB-NP\n\nb\tNN\tI-NP\n", schema());
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("unknown chunk type") {
    CHECK_THROWS_AS(parse_annotated("a\tNN\tB-XP\n", schema()), ParseError);
  }
  SUBCASE("unknown POS tag is named") {
    try {
      parse_annotated("a\tNN\tO\nb\tFOO\tO\n", schema());
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("'FOO'") != std::string::npos);
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("invalid UTF-8") {
    CHECK_THROWS_AS(parse_annotated("\xff\tNN\tO\n", schema()), DecodeError);
  }
}

TEST_CASE("parse_annotated: UNK accepted, comments and CRLF ignored") {
  const Document doc =
      parse_annotated("# c\r\nক\tUNK\tO\r\n#x\tNN\tO\r\nখ\tNN\tB-NP\r\n", schema());
  REQUIRE(doc.sentences.size() == 1);
  CHECK(surfaces(doc.sentences[0]) == std::vector<std::string>{"ক", "খ"});
  CHECK(doc.sentences[0].terminator == Terminator::kEndOfDocument);
}

TEST_CASE("surfaces are NFC-normalized") {
  // U+09DF is composition-excluded, so NFC spells it U+09AF U+09BC.
  const std::string precomposed = "\xe0\xa7\x9f";
  const std::string decomposed = "\xe0\xa6\xaf\xe0\xa6\xbc";
  const Document doc = parse_annotated(precomposed + "\tNN\tO\n", schema());
  CHECK(doc.sentences[0].tokens[0].surface == decomposed);
  const Document raw = parse_raw(precomposed, schema());
  CHECK(raw.sentences[0].tokens[0].surface == decomposed);
}

TEST_CASE("parse_raw: splits on terminators") {
  const Document doc = parse_raw("সে গেল। সে এল?", schema());
  REQUIRE(doc.sentences.size() == 2);
  CHECK(surfaces(doc.sentences[0]) == std::vector<std::string>{"সে", "গেল", "।"});
  CHECK(surfaces(doc.sentences[1]) == std::vector<std::string>{"সে", "এল", "?"});
  CHECK(doc.sentences[1].terminator == Terminator::kQuestion);
  for (const auto& s : doc.sentences) {
    for (const auto& t : s.tokens) {
      CHECK(t.pos == "UNK");
      CHECK(t.chunk_tag == "O");
    }
  }
  CHECK(doc.source_mode == SourceMode::kRaw);
}

TEST_CASE("parse_raw: no terminator gives one end-of-document sentence") {
  const Document doc = parse_raw("a b c", schema());
  REQUIRE(doc.sentences.size() == 1);
  CHECK(doc.sentences[0].tokens.size() == 3);
  CHECK(doc.sentences[0].terminator == Terminator::kEndOfDocument);
}

TEST_CASE("parse_raw: paragraph fixture with 5 dari and a trailing clause") {
  const Document doc = parse_raw(read_file(oracle::fixture("paragraph.txt")), schema());
  REQUIRE(doc.sentences.size() == 6);
  CHECK(doc.sentences[1].word_count() == 3);
  CHECK(doc.sentences[5].word_count() == 3);
  CHECK(doc.sentences[5].terminator == Terminator::kEndOfDocument);
}

TEST_CASE("parse_raw: punctuation is split off words") {
  const Document doc = parse_raw("রাম,শ্যাম (যদু)", schema());
  REQUIRE(doc.sentences.size() == 1);
  CHECK(surfaces(doc.sentences[0]) ==
        std::vector<std::string>{"রাম", ",", "শ্যাম", "(", "যদু", ")"});
  CHECK(doc.sentences[0].word_count() == 3);
  CHECK_THROWS_AS(parse_raw("ok \xc3\x28", schema()), DecodeError);
}

TEST_CASE("property: raw sentence count equals terminators plus trailing text") {
  std::mt19937_64 rng(11);
  const std::vector<std::string> pieces = {"আমি", "তুমি", " ", "  ", "।",
                                           "?",   "!",    ",", "রাম", "\n"};
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    const std::size_t n = rng() % 30;
    for (std::size_t i = 0; i < n; ++i) text += pieces[rng() % pieces.size()];
    std::size_t trailing = 0;
    {
      auto end_of = [&](const std::string& mark) {
        const auto at = text.rfind(mark);
        return at == std::string::npos ? 0 : at + mark.size();
      };
      const std::size_t last_term = std::max({end_of("।"), end_of("?"), end_of("!")});
      const std::string tail = text.substr(last_term);
      trailing = tail.find_first_not_of(" \n") == std::string::npos ? 0 : 1;
    }
    const Document doc = parse_raw(text, schema());
    CHECK_MESSAGE(doc.sentences.size() == terminator_count(text) + trailing, text);
  }
}

Document raw_tokens(const std::vector<std::string>& words) {
  std::string text;
  for (const auto& w : words) text += w + " ";
  return parse_raw(text, schema());
}

TEST_CASE("detect_dialogs: quoted word") {
  const Document doc = raw_tokens({"সে", "বলল", "\"", "যাও", "\"", "।"});
  REQUIRE(doc.dialogs.size() == 1);
  CHECK(doc.dialogs[0] == DialogSpan{3, 4});
}

TEST_CASE("detect_dialogs: none without quotes") {
  CHECK(raw_tokens({"সে", "বলল", "যাও", "।"}).dialogs.empty());
}

TEST_CASE("detect_dialogs: two passages of 4 and 6 words") {
  const Document doc = parse_raw(
      "রাম বলল “ক খ গ ঘ” তারপর শ্যাম বলল \"চ ছ জ ঝ ঞ ট\" ।", schema());
  REQUIRE(doc.dialogs.size() == 2);
  const auto tokens = doc.tokens();
  auto words_in = [&](const DialogSpan& s) {
    std::size_t n = 0;
    for (std::size_t i = s.begin; i < s.end; ++i) n += tokens[i]->is_punctuation ? 0 : 1;
    return n;
  };
  CHECK(words_in(doc.dialogs[0]) == 4);
  CHECK(words_in(doc.dialogs[1]) == 6);
}

TEST_CASE("detect_dialogs: unmatched opener closes at the sentence terminator") {
  const Document doc = raw_tokens({"সে", "বলল", "\"", "যাও", "এখন", "।", "আর", "কিছু"});
  REQUIRE(doc.dialogs.size() == 1);
  CHECK(doc.dialogs[0] == DialogSpan{3, 5});
}

TEST_CASE("detect_dialogs: matched quotes may span sentences") {
  const Document doc = raw_tokens({"“", "যাও", "।", "এখনই", "।", "”", "সে", "বলল"});
  REQUIRE(doc.dialogs.size() == 1);
  CHECK(doc.dialogs[0] == DialogSpan{1, 5});
}

TEST_CASE("property: dialog spans are disjoint and sorted") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Document doc = parse_annotated(oracle::random_annotated_text(rng), schema());
    for (std::size_t i = 0; i < doc.dialogs.size(); ++i) {
      CHECK(doc.dialogs[i].begin < doc.dialogs[i].end);
      CHECK(doc.dialogs[i].end <= doc.token_count());
      if (i > 0) CHECK(doc.dialogs[i - 1].end <= doc.dialogs[i].begin);
    }
  }
}

TEST_CASE("property: annotated serialize/parse round trip") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Document doc = parse_annotated(oracle::random_annotated_text(rng), schema(), "d");
    const Document again = parse_annotated(serialize_annotated(doc), schema(), "d");
    CHECK(again == doc);
  }
}

TEST_CASE("load_corpus: cluster order and manifest order") {
  oracle::TempDir dir("corpus");
  save_text(dir.path() / "a.conll", "ক\tNN\tO\n");
  save_text(dir.path() / "b.txt", "খ গ।");
  save_text(dir.path() / "c.conll", "ঘ\tNN\tO\n");
  save_text(dir.path() / "m.tsv",
            "# comment\nb.txt\tR\traw\na.conll\tR\tannotated\n\nc.conll\tA\tannotated\n");
  const Corpus corpus = load_corpus(dir.path() / "m.tsv", schema());
  CHECK(corpus.clusters == std::vector<std::string>{"R", "A"});
  REQUIRE(corpus.documents.size() == 3);
  CHECK(corpus.documents[0].document.id == "b.txt");
  CHECK(corpus.documents[0].document.source_mode == SourceMode::kRaw);
  CHECK(corpus.documents[1].document.id == "a.conll");
  CHECK(corpus.documents[2].label == "A");
}

TEST_CASE("load_corpus: errors") {
  oracle::TempDir dir("corpus-err");
  save_text(dir.path() / "a.conll", "ক\tNN\tO\n");

  save_text(dir.path() / "empty.tsv", "");
  try {
    load_corpus(dir.path() / "empty.tsv", schema());
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("no documents") != std::string::npos);
  }
  CHECK(load_corpus(dir.path() / "empty.tsv", schema(), {.allow_empty = true}).documents.empty());

  save_text(dir.path() / "missing.tsv", "a.conll\tR\tannotated\nnope.conll\tR\tannotated\n");
  try {
    load_corpus(dir.path() / "missing.tsv", schema());
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find("nope.conll") != std::string::npos);
  }

  save_text(dir.path() / "dup.tsv", "a.conll\tR\tannotated\na.conll\tA\tannotated\n");
  CHECK_THROWS_AS(load_corpus(dir.path() / "dup.tsv", schema()), ValidationError);

  save_text(dir.path() / "mode.tsv", "a.conll\tR\tconll\n");
  CHECK_THROWS_AS(load_corpus(dir.path() / "mode.tsv", schema()), ParseError);

  save_text(dir.path() / "fields.tsv", "a.conll\tR\n");
  CHECK_THROWS_AS(load_corpus(dir.path() / "fields.tsv", schema()), ParseError);

  CHECK_THROWS_AS(load_corpus(dir.path() / "absent.tsv", schema()), IoError);
}

TEST_CASE("load_corpus: 60 generated documents across 3 clusters") {
  GeneratorProfile profile = GeneratorProfile::default_profile();
  for (auto& c : profile.clusters) {
    c.train_docs = 20;
    c.test_docs = 0;
    c.sentences_per_doc = {2, 4};
  }
  oracle::TempDir dir("corpus-60");
  write_corpus(generate_corpus(profile, schema(), 3), schema(), dir.path());
  const Corpus corpus = load_corpus(dir.path() / "manifest.tsv", schema());
  REQUIRE(corpus.clusters.size() == 3);
  for (const auto& label : corpus.clusters) {
    CHECK(std::count_if(corpus.documents.begin(), corpus.documents.end(),
                        [&](const LabeledDocument& d) { return d.label == label; }) == 20);
  }
}

TEST_CASE("load_lexicon") {
  oracle::TempDir dir("lexicon");
  save_text(dir.path() / "two.txt", "রাম\nগেল\n");
  CHECK(load_lexicon(dir.path() / "two.txt").size() == 2);

  save_text(dir.path() / "dups.txt", "# words\nরাম\n\nরাম\nগেল\n  # indented comment\n");
  const Lexicon dups = load_lexicon(dir.path() / "dups.txt");
  CHECK(dups.size() == 2);
  CHECK(dups.contains("রাম"));
  CHECK_FALSE(dups.contains("সে"));

  // Generated wordlist of 1000 distinct entries.
  std::string list;
  for (int i = 0; i < 1000; ++i) list += "w" + std::to_string(i) + "\n";
  save_text(dir.path() / "thousand.txt", list);
  CHECK(load_lexicon(dir.path() / "thousand.txt").size() == 1000);

  // Lookup is NFC-insensitive.
  save_text(dir.path() / "nfc.txt", "\xe0\xa7\x9f\n");
  CHECK(load_lexicon(dir.path() / "nfc.txt").contains("\xe0\xa6\xaf\xe0\xa6\xbc"));

  CHECK_THROWS_AS(load_lexicon(dir.path() / "none.txt"), IoError);
}

}  // namespace
}  // namespace stylo
