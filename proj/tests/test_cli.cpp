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

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "stylo/cli.hpp"
#include "stylo/error.hpp"
#include "stylo/features.hpp"
#include "stylo/generator.hpp"
#include "stylo/model_io.hpp"

namespace stylo {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result stylo_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string s(const std::filesystem::path& p) { return p.string(); }

class GeneratedFixture {
 public:
  explicit GeneratedFixture(std::uint64_t seed, const GeneratorProfile& profile =
                                                    GeneratorProfile::default_profile())
      : dir_("cli") {
    corpus_ = generate_corpus(profile, FeatureSchema::default_schema(), seed);
    write_corpus(corpus_, FeatureSchema::default_schema(), dir_.path());
  }
  std::filesystem::path operator/(const std::string& name) const { return dir_.path() / name; }
  const GeneratedCorpus& corpus() const { return corpus_; }

 private:
  oracle::TempDir dir_;
  GeneratedCorpus corpus_;
};

TEST_CASE("extract matches the audited golden dump byte for byte") {
  const auto r = stylo_run({"extract", s(oracle::fixture("golden_manifest.tsv")), "--lexicon",
                            s(oracle::fixture("audit_lexicon.txt"))});
  REQUIRE(r.code == 0);
  CHECK(r.out == read_file(oracle::fixture("golden_extract.tsv")));
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
  std::string zero_row = "\nempty.conll";
  for (int i = 0; i < 76; ++i) zero_row += "\t0";
  CHECK(r.out.find(zero_row + "\n") != std::string::npos);
}

TEST_CASE("extract writes to --out and honours STYLO_SCHEMA") {
  oracle::TempDir dir("cli-out");
  const auto out = dir.path() / "dump.tsv";
  REQUIRE(stylo_run({"extract", s(oracle::fixture("golden_manifest.tsv")), "--out", s(out)}).code ==
          0);
  CHECK(read_file(out).rfind("doc_id\tF1\tF2", 0) == 0);

  const auto bad = dir.path() / "bad.json";
  save_text(bad, "{}");
  ::setenv("STYLO_SCHEMA", s(bad).c_str(), 1);
  const auto env = stylo_run({"extract", s(oracle::fixture("golden_manifest.tsv"))});
  ::unsetenv("STYLO_SCHEMA");
  CHECK(env.code == 1);
  CHECK(env.err.find("bad.json") != std::string::npos);

  const auto explicit_schema =
      stylo_run({"extract", s(oracle::fixture("golden_manifest.tsv")), "--schema",
                 s(std::filesystem::path(STYLO_FIXTURE_DIR) / ".." / ".." / "data" /
                   "default_schema.json")});
  CHECK(explicit_schema.code == 0);
}

TEST_CASE("train is deterministic and reports counts") {
  GeneratedFixture g(5);
  const auto a = g / "a.model";
  const auto b = g / "b.model";
  const auto r = stylo_run({"train", s(g / "train.tsv"), "--out", s(a)});
  REQUIRE(r.code == 0);
  CHECK(r.out == "cluster  documents\nR        20\nA        20\nO        20\n");
  REQUIRE(stylo_run({"train", s(g / "train.tsv"), "--out", s(b), "--threads", "3"}).code == 0);
  CHECK(read_file(a) == read_file(b));
  const auto model = read_model(read_file(a));
  CHECK(model.clusters.size() == 3);
  CHECK(model.clusters[2].training_count == 20);
}

TEST_CASE("train needs two clusters and an output path") {
  GeneratedFixture g(6);
  const auto one = g / "one.tsv";
  std::string lines;
  for (const auto& d : g.corpus().documents) {
    if (d.label == "R" && !d.is_test) lines += d.id + "\tR\tannotated\n";
  }
  save_text(one, lines);
  const auto r = stylo_run({"train", s(one), "--out", s(g / "m.model")});
  CHECK(r.code == 1);
  CHECK(r.err.find("one.tsv") != std::string::npos);
  CHECK(stylo_run({"train", s(g / "train.tsv")}).code == 1);
}

TEST_CASE("classify output equals library voting") {
  GeneratedFixture g(8);
  const auto model_path = g / "m.model";
  REQUIRE(stylo_run({"train", s(g / "train.tsv"), "--out", s(model_path)}).code == 0);
  const auto r = stylo_run({"classify", s(model_path), s(g / "test.tsv"), "--format", "tsv"});
  REQUIRE(r.code == 0);

  const auto model = read_model(read_file(model_path));
  const Lexicon empty;
  std::string want = "doc_id\tcosine\tchi_square\teuclidean\tfinal\tdecided_by\n";
  std::size_t tests = 0;
  for (const auto& d : g.corpus().documents) {
    if (!d.is_test) continue;
    ++tests;
    const auto v = extract_all(parse_annotated(d.text, FeatureSchema::default_schema(), d.id),
                               FeatureSchema::default_schema(), empty);
    const auto vote = classify_vote(model, v);
    want += d.id + "\t" + vote.verdicts[0].chosen_label + "\t" + vote.verdicts[1].chosen_label +
            "\t" + vote.verdicts[2].chosen_label + "\t" + vote.final_label + "\t" +
            std::string(to_string(vote.decided_by)) + "\n";
  }
  CHECK(tests == 30);
  CHECK(r.out == want);

  const auto diag = stylo_run({"classify", s(model_path), s(g / "test.tsv"), "--chi2-diagnostic"});
  CHECK(diag.out.find("chi2_exceeds_0.05") != std::string::npos);
}

TEST_CASE("classify an empty manifest prints only the header") {
  GeneratedFixture g(9);
  const auto model_path = g / "m.model";
  REQUIRE(stylo_run({"train", s(g / "train.tsv"), "--out", s(model_path)}).code == 0);
  save_text(g / "none.tsv", "");
  const auto r = stylo_run({"classify", s(model_path), s(g / "none.tsv"), "--format", "tsv"});
  CHECK(r.code == 0);
  CHECK(r.out == "doc_id\tcosine\tchi_square\teuclidean\tfinal\tdecided_by\n");
}

TEST_CASE("evaluate on the training set has zero error; swapped labels empty the diagonal") {
  GeneratedFixture g(10);
  const auto model_path = g / "m.model";
  REQUIRE(stylo_run({"train", s(g / "train.tsv"), "--out", s(model_path)}).code == 0);
  const auto r = stylo_run({"evaluate", s(model_path), s(g / "train.tsv"), "--format", "tsv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("# cosine\n") < r.out.find("# chi_square\n"));
  CHECK(r.out.find("# euclidean\n") < r.out.find("# voting\n"));
  std::size_t zero_lines = 0;
  for (auto at = r.out.find("average_error\t0\n"); at != std::string::npos;
       at = r.out.find("average_error\t0\n", at + 1)) {
    ++zero_lines;
  }
  CHECK(zero_lines == 4);

  std::string swapped;
  for (const auto& d : g.corpus().documents) {
    if (d.is_test) continue;
    const std::string label = d.label == "R" ? "A" : d.label == "A" ? "R" : d.label;
    swapped += d.id + "\t" + label + "\tannotated\n";
  }
  save_text(g / "swapped.tsv", swapped);
  const auto adv = stylo_run({"evaluate", s(model_path), s(g / "swapped.tsv"), "--format", "tsv"});
  REQUIRE(adv.code == 0);
  CHECK(adv.out.find("R\t0\t20\t0\t1\n") != std::string::npos);
  CHECK(adv.out.find("A\t20\t0\t0\t1\n") != std::string::npos);

  save_text(g / "stranger.tsv", g.corpus().documents[0].id + "\tZ\tannotated\n");
  const auto unknown = stylo_run({"evaluate", s(model_path), s(g / "stranger.tsv")});
  CHECK(unknown.code == 1);
  CHECK(unknown.err.find("'Z'") != std::string::npos);
}

TEST_CASE("schema mismatch is reported with retraining advice") {
  GeneratedFixture g(11);
  const auto model_path = g / "m.model";
  REQUIRE(stylo_run({"train", s(g / "train.tsv"), "--out", s(model_path)}).code == 0);
  auto tags = FeatureSchema::default_schema().pos_tagset();
  std::swap(tags[0], tags[1]);
  const auto other = FeatureSchema::create(tags, FeatureSchema::default_schema().punctuation_set(),
                                           FeatureSchema::default_schema().quote_pairs(),
                                           FeatureSchema::default_schema().extra_punctuation());
  save_text(g / "other.json", other.to_json());
  const auto r =
      stylo_run({"classify", s(model_path), s(g / "test.tsv"), "--schema", s(g / "other.json")});
  CHECK(r.code == 1);
  CHECK(r.err.find("retrain") != std::string::npos);
}

TEST_CASE("baseline separates distinct TTR clusters") {
  GeneratorProfile p = GeneratorProfile::default_profile();
  p.clusters.resize(2);
  p.clusters[0].vocabulary_size = 30;
  p.clusters[1].vocabulary_size = 5000;
  p.clusters[0].sentences_per_doc = p.clusters[1].sentences_per_doc = {20, 20};
  p.clusters[0].sentence_length_weights = p.clusters[1].sentence_length_weights;
  GeneratedFixture g(12, p);
  const auto model = g / "b.model";
  const auto r = stylo_run({"baseline", s(g / "train.tsv"), s(g / "test.tsv"), "--format", "tsv",
                            "--save-model", s(model)});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("average_error\t0\n") != std::string::npos);
  CHECK(read_baseline(read_file(model)).clusters.size() == 2);
}

TEST_CASE("generate is deterministic and validates its inputs") {
  oracle::TempDir dir("cli-gen");
  const auto a = dir.path() / "a";
  const auto b = dir.path() / "b";
  REQUIRE(stylo_run({"generate", "--seed", "77", "--out", s(a)}).code == 0);
  REQUIRE(stylo_run({"generate", "--seed", "77", "--out", s(b)}).code == 0);
  CHECK(read_file(a / "ledger.tsv") == read_file(b / "ledger.tsv"));
  CHECK(read_file(a / "docs/O-test-010.conll") == read_file(b / "docs/O-test-010.conll"));
  CHECK(stylo_run({"generate", "--out", s(a)}).code == 1);
  save_text(dir.path() / "p.json", "{\"clusters\": []}");
  const auto bad =
      stylo_run({"generate", "--seed", "1", "--out", s(a), "--profile", s(dir.path() / "p.json")});
  CHECK(bad.code == 1);
}

TEST_CASE("usage errors") {
  CHECK(stylo_run({}).code != 0);
  CHECK(stylo_run({"bogus"}).code != 0);
  CHECK(stylo_run({"extract", "x.tsv", "--format", "xml"}).code != 0);
  const auto missing = stylo_run({"extract", "/nonexistent/manifest.tsv"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("/nonexistent/manifest.tsv") != std::string::npos);
}

}  // namespace
}  // namespace stylo
