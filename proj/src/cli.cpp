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

#include "stylo/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "stylo/batch.hpp"
#include "stylo/error.hpp"
#include "stylo/eval.hpp"
#include "stylo/features.hpp"
#include "stylo/generator.hpp"
#include "stylo/measures.hpp"
#include "stylo/model_io.hpp"

namespace stylo::cli {
namespace {

std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
    }
    out += line + '\n';
  }
  return out;
}

std::string tsv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += '\t';
      out += row[c];
    }
    out += '\n';
  }
  return out;
}

std::vector<FeatureVector> extract_corpus(const Corpus& corpus, const FeatureSchema& schema,
                                          const CliConfig& config) {
  const auto docs = document_pointers(corpus);
  return extract_batch(docs, schema, resolve_lexicon(config), {config.allow_partial},
                       {config.threads});
}

ReferenceModel load_model_for(const std::filesystem::path& model_path,
                              const FeatureSchema& schema) {
  ReferenceModel model = read_model(read_file(model_path), model_path.string());
  if (model.schema_hash != schema.hash()) {
    throw ValidationError(model_path.string() + ": model schema hash " + model.schema_hash +
                          " does not match the current schema " + schema.hash() +
                          "; retrain with this schema");
  }
  return model;
}

}  // namespace

FeatureSchema resolve_schema(const CliConfig& config) {
  if (config.schema_path) return FeatureSchema::load(*config.schema_path);
  if (const char* env = std::getenv("STYLO_SCHEMA"); env != nullptr && *env != '\0') {
    return FeatureSchema::load(env);
  }
  return FeatureSchema::default_schema();
}

Lexicon resolve_lexicon(const CliConfig& config) {
  return config.lexicon_path ? load_lexicon(*config.lexicon_path) : Lexicon{};
}

std::string cmd_extract(const std::filesystem::path& manifest, const CliConfig& config) {
  const FeatureSchema schema = resolve_schema(config);
  const Corpus corpus = load_corpus(manifest, schema, {.allow_empty = true});
  std::string out = feature_dump_header() + "\n";
  for (const auto& v : extract_corpus(corpus, schema, config)) out += feature_dump_row(v) + "\n";
  return out;
}

std::string cmd_train(const std::filesystem::path& manifest, const CliConfig& config) {
  if (!config.out) throw ValidationError("train: --out <model path> is required");
  const FeatureSchema schema = resolve_schema(config);
  const Corpus corpus = load_corpus(manifest, schema);
  if (corpus.clusters.size() < 2) {
    throw ValidationError(manifest.string() + ": training needs at least 2 clusters, found " +
                          std::to_string(corpus.clusters.size()));
  }
  const auto vectors = extract_corpus(corpus, schema, config);
  std::vector<LabeledVector> training;
  training.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    training.push_back({vectors[i], corpus.documents[i].label});
  }
  const ReferenceModel model = build_references(training);
  save_text(*config.out, write_model(model));

  std::vector<std::vector<std::string>> rows = {{"cluster", "documents"}};
  for (const auto& c : model.clusters) rows.push_back({c.label, std::to_string(c.training_count)});
  return config.output_format == OutputFormat::kTsv ? tsv(rows) : table(rows);
}

std::string cmd_classify(const std::filesystem::path& model_path,
                         const std::filesystem::path& manifest, const CliConfig& config) {
  const FeatureSchema schema = resolve_schema(config);
  const ReferenceModel model = load_model_for(model_path, schema);
  const Corpus corpus = load_corpus(manifest, schema, {.allow_empty = true});
  const auto vectors = extract_corpus(corpus, schema, config);
  const auto votes = classify_batch(model, vectors, {config.threads});

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"doc_id", "cosine", "chi_square", "euclidean", "final", "decided_by"});
  if (config.chi2_diagnostic) rows.back().push_back("chi2_exceeds_0.05");
  for (std::size_t i = 0; i < votes.size(); ++i) {
    const auto& v = votes[i];
    rows.push_back({vectors[i].doc_id, v.verdicts[0].chosen_label, v.verdicts[1].chosen_label,
                    v.verdicts[2].chosen_label, v.final_label,
                    std::string(to_string(v.decided_by))});
    if (config.chi2_diagnostic) {
      const auto& chi = v.verdicts[1];
      const auto it = std::find_if(chi.scores.begin(), chi.scores.end(),
                                   [&](const auto& s) { return s.first == chi.chosen_label; });
      rows.back().push_back(chi_square_exceeds_critical(it->second, model.dimension) ? "yes"
                                                                                      : "no");
    }
  }
  return config.output_format == OutputFormat::kTsv ? tsv(rows) : table(rows);
}

std::string cmd_evaluate(const std::filesystem::path& model_path,
                         const std::filesystem::path& manifest, const CliConfig& config) {
  const FeatureSchema schema = resolve_schema(config);
  const ReferenceModel model = load_model_for(model_path, schema);
  const Corpus corpus = load_corpus(manifest, schema);
  for (const auto& d : corpus.documents) {
    if (!model.index_of(d.label)) {
      throw ValidationError(manifest.string() + ": label '" + d.label + "' of document '" +
                            d.document.id + "' is not a cluster of " + model_path.string());
    }
  }
  const auto vectors = extract_corpus(corpus, schema, config);
  const auto votes = classify_batch(model, vectors, {config.threads});

  std::vector<std::string> labels;
  for (const auto& c : model.clusters) labels.push_back(c.label);
  std::vector<std::vector<std::pair<std::string, std::string>>> pairs(4);
  for (std::size_t i = 0; i < votes.size(); ++i) {
    const std::string& truth = corpus.documents[i].label;
    for (std::size_t m = 0; m < 3; ++m) {
      pairs[m].emplace_back(truth, votes[i].verdicts[m].chosen_label);
    }
    pairs[3].emplace_back(truth, votes[i].final_label);
  }
  const std::array<std::string, 4> names = {"cosine", "chi_square", "euclidean", "voting"};
  std::vector<EvaluationReport> reports;
  for (std::size_t m = 0; m < 4; ++m) {
    reports.push_back(compute_report(build_confusion_matrix(pairs[m], labels), names[m]));
  }
  return config.output_format == OutputFormat::kTsv ? render_report_tsv(reports)
                                                    : render_report(reports);
}

std::string cmd_baseline(const std::filesystem::path& train_manifest,
                         const std::filesystem::path& test_manifest, const CliConfig& config) {
  const FeatureSchema schema = resolve_schema(config);
  const Corpus train = load_corpus(train_manifest, schema);
  const Corpus test = load_corpus(test_manifest, schema);

  const auto train_profiles = profile_batch(document_pointers(train), {config.threads});
  std::vector<LabeledProfile> training;
  for (std::size_t i = 0; i < train_profiles.size(); ++i) {
    training.push_back({train_profiles[i], train.documents[i].label});
  }
  const BaselineModel model = build_baseline(training);
  if (config.save_model) save_text(*config.save_model, write_baseline(model));

  std::vector<std::string> labels;
  for (const auto& c : model.clusters) labels.push_back(c.label);
  const auto test_profiles = profile_batch(document_pointers(test), {config.threads});
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < test_profiles.size(); ++i) {
    const auto& d = test.documents[i];
    if (std::find(labels.begin(), labels.end(), d.label) == labels.end()) {
      throw ValidationError(test_manifest.string() + ": label '" + d.label + "' of document '" +
                            d.document.id + "' is not a training cluster");
    }
    if (test_profiles[i].token_count == 0) {
      throw ValidationError(test_manifest.string() + ": document '" + d.document.id +
                            "' has no words; the baseline cannot classify it");
    }
    pairs.emplace_back(d.label, baseline_classify(model, test_profiles[i]));
  }
  const std::vector<EvaluationReport> reports = {
      compute_report(build_confusion_matrix(pairs, labels), "baseline")};
  return config.output_format == OutputFormat::kTsv ? render_report_tsv(reports)
                                                    : render_report(reports);
}

std::string cmd_generate(const CliConfig& config) {
  if (!config.out) throw ValidationError("generate: --out <directory> is required");
  if (!config.seed) throw ValidationError("generate: --seed <u64> is required");
  const FeatureSchema schema = resolve_schema(config);
  const GeneratorProfile profile = config.profile_path
                                       ? GeneratorProfile::load(*config.profile_path)
                                       : GeneratorProfile::default_profile();
  const GeneratedCorpus corpus = generate_corpus(profile, schema, *config.seed);
  write_corpus(corpus, schema, *config.out);
  return "wrote " + std::to_string(corpus.documents.size()) + " documents in " +
         std::to_string(profile.clusters.size()) + " clusters to " + config.out->string() + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stylometric authorship attribution over 76 style markers", "stylo"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig config;
  std::string format = "text";
  std::string schema_path, lexicon_path, out_path, profile_path, save_model_path;
  std::uint64_t seed = 0;
  app.add_option("--schema", schema_path,
                 "Feature schema JSON (default: $STYLO_SCHEMA or built-in)");
  app.add_option("--lexicon", lexicon_path, "Lexicon file, one word per line");
  app.add_flag("--allow-partial", config.allow_partial,
               "Zero-fill chunk and POS markers for raw-text documents");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "tsv"}));
  auto* seed_opt = app.add_option("--seed", seed, "Generator seed");
  app.add_option("--out", out_path, "Output path");
  app.add_option("--threads", config.threads, "Worker threads (0 = all)");

  std::string manifest, model, train_manifest, test_manifest;
  auto* extract = app.add_subcommand("extract", "Dump F1-F76 for every document in a manifest");
  extract->add_option("manifest", manifest)->required();
  auto* train = app.add_subcommand("train", "Build per-cluster reference centroids");
  train->add_option("manifest", manifest)->required();
  auto* classify =
      app.add_subcommand("classify", "Classify documents by the three measures and vote");
  classify->add_option("model", model)->required();
  classify->add_option("manifest", manifest)->required();
  classify->add_flag("--chi2-diagnostic", config.chi2_diagnostic,
                     "Report whether the winning chi-square exceeds the 0.05 critical value");
  auto* evaluate =
      app.add_subcommand("evaluate", "Confusion matrices for each measure and the vote");
  evaluate->add_option("model", model)->required();
  evaluate->add_option("manifest", manifest)->required();
  auto* baseline = app.add_subcommand("baseline", "Type-token-ratio nearest-mean baseline");
  baseline->add_option("train_manifest", train_manifest)->required();
  baseline->add_option("test_manifest", test_manifest)->required();
  baseline->add_option("--save-model", save_model_path, "Write the stylo-baseline v1 file");
  auto* generate = app.add_subcommand("generate", "Write a seeded synthetic corpus with ledger");
  generate->add_option("--profile", profile_path, "Generator profile JSON (default: built-in)");

  std::vector<const char*> argv = {"stylo"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (!schema_path.empty()) config.schema_path = schema_path;
  if (!lexicon_path.empty()) config.lexicon_path = lexicon_path;
  if (!out_path.empty()) config.out = out_path;
  if (!profile_path.empty()) config.profile_path = profile_path;
  if (!save_model_path.empty()) config.save_model = save_model_path;
  if (seed_opt->count() > 0) config.seed = seed;
  config.output_format = format == "tsv" ? OutputFormat::kTsv : OutputFormat::kText;

  try {
    std::string text;
    bool to_file = config.out.has_value();
    if (*extract) {
      text = cmd_extract(manifest, config);
    } else if (*train) {
      text = cmd_train(manifest, config);
      to_file = false;
    } else if (*classify) {
      text = cmd_classify(model, manifest, config);
    } else if (*evaluate) {
      text = cmd_evaluate(model, manifest, config);
    } else if (*baseline) {
      text = cmd_baseline(train_manifest, test_manifest, config);
    } else if (*generate) {
      text = cmd_generate(config);
      to_file = false;
    }
    if (to_file) {
      save_text(*config.out, text);
    } else {
      out << text;
    }
    return 0;
  } catch (const Error& e) {
    err << "stylo: error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "stylo: internal error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace stylo::cli
