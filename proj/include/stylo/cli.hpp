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

#ifndef STYLO_CLI_HPP_
#define STYLO_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stylo/classify.hpp"
#include "stylo/corpus.hpp"
#include "stylo/schema.hpp"

namespace stylo::cli {

enum class OutputFormat { kText, kTsv };

struct CliConfig {
  std::optional<std::filesystem::path> schema_path;
  std::optional<std::filesystem::path> lexicon_path;
  bool allow_partial = false;
  OutputFormat output_format = OutputFormat::kText;
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> profile_path;
  std::optional<std::filesystem::path> save_model;
  bool chi2_diagnostic = false;
  int threads = 0;
};

// --schema, then $STYLO_SCHEMA, then the built-in default.
FeatureSchema resolve_schema(const CliConfig& config);
Lexicon resolve_lexicon(const CliConfig& config);

// Each command returns what it would print; run() routes it to --out or
// stdout.
std::string cmd_extract(const std::filesystem::path& manifest, const CliConfig& config);
// Writes the model to config.out and returns the per-cluster summary.
std::string cmd_train(const std::filesystem::path& manifest, const CliConfig& config);
std::string cmd_classify(const std::filesystem::path& model_path,
                         const std::filesystem::path& manifest, const CliConfig& config);
std::string cmd_evaluate(const std::filesystem::path& model_path,
                         const std::filesystem::path& manifest, const CliConfig& config);
std::string cmd_baseline(const std::filesystem::path& train_manifest,
                         const std::filesystem::path& test_manifest, const CliConfig& config);
// Writes the corpus under config.out and returns a summary.
std::string cmd_generate(const CliConfig& config);

// Full command line entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stylo::cli

#endif  // STYLO_CLI_HPP_
