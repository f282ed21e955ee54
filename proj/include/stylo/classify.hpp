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

#ifndef STYLO_CLASSIFY_HPP_
#define STYLO_CLASSIFY_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stylo/features.hpp"

namespace stylo {

enum class Measure { kCosine, kChiSquare, kEuclidean };

inline constexpr std::array<Measure, 3> kMeasures = {Measure::kCosine, Measure::kChiSquare,
                                                     Measure::kEuclidean};

std::string_view to_string(Measure measure);

struct LabeledVector {
  FeatureVector vector;
  std::string label;
};

struct ClusterReference {
  std::string label;
  FeatureArray centroid{};
  std::size_t training_count = 0;

  bool operator==(const ClusterReference&) const = default;
};

// Per-cluster mean feature vectors. Cluster order is significant: it breaks
// every tie.
struct ReferenceModel {
  std::vector<ClusterReference> clusters;
  std::string schema_hash;
  std::size_t dimension = kFeatureDimension;

  // Throws ValidationError when an invariant is broken.
  void validate() const;
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool operator==(const ReferenceModel&) const = default;
};

ReferenceModel build_references(const std::vector<LabeledVector>& training);

struct Verdict {
  Measure measure = Measure::kCosine;
  std::string chosen_label;
  std::vector<std::pair<std::string, double>> scores;  // model cluster order

  bool operator==(const Verdict&) const = default;
};

enum class Decision { kMajority, kChiSquareTiebreak };
std::string_view to_string(Decision decision);

struct VoteResult {
  std::array<Verdict, 3> verdicts;  // cosine, chi-square, euclidean
  std::string final_label;
  Decision decided_by = Decision::kMajority;

  bool operator==(const VoteResult&) const = default;
};

double score(Measure measure, std::span<const double> centroid, std::span<const double> test);

Verdict classify_single(const ReferenceModel& model, const FeatureVector& test, Measure measure);

// Majority of the three verdicts; the chi-square verdict when all differ.
// Expects verdicts in cosine, chi-square, euclidean order.
VoteResult combine_verdicts(std::array<Verdict, 3> verdicts);

VoteResult classify_vote(const ReferenceModel& model, const FeatureVector& test);

// Type-token-ratio nearest-mean classifier.
struct BaselineCluster {
  std::string label;
  double mean_ttr = 0.0;

  bool operator==(const BaselineCluster&) const = default;
};

struct BaselineModel {
  std::vector<BaselineCluster> clusters;

  void validate() const;
  bool operator==(const BaselineModel&) const = default;
};

struct LabeledProfile {
  LexicalProfile profile;
  std::string label;
};

BaselineModel build_baseline(const std::vector<LabeledProfile>& training);

std::string baseline_classify(const BaselineModel& model, const LexicalProfile& test);

// Diagnostic only: whether chi2 exceeds the upper 5% critical value for
// df = dimension - 1.
bool chi_square_exceeds_critical(double chi2, std::size_t dimension = kFeatureDimension,
                                 double alpha = 0.05);

}  // namespace stylo

#endif  // STYLO_CLASSIFY_HPP_
