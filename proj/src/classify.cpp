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

#include "stylo/classify.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "stylo/error.hpp"
#include "stylo/measures.hpp"

namespace stylo {

std::string_view to_string(Measure measure) {
  switch (measure) {
    case Measure::kCosine:
      return "cosine";
    case Measure::kChiSquare:
      return "chi_square";
    case Measure::kEuclidean:
      return "euclidean";
  }
  return "?";
}

std::string_view to_string(Decision decision) {
  return decision == Decision::kMajority ? "majority" : "chi_square_tiebreak";
}

void ReferenceModel::validate() const {
  if (dimension != kFeatureDimension) {
    throw ValidationError("model dimension must be 76, got " + std::to_string(dimension));
  }
  if (clusters.size() < 2) {
    throw ValidationError("a reference model needs at least 2 clusters, got " +
                          std::to_string(clusters.size()));
  }
  std::unordered_set<std::string_view> labels;
  for (const auto& c : clusters) {
    if (c.label.empty()) throw ValidationError("empty cluster label");
    if (!labels.insert(c.label).second) {
      throw ValidationError("duplicate cluster label '" + c.label + "'");
    }
    if (c.training_count < 1) {
      throw ValidationError("cluster '" + c.label + "' has no training documents");
    }
    for (double v : c.centroid) {
      if (!std::isfinite(v)) throw ValidationError("cluster '" + c.label + "' centroid not finite");
    }
  }
}

std::optional<std::size_t> ReferenceModel::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (clusters[i].label == label) return i;
  }
  return std::nullopt;
}

ReferenceModel build_references(const std::vector<LabeledVector>& training) {
  if (training.empty()) throw ValidationError("no training vectors");
  ReferenceModel model;
  model.schema_hash = training.front().vector.schema_hash;
  for (const auto& example : training) {
    if (example.vector.schema_hash != model.schema_hash) {
      throw ValidationError("training vector '" + example.vector.doc_id +
                            "' was extracted with a different schema");
    }
    auto idx = model.index_of(example.label);
    if (!idx) {
      model.clusters.push_back({example.label, {}, 0});
      idx = model.clusters.size() - 1;
    }
    auto& cluster = model.clusters[*idx];
    for (std::size_t i = 0; i < kFeatureDimension; ++i) {
      cluster.centroid[i] += example.vector.values[i];
    }
    ++cluster.training_count;
  }
  for (auto& cluster : model.clusters) {
    const double n = static_cast<double>(cluster.training_count);
    for (double& v : cluster.centroid) v /= n;
  }
  model.validate();
  return model;
}

double score(Measure measure, std::span<const double> centroid, std::span<const double> test) {
  switch (measure) {
    case Measure::kCosine:
      return cosine_similarity(centroid, test);
    case Measure::kChiSquare:
      return chi_square(centroid, test);
    case Measure::kEuclidean:
      return euclidean_distance(centroid, test);
  }
  throw ValidationError("unknown measure");
}

Verdict classify_single(const ReferenceModel& model, const FeatureVector& test, Measure measure) {
  if (test.schema_hash != model.schema_hash) {
    throw ValidationError("document '" + test.doc_id +
                          "' was extracted with a schema that does not match the model; "
                          "retrain the model with the current schema");
  }
  if (model.clusters.empty()) throw ValidationError("model has no clusters");

  Verdict verdict;
  verdict.measure = measure;
  verdict.scores.reserve(model.clusters.size());
  const bool maximize = measure == Measure::kCosine;
  std::size_t best = 0;
  for (std::size_t i = 0; i < model.clusters.size(); ++i) {
    const auto& c = model.clusters[i];
    const double s = score(measure, c.centroid, test.values);
    verdict.scores.emplace_back(c.label, s);
    const double incumbent = verdict.scores[best].second;
    if (maximize ? s > incumbent : s < incumbent) best = i;
  }
  verdict.chosen_label = model.clusters[best].label;
  return verdict;
}

VoteResult combine_verdicts(std::array<Verdict, 3> verdicts) {
  VoteResult result;
  const std::string& cosine = verdicts[0].chosen_label;
  const std::string& chi = verdicts[1].chosen_label;
  const std::string& euclid = verdicts[2].chosen_label;
  if (cosine == chi || cosine == euclid) {
    result.final_label = cosine;
    result.decided_by = Decision::kMajority;
  } else if (chi == euclid) {
    result.final_label = chi;
    result.decided_by = Decision::kMajority;
  } else {
    result.final_label = chi;
    result.decided_by = Decision::kChiSquareTiebreak;
  }
  result.verdicts = std::move(verdicts);
  return result;
}

VoteResult classify_vote(const ReferenceModel& model, const FeatureVector& test) {
  return combine_verdicts({classify_single(model, test, Measure::kCosine),
                           classify_single(model, test, Measure::kChiSquare),
                           classify_single(model, test, Measure::kEuclidean)});
}

void BaselineModel::validate() const {
  if (clusters.size() < 2) {
    throw ValidationError("a baseline model needs at least 2 clusters");
  }
  std::unordered_set<std::string_view> labels;
  for (const auto& c : clusters) {
    if (!labels.insert(c.label).second) {
      throw ValidationError("duplicate cluster label '" + c.label + "'");
    }
    if (!std::isfinite(c.mean_ttr)) {
      throw ValidationError("cluster '" + c.label + "' mean TTR not finite");
    }
  }
}

BaselineModel build_baseline(const std::vector<LabeledProfile>& training) {
  BaselineModel model;
  std::vector<std::size_t> counts;
  for (const auto& example : training) {
    if (example.profile.token_count == 0) {
      throw ValidationError("baseline training document with no words (label '" +
                            example.label + "')");
    }
    auto it = std::find_if(model.clusters.begin(), model.clusters.end(),
                           [&](const BaselineCluster& c) { return c.label == example.label; });
    if (it == model.clusters.end()) {
      model.clusters.push_back({example.label, 0.0});
      counts.push_back(0);
      it = model.clusters.end() - 1;
    }
    const auto idx = static_cast<std::size_t>(it - model.clusters.begin());
    it->mean_ttr += example.profile.type_token_ratio();
    ++counts[idx];
  }
  for (std::size_t i = 0; i < model.clusters.size(); ++i) {
    model.clusters[i].mean_ttr /= static_cast<double>(counts[i]);
  }
  model.validate();
  return model;
}

std::string baseline_classify(const BaselineModel& model, const LexicalProfile& test) {
  if (test.token_count == 0) {
    throw ValidationError("cannot classify a document with no words by type-token ratio");
  }
  if (model.clusters.empty()) throw ValidationError("baseline model has no clusters");
  const double ttr = test.type_token_ratio();
  std::size_t best = 0;
  double best_gap = std::abs(ttr - model.clusters[0].mean_ttr);
  for (std::size_t i = 1; i < model.clusters.size(); ++i) {
    const double gap = std::abs(ttr - model.clusters[i].mean_ttr);
    if (gap < best_gap) {
      best = i;
      best_gap = gap;
    }
  }
  return model.clusters[best].label;
}

bool chi_square_exceeds_critical(double chi2, std::size_t dimension, double alpha) {
  return chi2 > chi_square_critical_value(dimension - 1, alpha);
}

}  // namespace stylo
