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

#include "stylo/measures.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include "stylo/error.hpp"
#include "stylo/log.hpp"

namespace stylo {
namespace {

void require_same_dimension(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw ValidationError("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  }
}

}  // namespace

double cosine_similarity(std::span<const double> reference, std::span<const double> test) {
  require_same_dimension(reference, test);
  double dot = 0.0;
  double rr = 0.0;
  double tt = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    dot += reference[i] * test[i];
    rr += reference[i] * reference[i];
    tt += test[i] * test[i];
  }
  if (rr == 0.0 || tt == 0.0) {
    warn("cosine similarity of an all-zero vector taken as 0");
    return 0.0;
  }
  const double sim = dot / (std::sqrt(rr) * std::sqrt(tt));
  return std::clamp(sim, -1.0, 1.0);
}

double chi_square(std::span<const double> reference, std::span<const double> test) {
  require_same_dimension(reference, test);
  double sum = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const double observed = reference[i];
    double expected = test[i];
    if (observed == expected) continue;
    if (expected == 0.0) expected = kChiSquareEpsilon;
    const double d = observed - expected;
    sum += d * d / expected;
  }
  return sum;
}

double euclidean_distance(std::span<const double> p, std::span<const double> q) {
  require_same_dimension(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = p[i] - q[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double chi_square_critical_value(std::size_t degrees_of_freedom, double alpha) {
  if (degrees_of_freedom == 0 || !(alpha > 0.0 && alpha < 1.0)) {
    throw ValidationError("chi-square critical value needs df >= 1 and 0 < alpha < 1");
  }
  const boost::math::chi_squared dist(static_cast<double>(degrees_of_freedom));
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

}  // namespace stylo
