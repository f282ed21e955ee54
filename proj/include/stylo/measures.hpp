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

#ifndef STYLO_MEASURES_HPP_
#define STYLO_MEASURES_HPP_

#include <cstddef>
#include <span>

namespace stylo {

// Substituted for a zero expected value when the observed value is nonzero.
inline constexpr double kChiSquareEpsilon = 1e-9;

// R.T / (|R| |T|). Returns 0 (and warns) when either vector is all-zero.
double cosine_similarity(std::span<const double> reference, std::span<const double> test);

// Sum of (O_i - E_i)^2 / E_i with O = reference centroid, E = test vector.
// Components with O_i = E_i = 0 contribute nothing; E_i = 0 with O_i != 0 is
// evaluated with E_i = kChiSquareEpsilon. Not symmetric.
double chi_square(std::span<const double> reference, std::span<const double> test);

double euclidean_distance(std::span<const double> p, std::span<const double> q);

// Upper-tail critical value of the chi-squared distribution, e.g.
// alpha = 0.05 gives the 95th percentile for `degrees_of_freedom`.
double chi_square_critical_value(std::size_t degrees_of_freedom, double alpha);

}  // namespace stylo

#endif  // STYLO_MEASURES_HPP_
