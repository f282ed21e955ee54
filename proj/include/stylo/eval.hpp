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

#ifndef STYLO_EVAL_HPP_
#define STYLO_EVAL_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace stylo {

// counts[i][j] = documents of true label i predicted as label j.
struct ConfusionMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> counts;

  std::size_t row_sum(std::size_t row) const;
  std::size_t trace() const;
  std::size_t total() const;

  bool operator==(const ConfusionMatrix&) const = default;
};

ConfusionMatrix build_confusion_matrix(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    const std::vector<std::string>& labels);

// Matrix from explicit rows (e.g. a printed table).
ConfusionMatrix confusion_matrix_from_rows(std::vector<std::string> labels,
                                           std::vector<std::vector<std::size_t>> rows);

struct EvaluationReport {
  std::string measure_name;
  ConfusionMatrix matrix;
  std::vector<double> row_errors;  // 1 - diagonal / row sum
  double average_error = 0.0;      // unweighted mean of row_errors
  double accuracy = 0.0;           // trace / total
};

EvaluationReport compute_report(const ConfusionMatrix& matrix, std::string measure_name);

// Fixed-width tables, errors at 2 decimals, one table per report.
std::string render_report(const std::vector<EvaluationReport>& reports);

// "label\t<labels...>\te" blocks with full-precision errors and a trailing
// "average_error\t<value>" line per report.
std::string render_report_tsv(const std::vector<EvaluationReport>& reports);

}  // namespace stylo

#endif  // STYLO_EVAL_HPP_
