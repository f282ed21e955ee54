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

#include "stylo/eval.hpp"

#include <algorithm>
#include <numeric>

#include "stylo/error.hpp"
#include "stylo/features.hpp"

namespace stylo {
namespace {

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::size_t ConfusionMatrix::row_sum(std::size_t row) const {
  return std::accumulate(counts[row].begin(), counts[row].end(), std::size_t{0});
}

std::size_t ConfusionMatrix::trace() const {
  std::size_t t = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) t += counts[i][i];
  return t;
}

std::size_t ConfusionMatrix::total() const {
  std::size_t t = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) t += row_sum(i);
  return t;
}

ConfusionMatrix build_confusion_matrix(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    const std::vector<std::string>& labels) {
  ConfusionMatrix m;
  m.labels = labels;
  m.counts.assign(labels.size(), std::vector<std::size_t>(labels.size(), 0));
  auto index = [&](const std::string& label) {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw ValidationError("unknown label '" + label + "'");
    return static_cast<std::size_t>(it - labels.begin());
  };
  for (const auto& [truth, predicted] : pairs) ++m.counts[index(truth)][index(predicted)];
  return m;
}

ConfusionMatrix confusion_matrix_from_rows(std::vector<std::string> labels,
                                           std::vector<std::vector<std::size_t>> rows) {
  if (rows.size() != labels.size()) throw ValidationError("confusion matrix must be square");
  for (const auto& r : rows) {
    if (r.size() != labels.size()) throw ValidationError("confusion matrix must be square");
  }
  return ConfusionMatrix{std::move(labels), std::move(rows)};
}

EvaluationReport compute_report(const ConfusionMatrix& matrix, std::string measure_name) {
  EvaluationReport r;
  r.measure_name = std::move(measure_name);
  r.matrix = matrix;
  const std::size_t k = matrix.labels.size();
  if (k == 0) throw ValidationError("confusion matrix has no labels");
  r.row_errors.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t n = matrix.row_sum(i);
    if (n == 0) {
      throw ValidationError("no test documents for label '" + matrix.labels[i] +
                            "'; per-row error is undefined");
    }
    r.row_errors.push_back(1.0 - static_cast<double>(matrix.counts[i][i]) /
                                     static_cast<double>(n));
  }
  r.average_error = std::accumulate(r.row_errors.begin(), r.row_errors.end(), 0.0) /
                    static_cast<double>(k);
  r.accuracy = static_cast<double>(matrix.trace()) / static_cast<double>(matrix.total());
  return r;
}

std::string render_report(const std::vector<EvaluationReport>& reports) {
  std::string out;
  for (std::size_t n = 0; n < reports.size(); ++n) {
    const auto& r = reports[n];
    const auto& labels = r.matrix.labels;
    std::size_t label_width = std::string("Average error").size();
    std::size_t cell = 6;
    for (const auto& l : labels) {
      cell = std::max(cell, l.size() + 1);
    }
    for (const auto& row : r.matrix.counts) {
      for (std::size_t c : row) cell = std::max(cell, std::to_string(c).size() + 1);
    }
    for (const auto& l : labels) label_width = std::max(label_width, l.size());
    const std::size_t row_width = label_width + cell * (labels.size() + 1);

    if (n > 0) out += '\n';
    out += r.measure_name + '\n';
    std::string header = pad_right("", label_width);
    for (const auto& l : labels) header += pad_left(l, cell);
    header += pad_left("e", cell);
    out += header + '\n';
    for (std::size_t i = 0; i < labels.size(); ++i) {
      std::string line = pad_right(labels[i], label_width);
      for (std::size_t c : r.matrix.counts[i]) line += pad_left(std::to_string(c), cell);
      line += pad_left(format_fixed(r.row_errors[i], 2), cell);
      out += line + '\n';
    }
    out += pad_right("Average error", row_width - cell) +
           pad_left(format_fixed(r.average_error, 2), cell) + '\n';
    out += pad_right("Accuracy", row_width - cell) + pad_left(format_fixed(r.accuracy, 2), cell) +
           '\n';
  }
  return out;
}

std::string render_report_tsv(const std::vector<EvaluationReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += "# " + r.measure_name + "\n";
    out += "label";
    for (const auto& l : r.matrix.labels) out += "\t" + l;
    out += "\te\n";
    for (std::size_t i = 0; i < r.matrix.labels.size(); ++i) {
      out += r.matrix.labels[i];
      for (std::size_t c : r.matrix.counts[i]) out += "\t" + std::to_string(c);
      out += "\t" + format_general(r.row_errors[i], 12) + "\n";
    }
    out += "average_error\t" + format_general(r.average_error, 12) + "\n";
  }
  return out;
}

}  // namespace stylo
