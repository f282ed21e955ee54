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
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "stylo/error.hpp"
#include "stylo/eval.hpp"

namespace stylo {
namespace {

const std::vector<std::string> kLabels = {"R", "A", "O"};

EvaluationReport report(std::vector<std::vector<std::size_t>> rows, std::string name = "m") {
  return compute_report(confusion_matrix_from_rows(kLabels, std::move(rows)), std::move(name));
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

TEST_CASE("build_confusion_matrix examples") {
  const auto m = build_confusion_matrix({{"R", "R"}, {"R", "O"}}, kLabels);
  CHECK(m.counts[0] == std::vector<std::size_t>{1, 0, 1});
  CHECK(m.counts[1] == std::vector<std::size_t>{0, 0, 0});
  CHECK(m.labels == kLabels);

  const auto empty = build_confusion_matrix({}, kLabels);
  CHECK(empty.total() == 0);
  CHECK(empty.counts.size() == 3);

  try {
    build_confusion_matrix({{"R", "X"}}, kLabels);
    FAIL("expected an error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("'X'") != std::string::npos);
  }
}

TEST_CASE("confusion matrix row sums match a recount") {
  std::mt19937_64 rng(31);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < 30; ++i) pairs.emplace_back(kLabels[rng() % 3], kLabels[rng() % 3]);
  const auto m = build_confusion_matrix(pairs, kLabels);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto want = std::count_if(pairs.begin(), pairs.end(),
                                    [&](const auto& p) { return p.first == kLabels[i]; });
    CHECK(m.row_sum(i) == static_cast<std::size_t>(want));
  }
  CHECK(m.total() == 30);
}

TEST_CASE("reference confusion matrices reproduce") {
  const auto baseline = report({{6, 0, 4}, {7, 2, 1}, {5, 2, 3}});
  CHECK(baseline.row_errors[0] == doctest::Approx(0.40));
  CHECK(baseline.row_errors[1] == doctest::Approx(0.80));
  CHECK(baseline.row_errors[2] == doctest::Approx(0.70));
  CHECK(baseline.average_error == doctest::Approx(1.9 / 3).epsilon(1e-12));
  CHECK(baseline.accuracy == doctest::Approx(11.0 / 30));

  const auto voting = report({{8, 2, 0}, {4, 5, 1}, {2, 2, 6}});
  CHECK(voting.average_error == doctest::Approx(1.1 / 3).epsilon(1e-12));

  CHECK(report({{5, 2, 3}, {3, 6, 1}, {4, 1, 5}}).average_error ==
        doctest::Approx(1.4 / 3).epsilon(1e-12));
  CHECK(report({{7, 3, 0}, {5, 4, 1}, {4, 1, 5}}).average_error ==
        doctest::Approx(1.4 / 3).epsilon(1e-12));
  CHECK(report({{6, 2, 2}, {4, 4, 2}, {3, 2, 5}}).average_error ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("identity matrix and errors") {
  const auto r = report({{10, 0, 0}, {0, 10, 0}, {0, 0, 10}});
  CHECK(r.average_error == 0.0);
  CHECK(r.accuracy == 1.0);
  CHECK_THROWS_AS(report({{1, 0, 0}, {0, 0, 0}, {0, 0, 1}}), ValidationError);
  CHECK_THROWS_AS(confusion_matrix_from_rows(kLabels, {{1, 0}, {0, 1}}), ValidationError);
}

TEST_CASE("report properties over random matrices") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::vector<std::size_t>> rows(3, std::vector<std::size_t>(3));
    for (auto& row : rows) {
      for (auto& c : row) c = rng() % 8;
      row[rng() % 3] += 1;
    }
    const auto r = report(rows);
    const double weighted_error =
        1.0 - static_cast<double>(r.matrix.trace()) / static_cast<double>(r.matrix.total());
    CHECK(std::abs(r.accuracy + weighted_error - 1.0) < 1e-12);
    CHECK(r.average_error >= 0.0);
    CHECK(r.average_error <= 1.0);
    CHECK(r.accuracy >= 0.0);
    CHECK(r.accuracy <= 1.0);

    std::vector<std::size_t> perm = {0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> labels(3);
    std::vector<std::vector<std::size_t>> permuted(3, std::vector<std::size_t>(3));
    for (std::size_t i = 0; i < 3; ++i) {
      labels[i] = kLabels[perm[i]];
      for (std::size_t j = 0; j < 3; ++j) permuted[i][j] = rows[perm[i]][perm[j]];
    }
    const auto p = compute_report(confusion_matrix_from_rows(labels, permuted), "m");
    CHECK(p.average_error == doctest::Approx(r.average_error).epsilon(1e-12));
    CHECK(p.accuracy == r.accuracy);
  }
}

TEST_CASE("render_report") {
  const auto baseline = report({{6, 0, 4}, {7, 2, 1}, {5, 2, 3}}, "baseline");
  const std::string one = render_report({baseline});
  CHECK(count_of(one, "Average error") == 1);
  CHECK(one.find("0.63") != std::string::npos);
  CHECK(one.find("0.40") != std::string::npos);
  CHECK(one.rfind("baseline\n", 0) == 0);

  const auto cosine = report({{5, 2, 3}, {3, 6, 1}, {4, 1, 5}}, "cosine");
  CHECK(render_report({cosine}).find("0.47") != std::string::npos);

  const std::string four = render_report({report({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, "cosine"),
                                          report({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, "chi_square"),
                                          report({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, "euclidean"),
                                          report({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, "voting")});
  CHECK(count_of(four, "Average error") == 4);
  const auto c = four.find("cosine\n");
  const auto x = four.find("chi_square\n");
  const auto e = four.find("euclidean\n");
  const auto v = four.find("voting\n");
  CHECK(c < x);
  CHECK(x < e);
  CHECK(e < v);
  CHECK(render_report({baseline}) == one);
}

TEST_CASE("render_report_tsv") {
  const auto tsv = render_report_tsv({report({{6, 0, 4}, {7, 2, 1}, {5, 2, 3}}, "baseline")});
  CHECK(tsv ==
        "# baseline\n"
        "label\tR\tA\tO\te\n"
        "R\t6\t0\t4\t0.4\n"
        "A\t7\t2\t1\t0.8\n"
        "O\t5\t2\t3\t0.7\n"
        "average_error\t0.633333333333\n");
}

}  // namespace
}  // namespace stylo
