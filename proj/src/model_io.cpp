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

#include "stylo/model_io.hpp"

#include <charconv>
#include <fstream>
#include <vector>

#include "stylo/error.hpp"

namespace stylo {
namespace {

constexpr int kModelDigits = 12;

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t at = line.find(sep, start);
    if (at == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, at - start));
    start = at + 1;
  }
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    pos = eol + 1;
  }
  return out;
}

double parse_double(std::string_view s, const std::string& src, std::size_t line) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ParseError(src, line, "invalid number '" + std::string(s) + "'");
  }
  return v;
}

std::size_t parse_count(std::string_view s, const std::string& src, std::size_t line) {
  std::size_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ParseError(src, line, "invalid count '" + std::string(s) + "'");
  }
  return v;
}

void expect_header(const std::vector<std::string_view>& lines, std::string_view magic,
                   const std::string& src) {
  if (lines.empty() || lines[0] != std::string(magic) + "\tv1") {
    throw ParseError(src, 1, "expected header '" + std::string(magic) + "<TAB>v1'");
  }
}

}  // namespace

std::string write_model(const ReferenceModel& model) {
  model.validate();
  std::string out = "stylo-model\tv1\n";
  out += "schema_hash\t" + model.schema_hash + "\n";
  out += "dimension\t" + std::to_string(model.dimension) + "\n";
  for (const auto& c : model.clusters) {
    if (c.label.find_first_of("\t\n") != std::string::npos) {
      throw ValidationError("cluster label '" + c.label + "' contains a tab or newline");
    }
    out += "cluster\t" + c.label + "\t" + std::to_string(c.training_count) + "\t";
    for (std::size_t i = 0; i < c.centroid.size(); ++i) {
      if (i > 0) out += ',';
      out += format_general(c.centroid[i], kModelDigits);
    }
    out += '\n';
  }
  return out;
}

ReferenceModel read_model(std::string_view text, std::string_view source) {
  const std::string src(source);
  const auto lines = lines_of(text);
  expect_header(lines, "stylo-model", src);
  if (lines.size() < 3) throw ParseError(src, lines.size(), "truncated model file");

  ReferenceModel model;
  const auto hash = split(lines[1], '\t');
  if (hash.size() != 2 || hash[0] != "schema_hash") {
    throw ParseError(src, 2, "expected 'schema_hash<TAB><hex>'");
  }
  model.schema_hash = std::string(hash[1]);
  const auto dim = split(lines[2], '\t');
  if (dim.size() != 2 || dim[0] != "dimension") {
    throw ParseError(src, 3, "expected 'dimension<TAB>76'");
  }
  model.dimension = parse_count(dim[1], src, 3);
  if (model.dimension != kFeatureDimension) {
    throw ParseError(src, 3, "unsupported dimension " + std::string(dim[1]));
  }

  for (std::size_t i = 3; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (lines[i].empty()) continue;
    const auto fields = split(lines[i], '\t');
    if (fields.size() != 4 || fields[0] != "cluster") {
      throw ParseError(src, line_no, "expected 'cluster<TAB>label<TAB>count<TAB>values'");
    }
    ClusterReference c;
    c.label = std::string(fields[1]);
    c.training_count = parse_count(fields[2], src, line_no);
    const auto values = split(fields[3], ',');
    if (values.size() != model.dimension) {
      throw ParseError(src, line_no,
                       "expected " + std::to_string(model.dimension) + " centroid values, got " +
                           std::to_string(values.size()));
    }
    for (std::size_t k = 0; k < values.size(); ++k) {
      c.centroid[k] = parse_double(values[k], src, line_no);
    }
    model.clusters.push_back(std::move(c));
  }
  try {
    model.validate();
  } catch (const ValidationError& e) {
    throw ValidationError(src + ": " + e.what());
  }
  return model;
}

std::string write_baseline(const BaselineModel& model) {
  model.validate();
  std::string out = "stylo-baseline\tv1\n";
  for (const auto& c : model.clusters) {
    out += "cluster\t" + c.label + "\t" + format_general(c.mean_ttr, kModelDigits) + "\n";
  }
  return out;
}

BaselineModel read_baseline(std::string_view text, std::string_view source) {
  const std::string src(source);
  const auto lines = lines_of(text);
  expect_header(lines, "stylo-baseline", src);
  BaselineModel model;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto fields = split(lines[i], '\t');
    if (fields.size() != 3 || fields[0] != "cluster") {
      throw ParseError(src, i + 1, "expected 'cluster<TAB>label<TAB>mean_ttr'");
    }
    model.clusters.push_back({std::string(fields[1]), parse_double(fields[2], src, i + 1)});
  }
  try {
    model.validate();
  } catch (const ValidationError& e) {
    throw ValidationError(src + ": " + e.what());
  }
  return model;
}

void save_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("error writing " + path.string());
}

}  // namespace stylo
