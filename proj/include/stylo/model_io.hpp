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

#ifndef STYLO_MODEL_IO_HPP_
#define STYLO_MODEL_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "stylo/classify.hpp"

namespace stylo {

// "stylo-model v1": header, schema hash, dimension, then one line per
// cluster with the centroid at 12 significant digits.
std::string write_model(const ReferenceModel& model);
ReferenceModel read_model(std::string_view text, std::string_view source = "<model>");

// "stylo-baseline v1": header then "cluster<TAB>label<TAB>mean_ttr" lines.
std::string write_baseline(const BaselineModel& model);
BaselineModel read_baseline(std::string_view text, std::string_view source = "<baseline>");

void save_text(const std::filesystem::path& path, std::string_view text);

}  // namespace stylo

#endif  // STYLO_MODEL_IO_HPP_
