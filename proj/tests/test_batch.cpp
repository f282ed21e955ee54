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

#include <random>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "stylo/batch.hpp"
#include "stylo/error.hpp"
#include "stylo/generator.hpp"

namespace stylo {
namespace {

const FeatureSchema& schema() { return FeatureSchema::default_schema(); }

std::vector<Document> random_documents(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Document> docs;
  for (std::size_t i = 0; i < n; ++i) {
    docs.push_back(parse_annotated(oracle::random_annotated_text(rng), schema(),
                                   "doc" + std::to_string(i)));
  }
  return docs;
}

std::vector<const Document*> pointers(const std::vector<Document>& docs) {
  std::vector<const Document*> out;
  for (const auto& d : docs) out.push_back(&d);
  return out;
}

TEST_CASE("parallel extraction equals the serial reference") {
  const auto docs = random_documents(300, 53);
  const auto ptrs = pointers(docs);
  const Lexicon lexicon({"আমি", "জল", "রাম"});
  const auto serial = extract_batch_serial(ptrs, schema(), lexicon);
  for (int threads : {0, 1, 2, 4, 7}) {
    CHECK(extract_batch(ptrs, schema(), lexicon, {}, {threads}) == serial);
  }
  CHECK(profile_batch(ptrs, {3}) == profile_batch_serial(ptrs));
}

TEST_CASE("parallel classification equals the serial reference") {
  const auto docs = random_documents(200, 59);
  const auto ptrs = pointers(docs);
  const auto vectors = extract_batch_serial(ptrs, schema(), Lexicon());
  std::vector<LabeledVector> training;
  for (std::size_t i = 0; i < 60; ++i) {
    training.push_back({vectors[i], std::string(1, "RAO"[i % 3])});
  }
  const auto model = build_references(training);
  const auto serial = classify_batch_serial(model, vectors);
  for (int threads : {0, 2, 5}) CHECK(classify_batch(model, vectors, {threads}) == serial);
}

TEST_CASE("batch errors report the lowest failing document") {
  auto docs = random_documents(64, 61);
  for (std::size_t i : {17u, 40u, 63u}) {
    docs[i] = parse_raw("কথা বলো।", schema(), "raw" + std::to_string(i));
  }
  const auto ptrs = pointers(docs);
  std::string serial_message, parallel_message;
  try {
    extract_batch_serial(ptrs, schema(), Lexicon());
  } catch (const ModeError& e) {
    serial_message = e.what();
  }
  try {
    extract_batch(ptrs, schema(), Lexicon(), {}, {4});
  } catch (const ModeError& e) {
    parallel_message = e.what();
  }
  CHECK(serial_message.find("raw17") != std::string::npos);
  CHECK(parallel_message == serial_message);
  CHECK(extract_batch(ptrs, schema(), Lexicon(), {true}, {4}).size() == 64);
}

TEST_CASE("empty batches") {
  const std::vector<const Document*> none;
  CHECK(extract_batch(none, schema(), Lexicon()).empty());
  CHECK(profile_batch(none).empty());
}

}  // namespace
}  // namespace stylo
