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

#ifndef STYLO_UNICODE_HPP_
#define STYLO_UNICODE_HPP_

#include <cstddef>
#include <string>
#include <string_view>

// Thin UTF-8 helpers over ICU. All surfaces handled by the library are
// valid UTF-8 in NFC.
namespace stylo::unicode {

// Throws DecodeError naming the byte offset of the first ill-formed sequence.
void validate_utf8(std::string_view text);

std::u32string decode(std::string_view text);
std::string encode(std::u32string_view text);
std::string encode(char32_t cp);

// Input must be valid UTF-8.
std::string nfc(std::string_view text);

std::size_t code_point_count(std::string_view text);

bool is_whitespace(char32_t cp);

}  // namespace stylo::unicode

#endif  // STYLO_UNICODE_HPP_
