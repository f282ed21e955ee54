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

#ifndef STYLO_ERROR_HPP_
#define STYLO_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stylo {

// Base for every error raised by the library. The CLI maps any Error to a
// nonzero exit code and prints what().
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed annotated input. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& msg)
      : Error(source + ":" + std::to_string(line) + ": " + msg), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DecodeError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

// Raised when chunk-level features are requested from a raw-text document.
class ModeError : public Error {
 public:
  using Error::Error;
};

}  // namespace stylo

#endif  // STYLO_ERROR_HPP_
