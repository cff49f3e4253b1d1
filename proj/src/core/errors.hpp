/*
Copyright 2026 The FEO Explain Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef FEO_CORE_ERRORS_HPP_
#define FEO_CORE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace feo {

/// Location of the first offending character of a rejected document.
struct ParseDiagnostic {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based
  std::string message;

  std::string to_string() const {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(ParseDiagnostic d)
      : std::runtime_error(d.to_string()), diagnostic_(std::move(d)) {}
  const ParseDiagnostic& diagnostic() const { return diagnostic_; }

 private:
  ParseDiagnostic diagnostic_;
};

/// Saturation derived more triples than the configured cap allows.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(std::size_t cap)
      : std::runtime_error("derived-triple cap of " + std::to_string(cap) + " exceeded"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A referenced individual has no triples in the graph.
class UnknownIndividualError : public std::runtime_error {
 public:
  explicit UnknownIndividualError(const std::string& iri)
      : std::runtime_error("unknown individual: " + iri), iri_(iri) {}
  const std::string& iri() const { return iri_; }

 private:
  std::string iri_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace feo

#endif  // FEO_CORE_ERRORS_HPP_
