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

#ifndef FEO_CORE_SCANNER_HPP_
#define FEO_CORE_SCANNER_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "rdf.hpp"

namespace feo {

using PrefixMap = std::map<std::string, std::string, std::less<>>;

struct SourcePos {
  std::size_t offset = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Character cursor with line/column tracking, shared by the Turtle and
/// query parsers. Lexical errors are thrown as ParseError.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_.offset >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_.offset + ahead < text_.size() ? text_[pos_.offset + ahead] : '\0';
  }
  char advance();
  SourcePos pos() const { return pos_; }
  void reset(SourcePos p) { pos_ = p; }

  /// Skips whitespace and `#` comments.
  void skip_trivia();
  bool consume(char c);
  /// Case-insensitive keyword match that does not run into a following name character.
  bool consume_keyword(std::string_view kw);
  bool at_keyword(std::string_view kw) const;

  [[noreturn]] void fail(std::string message) const { fail_at(pos_, std::move(message)); }
  [[noreturn]] static void fail_at(SourcePos p, std::string message) {
    throw ParseError(ParseDiagnostic{p.line, p.column, std::move(message)});
  }

  /// `<...>` at the cursor; relative references resolve against `base`.
  std::string read_iri_ref(const std::optional<std::string>& base);
  /// `prefix:local` at the cursor, expanded through `prefixes`.
  std::string read_prefixed_name(const PrefixMap& prefixes);
  /// The `prefix:` part of a prefix declaration, without the colon.
  std::string read_prefix_label();
  /// A double-quoted string with ECHAR/UCHAR escapes; returns the decoded value.
  std::string read_quoted();
  /// Optional sign followed by digits; rejects decimals and doubles.
  std::string read_integer();
  /// Run of name characters ([A-Za-z0-9_-]) starting at the cursor.
  std::string_view peek_word() const;

  /// Reads a literal or IRI-valued term used in object position: quoted
  /// strings with optional `^^datatype`, integers, case-insensitive booleans.
  rdf::Term read_literal(const PrefixMap& prefixes, const std::optional<std::string>& base);

  static bool is_name_start(char c);
  static bool is_name_char(char c);

 private:
  std::string_view text_;
  SourcePos pos_;
};

}  // namespace feo

#endif  // FEO_CORE_SCANNER_HPP_
