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

#include "scanner.hpp"

#include <cctype>
#include <cstdint>

namespace feo {
namespace {

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_hex(char c) { return std::isxdigit(static_cast<unsigned char>(c)) != 0; }

bool has_scheme(std::string_view iri) {
  if (iri.empty() || !is_alpha(iri.front())) return false;
  for (char c : iri) {
    if (c == ':') return true;
    if (!is_alpha(c) && !is_digit(c) && c != '+' && c != '-' && c != '.') return false;
  }
  return false;
}

std::string resolve(const std::string& ref, const std::string& base) {
  if (ref.empty()) return base;
  if (ref.front() == '#') return base.substr(0, base.find('#')) + ref;
  auto slash = base.rfind('/');
  return slash == std::string::npos ? base + ref : base.substr(0, slash + 1) + ref;
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

}  // namespace

bool Scanner::is_name_start(char c) { return is_alpha(c) || c == '_'; }
bool Scanner::is_name_char(char c) { return is_alpha(c) || is_digit(c) || c == '_' || c == '-'; }

char Scanner::advance() {
  char c = peek();
  if (at_end()) return c;
  ++pos_.offset;
  if (c == '\n') {
    ++pos_.line;
    pos_.column = 1;
  } else {
    ++pos_.column;
  }
  return c;
}

void Scanner::skip_trivia() {
  while (!at_end()) {
    char c = peek();
    if (c == '#') {
      while (!at_end() && peek() != '\n') advance();
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
    } else {
      return;
    }
  }
}

bool Scanner::consume(char c) {
  if (at_end() || peek() != c) return false;
  advance();
  return true;
}

bool Scanner::at_keyword(std::string_view kw) const {
  for (std::size_t i = 0; i < kw.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(peek(i))) !=
        std::tolower(static_cast<unsigned char>(kw[i])))
      return false;
  }
  char next = peek(kw.size());
  return !is_name_char(next) && next != ':';
}

bool Scanner::consume_keyword(std::string_view kw) {
  if (!at_keyword(kw)) return false;
  for (std::size_t i = 0; i < kw.size(); ++i) advance();
  return true;
}

std::string_view Scanner::peek_word() const {
  std::size_t n = 0;
  while (is_name_char(peek(n))) ++n;
  return text_.substr(pos_.offset, n);
}

std::string Scanner::read_iri_ref(const std::optional<std::string>& base) {
  SourcePos start = pos_;
  if (!consume('<')) fail("expected '<'");
  std::string iri;
  while (true) {
    if (at_end()) fail_at(start, "unterminated IRI");
    char c = peek();
    if (c == '>') break;
    if (std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '"' || c == '{' ||
        c == '}' || c == '|' || c == '^' || c == '`')
      fail("illegal character in IRI");
    if (c == '\\') fail("escapes in IRIs are not supported");
    iri += advance();
  }
  advance();
  if (!has_scheme(iri)) {
    if (!base) fail_at(start, "relative IRI <" + iri + "> without a base IRI");
    iri = resolve(iri, *base);
  }
  return iri;
}

std::string Scanner::read_prefix_label() {
  SourcePos start = pos_;
  std::string label;
  if (is_alpha(peek())) {
    while (is_name_char(peek()) || (peek() == '.' && is_name_char(peek(1)))) label += advance();
  }
  if (!consume(':')) fail_at(start, "expected a prefix label ending in ':'");
  return label;
}

std::string Scanner::read_prefixed_name(const PrefixMap& prefixes) {
  SourcePos start = pos_;
  std::string label = read_prefix_label();
  auto it = prefixes.find(label);
  if (it == prefixes.end()) fail_at(start, "undeclared prefix '" + label + ":'");
  std::string local;
  if (is_name_char(peek())) {
    while (is_name_char(peek()) || (peek() == '.' && is_name_char(peek(1)))) local += advance();
  }
  return it->second + local;
}

std::string Scanner::read_quoted() {
  SourcePos start = pos_;
  if (!consume('"')) fail("expected '\"'");
  if (peek() == '"' && peek(1) == '"') fail_at(start, "multiline strings are not supported");
  std::string out;
  while (true) {
    if (at_end()) fail_at(start, "unterminated string literal");
    char c = peek();
    if (c == '"') break;
    if (c == '\n' || c == '\r') fail("newline in string literal");
    if (c != '\\') {
      out += advance();
      continue;
    }
    SourcePos esc = pos_;
    advance();
    char e = advance();
    switch (e) {
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case 'b': out += '\b'; break;
      case 'f': out += '\f'; break;
      case '"': out += '"'; break;
      case '\'': out += '\''; break;
      case '\\': out += '\\'; break;
      case 'u':
      case 'U': {
        int digits = e == 'u' ? 4 : 8;
        std::uint32_t cp = 0;
        for (int i = 0; i < digits; ++i) {
          char h = peek();
          if (!is_hex(h)) fail("invalid \\" + std::string(1, e) + " escape");
          cp = cp * 16 + static_cast<std::uint32_t>(std::stoi(std::string(1, advance()), nullptr, 16));
        }
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail_at(esc, "invalid code point");
        append_utf8(out, cp);
        break;
      }
      default:
        fail_at(esc, "invalid escape sequence");
    }
  }
  advance();
  return out;
}

std::string Scanner::read_integer() {
  std::string out;
  if (peek() == '+' || peek() == '-') out += advance();
  if (!is_digit(peek())) fail("expected digits");
  while (is_digit(peek())) out += advance();
  if (peek() == '.' && is_digit(peek(1))) fail("decimal literals are not supported");
  if (peek() == 'e' || peek() == 'E') fail("double literals are not supported");
  return out;
}

rdf::Term Scanner::read_literal(const PrefixMap& prefixes, const std::optional<std::string>& base) {
  using rdf::Term;
  SourcePos start = pos_;
  char c = peek();
  if (c == '"') {
    std::string lexical = read_quoted();
    if (peek() == '@') fail("language tags are not supported");
    if (peek() == '^' && peek(1) == '^') {
      advance();
      advance();
      SourcePos dt_pos = pos_;
      std::string dt = peek() == '<' ? read_iri_ref(base) : read_prefixed_name(prefixes);
      try {
        if (dt == rdf::kXsdString) return Term::string(std::move(lexical));
        if (dt == rdf::kXsdBoolean) return Term::literal(std::move(lexical), Term::Datatype::Boolean);
        if (dt == rdf::kXsdInteger) return Term::literal(std::move(lexical), Term::Datatype::Integer);
      } catch (const std::invalid_argument& e) {
        fail_at(start, e.what());
      }
      fail_at(dt_pos, "unsupported datatype <" + dt + ">");
    }
    return Term::string(std::move(lexical));
  }
  if (c == '\'') fail("single-quoted strings are not supported");
  if (is_digit(c) || c == '+' || c == '-') return Term::literal(read_integer(), Term::Datatype::Integer);
  if (consume_keyword("true")) return Term::boolean(true);
  if (consume_keyword("false")) return Term::boolean(false);
  fail("expected a literal");
}

}  // namespace feo
