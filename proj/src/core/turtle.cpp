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

#include "turtle.hpp"

#include <cctype>
#include <stdexcept>

#include "scanner.hpp"

namespace feo::turtle {
namespace {

constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
constexpr std::string_view kOwlImports = "http://www.w3.org/2002/07/owl#imports";

class Parser {
 public:
  Parser(std::string_view text, const std::optional<std::string>& base) : in_(text), base_(base) {}

  ParseResult run() {
    in_.skip_trivia();
    while (!in_.at_end()) {
      if (in_.peek() == '@') {
        directive();
      } else {
        statement();
      }
      in_.skip_trivia();
    }
    out_.graph.freeze();
    return std::move(out_);
  }

 private:
  void expect_dot(const char* what) {
    in_.skip_trivia();
    if (!in_.consume('.')) in_.fail(std::string("expected '.' to end ") + what);
  }

  void directive() {
    SourcePos start = in_.pos();
    in_.advance();
    if (!in_.consume_keyword("prefix")) {
      if (in_.at_keyword("base")) Scanner::fail_at(start, "@base is not supported");
      Scanner::fail_at(start, "unknown directive");
    }
    in_.skip_trivia();
    std::string label = in_.read_prefix_label();
    in_.skip_trivia();
    if (in_.peek() != '<') in_.fail("expected an IRI after the prefix label");
    prefixes_[label] = in_.read_iri_ref(base_);
    expect_dot("the prefix declaration");
  }

  void statement() {
    rdf::Term subject = subject_term();
    in_.skip_trivia();
    predicate_object_list(subject);
    expect_dot("the statement");
  }

  void predicate_object_list(const rdf::Term& subject) {
    while (true) {
      rdf::Term predicate = verb();
      while (true) {
        in_.skip_trivia();
        rdf::Term object = object_term();
        add(subject, predicate, object);
        in_.skip_trivia();
        if (!in_.consume(',')) break;
      }
      if (!in_.consume(';')) return;
      // A trailing `;` (or several) before the terminator is allowed.
      do in_.skip_trivia();
      while (in_.consume(';'));
      if (in_.peek() == '.' || in_.at_end()) return;
    }
  }

  void add(const rdf::Term& s, const rdf::Term& p, const rdf::Term& o) {
    if (p.value() == kOwlImports)
      out_.warnings.push_back("owl:imports of " + o.ntriples() + " ignored (no import resolution)");
    out_.graph.insert(rdf::Triple{s, p, o});
  }

  rdf::Term iri_term() {
    SourcePos start = in_.pos();
    std::string iri = in_.peek() == '<' ? in_.read_iri_ref(base_) : in_.read_prefixed_name(prefixes_);
    try {
      return rdf::Term::iri(std::move(iri));
    } catch (const std::invalid_argument& e) {
      Scanner::fail_at(start, e.what());
    }
  }

  rdf::Term blank_term() {
    in_.advance();
    if (!in_.consume(':')) in_.fail("expected ':' after '_'");
    std::string label;
    while (Scanner::is_name_char(in_.peek()) ||
           (in_.peek() == '.' && Scanner::is_name_char(in_.peek(1))))
      label += in_.advance();
    if (label.empty()) in_.fail("empty blank node label");
    return rdf::Term::blank(std::move(label));
  }

  bool at_name() const {
    char c = in_.peek();
    return c == '<' || c == ':' || Scanner::is_name_start(c);
  }

  void reject_unsupported() {
    switch (in_.peek()) {
      case '[': in_.fail("blank node property lists are not supported");
      case '(': in_.fail("collections are not supported");
      default: break;
    }
  }

  rdf::Term subject_term() {
    reject_unsupported();
    if (in_.peek() == '_' && in_.peek(1) == ':') return blank_term();
    if (!at_name() || in_.peek() == '"') in_.fail("expected a subject");
    if (in_.at_keyword("prefix") || in_.at_keyword("base"))
      in_.fail("SPARQL-style directives are not supported");
    if (in_.at_keyword("a") || in_.at_keyword("true") || in_.at_keyword("false"))
      in_.fail("expected a subject");
    return iri_term();
  }

  rdf::Term verb() {
    in_.skip_trivia();
    if (in_.peek() == 'a' && in_.at_keyword("a")) {
      in_.advance();
      return rdf::Term::iri(std::string(kRdfType));
    }
    if (!at_name() || (in_.peek() == '_' && in_.peek(1) == ':')) in_.fail("expected a predicate");
    return iri_term();
  }

  rdf::Term object_term() {
    reject_unsupported();
    char c = in_.peek();
    if (c == '_' && in_.peek(1) == ':') return blank_term();
    if (c == '"' || c == '\'' || c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c)) ||
        in_.at_keyword("true") || in_.at_keyword("false"))
      return in_.read_literal(prefixes_, base_);
    if (in_.at_keyword("a")) in_.fail("'a' is only allowed in predicate position");
    if (!at_name()) in_.fail("expected an object");
    return iri_term();
  }

  Scanner in_;
  std::optional<std::string> base_;
  PrefixMap prefixes_;
  ParseResult out_;
};

}  // namespace

ParseResult parse(std::string_view text, const std::optional<std::string>& base) {
  return Parser(text, base).run();
}

rdf::Graph parse_turtle(std::string_view text, const std::optional<std::string>& base) {
  return parse(text, base).graph;
}

std::string serialize_ntriples(const rdf::Graph& graph) {
  if (!graph.frozen()) throw std::logic_error("serialize_ntriples requires a frozen graph");
  std::string out;
  graph.for_each_match({}, {}, {}, [&](const rdf::Triple& t) {
    out += t.ntriples();
    out += '\n';
  });
  return out;
}

}  // namespace feo::turtle
