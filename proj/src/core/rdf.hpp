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

#ifndef FEO_CORE_RDF_HPP_
#define FEO_CORE_RDF_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace feo::rdf {

inline constexpr std::string_view kXsdString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kXsdBoolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr std::string_view kXsdInteger = "http://www.w3.org/2001/XMLSchema#integer";

/// An RDF term: IRI, blank node, or literal (string, boolean or integer).
///
/// Terms are ordered IRIs < blanks < literals, and byte-wise on their
/// N-Triples serialization within a kind. That order drives every sorted
/// output in the engine.
class Term {
 public:
  // Enumerator order is the canonical kind order.
  enum class Kind : std::uint8_t { Iri, Blank, Literal };
  enum class Datatype : std::uint8_t { None, String, Boolean, Integer };

  Term() = default;

  /// Throws std::invalid_argument on an empty IRI or one containing whitespace.
  static Term iri(std::string text);
  static Term blank(std::string label);
  /// Boolean lexical forms are case-insensitive and normalized to
  /// "true"/"false"; integers must match [+-]?[0-9]+.
  static Term literal(std::string lexical, Datatype datatype);
  static Term string(std::string lexical) { return literal(std::move(lexical), Datatype::String); }
  static Term boolean(bool value) { return literal(value ? "true" : "false", Datatype::Boolean); }
  static Term integer(std::int64_t value) { return literal(std::to_string(value), Datatype::Integer); }

  Kind kind() const { return kind_; }
  Datatype datatype() const { return datatype_; }
  bool is_iri() const { return kind_ == Kind::Iri; }
  bool is_blank() const { return kind_ == Kind::Blank; }
  bool is_literal() const { return kind_ == Kind::Literal; }
  bool empty() const { return text_.empty(); }

  /// IRI text, blank label, or literal lexical form.
  const std::string& value() const { return value_; }
  /// Canonical N-Triples form, e.g. `<http://x>`, `_:b0`, `"5"^^<...#integer>`.
  const std::string& ntriples() const { return text_; }

  /// Datatype IRI of a literal; empty for other kinds.
  std::string_view datatype_iri() const;

  friend bool operator==(const Term& a, const Term& b) {
    return a.kind_ == b.kind_ && a.text_ == b.text_;
  }
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    return a.text_.compare(b.text_) <=> 0;
  }

 private:
  Term(Kind kind, Datatype datatype, std::string value, std::string text)
      : kind_(kind), datatype_(datatype), value_(std::move(value)), text_(std::move(text)) {}

  Kind kind_ = Kind::Iri;
  Datatype datatype_ = Datatype::None;
  std::string value_;
  std::string text_;
};

/// Escapes a lexical form for a double-quoted N-Triples string.
std::string escape_string(std::string_view lexical);

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  /// Validates positions: subject IRI or blank, predicate IRI.
  static Triple make(Term s, Term p, Term o);

  /// `<s> <p> <o> .` without trailing newline.
  std::string ntriples() const;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Indexed in-memory triple set.
///
/// A graph is built by a single writer and then frozen; frozen graphs reject
/// mutation and may be shared by concurrent readers.
class Graph {
 public:
  Graph() = default;

  /// Returns true iff the triple was not already present.
  /// Throws std::logic_error on a frozen graph.
  bool insert(const Triple& t);
  /// Returns true iff the triple was present. Throws on a frozen graph.
  bool erase(const Triple& t);

  bool contains(const Triple& t) const;
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  /// Triples agreeing with every bound position, in canonical (S, P, O) order.
  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Term>& p,
                            const std::optional<Term>& o) const;
  /// Calls `fn` per matching triple in canonical order, without copying.
  void for_each_match(const std::optional<Term>& s, const std::optional<Term>& p,
                      const std::optional<Term>& o,
                      const std::function<void(const Triple&)>& fn) const;
  std::vector<Triple> triples() const { return match({}, {}, {}); }
  /// All distinct terms in subject, predicate or object position, sorted.
  std::vector<Term> terms() const;

  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }
  /// Mutable copy of a (possibly frozen) graph.
  Graph unfrozen_copy() const;

  /// Set union; the result is frozen.
  static Graph merge(const Graph& a, const Graph& b);

  friend bool operator==(const Graph& a, const Graph& b) { return a.spo_ == b.spo_; }

 private:
  using Leaf = std::set<Term>;
  using Level = std::map<Term, Leaf>;
  using Index = std::map<Term, Level>;

  static bool add(Index& index, const Term& a, const Term& b, const Term& c);
  static bool remove(Index& index, const Term& a, const Term& b, const Term& c);

  Index spo_;
  Index pos_;
  Index osp_;
  std::size_t size_ = 0;
  bool frozen_ = false;
};

}  // namespace feo::rdf

template <>
struct std::hash<feo::rdf::Term> {
  std::size_t operator()(const feo::rdf::Term& t) const noexcept {
    return std::hash<std::string>{}(t.ntriples()) ^ static_cast<std::size_t>(t.kind());
  }
};

#endif  // FEO_CORE_RDF_HPP_
