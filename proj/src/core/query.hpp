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

#ifndef FEO_CORE_QUERY_HPP_
#define FEO_CORE_QUERY_HPP_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rdf.hpp"
#include "scanner.hpp"

namespace feo::query {

struct Var {
  std::string name;  // without the leading '?'
  friend bool operator==(const Var&, const Var&) = default;
};

using Operand = std::variant<rdf::Term, Var>;

struct TriplePattern {
  Operand subject;
  Operand predicate;
  Operand object;
};

/// `subject iri+ object`: one or more hops along a single predicate.
struct PathPattern {
  Operand subject;
  rdf::Term predicate;
  Operand object;
};

struct Expression;

struct Equals {
  Operand lhs;
  Operand rhs;
};

struct Disjunction {
  std::vector<Expression> operands;
};

/// `?v = term`, `?v = ?w`, `a || b`, parentheses; a bare operand only as a BIND value.
struct Expression {
  std::variant<Operand, Equals, Disjunction> node;
};

struct GroupPattern;

struct Filter {
  Expression expression;
};

struct FilterNotExists {
  std::shared_ptr<const GroupPattern> group;
};

struct OptionalGroup {
  std::shared_ptr<const GroupPattern> group;
};

struct Bind {
  Expression expression;
  Var target;
};

using Element = std::variant<TriplePattern, PathPattern, Filter, FilterNotExists, OptionalGroup, Bind>;

struct GroupPattern {
  std::vector<Element> elements;
};

struct QueryAst {
  PrefixMap prefixes;  // defaults overlaid with the query's PREFIX declarations
  bool distinct = false;
  std::vector<Var> projection;
  GroupPattern where;
};

/// Parses the supported SELECT subset. `defaults` supplies prefixes the text
/// may use without declaring. Throws feo::ParseError.
QueryAst parse_query(std::string_view text, const PrefixMap& defaults = {});

struct BindingTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<rdf::Term>>> rows;  // nullopt = unbound

  /// Header of `?name` cells, then one line per row; IRIs compacted through
  /// `prefixes`, unbound cells empty, LF line endings.
  std::string to_tsv(const PrefixMap& prefixes = {}) const;
  /// SPARQL 1.1 JSON results layout.
  std::string to_json() const;

  friend bool operator==(const BindingTable&, const BindingTable&) = default;
};

/// Inverse of BindingTable::to_tsv. Cells hold `prefix:local`, `<iri>`,
/// `_:label` or an N-Triples literal; empty cells are unbound. Throws
/// feo::ParseError.
BindingTable parse_tsv(std::string_view text, const PrefixMap& prefixes = {});

/// Evaluates against `graph`. Rows are sorted column by column (unbound first)
/// and deduplicated when the query is DISTINCT. Throws feo::EvaluationError
/// when a FILTER mentions a variable nothing in scope can bind.
BindingTable evaluate(const rdf::Graph& graph, const QueryAst& query);

/// Reads, parses and evaluates a query file. Throws feo::IoError when the
/// file cannot be read.
BindingTable evaluate_file(const rdf::Graph& graph, const std::filesystem::path& path,
                           const PrefixMap& defaults = {});

}  // namespace feo::query

#endif  // FEO_CORE_QUERY_HPP_
