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

#include "query.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"
#include "vocab.hpp"

namespace feo::query {
namespace {

// ---------------------------------------------------------------------------
// Parsing

constexpr std::string_view kUnsupportedModifiers[] = {"GROUP", "ORDER", "LIMIT", "OFFSET",
                                                      "HAVING", "VALUES"};
constexpr std::string_view kUnsupportedGroupWords[] = {"UNION", "MINUS", "GRAPH", "SERVICE",
                                                       "VALUES", "SELECT"};

class Parser {
 public:
  Parser(std::string_view text, const PrefixMap& defaults) : in_(text) { ast_.prefixes = defaults; }

  QueryAst run() {
    prologue();
    select_clause();
    in_.skip_trivia();
    in_.consume_keyword("WHERE");
    in_.skip_trivia();
    std::set<std::string> outer;
    ast_.where = group(outer);
    in_.skip_trivia();
    if (!in_.at_end()) {
      for (auto kw : kUnsupportedModifiers)
        if (in_.at_keyword(kw)) in_.fail("unsupported construct '" + std::string(kw) + "': solution modifiers are not supported");
      in_.fail("unexpected input after the WHERE clause");
    }
    check_projection();
    return std::move(ast_);
  }

 private:
  void prologue() {
    while (true) {
      in_.skip_trivia();
      if (in_.at_keyword("BASE")) in_.fail("BASE is not supported");
      if (!in_.consume_keyword("PREFIX")) return;
      in_.skip_trivia();
      std::string label = in_.read_prefix_label();
      in_.skip_trivia();
      if (in_.peek() != '<') in_.fail("expected an IRI after the prefix label");
      ast_.prefixes[label] = in_.read_iri_ref(std::nullopt);
    }
  }

  void select_clause() {
    in_.skip_trivia();
    for (auto kw : {"ASK", "CONSTRUCT", "DESCRIBE"})
      if (in_.at_keyword(kw)) in_.fail(std::string("unsupported query form ") + kw);
    if (!in_.consume_keyword("SELECT")) in_.fail("expected SELECT");
    in_.skip_trivia();
    if (in_.at_keyword("REDUCED")) in_.fail("REDUCED is not supported");
    ast_.distinct = in_.consume_keyword("DISTINCT");
    while (true) {
      in_.skip_trivia();
      if (in_.peek() == '*') in_.fail("SELECT * is not supported");
      if (in_.peek() == '(') in_.fail("projection expressions are not supported");
      if (in_.peek() != '?' && in_.peek() != '$') break;
      SourcePos at = in_.pos();
      ast_.projection.push_back(variable());
      projection_pos_.push_back(at);
    }
    if (ast_.projection.empty()) in_.fail("expected at least one projected variable");
  }

  void check_projection() {
    std::set<std::string> seen;
    collect(ast_.where, seen);
    for (std::size_t i = 0; i < ast_.projection.size(); ++i)
      if (!seen.count(ast_.projection[i].name))
        Scanner::fail_at(projection_pos_[i],
                         "projected variable ?" + ast_.projection[i].name + " does not occur in WHERE");
  }

  static void collect(const Operand& o, std::set<std::string>& out) {
    if (const auto* v = std::get_if<Var>(&o)) out.insert(v->name);
  }
  static void collect(const Expression& e, std::set<std::string>& out) {
    std::visit(
        [&](const auto& n) {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Operand>) {
            collect(n, out);
          } else if constexpr (std::is_same_v<N, Equals>) {
            collect(n.lhs, out);
            collect(n.rhs, out);
          } else {
            for (const auto& x : n.operands) collect(x, out);
          }
        },
        e.node);
  }
  static void collect(const GroupPattern& g, std::set<std::string>& out) {
    for (const auto& el : g.elements) {
      std::visit(
          [&](const auto& n) {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, TriplePattern>) {
              collect(n.subject, out);
              collect(n.predicate, out);
              collect(n.object, out);
            } else if constexpr (std::is_same_v<N, PathPattern>) {
              collect(n.subject, out);
              collect(n.object, out);
            } else if constexpr (std::is_same_v<N, Filter>) {
              collect(n.expression, out);
            } else if constexpr (std::is_same_v<N, Bind>) {
              collect(n.expression, out);
              out.insert(n.target.name);
            } else {
              collect(*n.group, out);
            }
          },
          el);
    }
  }

  Var variable() {
    if (!in_.consume('?') && !in_.consume('$')) in_.fail("expected a variable");
    std::string name;
    while (std::isalnum(static_cast<unsigned char>(in_.peek())) || in_.peek() == '_')
      name += in_.advance();
    if (name.empty()) in_.fail("empty variable name");
    return Var{name};
  }

  rdf::Term iri() {
    SourcePos at = in_.pos();
    std::string text = in_.peek() == '<' ? in_.read_iri_ref(std::nullopt)
                                         : in_.read_prefixed_name(ast_.prefixes);
    try {
      return rdf::Term::iri(std::move(text));
    } catch (const std::invalid_argument& e) {
      Scanner::fail_at(at, e.what());
    }
  }

  bool at_iri() const {
    char c = in_.peek();
    return c == '<' || c == ':' || std::isalpha(static_cast<unsigned char>(c));
  }

  Operand operand(bool allow_literal) {
    in_.skip_trivia();
    char c = in_.peek();
    if (c == '?' || c == '$') return variable();
    if (c == '_' && in_.peek(1) == ':') in_.fail("blank nodes are not supported in queries");
    if (c == '"' || c == '\'' || c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c)) ||
        in_.at_keyword("true") || in_.at_keyword("false")) {
      if (!allow_literal) in_.fail("literal not allowed here");
      return in_.read_literal(ast_.prefixes, std::nullopt);
    }
    if (in_.at_keyword("a")) in_.fail("'a' is only allowed in predicate position");
    if (!at_iri()) in_.fail("expected a variable, IRI or literal");
    return iri();
  }

  // ---- expressions

  Expression or_expression() {
    Expression first = unary();
    std::vector<Expression> rest;
    while (true) {
      in_.skip_trivia();
      if (in_.peek() == '&' && in_.peek(1) == '&') in_.fail("'&&' is not supported");
      if (!(in_.peek() == '|' && in_.peek(1) == '|')) break;
      in_.advance();
      in_.advance();
      rest.push_back(unary());
    }
    if (rest.empty()) return first;
    Disjunction d;
    d.operands.push_back(std::move(first));
    for (auto& e : rest) d.operands.push_back(std::move(e));
    return Expression{std::move(d)};
  }

  Expression unary() {
    in_.skip_trivia();
    if (in_.peek() == '!') in_.fail("'!' is not supported");
    if (in_.consume('(')) {
      Expression inner = or_expression();
      in_.skip_trivia();
      if (!in_.consume(')')) in_.fail("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(in_.peek())) && !in_.at_keyword("true") &&
        !in_.at_keyword("false")) {
      // A bare word followed by '(' is a function call.
      auto word = in_.peek_word();
      if (in_.peek(word.size()) == '(') in_.fail("function calls are not supported");
    }
    Operand lhs = operand(true);
    in_.skip_trivia();
    char c = in_.peek();
    if (c == '=' ) {
      in_.advance();
      Operand rhs = operand(true);
      return Expression{Equals{std::move(lhs), std::move(rhs)}};
    }
    if (c == '!' || c == '<' || c == '>' || c == '+' || c == '-' || c == '*' || c == '/')
      in_.fail(std::string("operator '") + c + "' is not supported");
    return Expression{std::move(lhs)};
  }

  static bool is_boolean(const Expression& e) {
    if (std::holds_alternative<Operand>(e.node)) return false;
    if (const auto* d = std::get_if<Disjunction>(&e.node))
      return std::all_of(d->operands.begin(), d->operands.end(), is_boolean);
    return true;
  }

  // ---- group patterns

  void optional_dot() {
    in_.skip_trivia();
    in_.consume('.');
  }

  GroupPattern group(const std::set<std::string>& outer) {
    in_.skip_trivia();
    if (!in_.consume('{')) in_.fail("expected '{'");
    GroupPattern g;
    std::set<std::string> bound = outer;  // variables bound by earlier elements
    while (true) {
      in_.skip_trivia();
      if (in_.at_end()) in_.fail("expected '}'");
      if (in_.consume('}')) return g;
      if (in_.peek() == '{') in_.fail("nested groups and UNION are not supported");
      for (auto kw : kUnsupportedGroupWords)
        if (in_.at_keyword(kw)) in_.fail("unsupported construct '" + std::string(kw) + "'");

      if (in_.consume_keyword("FILTER")) {
        in_.skip_trivia();
        if (in_.consume_keyword("NOT")) {
          in_.skip_trivia();
          if (!in_.consume_keyword("EXISTS")) in_.fail("expected EXISTS after NOT");
          g.elements.push_back(FilterNotExists{std::make_shared<GroupPattern>(group(bound))});
        } else {
          if (in_.at_keyword("EXISTS")) in_.fail("FILTER EXISTS is not supported");
          SourcePos at = in_.pos();
          if (in_.peek() != '(') in_.fail("expected '(' after FILTER");
          Expression e = unary();
          if (!is_boolean(e)) Scanner::fail_at(at, "FILTER needs an equality or disjunction");
          g.elements.push_back(Filter{std::move(e)});
        }
        optional_dot();
        continue;
      }
      if (in_.consume_keyword("OPTIONAL")) {
        auto inner = std::make_shared<GroupPattern>(group(bound));
        collect(*inner, bound);
        g.elements.push_back(OptionalGroup{std::move(inner)});
        optional_dot();
        continue;
      }
      if (in_.consume_keyword("BIND")) {
        in_.skip_trivia();
        if (!in_.consume('(')) in_.fail("expected '(' after BIND");
        Expression e = or_expression();
        in_.skip_trivia();
        if (!in_.consume_keyword("AS")) in_.fail("expected AS in BIND");
        in_.skip_trivia();
        SourcePos at = in_.pos();
        Var target = variable();
        if (bound.count(target.name))
          Scanner::fail_at(at, "BIND target ?" + target.name + " is already bound in this group");
        in_.skip_trivia();
        if (!in_.consume(')')) in_.fail("expected ')' to close BIND");
        bound.insert(target.name);
        g.elements.push_back(Bind{std::move(e), std::move(target)});
        optional_dot();
        continue;
      }
      triples_block(g, bound);
      in_.skip_trivia();
      if (in_.consume('.')) continue;
      if (in_.peek() == '}' || in_.at_keyword("FILTER") || in_.at_keyword("OPTIONAL") ||
          in_.at_keyword("BIND"))
        continue;
      in_.fail("expected '.' or '}'");
    }
  }

  void triples_block(GroupPattern& g, std::set<std::string>& bound) {
    SourcePos at = in_.pos();
    if (in_.peek() == '"' || std::isdigit(static_cast<unsigned char>(in_.peek())))
      Scanner::fail_at(at, "literal in subject position");
    if (in_.peek() == '[' || in_.peek() == '(') in_.fail("blank node syntax is not supported");
    Operand subject = operand(false);
    auto note = [&](const Operand& o) { collect(o, bound); };
    note(subject);
    while (true) {
      in_.skip_trivia();
      std::optional<rdf::Term> path;
      Operand predicate = verb(path);
      note(predicate);
      while (true) {
        Operand object = operand(true);
        note(object);
        if (path)
          g.elements.push_back(PathPattern{subject, *path, std::move(object)});
        else
          g.elements.push_back(TriplePattern{subject, predicate, std::move(object)});
        in_.skip_trivia();
        if (!in_.consume(',')) break;
      }
      if (!in_.consume(';')) return;
      in_.skip_trivia();
      if (in_.peek() == '.' || in_.peek() == '}') return;
    }
  }

  Operand verb(std::optional<rdf::Term>& path) {
    char c = in_.peek();
    if (c == '?' || c == '$') return variable();
    if (c == 'a' && in_.at_keyword("a")) {
      in_.advance();
      return rdf::Term::iri(std::string(vocab::kRdf) + "type");
    }
    if (c == '^' || c == '!') in_.fail("property path operator not supported");
    if (in_.consume('(')) {
      in_.skip_trivia();
      rdf::Term p = iri();
      in_.skip_trivia();
      if (!in_.consume('+')) in_.fail("only 'iri+' paths are supported");
      in_.skip_trivia();
      if (!in_.consume(')')) in_.fail("expected ')' to close the path");
      path = p;
      return p;
    }
    if (!at_iri()) in_.fail("expected a predicate");
    rdf::Term p = iri();
    if (in_.consume('+')) {
      path = p;
    } else if (in_.peek() == '*' || in_.peek() == '/' || in_.peek() == '|') {
      in_.fail("property path operator not supported");
    }
    return p;
  }

  Scanner in_;
  QueryAst ast_;
  std::vector<SourcePos> projection_pos_;
};

// ---------------------------------------------------------------------------
// Evaluation

using Row = std::map<std::string, rdf::Term>;

std::optional<rdf::Term> value_of(const Operand& o, const Row& row) {
  if (const auto* t = std::get_if<rdf::Term>(&o)) return *t;
  auto it = row.find(std::get<Var>(o).name);
  if (it == row.end()) return std::nullopt;
  return it->second;
}

bool bind_operand(const Operand& o, const rdf::Term& value, Row& row) {
  if (const auto* t = std::get_if<rdf::Term>(&o)) return *t == value;
  auto [it, inserted] = row.emplace(std::get<Var>(o).name, value);
  return inserted || it->second == value;
}

// Unbound operands make a comparison false rather than an error; statically
// unbindable variables are rejected before evaluation starts.
bool truth(const Expression& e, const Row& row) {
  if (const auto* eq = std::get_if<Equals>(&e.node)) {
    auto l = value_of(eq->lhs, row);
    auto r = value_of(eq->rhs, row);
    return l && r && *l == *r;
  }
  if (const auto* d = std::get_if<Disjunction>(&e.node))
    return std::any_of(d->operands.begin(), d->operands.end(),
                       [&](const Expression& x) { return truth(x, row); });
  return false;
}

std::optional<rdf::Term> value_of(const Expression& e, const Row& row) {
  if (const auto* o = std::get_if<Operand>(&e.node)) return value_of(*o, row);
  return rdf::Term::boolean(truth(e, row));
}

void expression_vars(const Expression& e, std::set<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        auto add = [&](const Operand& o) {
          if (const auto* v = std::get_if<Var>(&o)) out.insert(v->name);
        };
        if constexpr (std::is_same_v<N, Operand>) {
          add(n);
        } else if constexpr (std::is_same_v<N, Equals>) {
          add(n.lhs);
          add(n.rhs);
        } else {
          for (const auto& x : n.operands) expression_vars(x, out);
        }
      },
      e.node);
}

// Variables the group can bind itself, including through OPTIONAL parts.
void bindable(const GroupPattern& g, std::set<std::string>& out) {
  auto add = [&](const Operand& o) {
    if (const auto* v = std::get_if<Var>(&o)) out.insert(v->name);
  };
  for (const auto& el : g.elements) {
    if (const auto* t = std::get_if<TriplePattern>(&el)) {
      add(t->subject);
      add(t->predicate);
      add(t->object);
    } else if (const auto* p = std::get_if<PathPattern>(&el)) {
      add(p->subject);
      add(p->object);
    } else if (const auto* b = std::get_if<Bind>(&el)) {
      out.insert(b->target.name);
    } else if (const auto* o = std::get_if<OptionalGroup>(&el)) {
      bindable(*o->group, out);
    }
  }
}

void check_scope(const GroupPattern& g, std::set<std::string> scope) {
  bindable(g, scope);
  for (const auto& el : g.elements) {
    if (const auto* f = std::get_if<Filter>(&el)) {
      std::set<std::string> used;
      expression_vars(f->expression, used);
      for (const auto& v : used)
        if (!scope.count(v))
          throw EvaluationError("FILTER compares ?" + v + ", which is never bound");
    } else if (const auto* b = std::get_if<Bind>(&el)) {
      std::set<std::string> used;
      expression_vars(b->expression, used);
      for (const auto& v : used)
        if (!scope.count(v)) throw EvaluationError("BIND uses ?" + v + ", which is never bound");
    } else if (const auto* n = std::get_if<FilterNotExists>(&el)) {
      check_scope(*n->group, scope);
    } else if (const auto* o = std::get_if<OptionalGroup>(&el)) {
      check_scope(*o->group, scope);
    }
  }
}

class Evaluator {
 public:
  explicit Evaluator(const rdf::Graph& g) : graph_(g) {}

  std::vector<Row> group(const GroupPattern& g, std::vector<Row> rows) const {
    std::vector<const Element*> deferred;
    for (const auto& el : g.elements) {
      if (rows.empty()) break;
      std::visit(
          [&](const auto& n) {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, TriplePattern>) {
              rows = join(rows, n);
            } else if constexpr (std::is_same_v<N, PathPattern>) {
              rows = join_path(rows, n);
            } else if constexpr (std::is_same_v<N, OptionalGroup>) {
              rows = left_join(rows, *n.group);
            } else if constexpr (std::is_same_v<N, Bind>) {
              for (auto& row : rows)
                if (auto v = value_of(n.expression, row)) row.emplace(n.target.name, *v);
            } else {
              deferred.push_back(&el);
            }
          },
          el);
    }
    // Filters constrain the whole group regardless of where they appear.
    for (const Element* el : deferred) {
      std::vector<Row> kept;
      for (auto& row : rows) {
        bool keep;
        if (const auto* f = std::get_if<Filter>(el))
          keep = truth(f->expression, row);
        else
          keep = group(*std::get<FilterNotExists>(*el).group, {row}).empty();
        if (keep) kept.push_back(std::move(row));
      }
      rows = std::move(kept);
    }
    return rows;
  }

 private:
  std::vector<Row> join(const std::vector<Row>& rows, const TriplePattern& p) const {
    std::vector<Row> out;
    for (const auto& row : rows) {
      auto s = value_of(p.subject, row);
      auto pr = value_of(p.predicate, row);
      auto o = value_of(p.object, row);
      if ((s && s->is_literal()) || (pr && !pr->is_iri())) continue;
      graph_.for_each_match(s, pr, o, [&](const rdf::Triple& t) {
        Row next = row;
        if (bind_operand(p.subject, t.subject, next) && bind_operand(p.predicate, t.predicate, next) &&
            bind_operand(p.object, t.object, next))
          out.push_back(std::move(next));
      });
    }
    return out;
  }

  std::vector<rdf::Term> reach(const rdf::Term& start, const rdf::Term& pred, bool forward) const {
    std::set<rdf::Term> seen;
    std::deque<rdf::Term> queue{start};
    while (!queue.empty()) {
      rdf::Term cur = queue.front();
      queue.pop_front();
      auto step = [&](const rdf::Term& next) {
        if (seen.insert(next).second) queue.push_back(next);
      };
      if (forward) {
        if (cur.is_literal()) continue;
        graph_.for_each_match(cur, pred, {}, [&](const rdf::Triple& t) { step(t.object); });
      } else {
        graph_.for_each_match({}, pred, cur, [&](const rdf::Triple& t) { step(t.subject); });
      }
    }
    return {seen.begin(), seen.end()};
  }

  std::vector<Row> join_path(const std::vector<Row>& rows, const PathPattern& p) const {
    std::vector<Row> out;
    for (const auto& row : rows) {
      auto s = value_of(p.subject, row);
      auto o = value_of(p.object, row);
      auto emit = [&](const rdf::Term& from, const rdf::Term& to) {
        Row next = row;
        if (bind_operand(p.subject, from, next) && bind_operand(p.object, to, next))
          out.push_back(std::move(next));
      };
      if (s) {
        for (const auto& to : reach(*s, p.predicate, true))
          if (!o || *o == to) emit(*s, to);
      } else if (o) {
        for (const auto& from : reach(*o, p.predicate, false)) emit(from, *o);
      } else {
        std::set<rdf::Term> starts;
        graph_.for_each_match({}, p.predicate, {},
                              [&](const rdf::Triple& t) { starts.insert(t.subject); });
        for (const auto& from : starts)
          for (const auto& to : reach(from, p.predicate, true)) emit(from, to);
      }
    }
    return out;
  }

  std::vector<Row> left_join(const std::vector<Row>& rows, const GroupPattern& inner) const {
    std::vector<Row> out;
    for (const auto& row : rows) {
      auto ext = group(inner, {row});
      if (ext.empty()) {
        out.push_back(row);
      } else {
        for (auto& r : ext) out.push_back(std::move(r));
      }
    }
    return out;
  }

  const rdf::Graph& graph_;
};

bool cell_less(const std::optional<rdf::Term>& a, const std::optional<rdf::Term>& b) {
  if (!a || !b) return !a && b;
  return *a < *b;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return ss.str();
}

}  // namespace

QueryAst parse_query(std::string_view text, const PrefixMap& defaults) {
  return Parser(text, defaults).run();
}

BindingTable evaluate(const rdf::Graph& graph, const QueryAst& query) {
  check_scope(query.where, {});
  std::vector<Row> rows = Evaluator(graph).group(query.where, {Row{}});

  BindingTable table;
  for (const auto& v : query.projection) table.columns.push_back(v.name);
  for (const auto& row : rows) {
    std::vector<std::optional<rdf::Term>> cells;
    for (const auto& v : query.projection) {
      auto it = row.find(v.name);
      cells.push_back(it == row.end() ? std::nullopt : std::optional<rdf::Term>(it->second));
    }
    table.rows.push_back(std::move(cells));
  }
  auto row_less = [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), cell_less);
  };
  std::sort(table.rows.begin(), table.rows.end(), row_less);
  if (query.distinct)
    table.rows.erase(std::unique(table.rows.begin(), table.rows.end()), table.rows.end());
  return table;
}

BindingTable evaluate_file(const rdf::Graph& graph, const std::filesystem::path& path,
                           const PrefixMap& defaults) {
  return evaluate(graph, parse_query(read_file(path), defaults));
}

std::string BindingTable::to_tsv(const PrefixMap& prefixes) const {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += '\t';
    out += "?" + columns[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += '\t';
      if (row[i]) out += vocab::compact(*row[i], prefixes);
    }
    out += '\n';
  }
  return out;
}

std::string BindingTable::to_json() const {
  nlohmann::ordered_json doc;
  doc["head"]["vars"] = columns;
  auto bindings = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json b = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!row[i]) continue;
      const rdf::Term& t = *row[i];
      nlohmann::ordered_json cell;
      switch (t.kind()) {
        case rdf::Term::Kind::Iri: cell["type"] = "uri"; break;
        case rdf::Term::Kind::Blank: cell["type"] = "bnode"; break;
        case rdf::Term::Kind::Literal: cell["type"] = "literal"; break;
      }
      cell["value"] = t.value();
      if (t.is_literal() && t.datatype() != rdf::Term::Datatype::String)
        cell["datatype"] = std::string(t.datatype_iri());
      b[columns[i]] = std::move(cell);
    }
    bindings.push_back(std::move(b));
  }
  doc["results"]["bindings"] = std::move(bindings);
  return doc.dump(2) + "\n";
}

BindingTable parse_tsv(std::string_view text, const PrefixMap& prefixes) {
  BindingTable table;
  std::size_t line_no = 0;
  auto split = [](std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    for (;;) {
      std::size_t tab = line.find('\t', start);
      cells.push_back(line.substr(start, tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    return cells;
  };
  auto fail = [&](std::size_t column, std::string message) {
    throw ParseError(ParseDiagnostic{line_no, column, std::move(message)});
  };

  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line_no == 1) {
      for (auto cell : split(line)) {
        if (cell.size() < 2 || cell[0] != '?') fail(1, "header cells must be ?variables");
        table.columns.emplace_back(cell.substr(1));
      }
      continue;
    }
    auto cells = split(line);
    if (cells.size() != table.columns.size()) fail(1, "row width does not match the header");
    std::vector<std::optional<rdf::Term>> row;
    std::size_t column = 1;
    for (auto cell : cells) {
      if (cell.empty()) {
        row.emplace_back();
      } else {
        Scanner in(cell);
        try {
          char c = in.peek();
          if (c == '<') {
            row.emplace_back(rdf::Term::iri(in.read_iri_ref(std::nullopt)));
          } else if (c == '_' && in.peek(1) == ':') {
            in.advance();
            in.advance();
            row.emplace_back(rdf::Term::blank(std::string(in.peek_word())));
            for (std::size_t n = in.peek_word().size(); n; --n) in.advance();
          } else if (c == '"') {
            row.emplace_back(in.read_literal(prefixes, std::nullopt));
          } else {
            row.emplace_back(rdf::Term::iri(in.read_prefixed_name(prefixes)));
          }
        } catch (const ParseError& e) {
          fail(column + e.diagnostic().column - 1, e.diagnostic().message);
        }
        if (!in.at_end()) fail(column + in.pos().offset, "trailing characters in cell");
      }
      column += cell.size() + 1;
    }
    table.rows.push_back(std::move(row));
  }
  if (line_no == 0) {
    line_no = 1;
    fail(1, "missing header row");
  }
  return table;
}

}  // namespace feo::query
