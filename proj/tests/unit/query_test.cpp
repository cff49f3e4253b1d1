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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <json.hpp>

#include "errors.hpp"
#include "oracles.hpp"
#include "turtle.hpp"
#include "vocab.hpp"

namespace feo::query {
namespace {

using rdf::Term;

Term E(const std::string& local) { return Term::iri("http://e/" + local); }

rdf::Graph store(const std::string& turtle) {
  return turtle::parse_turtle("@prefix ex: <http://e/> .\n" + turtle);
}

BindingTable run(const rdf::Graph& g, const std::string& text) {
  return evaluate(g, parse_query("PREFIX ex: <http://e/>\n" + text));
}

ParseDiagnostic diagnostic_of(const std::string& text) {
  try {
    parse_query(text, vocab::standard_prefixes());
  } catch (const ParseError& e) {
    return e.diagnostic();
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return {};
}

using Row = std::vector<std::optional<Term>>;

// ------------------------------------------------------------------ parse

TEST(QueryParseTest, KeywordsAreCaseInsensitive) {
  auto q = parse_query("prefix ex: <http://e/> select distinct ?x where { ?x a ex:C . }");
  EXPECT_TRUE(q.distinct);
  ASSERT_EQ(q.projection.size(), 1u);
  EXPECT_EQ(q.projection[0].name, "x");
  ASSERT_EQ(q.where.elements.size(), 1u);
  const auto& p = std::get<TriplePattern>(q.where.elements[0]);
  EXPECT_EQ(std::get<Term>(p.predicate), vocab::terms().type);
}

TEST(QueryParseTest, DefaultPrefixesAreAvailable) {
  auto q = parse_query("SELECT ?c WHERE { ?c rdfs:subClassOf feo:Characteristic }",
                       vocab::standard_prefixes());
  const auto& p = std::get<TriplePattern>(q.where.elements[0]);
  EXPECT_EQ(std::get<Term>(p.object), vocab::terms().characteristic);
}

TEST(QueryParseTest, AllSupportedElements) {
  auto q = parse_query(
      "PREFIX ex: <http://e/>\n"
      "SELECT ?x ?y ?z ?w WHERE {\n"
      "  BIND (ex:a as ?x) .\n"
      "  ?x (ex:p+) ?y .\n"
      "  ?y ex:q+ ?z .\n"
      "  OPTIONAL { ?z ex:r ?w . }\n"
      "  Filter Not Exists{ ?z ex:bad ?x }.\n"
      "  FILTER ( ?y = ex:b || (?y = ?z) )\n"
      "}");
  ASSERT_EQ(q.where.elements.size(), 6u);
  EXPECT_TRUE(std::holds_alternative<Bind>(q.where.elements[0]));
  EXPECT_TRUE(std::holds_alternative<PathPattern>(q.where.elements[1]));
  EXPECT_TRUE(std::holds_alternative<PathPattern>(q.where.elements[2]));
  EXPECT_TRUE(std::holds_alternative<OptionalGroup>(q.where.elements[3]));
  EXPECT_TRUE(std::holds_alternative<FilterNotExists>(q.where.elements[4]));
  EXPECT_TRUE(std::holds_alternative<Filter>(q.where.elements[5]));
}

TEST(QueryParseTest, SolutionModifiersRejectedAtToken) {
  auto d = diagnostic_of("SELECT ?x WHERE { ?x a feo:Recipe }\nORDER BY ?x");
  EXPECT_EQ(d.line, 2u);
  EXPECT_EQ(d.column, 1u);
  EXPECT_NE(d.message.find("ORDER"), std::string::npos);
  d = diagnostic_of("SELECT ?x WHERE { ?x a feo:Recipe } LIMIT 3");
  EXPECT_EQ(d.column, 37u);
  d = diagnostic_of("SELECT ?x WHERE { ?x a feo:Recipe } GROUP BY ?x");
  EXPECT_NE(d.message.find("GROUP"), std::string::npos);
}

TEST(QueryParseTest, UnsupportedConstructs) {
  auto d = diagnostic_of("SELECT ?x WHERE { { ?x a feo:Recipe } UNION { ?x a feo:Food } }");
  EXPECT_EQ(d.column, 19u);
  d = diagnostic_of("SELECT ?x WHERE { ?x a ?c FILTER(?x = ?c && ?c = ?x) }");
  EXPECT_EQ(d.column, 42u);
  d = diagnostic_of("SELECT ?x WHERE { ?x a ?c FILTER(!(?x = ?c)) }");
  EXPECT_EQ(d.column, 34u);
  d = diagnostic_of("SELECT ?x WHERE { ?x a ?c FILTER(regex(?c, \"x\")) }");
  EXPECT_EQ(d.column, 34u);
  EXPECT_THROW(parse_query("SELECT * WHERE { ?x a ?c }"), ParseError);
  EXPECT_THROW(parse_query("ASK { ?x a ?c }"), ParseError);
  EXPECT_THROW(parse_query("SELECT ?x WHERE { ?x feo:p* ?c }", vocab::standard_prefixes()), ParseError);
  EXPECT_THROW(parse_query("SELECT ?x WHERE { ?x a ?c MINUS { ?x a ?d } }"), ParseError);
  EXPECT_THROW(parse_query("SELECT ?x WHERE { ?x a ?c FILTER(?x != ?c) }"), ParseError);
}

TEST(QueryParseTest, ScopingErrors) {
  auto d = diagnostic_of("SELECT ?x ?nope WHERE { ?x a ?c }");
  EXPECT_EQ(d.line, 1u);
  EXPECT_EQ(d.column, 11u);
  d = diagnostic_of("SELECT ?x WHERE { ?x a ?c . BIND(feo:a AS ?c) }");
  EXPECT_EQ(d.column, 43u);
  EXPECT_THROW(parse_query("SELECT ?x WHERE { ?x undeclared:p ?c }"), ParseError);
}

TEST(QueryParseTest, EmptyInputExpectsSelect) {
  auto d = diagnostic_of("");
  EXPECT_EQ(d.line, 1u);
  EXPECT_NE(d.message.find("SELECT"), std::string::npos);
  d = diagnostic_of("# only a comment\n");
  EXPECT_EQ(d.line, 2u);
}

// --------------------------------------------------------------- evaluate

TEST(QueryEvalTest, JoinAndProjection) {
  auto g = store("ex:a ex:p ex:b . ex:b ex:p ex:c . ex:c ex:q \"x\" .");
  auto t = run(g, "SELECT ?x ?z WHERE { ?x ex:p ?y . ?y ex:p ?z }");
  EXPECT_EQ(t.columns, (std::vector<std::string>{"x", "z"}));
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0], (Row{E("a"), E("c")}));
}

TEST(QueryEvalTest, BagSemanticsWithoutDistinct) {
  auto g = store("ex:a ex:p ex:b . ex:a ex:p ex:c .");
  EXPECT_EQ(run(g, "SELECT ?x WHERE { ?x ex:p ?y }").rows.size(), 2u);
  EXPECT_EQ(run(g, "SELECT DISTINCT ?x WHERE { ?x ex:p ?y }").rows.size(), 1u);
}

TEST(QueryEvalTest, OptionalLeavesUnboundAndSortsFirst) {
  auto g = store("ex:a ex:p ex:b . ex:c ex:p ex:d . ex:d ex:r ex:e .");
  auto t = run(g, "SELECT ?y ?w WHERE { ?x ex:p ?y OPTIONAL { ?y ex:r ?w } }");
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0], (Row{E("b"), std::nullopt}));
  EXPECT_EQ(t.rows[1], (Row{E("d"), E("e")}));
  t = run(g, "SELECT ?w ?y WHERE { ?x ex:p ?y OPTIONAL { ?y ex:r ?w } }");
  EXPECT_EQ(t.rows[0], (Row{std::nullopt, E("b")}));
}

TEST(QueryEvalTest, OptionalSeesOuterBindings) {
  auto g = store("ex:a ex:p ex:b . ex:b ex:r ex:a . ex:b ex:r ex:c .");
  auto t = run(g, "SELECT ?x ?y WHERE { ?x ex:p ?y OPTIONAL { ?y ex:r ?x } }");
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0], (Row{E("a"), E("b")}));
}

TEST(QueryEvalTest, FilterOnUnboundIsFalse) {
  auto g = store("ex:a ex:p ex:b .");
  auto t = run(g, "SELECT ?x WHERE { ?x ex:p ?y OPTIONAL { ?y ex:r ?w } FILTER(?w = ex:b || ?y = ex:b) }");
  EXPECT_EQ(t.rows.size(), 1u);
  t = run(g, "SELECT ?x WHERE { ?x ex:p ?y OPTIONAL { ?y ex:r ?w } FILTER(?w = ?w) }");
  EXPECT_TRUE(t.rows.empty());
}

TEST(QueryEvalTest, FilterIsAppliedAtEndOfGroup) {
  auto g = store("ex:a ex:p ex:b .");
  auto t = run(g, "SELECT ?x WHERE { FILTER(?y = ex:b) ?x ex:p ?y }");
  EXPECT_EQ(t.rows.size(), 1u);
}

TEST(QueryEvalTest, FilterOnNeverBoundVariableIsEvaluationError) {
  auto g = store("ex:a ex:p ex:b .");
  EXPECT_THROW(run(g, "SELECT ?x WHERE { ?x ex:p ?y FILTER(?nowhere = ex:b) }"), EvaluationError);
}

TEST(QueryEvalTest, BindPinsValue) {
  auto g = store("ex:a ex:p ex:b . ex:c ex:p ex:d .");
  auto t = run(g, "SELECT ?y WHERE { BIND(ex:c AS ?x) ?x ex:p ?y }");
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0], (Row{E("d")}));
}

TEST(QueryEvalTest, LiteralEqualityIsTermEquality) {
  auto g = store("ex:a ex:flag false . ex:b ex:flag true . ex:c ex:flag \"false\" .");
  auto t = run(g, "SELECT ?x WHERE { ?x ex:flag False }");
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0], (Row{E("a")}));
}

TEST(QueryEvalTest, NotExistsComplement) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    rdf::Graph g = testing::random_query_store(rng);
    const std::string base = "?a <" + testing::feo_iri("p0").value() + "> ?b";
    const std::string inner = "?b <" + testing::feo_iri("p1").value() + "> ?c";
    auto all = evaluate(g, parse_query("SELECT ?a ?b WHERE { " + base + " }"));
    auto kept = evaluate(g, parse_query("SELECT ?a ?b WHERE { " + base + " FILTER NOT EXISTS { " + inner + " } }"));
    auto matched = evaluate(g, parse_query("SELECT DISTINCT ?a ?b WHERE { " + base + " . " + inner + " }"));
    std::vector<Row> merged = kept.rows;
    for (const auto& r : matched.rows) {
      EXPECT_FALSE(std::binary_search(kept.rows.begin(), kept.rows.end(), r));
      merged.push_back(r);
    }
    std::sort(merged.begin(), merged.end());
    EXPECT_EQ(merged, all.rows);
  }
}

TEST(QueryEvalTest, PathsMatchRepeatedSquaring) {
  std::mt19937_64 rng(11);
  Term p0 = testing::feo_iri("p0");
  for (int i = 0; i < 100; ++i) {
    rdf::Graph g = testing::random_query_store(rng);
    auto expected = testing::closure_by_squaring(g, p0);
    auto t = evaluate(g, parse_query("SELECT ?x ?y WHERE { ?x <" + p0.value() + ">+ ?y }"));
    std::set<std::pair<Term, Term>> got;
    for (const auto& r : t.rows) got.emplace(*r[0], *r[1]);
    EXPECT_EQ(t.rows.size(), got.size()) << "path solutions are a set";
    EXPECT_EQ(got, expected) << turtle::serialize_ntriples(g);

    Term start = testing::feo_iri("n0");
    auto bound = evaluate(g, parse_query("SELECT ?y WHERE { <" + start.value() + "> (<" + p0.value() + ">+) ?y }"));
    std::set<Term> reach;
    for (const auto& r : bound.rows) reach.insert(*r[0]);
    std::set<Term> want;
    for (const auto& [a, b] : expected)
      if (a == start) want.insert(b);
    EXPECT_EQ(reach, want);
  }
}

// ---------------------------------------------------------- oracle & laws

TEST(QueryOracleTest, EvaluateEqualsBruteForce) {
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 150; ++i) {
    rdf::Graph g = testing::random_query_store(rng);
    auto q = testing::random_query(rng, g);
    auto t = evaluate(g, parse_query(q.text));
    EXPECT_EQ(t.rows, testing::brute_force_rows(g, q)) << "case " << i << "\n" << q.text;
  }
}

TEST(QueryOracleTest, PatternOrderDoesNotMatter) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 100; ++i) {
    rdf::Graph g = testing::random_query_store(rng);
    auto q = testing::random_query(rng, g);
    auto original = evaluate(g, parse_query(q.text));
    std::reverse(q.patterns.begin(), q.patterns.end());
    std::string text = q.distinct ? "SELECT DISTINCT" : "SELECT";
    for (const auto& v : q.projection) text += " ?" + v;
    text += " WHERE {";
    auto slot = [](const testing::RandomQuery::Slot& s) {
      if (s.var) return "?" + *s.var;
      return s.constant.is_iri() ? "<" + s.constant.value() + ">" : s.constant.value();
    };
    for (const auto& p : q.patterns) text += " " + slot(p[0]) + " " + slot(p[1]) + " " + slot(p[2]) + " .";
    if (!q.filter.empty()) {
      text += " FILTER(";
      for (std::size_t k = 0; k < q.filter.size(); ++k)
        text += (k ? " || " : "") + slot(q.filter[k].first) + " = " + slot(q.filter[k].second);
      text += ")";
    }
    text += " }";
    EXPECT_EQ(evaluate(g, parse_query(text)), original) << text;
  }
}

TEST(QueryOracleTest, DistinctIsIdempotent) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    rdf::Graph g = testing::random_query_store(rng);
    auto q = testing::random_query(rng, g);
    auto t = evaluate(g, parse_query(q.text));
    auto once = t.rows;
    once.erase(std::unique(once.begin(), once.end()), once.end());
    auto twice = once;
    twice.erase(std::unique(twice.begin(), twice.end()), twice.end());
    EXPECT_EQ(once, twice);
    if (q.distinct) {
      EXPECT_EQ(t.rows, once);
    }
  }
}

// ----------------------------------------------------------------- output

TEST(BindingTableTest, TsvCompactsAndLeavesUnboundEmpty) {
  BindingTable t{{"a", "b"}, {{vocab::terms().forbids, std::nullopt}, {E("x"), Term::integer(3)}}};
  EXPECT_EQ(t.to_tsv(vocab::standard_prefixes()),
            "?a\t?b\nfeo:forbids\t\n<http://e/x>\t\"3\"^^<http://www.w3.org/2001/XMLSchema#integer>\n");
}

TEST(BindingTableTest, TsvRoundTrip) {
  BindingTable t{{"a", "b"},
                 {{vocab::terms().forbids, std::nullopt},
                  {E("x"), Term::string("tab\there")},
                  {Term::blank("k"), Term::boolean(true)}}};
  auto text = t.to_tsv(vocab::standard_prefixes());
  EXPECT_EQ(parse_tsv(text, vocab::standard_prefixes()), t);
}

TEST(BindingTableTest, JsonResultsLayout) {
  BindingTable t{{"a", "b"}, {{E("x"), std::nullopt}, {Term::blank("n"), Term::boolean(true)}}};
  auto doc = nlohmann::json::parse(t.to_json());
  EXPECT_EQ(doc["head"]["vars"], nlohmann::json({"a", "b"}));
  auto& rows = doc["results"]["bindings"];
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0]["a"]["type"], "uri");
  EXPECT_EQ(rows[0]["a"]["value"], "http://e/x");
  EXPECT_FALSE(rows[0].contains("b"));
  EXPECT_EQ(rows[1]["a"]["type"], "bnode");
  EXPECT_EQ(rows[1]["b"]["type"], "literal");
  EXPECT_EQ(rows[1]["b"]["datatype"], "http://www.w3.org/2001/XMLSchema#boolean");
}

TEST(EvaluateFileTest, MissingFileIsIoError) {
  rdf::Graph g;
  g.freeze();
  EXPECT_THROW(evaluate_file(g, "/nonexistent/q.rq"), IoError);
}

}  // namespace
}  // namespace feo::query
