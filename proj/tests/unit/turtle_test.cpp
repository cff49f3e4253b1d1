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

#include <gtest/gtest.h>

#include <random>

#include "errors.hpp"
#include "oracles.hpp"

namespace feo::turtle {
namespace {

using rdf::Term;
using rdf::Triple;

const char* kPrefix = "@prefix ex: <http://e/> .\n";

Term E(const std::string& local) { return Term::iri("http://e/" + local); }

ParseDiagnostic diagnostic_of(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.diagnostic();
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return {};
}

TEST(TurtleParseTest, AbbreviationsExpand) {
  rdf::Graph g = parse_turtle(std::string(kPrefix) +
                              "ex:a a ex:C ;\n"
                              "     ex:p ex:b, ex:c ;\n"
                              "     ex:q \"s\", 42, TRUE .\n");
  EXPECT_EQ(g.size(), 6u);
  EXPECT_TRUE(g.frozen());
  EXPECT_TRUE(g.contains(Triple{E("a"), Term::iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type"), E("C")}));
  EXPECT_TRUE(g.contains(Triple{E("a"), E("p"), E("c")}));
  EXPECT_TRUE(g.contains(Triple{E("a"), E("q"), Term::integer(42)}));
  EXPECT_TRUE(g.contains(Triple{E("a"), E("q"), Term::boolean(true)}));
}

TEST(TurtleParseTest, TrailingSemicolonAllowed) {
  rdf::Graph g = parse_turtle(std::string(kPrefix) + "ex:a ex:p ex:b ; .\n");
  EXPECT_EQ(g.size(), 1u);
}

TEST(TurtleParseTest, TypedLiteralsAndBlankNodes) {
  rdf::Graph g = parse_turtle(
      "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
      "_:n1 <http://e/p> \"7\"^^xsd:integer, \"False\"^^xsd:boolean, \"x\"^^xsd:string .\n");
  EXPECT_TRUE(g.contains(Triple{Term::blank("n1"), E("p"), Term::integer(7)}));
  EXPECT_TRUE(g.contains(Triple{Term::blank("n1"), E("p"), Term::boolean(false)}));
  EXPECT_TRUE(g.contains(Triple{Term::blank("n1"), E("p"), Term::string("x")}));
}

TEST(TurtleParseTest, EscapesDecode) {
  rdf::Graph g = parse_turtle(R"(<http://e/a> <http://e/p> "q\"\\\té" .)");
  EXPECT_TRUE(g.contains(Triple{E("a"), E("p"), Term::string("q\"\\\t\xC3\xA9")}));
}

TEST(TurtleParseTest, RelativeIriNeedsBase) {
  EXPECT_THROW(parse("<a> <http://e/p> <http://e/b> ."), ParseError);
  rdf::Graph g = parse_turtle("<a> <http://e/p> <http://e/b> .", std::string("http://base/"));
  EXPECT_TRUE(g.contains(Triple{Term::iri("http://base/a"), E("p"), E("b")}));
}

TEST(TurtleParseTest, ImportsWarnButKeepTriple) {
  ParseResult r = parse("<http://e/o> <http://www.w3.org/2002/07/owl#imports> <http://e/other> .");
  EXPECT_EQ(r.graph.size(), 1u);
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.warnings[0].find("http://e/other"), std::string::npos);
}

TEST(TurtleParseTest, EmptyAndCommentOnlyDocuments) {
  EXPECT_TRUE(parse_turtle("").empty());
  EXPECT_TRUE(parse_turtle("# nothing here\n\n").empty());
}

TEST(TurtleErrorTest, MissingTerminatorAtEndOfInput) {
  auto d = diagnostic_of(std::string(kPrefix) + "ex:a ex:p ex:b");
  EXPECT_EQ(d.line, 2u);
  EXPECT_EQ(d.column, 15u);
}

TEST(TurtleErrorTest, UnknownPrefix) {
  auto d = diagnostic_of("ex:a ex:p ex:b .");
  EXPECT_EQ(d.line, 1u);
  EXPECT_EQ(d.column, 1u);
  EXPECT_NE(d.message.find("ex"), std::string::npos);
}

TEST(TurtleErrorTest, UnsupportedSyntaxPointsAtToken) {
  auto d = diagnostic_of(std::string(kPrefix) + "ex:a ex:p [ ex:q ex:c ] .");
  EXPECT_EQ(d.line, 2u);
  EXPECT_EQ(d.column, 11u);

  d = diagnostic_of(std::string(kPrefix) + "ex:a ex:p ( ex:b ) .");
  EXPECT_EQ(d.column, 11u);

  d = diagnostic_of("<http://e/a> <http://e/p> \"x\"@en .");
  EXPECT_EQ(d.column, 30u);

  d = diagnostic_of("@base <http://e/> .");
  EXPECT_EQ(d.column, 1u);

  d = diagnostic_of("PREFIX ex: <http://e/>\nex:a ex:p ex:b .");
  EXPECT_EQ(d.line, 1u);
}

TEST(TurtleErrorTest, RejectsDecimalsAndMultilineStrings) {
  EXPECT_THROW(parse("<http://e/a> <http://e/p> 1.5 ."), ParseError);
  EXPECT_THROW(parse("<http://e/a> <http://e/p> 1e3 ."), ParseError);
  auto d = diagnostic_of("<http://e/a> <http://e/p> \"line\nbreak\" .");
  EXPECT_EQ(d.line, 1u);
  EXPECT_THROW(parse("<http://e/a> <http://e/p> \"unterminated ."), ParseError);
  EXPECT_THROW(parse("<http://e/a> <http://e/p> \"x\"^^<http://e/custom> ."), ParseError);
}

TEST(TurtleErrorTest, KeywordAOnlyInPredicatePosition) {
  EXPECT_THROW(parse(std::string(kPrefix) + "a ex:p ex:b ."), ParseError);
  EXPECT_THROW(parse(std::string(kPrefix) + "ex:a ex:p a ."), ParseError);
}

TEST(NTriplesTest, CanonicalOrderAndLineEndings) {
  rdf::Graph g;
  g.insert(Triple{E("b"), E("p"), Term::string("x")});
  g.insert(Triple{E("a"), E("p"), Term::blank("z")});
  g.insert(Triple{E("a"), E("p"), E("c")});
  g.freeze();
  EXPECT_EQ(serialize_ntriples(g),
            "<http://e/a> <http://e/p> <http://e/c> .\n"
            "<http://e/a> <http://e/p> _:z .\n"
            "<http://e/b> <http://e/p> \"x\" .\n");
}

TEST(NTriplesTest, RequiresFrozenGraph) {
  rdf::Graph g;
  EXPECT_THROW(serialize_ntriples(g), std::logic_error);
}

TEST(NTriplesTest, EmptyGraphSerializesToEmptyString) {
  rdf::Graph g;
  g.freeze();
  EXPECT_EQ(serialize_ntriples(g), "");
}

TEST(RoundTripTest, RandomGraphs) {
  std::mt19937_64 rng(20261018);
  for (int i = 0; i < 100; ++i) {
    rdf::Graph g = testing::random_literal_graph(rng);
    std::string nt = serialize_ntriples(g);
    rdf::Graph back = parse_turtle(nt);
    EXPECT_EQ(back, g) << nt;
    EXPECT_EQ(serialize_ntriples(back), nt);
  }
}

TEST(FuzzTest, MutatedDocumentsAreRejectedOrRoundTrip) {
  const std::string seed =
      "@prefix ex: <http://e/> .\n"
      "@prefix : <http://d/> .\n"
      "# comment\n"
      "ex:a a ex:C ; ex:p \"x\\ty\", true, -42 ;\n"
      "  ex:q _:b1 .\n"
      "_:b1 ex:r <http://e/o> ; ex:s \"7\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n"
      ":x ex:flag False .\n";
  const std::string alphabet = ".;,<>\"[]():@#\\_a ^-09xe\n";
  std::mt19937_64 rng(4242);
  int accepted = 0;
  for (int i = 0; i < 3000; ++i) {
    std::string doc = seed;
    int edits = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int k = 0; k < edits && !doc.empty(); ++k) {
      std::size_t at = std::uniform_int_distribution<std::size_t>(0, doc.size() - 1)(rng);
      char c = alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
      switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
        case 0: doc.erase(at, 1); break;
        case 1: doc.insert(at, 1, c); break;
        case 2: doc[at] = c; break;
        default: doc.insert(at, doc.substr(at, 3)); break;
      }
    }
    rdf::Graph g;
    try {
      g = parse_turtle(doc);
    } catch (const ParseError&) {
      continue;
    }
    ++accepted;
    std::string nt = serialize_ntriples(g);
    rdf::Graph back;
    ASSERT_NO_THROW(back = parse_turtle(nt)) << doc;
    EXPECT_EQ(back, g) << doc;
  }
  EXPECT_GT(accepted, 0);
}

}  // namespace
}  // namespace feo::turtle
