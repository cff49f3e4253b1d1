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

#ifndef FEO_CORE_TURTLE_HPP_
#define FEO_CORE_TURTLE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdf.hpp"

namespace feo::turtle {

struct ParseResult {
  rdf::Graph graph;  // frozen
  std::vector<std::string> warnings;
};

// Supported subset: @prefix, <IRI>, prefixed names, `a`, `;` and `,`
// abbreviations, `_:` blank nodes, strings (optionally ^^xsd:string,
// xsd:boolean, xsd:integer), bare integers, case-insensitive booleans and
// `#` comments. Anything else raises feo::ParseError at the first offending
// character.
ParseResult parse(std::string_view text, const std::optional<std::string>& base = std::nullopt);

/// Convenience wrapper returning only the graph.
rdf::Graph parse_turtle(std::string_view text,
                        const std::optional<std::string>& base = std::nullopt);

/// One line per triple in canonical order, LF-terminated.
/// Requires a frozen graph.
std::string serialize_ntriples(const rdf::Graph& graph);

}  // namespace feo::turtle

#endif  // FEO_CORE_TURTLE_HPP_
