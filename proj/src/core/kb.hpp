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


#ifndef FEO_CORE_KB_HPP_
#define FEO_CORE_KB_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "query.hpp"
#include "rdf.hpp"

namespace feo::kb {

/// Contents of a shipped asset by relative path ("schema.ttl",
/// "queries/contextual.rq", "expected/contextual.tsv", ...).
/// Throws std::out_of_range for an unknown name.
std::string_view asset(std::string_view name);
std::vector<std::string_view> asset_names();

/// "contextual", "contrastive", "counterfactual".
const std::vector<std::string>& canonical_query_names();
std::string_view canonical_query(std::string_view name);

/// Frozen graphs parsed from the shipped documents.
rdf::Graph schema_graph();
rdf::Graph demo_graph();

struct DemoScenario {
  std::string schema_document;
  std::string instance_document;
  std::map<std::string, query::BindingTable> expected_results;  // keyed by query name
};

DemoScenario demo_scenario();

/// Replaces the season and/or region of feo:HealthCoachSystem in an
/// unfrozen graph. Values are prefixed names or IRIs; a bare name such as
/// "Winter" is taken from the feo namespace.
void set_system_context(rdf::Graph& graph, const std::optional<std::string>& season,
                        const std::optional<std::string>& region);

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded();
}  // namespace detail

}  // namespace feo::kb

#endif  // FEO_CORE_KB_HPP_
