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


#include "kb.hpp"

#include <stdexcept>

#include "turtle.hpp"
#include "vocab.hpp"

namespace feo::kb {

std::string_view asset(std::string_view name) {
  for (const auto& [key, content] : detail::embedded())
    if (key == name) return content;
  throw std::out_of_range("no such asset: " + std::string(name));
}

std::vector<std::string_view> asset_names() {
  std::vector<std::string_view> names;
  for (const auto& entry : detail::embedded()) names.push_back(entry.first);
  return names;
}

const std::vector<std::string>& canonical_query_names() {
  static const std::vector<std::string> names = {"contextual", "contrastive", "counterfactual"};
  return names;
}

std::string_view canonical_query(std::string_view name) {
  return asset("queries/" + std::string(name) + ".rq");
}

rdf::Graph schema_graph() { return turtle::parse_turtle(asset("schema.ttl")); }

rdf::Graph demo_graph() { return turtle::parse_turtle(asset("demo.ttl")); }

DemoScenario demo_scenario() {
  DemoScenario scenario{std::string(asset("schema.ttl")), std::string(asset("demo.ttl")), {}};
  for (const auto& name : canonical_query_names())
    scenario.expected_results.emplace(
        name, query::parse_tsv(asset("expected/" + name + ".tsv"), vocab::standard_prefixes()));
  return scenario;
}

namespace {

rdf::Term context_value(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty context value");
  if (name.find(':') == std::string::npos)
    return rdf::Term::iri(std::string(vocab::kFeo) + name);
  return rdf::Term::iri(vocab::expand(name));
}

void replace_object(rdf::Graph& graph, const rdf::Term& predicate, const rdf::Term& value) {
  const auto& system = vocab::terms().health_coach_system;
  for (const auto& t : graph.match(system, predicate, {})) graph.erase(t);
  graph.insert(rdf::Triple::make(system, predicate, value));
}

}  // namespace

void set_system_context(rdf::Graph& graph, const std::optional<std::string>& season,
                        const std::optional<std::string>& region) {
  const auto& v = vocab::terms();
  if (season) replace_object(graph, v.has_season, context_value(*season));
  if (region) replace_object(graph, v.has_region, context_value(*region));
}

}  // namespace feo::kb
