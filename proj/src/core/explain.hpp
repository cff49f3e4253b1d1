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


#ifndef FEO_CORE_EXPLAIN_HPP_
#define FEO_CORE_EXPLAIN_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "inference.hpp"
#include "rdf.hpp"

namespace feo::explain {

enum class ExplanationType { Contextual, Contrastive, Counterfactual };
enum class Polarity { Fact, Foil, Context, Recommendation, Prohibition };

std::string_view to_string(ExplanationType type);
std::string_view to_string(Polarity polarity);
std::optional<ExplanationType> parse_type(std::string_view text);

struct Question {
  rdf::Term id;
  ExplanationType type = ExplanationType::Contextual;
  rdf::Term primary;
  std::optional<rdf::Term> secondary;     // contrastive only
  std::optional<rdf::Term> hypothetical;  // counterfactual only

  /// Throws std::invalid_argument when the optional parameters do not fit the type.
  void validate() const;
  friend bool operator==(const Question&, const Question&) = default;
};

struct ExplanationItem {
  rdf::Term characteristic;
  rdf::Term characteristic_class;  // the property, for counterfactual items
  Polarity polarity = Polarity::Context;
  std::vector<rdf::Term> derived_foods;
  std::vector<rdf::Triple> provenance;

  friend bool operator==(const ExplanationItem&, const ExplanationItem&) = default;
};

/// Orders by polarity, then class, then characteristic.
bool canonical_less(const ExplanationItem& a, const ExplanationItem& b);

struct Explanation {
  Question question;
  std::vector<ExplanationItem> items;    // canonical order
  std::map<rdf::Term, std::string> names;  // display names of the IRIs involved
  std::string text;

  friend bool operator==(const Explanation&, const Explanation&) = default;
};

/// rdfs:label when present, else the local name split at case changes
/// ("SpinachFrittata" becomes "Spinach Frittata").
std::string display_name(const rdf::Graph& graph, const rdf::Term& term);

/// All three require a saturated graph and throw feo::UnknownIndividualError
/// when a referenced parameter has no triples.
Explanation explain_contextual(const infer::Saturation& kb, const Question& q);
Explanation explain_contrastive(const infer::Saturation& kb, const Question& q);
Explanation explain_counterfactual(const infer::Saturation& kb, const Question& q);
/// Dispatches on q.type after validating q.
Explanation explain(const infer::Saturation& kb, const Question& q);

/// Fills the per-type template. Empty for an explanation without items.
std::string render(const Explanation& e);
/// Stable-key-order JSON document.
std::string to_json(const Explanation& e);

/// A question individual of `graph` that already carries the parameters
/// of `q` (hasParameter, or hasPrimaryParameter plus hasSecondaryParameter).
std::optional<rdf::Term> find_question(const rdf::Graph& graph, const Question& q);
/// Asserted triples that model `q` as a question individual named q.id.
std::vector<rdf::Triple> question_triples(const Question& q);

}  // namespace feo::explain

#endif  // FEO_CORE_EXPLAIN_HPP_
