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


#include "explain.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "errors.hpp"
#include "query.hpp"
#include "vocab.hpp"

namespace feo::explain {

using rdf::Term;
using rdf::Triple;

std::string_view to_string(ExplanationType type) {
  switch (type) {
    case ExplanationType::Contextual: return "contextual";
    case ExplanationType::Contrastive: return "contrastive";
    case ExplanationType::Counterfactual: return "counterfactual";
  }
  return "";
}

std::string_view to_string(Polarity polarity) {
  switch (polarity) {
    case Polarity::Fact: return "fact";
    case Polarity::Foil: return "foil";
    case Polarity::Context: return "context";
    case Polarity::Recommendation: return "recommendation";
    case Polarity::Prohibition: return "prohibition";
  }
  return "";
}

std::optional<ExplanationType> parse_type(std::string_view text) {
  for (auto t : {ExplanationType::Contextual, ExplanationType::Contrastive,
                 ExplanationType::Counterfactual})
    if (to_string(t) == text) return t;
  return std::nullopt;
}

void Question::validate() const {
  if (!primary.is_iri()) throw std::invalid_argument("question needs a primary parameter IRI");
  bool contrastive = type == ExplanationType::Contrastive;
  bool counterfactual = type == ExplanationType::Counterfactual;
  if (contrastive != secondary.has_value())
    throw std::invalid_argument(contrastive ? "contrastive question needs a secondary parameter"
                                            : "only contrastive questions take a secondary parameter");
  if (counterfactual != hypothetical.has_value())
    throw std::invalid_argument(counterfactual ? "counterfactual question needs a hypothetical"
                                               : "only counterfactual questions take a hypothetical");
  if (secondary && !secondary->is_iri()) throw std::invalid_argument("secondary parameter must be an IRI");
  if (hypothetical && !hypothetical->is_iri()) throw std::invalid_argument("hypothetical must be an IRI");
}

bool canonical_less(const ExplanationItem& a, const ExplanationItem& b) {
  return std::tie(a.polarity, a.characteristic_class, a.characteristic, a.derived_foods) <
         std::tie(b.polarity, b.characteristic_class, b.characteristic, b.derived_foods);
}

std::string display_name(const rdf::Graph& graph, const Term& term) {
  if (!term.is_iri()) return term.is_literal() ? term.value() : term.ntriples();
  for (const auto& t : graph.match(term, vocab::terms().label, {}))
    if (t.object.is_literal()) return t.object.value();
  const std::string& iri = term.value();
  std::size_t cut = iri.find_last_of("#/");
  std::string local = cut == std::string::npos ? iri : iri.substr(cut + 1);
  if (local.empty()) return iri;
  std::string out;
  for (std::size_t i = 0; i < local.size(); ++i) {
    char c = local[i];
    if (c == '_' || c == '-') {
      if (!out.empty() && out.back() != ' ') out += ' ';
      continue;
    }
    bool upper = std::isupper(static_cast<unsigned char>(c));
    if (i > 0 && upper && !out.empty() && out.back() != ' ') {
      char prev = local[i - 1];
      bool next_lower = i + 1 < local.size() && std::islower(static_cast<unsigned char>(local[i + 1]));
      if (std::islower(static_cast<unsigned char>(prev)) || std::isdigit(static_cast<unsigned char>(prev)) ||
          (std::isupper(static_cast<unsigned char>(prev)) && next_lower))
        out += ' ';
    }
    out += c;
  }
  return out;
}

namespace {

query::BindingTable run(const rdf::Graph& graph, const std::string& text) {
  return query::evaluate(graph, query::parse_query(text, vocab::standard_prefixes()));
}

std::string ref(const Term& t) { return "<" + t.value() + ">"; }

void require_known(const rdf::Graph& graph, const Term& t) {
  bool known = false;
  auto hit = [&](const Triple&) { known = true; };
  graph.for_each_match(t, {}, {}, hit);
  if (!known) graph.for_each_match({}, {}, t, hit);
  if (!known) graph.for_each_match({}, t, {}, hit);
  if (!known) throw UnknownIndividualError(vocab::compact(t));
}

class Builder {
 public:
  Builder(const infer::Saturation& kb, const Question& q) : kb_(kb), index_(kb.trace) {
    e_.question = q;
  }

  const rdf::Graph& graph() const { return kb_.graph; }

  void add(ExplanationItem item, const std::vector<Triple>& keys) {
    std::set<Triple> prov;
    for (const auto& k : keys) {
      if (!kb_.graph.contains(k)) continue;
      for (auto& t : index_.support(k)) prov.insert(std::move(t));
    }
    item.provenance.assign(prov.begin(), prov.end());
    e_.items.push_back(std::move(item));
  }

  Explanation finish() {
    std::sort(e_.items.begin(), e_.items.end(), canonical_less);
    auto name = [&](const Term& t) {
      if (t.is_iri() && !e_.names.contains(t)) e_.names.emplace(t, display_name(kb_.graph, t));
    };
    const Question& q = e_.question;
    name(q.primary);
    if (q.secondary) name(*q.secondary);
    if (q.hypothetical) name(*q.hypothetical);
    for (const auto& item : e_.items) {
      name(item.characteristic);
      name(item.characteristic_class);
      for (const auto& f : item.derived_foods) name(f);
      for (const auto& t : item.provenance) {
        name(t.subject);
        name(t.object);
      }
    }
    e_.text = render(e_);
    return std::move(e_);
  }

 private:
  const infer::Saturation& kb_;
  infer::DerivationIndex index_;
  Explanation e_;
};

std::string leaf_class_query(const Term& parameter, std::string_view verdict) {
  return "SELECT DISTINCT ?type ?value WHERE {\n"
         "  BIND(" + ref(parameter) + " AS ?parameter)\n"
         "  ?parameter feo:hasCharacteristic ?value .\n"
         "  ?value a " + std::string(verdict) + " .\n"
         "  ?value a ?type .\n"
         "  ?type rdfs:subClassOf+ feo:Characteristic .\n"
         "  FILTER NOT EXISTS { ?type rdfs:subClassOf eo:knowledge }\n"
         "  FILTER NOT EXISTS { ?sub rdfs:subClassOf ?type }\n"
         "}\n";
}

void add_verdicts(Builder& b, const Term& parameter, const Term& verdict, Polarity polarity) {
  const auto& v = vocab::terms();
  auto table = run(b.graph(), leaf_class_query(parameter, ref(verdict)));
  for (const auto& row : table.rows) {
    const Term& type = *row[0];
    const Term& value = *row[1];
    b.add({value, type, polarity, {}, {}},
          {Triple{parameter, v.has_characteristic, value}, Triple{value, v.type, verdict},
           Triple{value, v.type, type}, Triple{type, v.sub_class_of, v.characteristic}});
  }
}

}  // namespace

Explanation explain_contextual(const infer::Saturation& kb, const Question& q) {
  const auto& v = vocab::terms();
  require_known(kb.graph, q.primary);
  Builder b(kb, q);
  std::string text =
      "SELECT DISTINCT ?characteristic ?class WHERE {\n"
      "  BIND(" + ref(q.primary) + " AS ?parameter)\n"
      "  ?parameter feo:hasCharacteristic ?characteristic .\n"
      "  ?characteristic feo:isInternal false .\n"
      "  ?characteristic a feo:EcosystemCharacteristic .\n"
      "  ?characteristic a ?class .\n"
      "  ?class rdfs:subClassOf feo:Characteristic .\n"
      "  FILTER NOT EXISTS { ?class rdfs:subClassOf eo:knowledge }\n"
      "  FILTER NOT EXISTS { ?sub rdfs:subClassOf ?class }\n"
      "}\n";
  for (const auto& row : run(kb.graph, text).rows) {
    const Term& c = *row[0];
    const Term& cls = *row[1];
    if (infer::is_internal(kb.graph, c)) continue;
    std::vector<Triple> keys = {Triple{q.primary, v.has_characteristic, c},
                                Triple{c, v.is_internal, Term::boolean(false)},
                                Triple{c, v.type, v.ecosystem_characteristic}, Triple{c, v.type, cls},
                                Triple{cls, v.sub_class_of, v.characteristic}};
    for (const auto& t : kb.graph.match(q.primary, v.has_ingredient, {}))
      if (kb.graph.contains(Triple{t.object, v.available_in, c})) {
        keys.push_back(t);
        keys.push_back(Triple{t.object, v.available_in, c});
      }
    b.add({c, cls, Polarity::Context, {}, {}}, keys);
  }
  return b.finish();
}

Explanation explain_contrastive(const infer::Saturation& kb, const Question& q) {
  if (!q.secondary) throw std::invalid_argument("contrastive question needs a secondary parameter");
  require_known(kb.graph, q.primary);
  require_known(kb.graph, *q.secondary);
  const auto& v = vocab::terms();
  Builder b(kb, q);
  add_verdicts(b, q.primary, v.fact, Polarity::Fact);
  add_verdicts(b, *q.secondary, v.foil, Polarity::Foil);
  return b.finish();
}

Explanation explain_counterfactual(const infer::Saturation& kb, const Question& q) {
  if (!q.hypothetical) throw std::invalid_argument("counterfactual question needs a hypothetical");
  const Term& h = *q.hypothetical;
  require_known(kb.graph, h);
  const auto& v = vocab::terms();
  Builder b(kb, q);
  std::string text =
      "SELECT DISTINCT ?property ?baseFood ?inheritedFood WHERE {\n"
      "  BIND(" + ref(h) + " AS ?parameter)\n"
      "  ?parameter ?property ?baseFood .\n"
      "  ?property rdfs:subPropertyOf feo:isCharacteristicOf .\n"
      "  ?baseFood a food:Food .\n"
      "  OPTIONAL { ?baseFood feo:isIngredientOf ?inheritedFood . }\n"
      "}\n";
  std::map<std::pair<Term, Term>, std::vector<Term>> grouped;
  for (const auto& row : run(kb.graph, text).rows) {
    auto& derived = grouped[{*row[0], *row[1]}];
    if (row[2]) derived.push_back(*row[2]);
  }
  for (auto& [key, derived] : grouped) {
    const auto& [property, food] = key;
    Triple opposed{property, v.sub_property_of, v.is_opposed_by};
    bool prohibition = property == v.is_opposed_by || kb.graph.contains(opposed);
    std::vector<Triple> keys = {Triple{h, property, food},
                                Triple{property, v.sub_property_of, v.is_characteristic_of},
                                Triple{food, v.type, v.food}};
    if (prohibition) keys.push_back(opposed);
    for (const auto& f : derived) keys.push_back(Triple{food, v.is_ingredient_of, f});
    b.add({food, property, prohibition ? Polarity::Prohibition : Polarity::Recommendation,
           std::move(derived), {}},
          keys);
  }
  return b.finish();
}

Explanation explain(const infer::Saturation& kb, const Question& q) {
  q.validate();
  switch (q.type) {
    case ExplanationType::Contextual: return explain_contextual(kb, q);
    case ExplanationType::Contrastive: return explain_contrastive(kb, q);
    case ExplanationType::Counterfactual: return explain_counterfactual(kb, q);
  }
  throw std::invalid_argument("unknown explanation type");
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += i + 1 == parts.size() ? " and " : ", ";
    out += parts[i];
  }
  return out;
}

void push_unique(std::vector<std::string>& v, std::string s) {
  if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(std::move(s));
}

class Namer {
 public:
  explicit Namer(const Explanation& e) : e_(e) {}
  std::string operator()(const Term& t) const {
    auto it = e_.names.find(t);
    if (it != e_.names.end()) return it->second;
    return t.is_literal() ? t.value() : vocab::compact(t);
  }

 private:
  const Explanation& e_;
};

std::string render_contextual(const Explanation& e, const Namer& name) {
  const auto& v = vocab::terms();
  const Term& param = e.question.primary;
  std::vector<std::string> sentences;
  for (const auto& item : e.items) {
    std::vector<std::string> ingredients;
    if (item.characteristic_class == v.season_characteristic) {
      for (const auto& t : item.provenance) {
        if (t.subject != param || t.predicate != v.has_ingredient) continue;
        Triple link{t.object, v.available_in, item.characteristic};
        if (std::binary_search(item.provenance.begin(), item.provenance.end(), link))
          push_unique(ingredients, name(t.object));
      }
    }
    if (ingredients.empty()) {
      sentences.push_back(name(param) + " is supported by " + name(item.characteristic_class) + " " +
                          name(item.characteristic) + ".");
    } else if (ingredients.size() == 1) {
      sentences.push_back(name(param) + " uses the ingredient " + ingredients[0] +
                          ", which is available in the current season.");
    } else {
      sentences.push_back(name(param) + " uses the ingredients " + join(ingredients) +
                          ", which are available in the current season.");
    }
  }
  std::string out;
  for (const auto& s : sentences) out += (out.empty() ? "" : " ") + s;
  return out;
}

std::string render_contrastive(const Explanation& e, const Namer& name) {
  const auto& v = vocab::terms();
  const Term& a = e.question.primary;
  const Term& b = e.question.secondary ? *e.question.secondary : a;
  std::vector<std::string> facts, foils;
  for (const auto& item : e.items) {
    const Term& cls = item.characteristic_class;
    std::string value = name(item.characteristic);
    if (item.polarity == Polarity::Fact) {
      if (cls == v.season_characteristic)
        push_unique(facts, name(a) + " fits the current season (" + value + ")");
      else
        push_unique(facts, name(a) + " matches your " + name(cls) + " " + value);
    } else if (item.polarity == Polarity::Foil) {
      if (cls == v.allergic_food_characteristic)
        push_unique(foils, "you are allergic to " + value + ", which is in " + name(b));
      else if (cls == v.disliked_food_characteristic)
        push_unique(foils, "you dislike " + value + ", which is in " + name(b));
      else
        push_unique(foils, name(b) + " has the " + name(cls) + " " + value);
    }
  }
  std::string reasons;
  if (!facts.empty() && !foils.empty())
    reasons = join(facts) + ", and " + join(foils);
  else
    reasons = join(facts.empty() ? foils : facts);
  return name(a) + " is better than " + name(b) + " because " + reasons + ".";
}

std::string render_counterfactual(const Explanation& e, const Namer& name) {
  std::vector<std::string> forbidden, suggested;
  for (const auto& item : e.items) {
    if (item.polarity == Polarity::Prohibition) {
      push_unique(forbidden, name(item.characteristic));
      for (const auto& f : item.derived_foods) push_unique(forbidden, name(f));
    } else if (item.derived_foods.empty()) {
      push_unique(suggested, name(item.characteristic));
    } else {
      for (const auto& f : item.derived_foods) push_unique(suggested, name(f));
    }
  }
  const Term& h = e.question.hypothetical ? *e.question.hypothetical : e.question.primary;
  std::string out = "If " + name(h) + " applied to you, you would ";
  if (!forbidden.empty()) {
    out += "be forbidden from eating " + join(forbidden) + ".";
    if (!suggested.empty()) out += " You would be suggested to eat " + join(suggested) + ".";
  } else {
    out += "be suggested to eat " + join(suggested) + ".";
  }
  return out;
}

}  // namespace

std::string render(const Explanation& e) {
  if (e.items.empty()) return "";
  Namer name(e);
  switch (e.question.type) {
    case ExplanationType::Contextual: return render_contextual(e, name);
    case ExplanationType::Contrastive: return render_contrastive(e, name);
    case ExplanationType::Counterfactual: return render_counterfactual(e, name);
  }
  return "";
}

std::string to_json(const Explanation& e) {
  using nlohmann::ordered_json;
  ordered_json question;
  question["id"] = e.question.id.value();
  question["type"] = to_string(e.question.type);
  question["primary"] = e.question.primary.value();
  if (e.question.secondary) question["secondary"] = e.question.secondary->value();
  if (e.question.hypothetical) question["hypothetical"] = e.question.hypothetical->value();

  ordered_json items = ordered_json::array();
  for (const auto& item : e.items) {
    ordered_json j;
    j["characteristic"] = item.characteristic.value();
    j["class"] = item.characteristic_class.value();
    j["polarity"] = to_string(item.polarity);
    j["derivedFoods"] = ordered_json::array();
    for (const auto& f : item.derived_foods) j["derivedFoods"].push_back(f.value());
    j["provenance"] = ordered_json::array();
    for (const auto& t : item.provenance) j["provenance"].push_back(t.ntriples());
    items.push_back(std::move(j));
  }

  ordered_json doc;
  doc["question"] = std::move(question);
  doc["items"] = std::move(items);
  doc["text"] = e.text;
  return doc.dump(2) + "\n";
}

std::optional<Term> find_question(const rdf::Graph& graph, const Question& q) {
  const auto& v = vocab::terms();
  std::optional<Term> found;
  if (q.type == ExplanationType::Contrastive) {
    if (!q.secondary) return std::nullopt;
    graph.for_each_match({}, v.has_primary_parameter, q.primary, [&](const Triple& t) {
      if (!found && graph.contains(Triple{t.subject, v.has_secondary_parameter, *q.secondary}))
        found = t.subject;
    });
    return found;
  }
  const Term& parameter =
      q.type == ExplanationType::Counterfactual && q.hypothetical ? *q.hypothetical : q.primary;
  graph.for_each_match({}, v.has_parameter, parameter, [&](const Triple& t) {
    if (!found) found = t.subject;
  });
  return found;
}

std::vector<Triple> question_triples(const Question& q) {
  const auto& v = vocab::terms();
  std::vector<Triple> out = {Triple::make(q.id, v.type, v.question)};
  switch (q.type) {
    case ExplanationType::Contextual:
      out.push_back(Triple::make(q.id, v.has_parameter, q.primary));
      break;
    case ExplanationType::Contrastive:
      out.push_back(Triple::make(q.id, v.has_primary_parameter, q.primary));
      if (q.secondary) out.push_back(Triple::make(q.id, v.has_secondary_parameter, *q.secondary));
      break;
    case ExplanationType::Counterfactual:
      out.push_back(Triple::make(q.id, v.has_parameter, q.hypothetical ? *q.hypothetical : q.primary));
      break;
  }
  return out;
}

}  // namespace feo::explain
