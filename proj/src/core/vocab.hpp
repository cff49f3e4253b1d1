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

#ifndef FEO_CORE_VOCAB_HPP_
#define FEO_CORE_VOCAB_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "rdf.hpp"
#include "scanner.hpp"

namespace feo::vocab {

inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kFeo = "https://purl.org/heals/food-explanation-ontology#";
inline constexpr std::string_view kEo = "https://purl.org/heals/eo#";
inline constexpr std::string_view kFood = "http://purl.org/heals/food/";

// name, namespace, local name
#define FEO_VOCABULARY(X) \
  X(type, kRdf, "type") \
  X(sub_class_of, kRdfs, "subClassOf") \
  X(sub_property_of, kRdfs, "subPropertyOf") \
  X(domain, kRdfs, "domain") \
  X(range, kRdfs, "range") \
  X(label, kRdfs, "label") \
  X(inverse_of, kOwl, "inverseOf") \
  X(transitive_property, kOwl, "TransitiveProperty") \
  X(owl_class, kOwl, "Class") \
  X(object_property, kOwl, "ObjectProperty") \
  X(datatype_property, kOwl, "DatatypeProperty") \
  X(named_individual, kOwl, "NamedIndividual") \
  X(imports, kOwl, "imports") \
  X(characteristic, kFeo, "Characteristic") \
  X(parameter, kFeo, "Parameter") \
  X(user_characteristic, kFeo, "UserCharacteristic") \
  X(system_characteristic, kFeo, "SystemCharacteristic") \
  X(ecosystem_characteristic, kFeo, "EcosystemCharacteristic") \
  X(opposing_characteristic, kFeo, "OpposingCharacteristic") \
  X(season_characteristic, kFeo, "SeasonCharacteristic") \
  X(location_characteristic, kFeo, "LocationCharacteristic") \
  X(budget_characteristic, kFeo, "BudgetCharacteristic") \
  X(allergic_food_characteristic, kFeo, "AllergicFoodCharacteristic") \
  X(disliked_food_characteristic, kFeo, "DislikedFoodCharacteristic") \
  X(liked_foods, kFeo, "LikedFoods") \
  X(food, kFood, "Food") \
  X(ingredient, kFeo, "Ingredient") \
  X(recipe, kFeo, "Recipe") \
  X(diet, kFeo, "Diet") \
  X(season, kFeo, "Season") \
  X(user, kFeo, "User") \
  X(system, kFeo, "System") \
  X(question, kFeo, "Question") \
  X(health_condition, kFeo, "HealthCondition") \
  X(fact, kEo, "Fact") \
  X(foil, kEo, "Foil") \
  X(knowledge, kEo, "knowledge") \
  X(has_parameter, kFeo, "hasParameter") \
  X(has_primary_parameter, kFeo, "hasPrimaryParameter") \
  X(has_secondary_parameter, kFeo, "hasSecondaryParameter") \
  X(has_characteristic, kFeo, "hasCharacteristic") \
  X(is_characteristic_of, kFeo, "isCharacteristicOf") \
  X(is_opposed_by, kFeo, "isOpposedBy") \
  X(forbids, kFeo, "forbids") \
  X(recommends, kFeo, "recommends") \
  X(dislike, kFeo, "dislike") \
  X(disliked_by, kFeo, "dislikedBy") \
  X(likes, kFeo, "likes") \
  X(liked_by, kFeo, "likedBy") \
  X(allergic_to, kFeo, "allergicTo") \
  X(is_ingredient_of, kFeo, "isIngredientOf") \
  X(has_ingredient, kFeo, "hasIngredient") \
  X(available_in, kFeo, "availableIn") \
  X(part_of_diet, kFeo, "partOfDiet") \
  X(has_season, kFeo, "hasSeason") \
  X(has_region, kFeo, "hasRegion") \
  X(is_internal, kFeo, "isInternal") \
  X(health_coach_system, kFeo, "HealthCoachSystem") \
  X(why_eat_cauliflower_potato_curry, kFeo, "WhyEatCauliflowerPotatoCurry") \
  X(why_eat_butternut_squash_soup_over_broccoli_cheddar_soup, kFeo, \
    "WhyEatButternutSquashSoupOverBroccoliCheddarSoup") \
  X(what_if_i_was_pregnant, kFeo, "WhatIfIWasPregnant")

/// The fixed IRIs shared by the rule set, the schema, the queries and the
/// explainer. Obtain it through vocab::terms().
struct Vocabulary {
#define FEO_VOCAB_FIELD(name, ns, local) rdf::Term name;
  FEO_VOCABULARY(FEO_VOCAB_FIELD)
#undef FEO_VOCAB_FIELD
};

const Vocabulary& terms();

/// Every IRI in Vocabulary, sorted.
const std::vector<rdf::Term>& all_iris();
bool contains(const rdf::Term& iri);

/// rdf, rdfs, owl, xsd, feo, eo and food prefixes.
const PrefixMap& standard_prefixes();

/// `feo:Autumn` → full IRI; `<...>` and absolute IRIs pass through.
/// Throws std::invalid_argument for an unknown prefix.
std::string expand(std::string_view name, const PrefixMap& prefixes = standard_prefixes());
/// Shortest `prefix:local` form when the local part is a plain name, else `<iri>`.
std::string compact(const rdf::Term& term, const PrefixMap& prefixes = standard_prefixes());

}  // namespace feo::vocab

#endif  // FEO_CORE_VOCAB_HPP_
