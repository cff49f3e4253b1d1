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

#ifndef FEO_CORE_INFERENCE_HPP_
#define FEO_CORE_INFERENCE_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "rdf.hpp"

namespace feo::infer {

struct Variable {
  std::string name;
  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

using Slot = std::variant<rdf::Term, Variable>;

struct TriplePattern {
  Slot subject;
  Slot predicate;
  Slot object;
};

/// Built-in inequality: the rule only fires when `var` is not bound to `excluded`.
struct Guard {
  Variable var;
  rdf::Term excluded;
};

struct Rule {
  std::string id;
  std::vector<TriplePattern> body;     // all must match
  std::vector<TriplePattern> negated;  // none may match
  TriplePattern head;
  int stratum = 0;
  std::vector<Guard> guards;
};

/// An immutable, validated rule list.
///
/// Construction checks rule safety (head, negated and guard variables all
/// occur in the positive body; negation only from stratum 1 up) and that no
/// negated pattern unifies with the head of a rule in the same or a higher
/// stratum. Positive dependencies across strata are not checked; the FEO
/// rules rely on guards to keep stratum-1 verdicts out of stratum 0.
class RuleSet {
 public:
  /// Throws std::invalid_argument describing the first violated constraint.
  explicit RuleSet(std::vector<Rule> rules);

  const std::vector<Rule>& rules() const { return rules_; }
  int strata_count() const { return strata_; }

 private:
  std::vector<Rule> rules_;
  int strata_ = 0;
};

/// The fixed FEO rule set. Stratum 0 closes the class/property hierarchy
/// (r1-r8), lifts opposing characteristics into isOpposedBy edges (r9) and
/// copies class-level isInternal flags onto instances (r13). Stratum 1
/// classifies facts (r10) and foils (r11, r12).
RuleSet feo_ruleset();

struct Derivation {
  std::string rule_id;
  rdf::Triple triple;
  std::vector<rdf::Triple> premises;  // instantiated positive body
};

struct SaturateOptions {
  std::size_t triple_cap = 1'000'000;  // maximum number of derived triples
};

struct Saturation {
  rdf::Graph graph;                // frozen; input triples plus derived ones
  std::vector<Derivation> trace;   // one entry per derived triple, in derivation order
};

/// Stratum-by-stratum least fixpoint, semi-naive within each stratum.
/// Requires a frozen input graph; throws feo::ResourceLimitError when more
/// than `triple_cap` triples would be derived.
Saturation saturate(const rdf::Graph& graph, const RuleSet& rules,
                    const SaturateOptions& options = {});

/// `<rule-id> TAB <n-triples line>` per derivation, LF-terminated.
std::string format_trace(const std::vector<Derivation>& trace);

/// True when some flag on the instance or on one of its types is true, or
/// when no flag is present at all; false only for an explicit false flag.
bool is_internal(const rdf::Graph& graph, const rdf::Term& instance);

/// Maps each derived triple to the derivation that first produced it.
class DerivationIndex {
 public:
  explicit DerivationIndex(const std::vector<Derivation>& trace);
  /// Null for asserted (underived) triples.
  const Derivation* find(const rdf::Triple& t) const;
  /// The triple itself plus every premise of its derivation tree, recursively.
  std::vector<rdf::Triple> support(const rdf::Triple& t) const;

 private:
  std::map<rdf::Triple, const Derivation*> by_triple_;
};

}  // namespace feo::infer

#endif  // FEO_CORE_INFERENCE_HPP_
