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

#include "inference.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>

#include "errors.hpp"
#include "vocab.hpp"

namespace feo::infer {
namespace {

using Bindings = std::map<std::string, rdf::Term>;

void collect_vars(const TriplePattern& p, std::set<std::string>& out) {
  for (const Slot* s : {&p.subject, &p.predicate, &p.object})
    if (const auto* v = std::get_if<Variable>(s)) out.insert(v->name);
}

std::optional<rdf::Term> resolve(const Slot& slot, const Bindings& b) {
  if (const auto* t = std::get_if<rdf::Term>(&slot)) return *t;
  auto it = b.find(std::get<Variable>(slot).name);
  if (it == b.end()) return std::nullopt;
  return it->second;
}

// Extends `b` with the variables of `p` matched against `t`; false on a clash.
bool unify(const TriplePattern& p, const rdf::Triple& t, Bindings& b) {
  const std::pair<const Slot*, const rdf::Term*> pairs[] = {
      {&p.subject, &t.subject}, {&p.predicate, &t.predicate}, {&p.object, &t.object}};
  for (const auto& [slot, term] : pairs) {
    if (const auto* c = std::get_if<rdf::Term>(slot)) {
      if (*c != *term) return false;
      continue;
    }
    const auto& name = std::get<Variable>(*slot).name;
    auto [it, inserted] = b.emplace(name, *term);
    if (!inserted && it->second != *term) return false;
  }
  return true;
}

bool guards_hold(const Rule& r, const Bindings& b) {
  return std::none_of(r.guards.begin(), r.guards.end(), [&](const Guard& g) {
    auto it = b.find(g.var.name);
    return it != b.end() && it->second == g.excluded;
  });
}

bool slots_may_unify(const Slot& a, const Slot& b, const Rule& head_rule) {
  const auto* ta = std::get_if<rdf::Term>(&a);
  const auto* tb = std::get_if<rdf::Term>(&b);
  if (ta && tb) return *ta == *tb;
  if (ta || tb) {
    // A guarded head variable never takes the excluded constant.
    const auto* head_var = std::get_if<Variable>(&b);
    const rdf::Term* constant = ta ? ta : tb;
    if (head_var) {
      for (const auto& g : head_rule.guards)
        if (g.var == *head_var && g.excluded == *constant) return false;
    }
  }
  return true;
}

// Enumerates all extensions of `b` satisfying patterns[order...] and calls `emit`.
// `sources[i]` is the graph pattern i is matched against.
void join(const std::vector<const TriplePattern*>& patterns,
          const std::vector<const rdf::Graph*>& sources, std::size_t i, Bindings& b,
          std::vector<rdf::Triple>& premises, const std::function<void()>& emit) {
  if (i == patterns.size()) {
    emit();
    return;
  }
  const TriplePattern& p = *patterns[i];
  auto s = resolve(p.subject, b);
  auto pr = resolve(p.predicate, b);
  auto o = resolve(p.object, b);
  if (pr && !pr->is_iri()) return;
  // Matching may copy; collect first so recursion never runs inside a graph walk.
  std::vector<rdf::Triple> hits = sources[i]->match(s, pr, o);
  for (const auto& t : hits) {
    Bindings next = b;
    if (!unify(p, t, next)) continue;
    premises.push_back(t);
    join(patterns, sources, i + 1, next, premises, emit);
    premises.pop_back();
  }
}

bool any_match(const rdf::Graph& g, const TriplePattern& p, const Bindings& b) {
  auto s = resolve(p.subject, b);
  auto pr = resolve(p.predicate, b);
  auto o = resolve(p.object, b);
  if (pr && !pr->is_iri()) return false;
  bool found = false;
  g.for_each_match(s, pr, o, [&](const rdf::Triple& t) {
    if (found) return;
    Bindings scratch = b;
    found = unify(p, t, scratch);
  });
  return found;
}

// Rule heads may instantiate to non-triples (a literal subject from an
// inverse or range rule); those instantiations are dropped.
std::optional<rdf::Triple> instantiate(const TriplePattern& head, const Bindings& b) {
  auto s = resolve(head.subject, b);
  auto p = resolve(head.predicate, b);
  auto o = resolve(head.object, b);
  if (!s || !p || !o || s->is_literal() || !p->is_iri()) return std::nullopt;
  return rdf::Triple{*s, *p, *o};
}

Slot var(const char* name) { return Variable{name}; }

}  // namespace

RuleSet::RuleSet(std::vector<Rule> rules) : rules_(std::move(rules)) {
  for (const auto& r : rules_) {
    const std::string where = "rule " + r.id + ": ";
    if (r.body.empty()) throw std::invalid_argument(where + "empty positive body");
    if (r.stratum < 0) throw std::invalid_argument(where + "negative stratum");
    if (!r.negated.empty() && r.stratum < 1)
      throw std::invalid_argument(where + "negation requires stratum >= 1");
    std::set<std::string> bound;
    for (const auto& p : r.body) collect_vars(p, bound);
    std::set<std::string> needed;
    collect_vars(r.head, needed);
    for (const auto& n : r.negated) collect_vars(n, needed);
    for (const auto& g : r.guards) needed.insert(g.var.name);
    for (const auto& v : needed)
      if (!bound.count(v)) throw std::invalid_argument(where + "unsafe variable ?" + v);
    strata_ = std::max(strata_, r.stratum + 1);
  }
  for (const auto& r : rules_) {
    for (const auto& n : r.negated) {
      for (const auto& other : rules_) {
        if (other.stratum < r.stratum) continue;
        const auto& h = other.head;
        if (slots_may_unify(n.subject, h.subject, other) &&
            slots_may_unify(n.predicate, h.predicate, other) &&
            slots_may_unify(n.object, h.object, other))
          throw std::invalid_argument("rule " + r.id + ": negated pattern depends on rule " +
                                      other.id + " in stratum " + std::to_string(other.stratum));
      }
    }
  }
}

RuleSet feo_ruleset() {
  const auto& v = vocab::terms();
  auto c = [](const rdf::Term& t) -> Slot { return t; };
  std::vector<Rule> rules;
  auto add = [&](std::string id, std::vector<TriplePattern> body, TriplePattern head,
                 int stratum = 0, std::vector<TriplePattern> negated = {},
                 std::vector<Guard> guards = {}) {
    rules.push_back(Rule{std::move(id), std::move(body), std::move(negated), std::move(head),
                         stratum, std::move(guards)});
  };

  // Schema patterns come first in each body so joins start from the small side.
  add("r1", {{var("a"), c(v.sub_class_of), var("b")}, {var("b"), c(v.sub_class_of), var("c")}},
      {var("a"), c(v.sub_class_of), var("c")});
  add("r2", {{var("a"), c(v.sub_class_of), var("b")}, {var("x"), c(v.type), var("a")}},
      {var("x"), c(v.type), var("b")}, 0, {},
      {{Variable{"a"}, v.fact}, {Variable{"a"}, v.foil}, {Variable{"b"}, v.fact},
       {Variable{"b"}, v.foil}});
  add("r3",
      {{var("p"), c(v.sub_property_of), var("q")}, {var("q"), c(v.sub_property_of), var("r")}},
      {var("p"), c(v.sub_property_of), var("r")});
  add("r4", {{var("p"), c(v.sub_property_of), var("q")}, {var("x"), var("p"), var("y")}},
      {var("x"), var("q"), var("y")});
  add("r5", {{var("p"), c(v.inverse_of), var("q")}, {var("x"), var("p"), var("y")}},
      {var("y"), var("q"), var("x")});
  add("r5s", {{var("p"), c(v.inverse_of), var("q")}, {var("x"), var("q"), var("y")}},
      {var("y"), var("p"), var("x")});
  add("r6",
      {{var("p"), c(v.type), c(v.transitive_property)},
       {var("x"), var("p"), var("y")},
       {var("y"), var("p"), var("z")}},
      {var("x"), var("p"), var("z")});
  add("r7", {{var("p"), c(v.domain), var("c")}, {var("x"), var("p"), var("y")}},
      {var("x"), c(v.type), var("c")});
  add("r8", {{var("p"), c(v.range), var("c")}, {var("x"), var("p"), var("y")}},
      {var("y"), c(v.type), var("c")});
  add("r9",
      {{var("c"), c(v.type), c(v.opposing_characteristic)},
       {var("param"), c(v.has_characteristic), var("c")}},
      {var("param"), c(v.is_opposed_by), var("c")});
  add("r13", {{var("c"), c(v.is_internal), var("flag")}, {var("x"), c(v.type), var("c")}},
      {var("x"), c(v.is_internal), var("flag")});

  add("r10",
      {{var("c"), c(v.type), c(v.ecosystem_characteristic)},
       {var("q"), c(v.has_parameter), var("p")},
       {var("p"), c(v.has_characteristic), var("c")}},
      {var("c"), c(v.type), c(v.fact)}, 1);
  add("r11",
      {{var("q"), c(v.has_parameter), var("p")}, {var("p"), c(v.has_characteristic), var("c")}},
      {var("c"), c(v.type), c(v.foil)}, 1,
      {{var("c"), c(v.type), c(v.ecosystem_characteristic)}});
  add("r12",
      {{var("c"), c(v.type), c(v.ecosystem_characteristic)},
       {var("q"), c(v.has_parameter), var("p")},
       {var("p"), c(v.is_opposed_by), var("c")}},
      {var("c"), c(v.type), c(v.foil)}, 1);
  return RuleSet(std::move(rules));
}

Saturation saturate(const rdf::Graph& input, const RuleSet& rules, const SaturateOptions& options) {
  if (!input.frozen()) throw std::logic_error("saturate requires a frozen graph");
  Saturation out{input.unfrozen_copy(), {}};
  rdf::Graph& graph = out.graph;

  for (int stratum = 0; stratum < rules.strata_count(); ++stratum) {
    std::vector<const Rule*> active;
    for (const auto& r : rules.rules())
      if (r.stratum == stratum) active.push_back(&r);
    if (active.empty()) continue;

    // The first round treats every triple as new, which makes it a naive pass.
    rdf::Graph delta = graph.unfrozen_copy();
    while (!delta.empty()) {
      rdf::Graph pending;
      for (const Rule* rule : active) {
        const std::size_t n = rule->body.size();
        for (std::size_t pivot = 0; pivot < n; ++pivot) {
          // Pivot pattern reads the delta and is matched first; the rest read
          // the full graph in their written order.
          std::vector<const TriplePattern*> order{&rule->body[pivot]};
          std::vector<const rdf::Graph*> sources{&delta};
          for (std::size_t j = 0; j < n; ++j) {
            if (j == pivot) continue;
            order.push_back(&rule->body[j]);
            sources.push_back(&graph);
          }
          Bindings b;
          std::vector<rdf::Triple> premises;
          join(order, sources, 0, b, premises, [&] {
            // `premises` follows evaluation order; restore body order.
            std::vector<rdf::Triple> in_body_order(n);
            in_body_order[pivot] = premises[0];
            for (std::size_t j = 0, k = 1; j < n; ++j)
              if (j != pivot) in_body_order[j] = premises[k++];
            Bindings full;
            for (std::size_t j = 0; j < n; ++j) unify(rule->body[j], in_body_order[j], full);
            if (!guards_hold(*rule, full)) return;
            for (const auto& neg : rule->negated)
              if (any_match(graph, neg, full)) return;
            auto head = instantiate(rule->head, full);
            if (!head || graph.contains(*head) || !pending.insert(*head)) return;
            if (out.trace.size() >= options.triple_cap) throw ResourceLimitError(options.triple_cap);
            out.trace.push_back(Derivation{rule->id, *head, std::move(in_body_order)});
          });
        }
      }
      pending.for_each_match({}, {}, {}, [&](const rdf::Triple& t) { graph.insert(t); });
      delta = std::move(pending);
    }
  }
  graph.freeze();
  return out;
}

std::string format_trace(const std::vector<Derivation>& trace) {
  std::string out;
  for (const auto& d : trace) {
    out += d.rule_id;
    out += '\t';
    out += d.triple.ntriples();
    out += '\n';
  }
  return out;
}

bool is_internal(const rdf::Graph& graph, const rdf::Term& instance) {
  const auto& v = vocab::terms();
  if (instance.is_literal()) return true;
  bool saw_false = false;
  bool saw_true = false;
  auto scan = [&](const rdf::Term& subject) {
    graph.for_each_match(subject, v.is_internal, {}, [&](const rdf::Triple& t) {
      if (t.object.datatype() != rdf::Term::Datatype::Boolean) return;
      (t.object.value() == "true" ? saw_true : saw_false) = true;
    });
  };
  scan(instance);
  for (const auto& t : graph.match(instance, v.type, {}))
    if (!t.object.is_literal()) scan(t.object);
  return saw_true || !saw_false;
}

DerivationIndex::DerivationIndex(const std::vector<Derivation>& trace) {
  for (const auto& d : trace) by_triple_.emplace(d.triple, &d);
}

const Derivation* DerivationIndex::find(const rdf::Triple& t) const {
  auto it = by_triple_.find(t);
  return it == by_triple_.end() ? nullptr : it->second;
}

std::vector<rdf::Triple> DerivationIndex::support(const rdf::Triple& t) const {
  std::set<rdf::Triple> seen;
  std::vector<rdf::Triple> stack{t};
  while (!stack.empty()) {
    rdf::Triple cur = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(cur).second) continue;
    if (const Derivation* d = find(cur))
      for (const auto& p : d->premises) stack.push_back(p);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace feo::infer
