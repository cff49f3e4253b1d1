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

#include "rdf.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace feo::rdf {
namespace {

bool has_space(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

Term Term::iri(std::string text) {
  if (text.empty()) throw std::invalid_argument("IRI must not be empty");
  if (has_space(text)) throw std::invalid_argument("IRI contains whitespace: " + text);
  if (text.find_first_of("<>\"") != std::string::npos)
    throw std::invalid_argument("IRI contains a forbidden character: " + text);
  std::string nt = "<" + text + ">";
  return Term(Kind::Iri, Datatype::None, std::move(text), std::move(nt));
}

Term Term::blank(std::string label) {
  if (label.empty() || has_space(label))
    throw std::invalid_argument("invalid blank node label: '" + label + "'");
  std::string nt = "_:" + label;
  return Term(Kind::Blank, Datatype::None, std::move(label), std::move(nt));
}

Term Term::literal(std::string lexical, Datatype datatype) {
  std::string nt = "\"";
  switch (datatype) {
    case Datatype::String:
      nt += escape_string(lexical) + "\"";
      break;
    case Datatype::Boolean: {
      std::string normalized = lower(lexical);
      if (normalized != "true" && normalized != "false")
        throw std::invalid_argument("invalid boolean lexical form: " + lexical);
      lexical = std::move(normalized);
      nt += lexical + "\"^^<" + std::string(kXsdBoolean) + ">";
      break;
    }
    case Datatype::Integer:
      if (!valid_integer(lexical))
        throw std::invalid_argument("invalid integer lexical form: " + lexical);
      nt += lexical + "\"^^<" + std::string(kXsdInteger) + ">";
      break;
    case Datatype::None:
      throw std::invalid_argument("literal requires a datatype");
  }
  return Term(Kind::Literal, datatype, std::move(lexical), std::move(nt));
}

std::string_view Term::datatype_iri() const {
  switch (datatype_) {
    case Datatype::String: return kXsdString;
    case Datatype::Boolean: return kXsdBoolean;
    case Datatype::Integer: return kXsdInteger;
    case Datatype::None: break;
  }
  return {};
}

std::string escape_string(std::string_view lexical) {
  std::string out;
  out.reserve(lexical.size());
  for (char c : lexical) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

Triple Triple::make(Term s, Term p, Term o) {
  if (s.empty() || p.empty() || o.empty()) throw std::invalid_argument("triple has an empty term");
  if (s.is_literal()) throw std::invalid_argument("literal in subject position: " + s.ntriples());
  if (!p.is_iri()) throw std::invalid_argument("predicate must be an IRI: " + p.ntriples());
  return Triple{std::move(s), std::move(p), std::move(o)};
}

std::string Triple::ntriples() const {
  return subject.ntriples() + " " + predicate.ntriples() + " " + object.ntriples() + " .";
}

bool Graph::add(Index& index, const Term& a, const Term& b, const Term& c) {
  return index[a][b].insert(c).second;
}

bool Graph::remove(Index& index, const Term& a, const Term& b, const Term& c) {
  auto i = index.find(a);
  if (i == index.end()) return false;
  auto j = i->second.find(b);
  if (j == i->second.end()) return false;
  if (j->second.erase(c) == 0) return false;
  if (j->second.empty()) i->second.erase(j);
  if (i->second.empty()) index.erase(i);
  return true;
}

bool Graph::insert(const Triple& t) {
  if (frozen_) throw std::logic_error("insert into a frozen graph");
  if (!add(spo_, t.subject, t.predicate, t.object)) return false;
  add(pos_, t.predicate, t.object, t.subject);
  add(osp_, t.object, t.subject, t.predicate);
  ++size_;
  return true;
}

bool Graph::erase(const Triple& t) {
  if (frozen_) throw std::logic_error("erase from a frozen graph");
  if (!remove(spo_, t.subject, t.predicate, t.object)) return false;
  remove(pos_, t.predicate, t.object, t.subject);
  remove(osp_, t.object, t.subject, t.predicate);
  --size_;
  return true;
}

bool Graph::contains(const Triple& t) const {
  auto i = spo_.find(t.subject);
  if (i == spo_.end()) return false;
  auto j = i->second.find(t.predicate);
  return j != i->second.end() && j->second.count(t.object) != 0;
}

void Graph::for_each_match(const std::optional<Term>& s, const std::optional<Term>& p,
                           const std::optional<Term>& o,
                           const std::function<void(const Triple&)>& fn) const {
  // Subject-bound and fully unbound patterns walk SPO and come out sorted;
  // the other shapes walk POS/OSP and are sorted afterwards.
  if (s || (!p && !o)) {
    auto visit_subject = [&](const Term& subj, const Level& level) {
      auto visit_pred = [&](const Term& pred, const Leaf& leaf) {
        if (o) {
          if (leaf.count(*o)) fn(Triple{subj, pred, *o});
          return;
        }
        for (const auto& obj : leaf) fn(Triple{subj, pred, obj});
      };
      if (p) {
        if (auto j = level.find(*p); j != level.end()) visit_pred(j->first, j->second);
        return;
      }
      for (const auto& [pred, leaf] : level) visit_pred(pred, leaf);
    };
    if (s) {
      if (auto i = spo_.find(*s); i != spo_.end()) visit_subject(i->first, i->second);
      return;
    }
    for (const auto& [subj, level] : spo_) visit_subject(subj, level);
    return;
  }

  std::vector<Triple> out;
  if (p) {
    auto i = pos_.find(*p);
    if (i == pos_.end()) return;
    auto visit_obj = [&](const Term& obj, const Leaf& subjects) {
      for (const auto& subj : subjects) out.push_back(Triple{subj, *p, obj});
    };
    if (o) {
      if (auto j = i->second.find(*o); j != i->second.end()) visit_obj(j->first, j->second);
    } else {
      for (const auto& [obj, subjects] : i->second) visit_obj(obj, subjects);
    }
  } else {
    auto i = osp_.find(*o);
    if (i == osp_.end()) return;
    for (const auto& [subj, preds] : i->second)
      for (const auto& pred : preds) out.push_back(Triple{subj, pred, *o});
  }
  std::sort(out.begin(), out.end());
  for (const auto& t : out) fn(t);
}

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Term>& p,
                                 const std::optional<Term>& o) const {
  std::vector<Triple> out;
  for_each_match(s, p, o, [&](const Triple& t) { out.push_back(t); });
  return out;
}

std::vector<Term> Graph::terms() const {
  std::set<Term> all;
  for (const auto& [subj, level] : spo_) {
    all.insert(subj);
    for (const auto& [pred, leaf] : level) {
      all.insert(pred);
      all.insert(leaf.begin(), leaf.end());
    }
  }
  return {all.begin(), all.end()};
}

Graph Graph::unfrozen_copy() const {
  Graph copy = *this;
  copy.frozen_ = false;
  return copy;
}

Graph Graph::merge(const Graph& a, const Graph& b) {
  const Graph& big = a.size() >= b.size() ? a : b;
  const Graph& small = a.size() >= b.size() ? b : a;
  Graph out = big.unfrozen_copy();
  small.for_each_match({}, {}, {}, [&](const Triple& t) { out.insert(t); });
  out.freeze();
  return out;
}

}  // namespace feo::rdf
