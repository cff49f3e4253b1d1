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

#include "vocab.hpp"

#include <algorithm>
#include <stdexcept>

namespace feo::vocab {
namespace {

rdf::Term in(std::string_view ns, std::string_view local) {
  return rdf::Term::iri(std::string(ns) + std::string(local));
}

Vocabulary build() {
  Vocabulary v;
#define FEO_VOCAB_INIT(name, ns, local) v.name = in(ns, local);
  FEO_VOCABULARY(FEO_VOCAB_INIT)
#undef FEO_VOCAB_INIT
  return v;
}

bool plain_local(std::string_view local) {
  if (local.empty() || local.back() == '.') return false;
  if (!Scanner::is_name_char(local.front())) return false;
  return std::all_of(local.begin(), local.end(),
                     [](char c) { return Scanner::is_name_char(c) || c == '.'; });
}

}  // namespace

const Vocabulary& terms() {
  static const Vocabulary v = build();
  return v;
}

const std::vector<rdf::Term>& all_iris() {
  static const std::vector<rdf::Term> all = [] {
    const auto& v = terms();
    std::vector<rdf::Term> out;
#define FEO_VOCAB_LIST(name, ns, local) out.push_back(v.name);
    FEO_VOCABULARY(FEO_VOCAB_LIST)
#undef FEO_VOCAB_LIST
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }();
  return all;
}

bool contains(const rdf::Term& iri) {
  const auto& all = all_iris();
  return std::binary_search(all.begin(), all.end(), iri);
}

const PrefixMap& standard_prefixes() {
  static const PrefixMap prefixes{
      {"rdf", std::string(kRdf)},   {"rdfs", std::string(kRdfs)}, {"owl", std::string(kOwl)},
      {"xsd", std::string(kXsd)},   {"feo", std::string(kFeo)},   {"eo", std::string(kEo)},
      {"food", std::string(kFood)},
  };
  return prefixes;
}

std::string expand(std::string_view name, const PrefixMap& prefixes) {
  if (name.size() >= 2 && name.front() == '<' && name.back() == '>')
    return std::string(name.substr(1, name.size() - 2));
  auto colon = name.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("not an IRI: " + std::string(name));
  auto it = prefixes.find(name.substr(0, colon));
  if (it != prefixes.end()) return it->second + std::string(name.substr(colon + 1));
  // Absolute IRIs such as http://x/y or urn:x pass through.
  if (name.substr(colon + 1).starts_with("//") || name.starts_with("urn:")) return std::string(name);
  throw std::invalid_argument("unknown prefix in '" + std::string(name) + "'");
}

std::string compact(const rdf::Term& term, const PrefixMap& prefixes) {
  if (!term.is_iri()) return term.ntriples();
  const std::string& iri = term.value();
  const std::pair<const std::string, std::string>* best = nullptr;
  for (const auto& entry : prefixes) {
    const std::string& ns = entry.second;
    if (ns.empty() || !iri.starts_with(ns) || !plain_local(std::string_view(iri).substr(ns.size())))
      continue;
    if (!best || ns.size() > best->second.size()) best = &entry;
  }
  if (!best) return term.ntriples();
  return best->first + ":" + iri.substr(best->second.size());
}

}  // namespace feo::vocab
