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


#include "feo/feo.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "explain.hpp"
#include "inference.hpp"
#include "kb.hpp"
#include "query.hpp"
#include "rdf.hpp"
#include "turtle.hpp"
#include "vocab.hpp"

struct feo_kb {
  feo::rdf::Graph asserted;
  std::optional<feo::infer::Saturation> saturated;
  feo::infer::SaturateOptions options;
  std::vector<std::string> warnings;
  std::string last_error;
};

namespace {

using namespace feo;

template <typename F>
feo_status guarded(feo_kb* kb, F&& body) {
  if (!kb) return FEO_ERR_USAGE;
  kb->last_error.clear();
  auto fail = [&](feo_status s, const std::string& message) {
    kb->last_error = message;
    return s;
  };
  try {
    return body();
  } catch (const ParseError& e) {
    return fail(FEO_ERR_PARSE, e.what());
  } catch (const ResourceLimitError& e) {
    return fail(FEO_ERR_RESOURCE, e.what());
  } catch (const UnknownIndividualError& e) {
    return fail(FEO_ERR_UNKNOWN_INDIVIDUAL, e.what());
  } catch (const IoError& e) {
    return fail(FEO_ERR_IO, e.what());
  } catch (const EvaluationError& e) {
    return fail(FEO_ERR_EVAL, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(FEO_ERR_USAGE, e.what());
  } catch (const std::logic_error& e) {
    return fail(FEO_ERR_STATE, e.what());
  } catch (const std::exception& e) {
    return fail(FEO_ERR_STATE, e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void merge_into(feo_kb* kb, turtle::ParseResult parsed) {
  for (const auto& t : parsed.graph.triples()) kb->asserted.insert(t);
  for (auto& w : parsed.warnings) kb->warnings.push_back(std::move(w));
  kb->saturated.reset();
}

const infer::Saturation& require_saturated(const feo_kb* kb) {
  if (!kb->saturated) throw std::logic_error("knowledge base is not saturated");
  return *kb->saturated;
}

rdf::Term individual(const char* name) {
  if (!name || !*name) throw std::invalid_argument("empty individual name");
  std::string_view s(name);
  if (s.front() != '<' && s.find(':') == std::string_view::npos)
    return rdf::Term::iri(std::string(vocab::kFeo) + std::string(s));
  return rdf::Term::iri(vocab::expand(s));
}

}  // namespace

extern "C" {

const char* feo_version(void) { return "0.1.0"; }

const char* feo_status_name(feo_status status) {
  switch (status) {
    case FEO_OK: return "ok";
    case FEO_ERR_USAGE: return "usage error";
    case FEO_ERR_PARSE: return "parse error";
    case FEO_ERR_RESOURCE: return "resource limit exceeded";
    case FEO_ERR_UNKNOWN_INDIVIDUAL: return "unknown individual";
    case FEO_ERR_IO: return "i/o error";
    case FEO_ERR_EVAL: return "evaluation error";
    case FEO_ERR_STATE: return "invalid state";
  }
  return "unknown status";
}

feo_status feo_kb_create(feo_kb** out) {
  if (!out) return FEO_ERR_USAGE;
  *out = new (std::nothrow) feo_kb();
  return *out ? FEO_OK : FEO_ERR_STATE;
}

void feo_kb_destroy(feo_kb* kb) { delete kb; }

const char* feo_kb_last_error(const feo_kb* kb) { return kb ? kb->last_error.c_str() : ""; }

feo_status feo_kb_load_file(feo_kb* kb, const char* path) {
  return guarded(kb, [&] {
    if (!path) throw std::invalid_argument("null path");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(std::string("cannot read ") + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      merge_into(kb, turtle::parse(buf.str()));
    } catch (const ParseError& e) {
      kb->last_error = std::string(path) + ":" + e.diagnostic().to_string();
      return FEO_ERR_PARSE;
    }
    return FEO_OK;
  });
}

feo_status feo_kb_load_turtle(feo_kb* kb, const char* text, size_t length) {
  return guarded(kb, [&] {
    if (!text && length) throw std::invalid_argument("null text");
    merge_into(kb, turtle::parse(std::string_view(text ? text : "", length)));
    return FEO_OK;
  });
}

feo_status feo_kb_load_builtin(feo_kb* kb, feo_builtin which) {
  return guarded(kb, [&] {
    switch (which) {
      case FEO_BUILTIN_SCHEMA: merge_into(kb, turtle::parse(kb::asset("schema.ttl"))); break;
      case FEO_BUILTIN_DEMO: merge_into(kb, turtle::parse(kb::asset("demo.ttl"))); break;
      default: throw std::invalid_argument("unknown built-in document");
    }
    return FEO_OK;
  });
}

feo_status feo_kb_take_warnings(feo_kb* kb, char** out) {
  return guarded(kb, [&] {
    if (!out) throw std::invalid_argument("null output pointer");
    std::string text;
    for (const auto& w : kb->warnings) text += w + "\n";
    *out = duplicate(text);
    kb->warnings.clear();
    return FEO_OK;
  });
}

size_t feo_kb_asserted_size(const feo_kb* kb) { return kb ? kb->asserted.size() : 0; }

feo_status feo_kb_set_context(feo_kb* kb, const char* season, const char* region) {
  return guarded(kb, [&] {
    std::optional<std::string> s, r;
    if (season) s = season;
    if (region) r = region;
    kb::set_system_context(kb->asserted, s, r);
    kb->saturated.reset();
    return FEO_OK;
  });
}

feo_status feo_kb_set_triple_cap(feo_kb* kb, size_t cap) {
  return guarded(kb, [&] {
    if (cap == 0) throw std::invalid_argument("triple cap must be positive");
    kb->options.triple_cap = cap;
    kb->saturated.reset();
    return FEO_OK;
  });
}

feo_status feo_kb_saturate(feo_kb* kb) {
  return guarded(kb, [&] {
    rdf::Graph input = kb->asserted.unfrozen_copy();
    input.freeze();
    kb->saturated.reset();
    kb->saturated = infer::saturate(input, infer::feo_ruleset(), kb->options);
    return FEO_OK;
  });
}

size_t feo_kb_saturated_size(const feo_kb* kb) {
  return kb && kb->saturated ? kb->saturated->graph.size() : 0;
}

feo_status feo_kb_ntriples(feo_kb* kb, char** out) {
  return guarded(kb, [&] {
    if (!out) throw std::invalid_argument("null output pointer");
    *out = duplicate(turtle::serialize_ntriples(require_saturated(kb).graph));
    return FEO_OK;
  });
}

feo_status feo_kb_trace(feo_kb* kb, char** out) {
  return guarded(kb, [&] {
    if (!out) throw std::invalid_argument("null output pointer");
    *out = duplicate(infer::format_trace(require_saturated(kb).trace));
    return FEO_OK;
  });
}

feo_status feo_kb_query(feo_kb* kb, const char* text, feo_format format, char** out) {
  return guarded(kb, [&] {
    if (!text || !out) throw std::invalid_argument("null argument");
    const auto& sat = require_saturated(kb);
    auto ast = query::parse_query(text, vocab::standard_prefixes());
    auto table = query::evaluate(sat.graph, ast);
    *out = duplicate(format == FEO_FORMAT_JSON ? table.to_json() : table.to_tsv(ast.prefixes));
    return FEO_OK;
  });
}

feo_status feo_kb_ask(feo_kb* kb, feo_question_type type, const char* primary, const char* secondary,
                      const char* hypothetical, feo_format format, char** out) {
  return guarded(kb, [&] {
    if (!out) throw std::invalid_argument("null output pointer");
    if (format != FEO_FORMAT_TEXT && format != FEO_FORMAT_JSON)
      throw std::invalid_argument("explanations are available as text or json only");
    const auto& sat = require_saturated(kb);
    explain::Question q;
    switch (type) {
      case FEO_CONTEXTUAL: q.type = explain::ExplanationType::Contextual; break;
      case FEO_CONTRASTIVE: q.type = explain::ExplanationType::Contrastive; break;
      case FEO_COUNTERFACTUAL: q.type = explain::ExplanationType::Counterfactual; break;
      default: throw std::invalid_argument("unknown question type");
    }
    if (secondary) q.secondary = individual(secondary);
    if (hypothetical) q.hypothetical = individual(hypothetical);
    if (primary)
      q.primary = individual(primary);
    else if (q.hypothetical && type == FEO_COUNTERFACTUAL)
      q.primary = *q.hypothetical;
    else
      throw std::invalid_argument("question needs a primary parameter");
    q.validate();

    explain::Explanation e;
    if (auto existing = explain::find_question(sat.graph, q)) {
      q.id = *existing;
      e = explain::explain(sat, q);
    } else {
      q.id = rdf::Term::iri(std::string(vocab::kFeo) + "AdHocQuestion");
      if (q.type == explain::ExplanationType::Contrastive) {
        rdf::Graph extended = kb->asserted.unfrozen_copy();
        for (const auto& t : explain::question_triples(q)) extended.insert(t);
        extended.freeze();
        auto resaturated = infer::saturate(extended, infer::feo_ruleset(), kb->options);
        e = explain::explain(resaturated, q);
      } else {
        e = explain::explain(sat, q);
      }
    }
    *out = duplicate(format == FEO_FORMAT_JSON ? explain::to_json(e) : e.text + "\n");
    return FEO_OK;
  });
}

void feo_string_free(char* s) { std::free(s); }

}  // extern "C"
