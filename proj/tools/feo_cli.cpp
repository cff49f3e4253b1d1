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


// feo: command-line front end over the C API.
//
//   feo infer  <files...> [--out FILE] [--trace]
//   feo query  [--data FILES...] QUERY.rq [--format tsv|json]
//   feo ask    --type TYPE [--primary IRI] [--secondary IRI] [--hypothetical IRI]
//   feo repl   [--data FILES...]
//
// Exit codes: 0 ok, 1 usage or parse error, 2 triple cap exceeded,
// 3 unknown individual.

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "feo/feo.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;
constexpr int kExitUnknown = 3;

struct Config {
  std::vector<std::string> data_files;
  std::vector<std::string> positional;
  std::string out;
  std::string format = "text";
  std::optional<std::string> season;
  std::optional<std::string> region;
  bool trace = false;
  std::size_t triple_cap = 1'000'000;

  std::string type;
  std::optional<std::string> primary;
  std::optional<std::string> secondary;
  std::optional<std::string> hypothetical;
};

struct KbDeleter {
  void operator()(feo_kb* kb) const { feo_kb_destroy(kb); }
};
using KbPtr = std::unique_ptr<feo_kb, KbDeleter>;

struct StringDeleter {
  void operator()(char* s) const { feo_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int exit_code(feo_status s) {
  switch (s) {
    case FEO_OK: return kExitOk;
    case FEO_ERR_RESOURCE: return kExitResource;
    case FEO_ERR_UNKNOWN_INDIVIDUAL: return kExitUnknown;
    default: return kExitUsage;
  }
}

int report(feo_kb* kb, feo_status s) {
  if (s != FEO_OK) std::cerr << "feo: " << feo_kb_last_error(kb) << "\n";
  return exit_code(s);
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

feo_format to_format(const std::string& f) {
  if (f == "json") return FEO_FORMAT_JSON;
  if (f == "tsv") return FEO_FORMAT_TSV;
  return FEO_FORMAT_TEXT;
}

void flush_warnings(feo_kb* kb) {
  char* raw = nullptr;
  if (feo_kb_take_warnings(kb, &raw) != FEO_OK) return;
  OwnedString text(raw);
  std::istringstream lines(text.get());
  for (std::string line; std::getline(lines, line);) std::cerr << "feo: warning: " << line << "\n";
}

// Loads data files (or the built-in schema and demo when there are none),
// applies context overrides and saturates.
feo_status load(feo_kb* kb, const std::vector<std::string>& files, const Config& cfg) {
  feo_status s = feo_kb_set_triple_cap(kb, cfg.triple_cap);
  if (files.empty()) {
    if (s == FEO_OK) s = feo_kb_load_builtin(kb, FEO_BUILTIN_SCHEMA);
    if (s == FEO_OK) s = feo_kb_load_builtin(kb, FEO_BUILTIN_DEMO);
  }
  for (const auto& f : files) {
    if (s != FEO_OK) break;
    s = feo_kb_load_file(kb, f.c_str());
  }
  if (s == FEO_OK) flush_warnings(kb);
  if (s == FEO_OK && (cfg.season || cfg.region))
    s = feo_kb_set_context(kb, cfg.season ? cfg.season->c_str() : nullptr,
                           cfg.region ? cfg.region->c_str() : nullptr);
  if (s == FEO_OK) s = feo_kb_saturate(kb);
  if (s == FEO_OK && cfg.trace) {
    char* raw = nullptr;
    if (feo_kb_trace(kb, &raw) == FEO_OK) {
      OwnedString trace(raw);
      std::cerr << trace.get();
    }
  }
  return s;
}

KbPtr make_kb() {
  feo_kb* raw = nullptr;
  if (feo_kb_create(&raw) != FEO_OK) return nullptr;
  return KbPtr(raw);
}

bool write_output(const std::string& path, const char* text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

std::vector<std::string> all_files(const Config& cfg) {
  std::vector<std::string> files = cfg.data_files;
  files.insert(files.end(), cfg.positional.begin(), cfg.positional.end());
  return files;
}

int cmd_infer(const Config& cfg) {
  auto files = all_files(cfg);
  if (files.empty()) {
    std::cerr << "feo infer: no input files\nusage: feo infer FILE... [--out FILE]\n";
    return kExitUsage;
  }
  auto kb = make_kb();
  if (feo_status s = load(kb.get(), files, cfg); s != FEO_OK) return report(kb.get(), s);
  char* raw = nullptr;
  if (feo_status s = feo_kb_ntriples(kb.get(), &raw); s != FEO_OK) return report(kb.get(), s);
  OwnedString nt(raw);
  if (!write_output(cfg.out, nt.get())) {
    std::cerr << "feo infer: cannot write " << cfg.out << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int run_query_file(feo_kb* kb, const std::string& path, const Config& cfg) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "feo: cannot read " << path << "\n";
    return kExitUsage;
  }
  std::ostringstream text;
  text << in.rdbuf();
  char* raw = nullptr;
  feo_status s = feo_kb_query(kb, text.str().c_str(), to_format(cfg.format), &raw);
  if (s != FEO_OK) {
    std::cerr << "feo: " << path << ":" << feo_kb_last_error(kb) << "\n";
    return exit_code(s);
  }
  OwnedString result(raw);
  if (!write_output(cfg.out, result.get())) {
    std::cerr << "feo: cannot write " << cfg.out << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_query(const Config& cfg) {
  std::vector<std::string> data;
  std::vector<std::string> queries;
  for (const auto& f : all_files(cfg)) (ends_with(f, ".rq") ? queries : data).push_back(f);
  if (queries.size() != 1) {
    std::cerr << "feo query: expected exactly one .rq query file\n";
    return kExitUsage;
  }
  auto kb = make_kb();
  if (feo_status s = load(kb.get(), data, cfg); s != FEO_OK) return report(kb.get(), s);
  return run_query_file(kb.get(), queries.front(), cfg);
}

int ask(feo_kb* kb, const Config& cfg, const std::string& type, const char* primary,
        const char* secondary, const char* hypothetical) {
  feo_question_type t;
  if (type == "contextual") t = FEO_CONTEXTUAL;
  else if (type == "contrastive") t = FEO_CONTRASTIVE;
  else if (type == "counterfactual") t = FEO_COUNTERFACTUAL;
  else {
    std::cerr << "feo: unknown question type '" << type << "'\n";
    return kExitUsage;
  }
  char* raw = nullptr;
  feo_format format = cfg.format == "json" ? FEO_FORMAT_JSON : FEO_FORMAT_TEXT;
  feo_status s = feo_kb_ask(kb, t, primary, secondary, hypothetical, format, &raw);
  if (s != FEO_OK) return report(kb, s);
  OwnedString text(raw);
  if (!write_output(cfg.out, text.get())) return kExitUsage;
  return kExitOk;
}

int cmd_ask(const Config& cfg) {
  if (cfg.format == "tsv") {
    std::cerr << "feo ask: --format must be text or json\n";
    return kExitUsage;
  }
  auto kb = make_kb();
  if (feo_status s = load(kb.get(), all_files(cfg), cfg); s != FEO_OK) return report(kb.get(), s);
  auto c = [](const std::optional<std::string>& v) { return v ? v->c_str() : nullptr; };
  return ask(kb.get(), cfg, cfg.type, c(cfg.primary), c(cfg.secondary), c(cfg.hypothetical));
}

constexpr const char* kReplHelp =
    "commands:\n"
    "  ask contextual PARAMETER\n"
    "  ask contrastive PRIMARY SECONDARY\n"
    "  ask counterfactual HYPOTHETICAL\n"
    "  query FILE.rq\n"
    "  reload\n"
    "  help\n"
    "  quit\n";

int cmd_repl(const Config& cfg) {
  const auto files = all_files(cfg);
  auto kb = make_kb();
  if (feo_status s = load(kb.get(), files, cfg); s != FEO_OK) return report(kb.get(), s);
  Config out_cfg = cfg;
  out_cfg.out.clear();
  if (out_cfg.format == "tsv") out_cfg.format = "text";
  const bool interactive = isatty(STDIN_FILENO);

  for (;;) {
    if (interactive) std::cout << "feo> " << std::flush;
    std::string line;
    if (!std::getline(std::cin, line)) break;
    std::istringstream words(line);
    std::vector<std::string> argv;
    for (std::string w; words >> w;) argv.push_back(w);
    if (argv.empty()) continue;
    const std::string& verb = argv[0];

    if (verb == "quit" || verb == "exit") break;
    if (verb == "help") {
      std::cout << kReplHelp;
    } else if (verb == "reload") {
      auto fresh = make_kb();
      feo_status s = load(fresh.get(), files, cfg);
      if (s == FEO_OK) {
        kb = std::move(fresh);
        std::cout << "reloaded " << feo_kb_saturated_size(kb.get()) << " triples\n";
      } else {
        report(fresh.get(), s);
      }
    } else if (verb == "query") {
      if (argv.size() != 2) std::cerr << "error: usage: query FILE.rq\n";
      else run_query_file(kb.get(), argv[1], out_cfg);
    } else if (verb == "ask") {
      if (argv.size() < 2) {
        std::cerr << "error: usage: ask TYPE ARGS...\n";
        continue;
      }
      const std::string& type = argv[1];
      std::size_t want = type == "contrastive" ? 4 : 3;
      if (argv.size() != want) {
        std::cerr << "error: wrong number of arguments for 'ask " << type << "'\n";
        continue;
      }
      if (type == "counterfactual")
        ask(kb.get(), out_cfg, type, nullptr, nullptr, argv[2].c_str());
      else if (type == "contrastive")
        ask(kb.get(), out_cfg, type, argv[2].c_str(), argv[3].c_str(), nullptr);
      else
        ask(kb.get(), out_cfg, type, argv[2].c_str(), nullptr, nullptr);
    } else {
      std::cerr << "error: unknown command '" << verb << "' (try 'help')\n";
    }
    std::cout.flush();
  }
  return kExitOk;
}

void add_common(CLI::App* cmd, Config& cfg, bool with_format) {
  cmd->add_option("--data", cfg.data_files, "Turtle data files")->expected(0, -1);
  cmd->add_option("--out", cfg.out, "Write results to FILE instead of stdout");
  if (with_format)
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "tsv"}));
  cmd->add_option("--season", cfg.season, "Override the system's current season");
  cmd->add_option("--region", cfg.region, "Override the system's region");
  cmd->add_flag("--trace", cfg.trace, "Print the derivation trace to stderr");
  cmd->add_option("--triple-cap", cfg.triple_cap, "Maximum number of derived triples")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Food explanation engine: saturate, query and explain FEO knowledge graphs", "feo"};
  app.require_subcommand(1);
  Config cfg;

  auto* infer = app.add_subcommand("infer", "Saturate the inputs and write N-Triples");
  add_common(infer, cfg, false);
  infer->add_option("files", cfg.positional, "Turtle files");

  auto* query = app.add_subcommand("query", "Saturate, then evaluate a .rq query");
  add_common(query, cfg, true);
  query->add_option("files", cfg.positional, "Data files and the query file");

  auto* ask_cmd = app.add_subcommand("ask", "Explain a question");
  add_common(ask_cmd, cfg, true);
  ask_cmd->add_option("--type", cfg.type, "contextual, contrastive or counterfactual")
      ->required()
      ->check(CLI::IsMember({"contextual", "contrastive", "counterfactual"}));
  ask_cmd->add_option("--primary", cfg.primary, "Primary parameter");
  ask_cmd->add_option("--secondary", cfg.secondary, "Secondary parameter (contrastive)");
  ask_cmd->add_option("--hypothetical", cfg.hypothetical, "Hypothetical condition (counterfactual)");
  ask_cmd->add_option("files", cfg.positional, "Data files");

  auto* repl = app.add_subcommand("repl", "Interactive question loop");
  add_common(repl, cfg, true);
  repl->add_option("files", cfg.positional, "Data files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "feo: " << e.what() << "\n" << "run 'feo --help' for usage\n";
    return kExitUsage;
  }

  if (*infer) return cmd_infer(cfg);
  if (*query) return cmd_query(cfg);
  if (*ask_cmd) return cmd_ask(cfg);
  if (*repl) return cmd_repl(cfg);
  return kExitUsage;
}
