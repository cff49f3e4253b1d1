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


// Acceptance checks AC1-AC9. Prints one [PASS]/[FAIL] line per criterion
// and exits non-zero when any fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "inference.hpp"
#include "kb.hpp"
#include "oracles.hpp"
#include "query.hpp"
#include "turtle.hpp"
#include "vocab.hpp"

namespace {

namespace fs = std::filesystem;
using feo::rdf::Term;
using Clock = std::chrono::steady_clock;
using Row = std::vector<std::optional<Term>>;

const fs::path kAssets = FEO_ASSET_DIR;
fs::path g_scratch;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Run {
  int exit_code = -1;
  std::string out;
  double seconds = 0;
};

Run feo_cli(const std::string& args) {
  fs::path out = g_scratch / "stdout";
  std::string cmd = std::string("'") + FEO_CLI_PATH + "' " + args + " >'" + out.string() + "' 2>/dev/null";
  auto start = Clock::now();
  int status = std::system(cmd.c_str());
  Run r;
  r.seconds = seconds_since(start);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  return r;
}

std::string asset(const std::string& rel) { return "'" + (kAssets / rel).string() + "'"; }

Term F(const std::string& local) { return feo::testing::feo_iri(local); }

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
};

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed << s << " s";
  return o.str();
}

/// AC1-AC3: the CLI on the shipped files returns exactly `expected`.
Verdict canonical_query(const std::string& name, const std::vector<std::string>& columns,
                        const std::vector<Row>& expected) {
  Verdict v;
  Run r = feo_cli("query --data " + asset("schema.ttl") + " " + asset("demo.ttl") + " " +
                  asset("queries/" + name + ".rq"));
  v.require(r.exit_code == 0, "exit code " + std::to_string(r.exit_code));
  feo::query::BindingTable got;
  try {
    got = feo::query::parse_tsv(r.out, feo::vocab::standard_prefixes());
  } catch (const feo::ParseError& e) {
    v.require(false, std::string("unparseable output: ") + e.what());
    return v;
  }
  auto sorted = expected;
  std::sort(sorted.begin(), sorted.end());
  v.require(got.columns == columns, "unexpected columns");
  v.require(got.rows == sorted, std::to_string(got.rows.size()) + " rows differ from the result table");
  v.require(r.seconds < 1.0, "runtime " + fmt_seconds(r.seconds));
  v.detail = v.pass ? std::to_string(got.rows.size()) + " row(s), " + fmt_seconds(r.seconds) : v.detail;
  return v;
}

Verdict ac4_rendered_text() {
  Verdict v;
  struct Case {
    std::string args;
    std::vector<std::string> phrases;
  };
  std::vector<Case> cases = {
      {"ask --type contextual --primary CauliflowerPotatoCurry", {"available in the current season"}},
      {"ask --type contrastive --primary ButternutSquashSoup --secondary BroccoliCheddarSoup",
       {"you are allergic to"}},
      {"ask --type counterfactual --hypothetical Pregnancy", {"forbidden from eating", "Spinach Frittata"}}};
  for (const auto& c : cases) {
    Run r = feo_cli(c.args);
    v.require(r.exit_code == 0, c.args + ": exit code " + std::to_string(r.exit_code));
    for (const auto& p : c.phrases) v.require(r.out.find(p) != std::string::npos, "missing \"" + p + "\"");
  }
  if (v.pass) v.detail = "all key phrases present";
  return v;
}

constexpr int kRandomGraphs = 100;
constexpr std::uint64_t kSeed = 0xAC5;

Verdict ac5_reasoner_oracle() {
  Verdict v;
  std::mt19937_64 rng(kSeed);
  auto rules = feo::infer::feo_ruleset();
  auto start = Clock::now();
  for (int i = 0; i < kRandomGraphs; ++i) {
    auto g = feo::testing::random_feo_graph(rng, 50);
    auto sat = feo::infer::saturate(g, rules);
    auto got = sat.graph.triples();
    auto asserted = g.triples();
    feo::testing::TripleSet input(asserted.begin(), asserted.end());
    auto expected = feo::testing::naive_feo_closure(input);
    v.require(feo::testing::TripleSet(got.begin(), got.end()) == expected,
              "graph " + std::to_string(i) + " differs from the naive fixpoint");
  }
  double s = seconds_since(start);
  v.require(s < 30.0, "suite took " + fmt_seconds(s));
  if (v.pass) v.detail = std::to_string(kRandomGraphs) + " graphs, " + fmt_seconds(s);
  return v;
}

Verdict ac6_query_oracle() {
  Verdict v;
  std::mt19937_64 rng(0xAC6);
  auto start = Clock::now();
  constexpr int kCases = 150;
  for (int i = 0; i < kCases; ++i) {
    auto store = feo::testing::random_query_store(rng, 30);
    auto q = feo::testing::random_query(rng, store);
    auto got = feo::query::evaluate(store, feo::query::parse_query(q.text));
    v.require(got.rows == feo::testing::brute_force_rows(store, q), "case " + std::to_string(i) + ": " + q.text);
  }
  double s = seconds_since(start);
  v.require(s < 30.0, "suite took " + fmt_seconds(s));
  if (v.pass) v.detail = std::to_string(kCases) + " cases, " + fmt_seconds(s);
  return v;
}

Verdict ac7_saturation_properties() {
  Verdict v;
  std::mt19937_64 rng(kSeed);
  auto rules = feo::infer::feo_ruleset();
  for (int i = 0; i < kRandomGraphs; ++i) {
    auto g = feo::testing::random_feo_graph(rng, 50);
    auto once = feo::infer::saturate(g, rules).graph;
    for (const auto& t : g.triples())
      v.require(once.contains(t), "graph " + std::to_string(i) + " lost an input triple");
    once.freeze();
    auto twice = feo::infer::saturate(once, rules);
    v.require(twice.trace.empty() && twice.graph == once, "graph " + std::to_string(i) + " is not a fixpoint");
  }
  if (v.pass) v.detail = std::to_string(kRandomGraphs) + " graphs monotone and idempotent";
  return v;
}

Verdict ac8_round_trip() {
  Verdict v;
  auto check = [&](const feo::rdf::Graph& g, const std::string& what) {
    auto once = feo::turtle::parse_turtle(feo::turtle::serialize_ntriples(g));
    auto twice = feo::turtle::parse_turtle(feo::turtle::serialize_ntriples(once));
    v.require(once == g && twice == once, what + " does not round-trip");
  };
  check(feo::turtle::parse_turtle(slurp(kAssets / "schema.ttl")), "schema.ttl");
  check(feo::turtle::parse_turtle(slurp(kAssets / "demo.ttl")), "demo.ttl");
  std::mt19937_64 rng(0xAC8);
  for (int i = 0; i < 100; ++i) check(feo::testing::random_literal_graph(rng, 40), "random graph " + std::to_string(i));
  if (v.pass) v.detail = "schema, demo and 100 random graphs";
  return v;
}

Verdict ac9_determinism() {
  Verdict v;
  std::vector<std::pair<std::string, std::string>> commands = {
      {"infer", "infer " + asset("schema.ttl") + " " + asset("demo.ttl")}};
  for (const std::string name : {"contextual", "contrastive", "counterfactual"})
    commands.emplace_back(name, "query --data " + asset("schema.ttl") + " " + asset("demo.ttl") + " " +
                                    asset("queries/" + name + ".rq"));
  for (const auto& [name, args] : commands) {
    std::string contents[2];
    for (int k = 0; k < 2; ++k) {
      fs::path file = g_scratch / (name + "." + std::to_string(k));
      Run r = feo_cli(args + " --out '" + file.string() + "'");
      v.require(r.exit_code == 0, name + ": exit code " + std::to_string(r.exit_code));
      contents[k] = slurp(file);
    }
    v.require(!contents[0].empty() && contents[0] == contents[1], name + ": outputs differ");
  }
  if (v.pass) v.detail = "infer and 3 queries byte-identical";
  return v;
}

}  // namespace

int main() {
  g_scratch = fs::temp_directory_path() / ("feo_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(g_scratch);

  struct Criterion {
    std::string id;
    std::string title;
    std::function<Verdict()> check;
  };
  const auto& v = feo::vocab::terms();
  std::vector<Criterion> criteria = {
      {"AC1", "contextual competency question",
       [&] { return canonical_query("contextual", {"characteristic", "classes"}, {{F("Autumn"), v.season_characteristic}}); }},
      {"AC2", "contrastive competency question",
       [&] {
         return canonical_query("contrastive", {"factType", "factA", "foilType", "foilB"},
                                {{v.season_characteristic, F("Autumn"), v.allergic_food_characteristic, F("Broccoli")}});
       }},
      {"AC3", "counterfactual competency question",
       [&] {
         return canonical_query("counterfactual", {"property", "baseFood", "inheritedFood"},
                                {{v.recommends, F("Spinach"), F("SpinachFrittata")},
                                 {v.forbids, F("Sushi"), std::nullopt}});
       }},
      {"AC4", "rendered explanation phrases", ac4_rendered_text},
      {"AC5", "reasoner equals naive fixpoint", ac5_reasoner_oracle},
      {"AC6", "query engine equals brute-force enumeration", ac6_query_oracle},
      {"AC7", "saturation is monotone and idempotent", ac7_saturation_properties},
      {"AC8", "parse/serialize round trip", ac8_round_trip},
      {"AC9", "byte-identical repeated runs", ac9_determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Verdict verdict;
    try {
      verdict = c.check();
    } catch (const std::exception& e) {
      verdict = {false, std::string("exception: ") + e.what()};
    }
    failures += verdict.pass ? 0 : 1;
    std::cout << (verdict.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << ": " << verdict.detail
              << "\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  fs::remove_all(g_scratch);
  return failures == 0 ? 0 : 1;
}
