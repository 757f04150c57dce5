// Command-line front end: parse/classify/query for one-off inspection, the
// suite runner and TDD cycle for authoring, and the benchmark harness.
// Exit codes: 0 success, 1 domain failure (unmet expectation, failed cycle,
// inconsistent ontology, regression failure), 2 input problems (unreadable
// files, syntax errors, bad configuration).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <ontotdd/bench.hpp>
#include <ontotdd/model.hpp>
#include <ontotdd/parser.hpp>
#include <ontotdd/query.hpp>
#include <ontotdd/reasoner.hpp>
#include <ontotdd/tdd.hpp>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ontotdd;

namespace {

bool log_on() {
  static const bool on = [] {
    const char* v = std::getenv("ONTO_TDD_LOG");
    return v && *v && std::strcmp(v, "0") != 0;
  }();
  return on;
}

void trace(const std::string& msg) {
  if (log_on()) std::cerr << "[ontotdd] " << msg << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

// Per-run limits; a nonzero timeout becomes a fresh deadline each call.
ReasonerLimits budget(long long timeout_ms) {
  ReasonerLimits limits;
  if (timeout_ms != 0)
    limits.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
  return limits;
}

double ms(std::chrono::nanoseconds d) { return static_cast<double>(d.count()) / 1e6; }

json verdict_json(const TestVerdict& v, const Ontology& o) {
  json missing = json::array();
  for (const auto& m : v.missing) missing.push_back(serialize_iri(m, o));
  return json{{"value", to_string(v.value)},
              {"missing", missing},
              {"message", v.message},
              {"warnings", v.warnings},
              {"classification_ns", v.classification_time.count()},
              {"test_ns", v.test_time.count()},
              {"elapsed_ns", v.elapsed.count()}};
}

Strategy other(Strategy s) { return s == Strategy::Tbox ? Strategy::Abox : Strategy::Tbox; }

// A suite line resolved to concrete runs. A line with no directive follows
// the flag; "both" fans out to every variant the family has; a family that
// lacks the requested strategy falls back to the other one (noted).
struct ResolvedRun {
  int line = 0;
  TddTest test;
  bool expect_pass = true;
  bool fallback = false;
};

std::vector<ResolvedRun> resolve_suite(const std::vector<SuiteEntry>& entries,
                                       const std::string& flag) {
  std::vector<ResolvedRun> runs;
  for (const auto& e : entries) {
    std::vector<Strategy> wanted;
    if (e.strategy)
      wanted.push_back(*e.strategy);
    else if (flag == "both")
      wanted = {Strategy::Tbox, Strategy::Abox};
    else
      wanted.push_back(flag == "abox" ? Strategy::Abox : Strategy::Tbox);

    std::set<TestId> seen;
    for (Strategy s : wanted) {
      auto id = test_id_for(e.target, s);
      bool fell_back = false;
      if (!id && wanted.size() == 1) {
        id = test_id_for(e.target, other(s));
        fell_back = true;
      }
      if (!id || seen.count(*id)) continue;
      seen.insert(*id);
      runs.push_back({e.line, make_test(*id, e.target), e.expect_pass, fell_back});
    }
  }
  return runs;
}

// --- parse ---

int cmd_parse(const std::string& path, const std::string& out) {
  Ontology o = parse_document(read_file(path));
  std::string canon = serialize(o);
  if (out.empty())
    std::cout << canon;
  else
    write_file(out, canon);
  trace("parsed " + path + ": " + std::to_string(o.axioms().size()) + " axioms");
  return 0;
}

// --- classify ---

int cmd_classify(const std::string& path, const std::string& out, long long timeout_ms) {
  Ontology o = parse_document(read_file(path));
  Reasoner r(o, budget(timeout_ms));
  ConsistencyVerdict cv = r.consistency_verdict();

  json report{{"schema", 1}, {"ontology", path}, {"consistent", cv.consistent}};
  report["clash"] = cv.clash_witness ? json(*cv.clash_witness) : json(nullptr);

  if (!cv.consistent) {
    if (!out.empty()) write_file(out, report.dump(2) + "\n");
    std::cout << "inconsistent: " << *cv.clash_witness << "\n";
    return 1;
  }

  ClassHierarchy h = r.classify();
  std::set<Iri> unsat = r.unsatisfiable_classes();

  json junsat = json::array();
  for (const auto& c : unsat) junsat.push_back(serialize_iri(c, o));
  report["unsatisfiable"] = junsat;
  json jclasses = json::object();
  for (const auto& [name, ci] : h) {
    json eq = json::array(), sup = json::array();
    for (const auto& e : ci.equivalents) eq.push_back(serialize_iri(e, o));
    for (const auto& s : ci.direct_supers) sup.push_back(serialize_iri(s, o));
    jclasses[serialize_iri(name, o)] = json{{"equivalents", eq}, {"direct_supers", sup}};
  }
  report["classes"] = jclasses;
  if (!out.empty()) write_file(out, report.dump(2) + "\n");

  if (unsat.empty()) {
    std::cout << "unsatisfiable: none\n";
  } else {
    std::cout << "unsatisfiable:";
    for (const auto& c : unsat) std::cout << " " << serialize_iri(c, o);
    std::cout << "\n";
  }

  // collapse equivalence groups to one representative, then print the
  // hierarchy as an indented tree under owl:Thing
  std::map<Iri, Iri> rep;
  for (const auto& [name, ci] : h) {
    Iri r0 = name;
    for (const auto& e : ci.equivalents) r0 = std::min(r0, e);
    rep[name] = r0;
  }
  std::map<Iri, std::set<Iri>> children;
  for (const auto& [name, ci] : h) {
    if (rep[name] != name || name == nothing_iri() || unsat.count(name)) continue;
    for (const auto& s : ci.direct_supers) {
      auto it = rep.find(s);
      if (it != rep.end() && it->second != name) children[it->second].insert(name);
    }
  }
  struct Walk {
    const ClassHierarchy& h;
    const std::map<Iri, std::set<Iri>>& children;
    const Ontology& o;
    void print(const Iri& c, int depth) {
      if (depth > 200) return;  // defensive; the collapsed hierarchy is acyclic
      std::cout << std::string(static_cast<std::size_t>(depth) * 2, ' ') << serialize_iri(c, o);
      auto it = h.find(c);
      if (it != h.end() && !it->second.equivalents.empty()) {
        for (const auto& e : it->second.equivalents) std::cout << " = " << serialize_iri(e, o);
      }
      std::cout << "\n";
      auto ch = children.find(c);
      if (ch == children.end()) return;
      for (const auto& k : ch->second) print(k, depth + 1);
    }
  };
  Walk{h, children, o}.print(thing_iri(), 0);
  return 0;
}

// --- query ---

int cmd_query(const std::string& path, const std::string& atom_text, long long timeout_ms) {
  Ontology o = parse_document(read_file(path));
  QueryAtom q = parse_query_atom(atom_text, o);
  Reasoner r(o, budget(timeout_ms));
  std::set<Iri> bindings;
  try {
    bindings = eval(r, q);
  } catch (const InconsistentOntologyError&) {
    std::cerr << "inconsistent ontology: queries refused\n";
    return 1;
  }
  for (const auto& b : bindings) std::cout << serialize_iri(b, o) << "\n";
  return 0;
}

// --- test (suite runner) ---

int cmd_test(const std::string& onto_path, const std::string& suite_path,
             const std::string& strategy, const std::string& out, long long timeout_ms) {
  Ontology o = parse_document(read_file(onto_path));
  std::vector<SuiteEntry> entries = parse_suite(read_file(suite_path), o);
  std::vector<ResolvedRun> runs = resolve_suite(entries, strategy);
  trace("suite " + suite_path + ": " + std::to_string(entries.size()) + " lines, " +
        std::to_string(runs.size()) + " runs");

  json jentries = json::array();
  bool all_met = true;
  std::printf("%4s  %-9s  %-4s  %-22s  %-6s  %-6s  %9s\n", "line", "test", "mode", "verdict",
              "expect", "status", "ms");
  for (const auto& run : runs) {
    TestVerdict v = run_test(o, run.test, budget(timeout_ms));
    bool met = run.expect_pass ? v.value == VerdictValue::True : v.value == VerdictValue::False;
    all_met = all_met && met;
    std::printf("%4d  %-9s  %-4s  %-22s  %-6s  %-6s  %9.1f\n", run.line, to_string(run.test.id),
                to_string(strategy_of(run.test.id)), to_string(v.value),
                run.expect_pass ? "pass" : "fail", met ? "ok" : "FAIL", ms(v.elapsed));
    if (!met && !v.message.empty()) std::printf("      %s\n", v.message.c_str());

    json je{{"line", run.line},
            {"test", to_string(run.test.id)},
            {"strategy", to_string(strategy_of(run.test.id))},
            {"target", serialize(run.test.target, o)},
            {"expect", run.expect_pass ? "pass" : "fail"},
            {"met", met},
            {"fallback", run.fallback},
            {"verdict", verdict_json(v, o)}};
    jentries.push_back(std::move(je));
  }
  std::size_t unmet = 0;
  for (const auto& je : jentries)
    if (!je["met"].get<bool>()) ++unmet;
  std::printf("%zu run(s), %zu unmet\n", jentries.size(), unmet);

  if (!out.empty()) {
    json report{{"schema", 1},
                {"ontology", onto_path},
                {"suite", suite_path},
                {"all_met", all_met},
                {"entries", jentries}};
    write_file(out, report.dump(2) + "\n");
  }
  return all_met ? 0 : 1;
}

// --- cycle ---

int cmd_cycle(const std::string& onto_path, const std::string& axiom_text,
              const std::string& strategy, const std::string& suite_path, bool write,
              bool create_missing, const std::string& out, long long timeout_ms) {
  Ontology o = parse_document(read_file(onto_path));
  Axiom target = parse_axiom(axiom_text, o);

  Strategy want = strategy == "abox" ? Strategy::Abox : Strategy::Tbox;
  auto id = test_id_for(target, want);
  if (!id) id = test_id_for(target, other(want));
  if (!id) throw OntologyError("no test procedure covers this axiom form");
  TddTest test = make_test(*id, target);

  // regression means "previously passing tests still pass"; expect-fail
  // suite lines are not part of that contract
  std::vector<TddTest> suite;
  if (!suite_path.empty())
    for (const auto& run : resolve_suite(parse_suite(read_file(suite_path), o), strategy))
      if (run.expect_pass) suite.push_back(run.test);

  CycleReport rep = run_cycle(o, test, create_missing ? VocabPolicy::Create : VocabPolicy::Report,
                              suite, budget(timeout_ms));

  auto vline = [](const TestVerdict& v) { return std::string(to_string(v.value)); };
  std::printf("1. vocabulary    ");
  if (rep.vocab_check.missing.empty()) {
    std::printf("complete\n");
  } else {
    std::printf("missing:");
    for (const auto& m : rep.vocab_check.missing) std::printf(" %s", serialize_iri(m, o).c_str());
    std::printf("%s\n", create_missing ? " (created)" : "");
  }
  std::printf("2. pre-test      %s (want false)%s\n", vline(rep.pre_verdict).c_str(),
              rep.already_entailed ? "  ALREADY ENTAILED" : "");
  std::printf("3. edit          %s\n",
              rep.axiom_added ? serialize(target, o).c_str() : "skipped");
  if (rep.post_consistency) {
    std::printf("4. consistency   %s\n", rep.post_consistency->consistent
                                             ? "consistent"
                                             : rep.post_consistency->clash_witness->c_str());
  } else {
    std::printf("4. consistency   skipped\n");
  }
  std::printf("5. unsatisfiable ");
  if (!rep.post_consistency) {
    std::printf("skipped\n");
  } else if (rep.new_unsatisfiable.empty()) {
    std::printf("none\n");
  } else {
    for (const auto& c : rep.new_unsatisfiable) std::printf(" %s", serialize_iri(c, o).c_str());
    std::printf("\n");
  }
  std::printf("6. post-test     %s\n",
              rep.post_verdict ? (vline(*rep.post_verdict) + " (want true)").c_str() : "skipped");
  std::size_t reg_fail = 0;
  for (const auto& [t, v] : rep.regression)
    if (v.value != VerdictValue::True) ++reg_fail;
  if (rep.regression.empty())
    std::printf("7. regression    (empty suite)\n");
  else
    std::printf("7. regression    %zu/%zu true\n", rep.regression.size() - reg_fail,
                rep.regression.size());
  for (const auto& [t, v] : rep.regression)
    if (v.value != VerdictValue::True)
      std::printf("      %s %s -> %s\n", to_string(t.id), serialize(t.target, o).c_str(),
                  to_string(v.value));
  std::printf("8. outcome       %s\n", rep.success() ? "SUCCESS" : "FAILURE (rolled back)");
  for (const auto& n : rep.notes) std::printf("   note: %s\n", n.c_str());

  if (!out.empty()) {
    json jreg = json::array();
    for (const auto& [t, v] : rep.regression)
      jreg.push_back(json{{"test", to_string(t.id)},
                          {"target", serialize(t.target, o)},
                          {"verdict", verdict_json(v, o)}});
    json junsat = json::array();
    for (const auto& c : rep.new_unsatisfiable) junsat.push_back(serialize_iri(c, o));
    json j{{"schema", 1},
           {"ontology", onto_path},
           {"test", to_string(test.id)},
           {"target", serialize(target, o)},
           {"vocab_check", verdict_json(rep.vocab_check, o)},
           {"pre_verdict", verdict_json(rep.pre_verdict, o)},
           {"already_entailed", rep.already_entailed},
           {"axiom_added", rep.axiom_added},
           {"post_verdict", rep.post_verdict ? verdict_json(*rep.post_verdict, o) : json(nullptr)},
           {"post_consistent",
            rep.post_consistency ? json(rep.post_consistency->consistent) : json(nullptr)},
           {"new_unsatisfiable", junsat},
           {"regression", jreg},
           {"notes", rep.notes},
           {"success", rep.success()}};
    write_file(out, j.dump(2) + "\n");
  }

  if (!rep.success()) return 1;
  if (write) {
    write_file(onto_path, serialize(o));
    trace("wrote " + onto_path);
  }
  return 0;
}

// --- regress ---

int cmd_regress(const std::string& onto_path, const std::string& suite_path,
                const std::string& strategy, const std::string& out, long long timeout_ms) {
  Ontology o = parse_document(read_file(onto_path));
  std::vector<ResolvedRun> runs = resolve_suite(parse_suite(read_file(suite_path), o), strategy);
  std::vector<TddTest> suite;
  for (const auto& r : runs)
    if (r.expect_pass) suite.push_back(r.test);  // expect-fail lines are not regression material

  auto results = run_regression(o, suite, budget(timeout_ms));

  json jentries = json::array();
  std::size_t failures = 0;
  std::printf("%-9s  %-4s  %-22s  %9s  target\n", "test", "mode", "verdict", "ms");
  for (const auto& [t, v] : results) {
    bool ok = v.value == VerdictValue::True;
    if (!ok) ++failures;
    std::printf("%-9s  %-4s  %-22s  %9.1f  %s\n", to_string(t.id),
                to_string(strategy_of(t.id)), to_string(v.value), ms(v.elapsed),
                serialize(t.target, o).c_str());
    jentries.push_back(json{{"test", to_string(t.id)},
                            {"target", serialize(t.target, o)},
                            {"verdict", verdict_json(v, o)},
                            {"ok", ok}});
  }
  std::printf("%zu test(s), %zu failure(s)\n", results.size(), failures);

  if (!out.empty()) {
    json report{{"schema", 1},
                {"ontology", onto_path},
                {"suite", suite_path},
                {"failures", failures},
                {"entries", jentries}};
    write_file(out, report.dump(2) + "\n");
  }
  return failures == 0 ? 0 : 1;
}

// --- bench ---

int cmd_bench(const std::string& corpus_dir, bool synthetic, const std::string& out_stem,
              BenchConfig cfg) {
  std::vector<BenchInput> corpus;
  if (synthetic) {
    corpus = synthetic_corpus(cfg);
  } else {
    if (corpus_dir.empty())
      throw std::runtime_error("bench needs a corpus directory or --synthetic");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(corpus_dir))
      if (e.is_regular_file() && e.path().extension() == ".ofn") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      try {
        corpus.push_back({f.stem().string(), parse_document(read_file(f.string()))});
      } catch (const std::exception& e) {
        std::cerr << "note: skipping " << f.string() << ": " << e.what() << "\n";
      }
    }
    if (corpus.empty())
      throw std::runtime_error("no parseable .ofn ontology in '" + corpus_dir + "'");
  }
  for (const auto& in : corpus)
    trace("corpus: " + in.id + " (" + std::to_string(in.onto.axioms().size()) + " axioms)");

  auto t0 = std::chrono::steady_clock::now();
  std::vector<BenchRecord> records = run_bench(corpus, cfg);
  auto wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  trace(std::to_string(records.size()) + " records in " + std::to_string(wall) + "s");

  std::string csv_path = out_stem + ".csv";
  std::string json_path = out_stem + ".json";
  std::string summary = bench_summary_json(records);
  write_file(csv_path, bench_csv(records));
  write_file(json_path, summary);

  json s = json::parse(summary);
  std::printf("%-12s  %5s  %12s  %5s  %12s  %-5s  %-5s\n", "bucket", "tbox", "median-ms", "abox",
              "median-ms", "h1", "h2");
  auto cell = [](const json& stats, const char* key) {
    return stats.is_null() ? std::string("-")
                           : std::to_string(stats[key].get<double>() / 1e6).substr(0, 8);
  };
  for (const auto& b : s["buckets"]) {
    const json& tb = b["tbox"];
    const json& ab = b["abox"];
    auto flag = [&](const char* h) {
      return b[h].is_null() || b[h]["holds"].is_null()
                 ? "-"
                 : (b[h]["holds"].get<bool>() ? "yes" : "no");
    };
    std::printf("%-12s  %5d  %12s  %5d  %12s  %-5s  %-5s\n",
                b["bucket"].get<std::string>().c_str(),
                tb.is_null() ? 0 : tb["count"].get<int>(),
                cell(tb, "median_elapsed_ns").c_str(),
                ab.is_null() ? 0 : ab["count"].get<int>(),
                cell(ab, "median_elapsed_ns").c_str(), flag("h1"), flag("h2"));
  }
  auto overall = [&](const char* key) {
    return s[key].is_null() ? "-" : (s[key].get<bool>() ? "true" : "false");
  };
  std::printf("H1 (schema queries no slower than probes, per bucket): %s\n", overall("h1_overall"));
  std::printf("H2 (classification dominates probe time): %s\n", overall("h2_overall"));
  std::printf("reports: %s, %s\n", csv_path.c_str(), json_path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Test-driven development for OWL ontologies"};
  app.require_subcommand(1);

  std::string onto_path, suite_path, atom_text, axiom_text, out_path, corpus_dir;
  std::string strategy = "tbox";
  long long timeout_ms = 0;
  bool write = false, create_missing = false, synthetic = false;
  std::string bench_out = "bench";
  BenchConfig bench_cfg;

  auto* sc_parse = app.add_subcommand("parse", "Parse an ontology and print its canonical form");
  sc_parse->add_option("ontology", onto_path, "ontology file (.ofn)")->required();
  sc_parse->add_option("--out", out_path, "write the canonical form here instead of stdout");

  auto* sc_classify =
      app.add_subcommand("classify", "Check consistency and print the class hierarchy");
  sc_classify->add_option("ontology", onto_path, "ontology file (.ofn)")->required();
  sc_classify->add_option("--out", out_path, "write a JSON report");
  sc_classify->add_option("--timeout", timeout_ms, "overall time budget in ms");

  auto* sc_query = app.add_subcommand("query", "Answer a one-variable query atom");
  sc_query->add_option("ontology", onto_path, "ontology file (.ofn)")->required();
  sc_query->add_option("atom", atom_text, "query atom, e.g. \"SubClassOf(?x :D)\"")->required();
  sc_query->add_option("--timeout", timeout_ms, "time budget in ms");

  auto* sc_test = app.add_subcommand("test", "Run a test suite against an ontology");
  sc_test->add_option("ontology", onto_path, "ontology file (.ofn)")->required();
  sc_test->add_option("suite", suite_path, "suite manifest (.suite)")->required();
  sc_test->add_option("--strategy", strategy, "tbox, abox, or both")
      ->check(CLI::IsMember({"tbox", "abox", "both"}));
  sc_test->add_option("--out", out_path, "write a JSON report");
  sc_test->add_option("--timeout", timeout_ms, "per-test time budget in ms");

  auto* sc_cycle = app.add_subcommand("cycle", "Run the TDD cycle for one target axiom");
  sc_cycle->add_option("ontology", onto_path, "ontology file (.ofn)")->required();
  sc_cycle->add_option("axiom", axiom_text, "target axiom text")->required();
  sc_cycle->add_option("--strategy", strategy, "tbox or abox")
      ->check(CLI::IsMember({"tbox", "abox"}));
  sc_cycle->add_option("--suite", suite_path, "regression suite to run inside the cycle");
  sc_cycle->add_flag("--write", write, "persist the ontology file on success");
  sc_cycle->add_flag("--create-missing", create_missing,
                     "declare missing vocabulary instead of reporting it");
  sc_cycle->add_option("--out", out_path, "write the cycle report as JSON");
  sc_cycle->add_option("--timeout", timeout_ms, "whole-cycle time budget in ms");

  auto* sc_regress = app.add_subcommand("regress", "Run a suite expecting every test true");
  sc_regress->add_option("ontology", onto_path, "ontology file (.ofn)")->required();
  sc_regress->add_option("suite", suite_path, "suite manifest (.suite)")->required();
  sc_regress->add_option("--strategy", strategy, "tbox, abox, or both")
      ->check(CLI::IsMember({"tbox", "abox", "both"}));
  sc_regress->add_option("--out", out_path, "write a JSON report");
  sc_regress->add_option("--timeout", timeout_ms, "per-test time budget in ms");

  auto* sc_bench = app.add_subcommand("bench", "Compare both strategies over a corpus");
  sc_bench->add_option("corpus", corpus_dir, "directory of .ofn ontologies");
  sc_bench->add_flag("--synthetic", synthetic, "generate the synthetic corpus instead");
  sc_bench->add_option("--out", bench_out, "report stem; writes <stem>.csv and <stem>.json");
  sc_bench->add_option("--seed", bench_cfg.seed, "generator seed");
  sc_bench->add_option("--reps", bench_cfg.repetitions, "repetitions per test");
  sc_bench->add_option("--tests", bench_cfg.tests_per_ontology, "targets drawn per ontology");
  sc_bench->add_option("--buckets", bench_cfg.size_buckets, "bucket boundaries")->delimiter(',');
  sc_bench->add_option("--parallel", bench_cfg.parallel, "ontologies run concurrently");
  sc_bench->add_option("--timeout", timeout_ms, "per-test time budget in ms");

  auto* sc_catalogue = app.add_subcommand("catalogue", "Print the test procedure table");
  sc_catalogue->add_option("--out", out_path, "write the table here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*sc_parse) return cmd_parse(onto_path, out_path);
    if (*sc_classify) return cmd_classify(onto_path, out_path, timeout_ms);
    if (*sc_query) return cmd_query(onto_path, atom_text, timeout_ms);
    if (*sc_test) return cmd_test(onto_path, suite_path, strategy, out_path, timeout_ms);
    if (*sc_cycle)
      return cmd_cycle(onto_path, axiom_text, strategy, suite_path, write, create_missing,
                       out_path, timeout_ms);
    if (*sc_regress) return cmd_regress(onto_path, suite_path, strategy, out_path, timeout_ms);
    if (*sc_bench) {
      bench_cfg.timeout = std::chrono::milliseconds(timeout_ms);
      return cmd_bench(corpus_dir, synthetic, bench_out, bench_cfg);
    }
    if (*sc_catalogue) {
      std::string table = test_catalogue_markdown();
      if (out_path.empty())
        std::cout << table;
      else
        write_file(out_path, table);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InconsistentOntologyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const OntologyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ReasonerError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
