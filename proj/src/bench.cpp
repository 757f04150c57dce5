#include "ontotdd/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace ontotdd {

namespace {

const char* kBenchNs = "http://example.org/bench#";

Iri bench_iri(const std::string& local) { return Iri(kBenchNs + local); }

void check_buckets(const std::vector<std::size_t>& bounds) {
  if (bounds.empty()) throw OntologyError("size_buckets must not be empty");
  for (std::size_t i = 1; i < bounds.size(); ++i)
    if (bounds[i] <= bounds[i - 1])
      throw OntologyError("size_buckets must be strictly increasing");
}

}  // namespace

std::string bucket_label(std::size_t axioms, const std::vector<std::size_t>& bounds) {
  check_buckets(bounds);
  if (axioms < bounds.front()) return "<" + std::to_string(bounds.front());
  for (std::size_t i = 1; i < bounds.size(); ++i)
    if (axioms < bounds[i])
      return std::to_string(bounds[i - 1]) + "-" + std::to_string(bounds[i]);
  return ">=" + std::to_string(bounds.back());
}

// The generator keeps itself consistent by construction:
//  - the class graph is a forest, so every class sits under exactly one top;
//  - disjointness is only stated across different tops;
//  - existential fillers and property ranges stay inside one designated
//    "filler" branch, and filler classes never get existentials of their own,
//    so successor labels never mix branches and expansion depth stays flat;
//  - symmetric properties carry no domain or range (a flipped edge would
//    push the subject into the range branch otherwise);
//  - asserted edges use fresh one-shot individual pairs, and typed
//    individuals carry exactly one class and no edges.
Ontology synthetic_ontology(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (n + 1)));
  auto pick = [&](std::size_t hi) { return std::uniform_int_distribution<std::size_t>(0, hi - 1)(rng); };
  auto chance = [&](int pct) { return static_cast<int>(pick(100)) < pct; };

  Ontology o;
  if (n < 12) n = 12;

  // class tree; branch 0 is the filler branch
  const std::size_t tops = 4 + pick(3);
  const std::size_t tree = std::max<std::size_t>(3, n * 48 / 100);
  const std::size_t nc = tops + tree;
  std::vector<Iri> cls;
  std::vector<std::size_t> top_of(nc);
  std::vector<std::vector<std::size_t>> kids(nc);
  for (std::size_t i = 0; i < nc; ++i) {
    cls.push_back(bench_iri("K" + std::to_string(i)));
    o.add_declaration(EntityKind::Class, cls[i]);
    if (i < tops) {
      top_of[i] = i;
      continue;
    }
    std::size_t parent = pick(i);
    top_of[i] = top_of[parent];
    kids[parent].push_back(i);
    o.add_axiom(Axiom{SubClassOfAxiom{ClassExpression::named(cls[i]),
                                      ClassExpression::named(cls[parent])}});
  }
  auto named = [&](std::size_t i) { return ClassExpression::named(cls[i]); };
  auto walk_down = [&](std::size_t c) {
    while (!kids[c].empty() && chance(60)) c = kids[c][pick(kids[c].size())];
    return c;
  };
  auto non_filler = [&] {
    std::size_t c;
    do c = pick(nc);
    while (top_of[c] == 0);
    return c;
  };

  // properties: edge props may get domain / range / a characteristic,
  // hierarchy props form a subproperty order and feed one chain layer
  const std::size_t np = std::clamp<std::size_t>(n / 60, 2, 14);
  const std::size_t n_edge = std::max<std::size_t>(1, np * 6 / 10);
  const std::size_t n_chain = np >= 5 ? np / 8 + 1 : 0;
  const std::size_t n_hier = np - n_edge - n_chain;
  std::vector<Iri> props;
  for (std::size_t i = 0; i < np; ++i) {
    props.push_back(bench_iri("r" + std::to_string(i)));
    o.add_declaration(EntityKind::ObjectProperty, props[i]);
  }
  auto prop = [&](std::size_t i) { return PropertyExpression::named(props[i]); };
  std::vector<std::optional<std::size_t>> domain_of(np), range_of(np);
  std::vector<std::size_t> edge_or_hier;
  for (std::size_t i = 0; i < n_edge; ++i) {
    edge_or_hier.push_back(i);
    if (chance(60)) {
      domain_of[i] = non_filler();
      o.add_axiom(Axiom{ObjectPropertyDomainAxiom{prop(i), named(*domain_of[i])}});
    }
    if (chance(60)) {
      range_of[i] = walk_down(0);
      o.add_axiom(Axiom{ObjectPropertyRangeAxiom{prop(i), named(*range_of[i])}});
    }
    int roll = static_cast<int>(pick(10));
    if (roll < 3)
      o.add_axiom(Axiom{CharacteristicAxiom{CharacteristicKind::Transitive, prop(i)}});
    else if (roll < 6)
      o.add_axiom(Axiom{CharacteristicAxiom{CharacteristicKind::Functional, prop(i)}});
  }
  for (std::size_t i = n_edge; i < n_edge + n_hier; ++i) {
    edge_or_hier.push_back(i);
    if (chance(30))
      o.add_axiom(Axiom{CharacteristicAxiom{CharacteristicKind::Symmetric, prop(i)}});
    if (i + 1 < n_edge + n_hier && chance(50))
      o.add_axiom(Axiom{SubObjectPropertyOfAxiom{
          prop(i), prop(n_edge + n_hier - 1 - pick(n_edge + n_hier - 1 - i))}});
  }
  for (std::size_t i = n_edge + n_hier; i < np; ++i) {
    std::size_t a = n_edge + pick(n_hier), b = n_edge + pick(n_hier);
    o.add_axiom(Axiom{SubPropertyChainOfAxiom{{prop(a), prop(b)}, prop(i)}});
  }

  // cross-branch disjointness
  {
    std::size_t want = n * 2 / 100, made = 0, tries = 0;
    while (made < want && tries++ < want * 20 + 40) {
      std::size_t a = pick(nc), b = pick(nc);
      if (top_of[a] == top_of[b]) continue;
      if (o.add_axiom(Axiom{DisjointClassesAxiom{named(a), named(b)}})) ++made;
    }
  }

  // existential edges along the tree; fillers always land in branch 0
  {
    std::size_t want = n * 18 / 100, made = 0, tries = 0;
    while (made < want && tries++ < want * 20 + 40) {
      std::size_t p = edge_or_hier[pick(edge_or_hier.size())];
      std::size_t lhs = domain_of[p] ? walk_down(*domain_of[p]) : non_filler();
      std::size_t filler = walk_down(range_of[p] ? *range_of[p] : 0);
      if (o.add_axiom(Axiom{SubClassOfAxiom{
              named(lhs), ClassExpression::some_values_from(prop(p), named(filler))}}))
        ++made;
    }
  }

  // ABox: typed individuals, one-shot edges, distinctness
  std::vector<Iri> typed;
  auto add_typed = [&] {
    Iri ind = bench_iri("i" + std::to_string(typed.size()));
    o.add_declaration(EntityKind::NamedIndividual, ind);
    o.add_axiom(Axiom{ClassAssertionAxiom{named(pick(nc)), ind}});
    typed.push_back(ind);
  };
  for (std::size_t k = 0; k < n * 16 / 100; ++k) add_typed();
  for (std::size_t k = 0; k < n * 8 / 100; ++k) {
    Iri u = bench_iri("e" + std::to_string(k) + "a");
    Iri v = bench_iri("e" + std::to_string(k) + "b");
    o.add_declaration(EntityKind::NamedIndividual, u);
    o.add_declaration(EntityKind::NamedIndividual, v);
    o.add_axiom(Axiom{ObjectPropertyAssertionAxiom{
        prop(edge_or_hier[pick(edge_or_hier.size())]), u, v}});
  }
  if (typed.size() >= 2) {
    std::size_t want = n * 2 / 100, made = 0, tries = 0;
    while (made < want && tries++ < want * 20 + 40) {
      std::size_t a = pick(typed.size()), b = pick(typed.size());
      if (a == b) continue;
      if (o.add_axiom(Axiom{DifferentIndividualsAxiom{typed[a], typed[b]}})) ++made;
    }
  }

  while (o.axioms().size() < n) add_typed();
  return o;
}

std::vector<BenchInput> synthetic_corpus(const BenchConfig& cfg) {
  check_buckets(cfg.size_buckets);
  const auto& b = cfg.size_buckets;
  std::vector<std::size_t> sizes;
  auto two_in = [&](std::size_t lo, std::size_t hi) {
    sizes.push_back(lo + (hi - lo) / 3);
    sizes.push_back(lo + (hi - lo) * 2 / 3);
  };
  two_in(std::min<std::size_t>(12, b[0]), b[0]);
  for (std::size_t i = 1; i < b.size(); ++i) two_in(b[i - 1], b[i]);
  two_in(b.back(), b.back() * 3 / 2);
  std::vector<BenchInput> corpus;
  for (std::size_t s : sizes)
    corpus.push_back({"synthetic-" + std::to_string(s), synthetic_ontology(s, cfg.seed)});
  return corpus;
}

namespace {

std::vector<BenchRecord> bench_one(const BenchInput& in, const BenchConfig& cfg) {
  std::vector<BenchRecord> out;
  Ontology o = in.onto;  // private copy; probes mutate and restore
  const std::string bucket = bucket_label(o.axioms().size(), cfg.size_buckets);
  std::vector<TddTest> tests;
  try {
    tests = generate_random_tests(o, cfg.tests_per_ontology, cfg.seed);
  } catch (const OntologyError&) {
    return out;  // not enough vocabulary to draw targets; contributes nothing
  }
  for (const auto& t : tests) {
    auto tb = test_id_for(t.target, Strategy::Tbox);
    auto ab = test_id_for(t.target, Strategy::Abox);
    bool dual = tb && ab;
    for (auto id : {tb, ab}) {
      if (!id) continue;
      for (int rep = 0; rep < cfg.repetitions; ++rep) {
        ReasonerLimits limits = cfg.limits;
        if (cfg.timeout.count() != 0)  // negative counts as already expired
          limits.deadline = std::chrono::steady_clock::now() + cfg.timeout;
        TestVerdict v = run_test(o, make_test(*id, t.target), limits);
        BenchRecord rec;
        rec.ontology = in.id;
        rec.axioms = o.axioms().size();
        rec.bucket = bucket;
        rec.test = *id;
        rec.strategy = strategy_of(*id);
        rec.repetition = rep;
        rec.classification_time = v.classification_time;
        rec.test_time = v.test_time;
        rec.elapsed = v.elapsed;
        rec.verdict = v.value;
        rec.dual = dual;
        out.push_back(std::move(rec));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<BenchRecord> run_bench(const std::vector<BenchInput>& corpus,
                                   const BenchConfig& cfg) {
  check_buckets(cfg.size_buckets);
  if (cfg.repetitions < 1) throw OntologyError("repetitions must be at least 1");
  std::vector<std::vector<BenchRecord>> per_input(corpus.size());
  const int workers = std::max(1, std::min<int>(cfg.parallel, static_cast<int>(corpus.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) per_input[i] = bench_one(corpus[i], cfg);
  } else {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next.fetch_add(1); i < corpus.size(); i = next.fetch_add(1))
        per_input[i] = bench_one(corpus[i], cfg);
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  std::vector<BenchRecord> out;
  for (auto& part : per_input)
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  return out;
}

static const char* kCsvHeader =
    "ontology,axioms,bucket,test,strategy,repetition,classification_ns,test_ns,elapsed_ns,"
    "verdict,dual";

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (const auto& r : records) {
    out << r.ontology << ',' << r.axioms << ',' << r.bucket << ',' << to_string(r.test) << ','
        << to_string(r.strategy) << ',' << r.repetition << ',' << r.classification_time.count()
        << ',' << r.test_time.count() << ',' << r.elapsed.count() << ',' << to_string(r.verdict)
        << ',' << (r.dual ? 1 : 0) << "\n";
  }
  return out.str();
}

std::vector<BenchRecord> parse_bench_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw OntologyError("unrecognized bench csv header");
  std::vector<BenchRecord> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i)
      if (i == line.size() || line[i] == ',') {
        f.push_back(line.substr(start, i - start));
        start = i + 1;
      }
    if (f.size() != 11)
      throw OntologyError("bench csv line " + std::to_string(lineno) + ": want 11 fields");
    BenchRecord r;
    r.ontology = f[0];
    r.axioms = std::stoull(f[1]);
    r.bucket = f[2];
    r.test = test_id_from_name(f[3]);
    r.strategy = f[4] == "tbox" ? Strategy::Tbox : Strategy::Abox;
    r.repetition = std::stoi(f[5]);
    r.classification_time = std::chrono::nanoseconds(std::stoll(f[6]));
    r.test_time = std::chrono::nanoseconds(std::stoll(f[7]));
    r.elapsed = std::chrono::nanoseconds(std::stoll(f[8]));
    bool known = false;
    for (auto v : {VerdictValue::True, VerdictValue::False, VerdictValue::MissingVocabulary,
                   VerdictValue::InconsistentOntology, VerdictValue::EngineError})
      if (f[9] == to_string(v)) {
        r.verdict = v;
        known = true;
      }
    if (!known)
      throw OntologyError("bench csv line " + std::to_string(lineno) + ": bad verdict " + f[9]);
    r.dual = f[10] != "0";
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

// quartile with linear interpolation on the sorted sample
double quantile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) return 0.0;
  double pos = p * static_cast<double>(sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(pos);
  double frac = pos - static_cast<double>(lo);
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

nlohmann::json stats_block(std::vector<double> elapsed, std::vector<double> shares) {
  std::sort(elapsed.begin(), elapsed.end());
  double q1 = quantile(elapsed, 0.25), med = quantile(elapsed, 0.5), q3 = quantile(elapsed, 0.75);
  double iqr = q3 - q1;
  std::size_t outliers = 0;
  for (double x : elapsed)
    if (x < q1 - 1.5 * iqr || x > q3 + 1.5 * iqr) ++outliers;
  nlohmann::json j;
  j["count"] = elapsed.size();
  j["median_elapsed_ns"] = med;
  j["q1_elapsed_ns"] = q1;
  j["q3_elapsed_ns"] = q3;
  j["iqr_outliers"] = outliers;
  std::sort(shares.begin(), shares.end());
  if (shares.empty())
    j["median_classification_share"] = nullptr;
  else
    j["median_classification_share"] = quantile(shares, 0.5);
  return j;
}

}  // namespace

std::string bench_summary_json(const std::vector<BenchRecord>& records) {
  // buckets keep first-appearance order (ascending sizes for the synthetic corpus)
  std::vector<std::string> order;
  std::map<std::string, std::vector<const BenchRecord*>> by_bucket;
  for (const auto& r : records) {
    auto [it, fresh] = by_bucket.try_emplace(r.bucket);
    if (fresh) order.push_back(r.bucket);
    it->second.push_back(&r);
  }

  nlohmann::json root;
  root["schema"] = 1;
  root["records"] = records.size();
  root["buckets"] = nlohmann::json::array();
  bool h1_all = true, h2_all = true;
  bool h1_any = false, h2_any = false;

  for (const auto& bucket : order) {
    nlohmann::json jb;
    jb["bucket"] = bucket;
    std::vector<double> elapsed[2], shares[2], dual_elapsed[2];
    for (const BenchRecord* r : by_bucket[bucket]) {
      int s = r->strategy == Strategy::Tbox ? 0 : 1;
      double e = static_cast<double>(r->elapsed.count());
      elapsed[s].push_back(e);
      if (r->elapsed.count() > 0)
        shares[s].push_back(static_cast<double>(r->classification_time.count()) / e);
      if (r->dual) dual_elapsed[s].push_back(e);
    }
    jb["tbox"] = elapsed[0].empty() ? nlohmann::json(nullptr) : stats_block(elapsed[0], shares[0]);
    jb["abox"] = elapsed[1].empty() ? nlohmann::json(nullptr) : stats_block(elapsed[1], shares[1]);

    nlohmann::json h1;
    if (dual_elapsed[0].empty() || dual_elapsed[1].empty()) {
      h1["tbox_median_ns"] = nullptr;
      h1["abox_median_ns"] = nullptr;
      h1["holds"] = nullptr;
    } else {
      std::sort(dual_elapsed[0].begin(), dual_elapsed[0].end());
      std::sort(dual_elapsed[1].begin(), dual_elapsed[1].end());
      double mt = quantile(dual_elapsed[0], 0.5), ma = quantile(dual_elapsed[1], 0.5);
      h1["tbox_median_ns"] = mt;
      h1["abox_median_ns"] = ma;
      h1["holds"] = mt <= ma;
      h1_any = true;
      h1_all = h1_all && mt <= ma;
    }
    jb["h1"] = h1;

    nlohmann::json h2;
    if (shares[1].empty()) {
      h2["abox_median_classification_share"] = nullptr;
      h2["holds"] = nullptr;
    } else {
      std::sort(shares[1].begin(), shares[1].end());
      double ms = quantile(shares[1], 0.5);
      h2["abox_median_classification_share"] = ms;
      h2["holds"] = ms > 0.5;
      h2_any = true;
      h2_all = h2_all && ms > 0.5;
    }
    jb["h2"] = h2;
    root["buckets"].push_back(std::move(jb));
  }

  root["h1_overall"] = h1_any ? nlohmann::json(h1_all) : nlohmann::json(nullptr);
  root["h2_overall"] = h2_any ? nlohmann::json(h2_all) : nlohmann::json(nullptr);
  return root.dump(2) + "\n";
}

}  // namespace ontotdd
