#pragma once

// Benchmark harness: seeded synthetic ontologies at target sizes, paired
// strategy runs over generated targets, a CSV record stream, and a summary
// carrying box-plot statistics plus the two directional checks (H1: schema
// queries are no slower than mock probes per size bucket; H2: classification
// dominates mock-probe time).

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "ontotdd/model.hpp"
#include "ontotdd/reasoner.hpp"
#include "ontotdd/tdd.hpp"

namespace ontotdd {

struct BenchConfig {
  int repetitions = 3;
  // bucket boundaries by axiom count, strictly increasing
  std::vector<std::size_t> size_buckets = {100, 1000, 10000};
  std::uint64_t seed = 0;
  std::chrono::milliseconds timeout{0};  // per test run; 0 = none
  int tests_per_ontology = 12;           // random targets drawn per ontology
  int parallel = 1;                      // ontologies run concurrently on copies
  ReasonerLimits limits;
};

// One timed test run. `dual` marks runs whose target family exists in both
// strategies; the H1 comparison is restricted to those so the two medians
// describe the same workload.
struct BenchRecord {
  std::string ontology;  // corpus file stem or synthetic name
  std::size_t axioms = 0;
  std::string bucket;
  TestId test = TestId::T_cs;
  Strategy strategy = Strategy::Tbox;
  int repetition = 0;
  std::chrono::nanoseconds classification_time{0};
  std::chrono::nanoseconds test_time{0};
  std::chrono::nanoseconds elapsed{0};
  VerdictValue verdict = VerdictValue::False;
  bool dual = false;
};

struct BenchInput {
  std::string id;
  Ontology onto;
};

// Label for an axiom count under the given boundaries, e.g. "<100",
// "100-1000", ">=10000" for {100, 1000, 10000}.
std::string bucket_label(std::size_t axioms, const std::vector<std::size_t>& bounds);

// Deterministic, consistent-by-construction ontology of roughly `axioms`
// logical axioms: a class tree with disjoint top branches, a designated
// filler branch that existential successors land in, properties with
// domains, ranges, characteristics, hierarchies and one chain layer, plus
// an ABox of typed individuals and one-shot property edges.
Ontology synthetic_ontology(std::size_t axioms, std::uint64_t seed);

// Two sizes per bucket of cfg.size_buckets, seeded from cfg.seed.
std::vector<BenchInput> synthetic_corpus(const BenchConfig& cfg);

// Draws cfg.tests_per_ontology targets per input (generate_random_tests with
// cfg.seed), then runs every strategy variant of each target
// cfg.repetitions times. Inputs run in order; with cfg.parallel > 1 they run
// concurrently on private copies, and the record order stays the same.
std::vector<BenchRecord> run_bench(const std::vector<BenchInput>& corpus,
                                   const BenchConfig& cfg);

std::string bench_csv(const std::vector<BenchRecord>& records);
std::vector<BenchRecord> parse_bench_csv(const std::string& text);

// Summary JSON (schema 1): per bucket and strategy the count, median,
// quartiles and IQR-outlier count over elapsed time plus the median
// classification share, and per bucket the H1/H2 verdicts.
std::string bench_summary_json(const std::vector<BenchRecord>& records);

}  // namespace ontotdd
