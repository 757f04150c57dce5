#pragma once

// The test-driven-development layer: 37 test procedures over two strategies
// (TBox queries vs mock-individual probes), the mock-entity lifecycle, the
// 8-step authoring cycle, regression runs, and a seeded test generator.

#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ontotdd/model.hpp"
#include "ontotdd/reasoner.hpp"

namespace ontotdd {

// Unprimed ids are TBox-strategy procedures, primed (Tp_*) ones drive the
// ABox with mock individuals. Six property characteristics exist only in the
// ABox strategy; transitivity and local reflexivity have both.
enum class TestId {
  T_cs, Tp_cs,
  T_cd_c, T_cd_d, Tp_cd,
  T_ce, Tp_ce,
  T_eq, T_eq_nd, T_eq_nr, Tp_eq, Tp_eq_nd, Tp_eq_nr,
  T_uq, Tp_uq,
  T_da, Tp_da,
  T_ra, Tp_ra,
  T_ps, Tp_ps,
  T_pe, Tp_pe,
  T_pi, Tp_pi,
  T_pc, Tp_pc,
  Tp_p_f, Tp_p_if,
  T_p_t, Tp_p_t,
  Tp_p_s, Tp_p_a, Tp_p_rg,
  T_p_rl, Tp_p_rl,
  Tp_p_ir,
};

struct TestInfo {
  TestId id;
  const char* name;      // display form, e.g. "T'_cs"
  Strategy strategy;
  const char* family;    // e.g. "class subsumption"
  const char* pattern;   // target axiom shape
  const char* summary;   // one-line procedure description
};

// All 37 procedures in catalogue order.
const std::vector<TestInfo>& test_registry();
const TestInfo& info(TestId id);
Strategy strategy_of(TestId id);
const char* to_string(TestId id);
// Accepts the display form ("T'_cs"); throws OntologyError on unknown names.
TestId test_id_from_name(const std::string& name);

struct TddTest {
  TestId id = TestId::T_cs;
  Axiom target;
};

// Derives the procedure for a target axiom under the requested strategy;
// nullopt when the family has no variant in that strategy (the six ABox-only
// characteristics under TBox).
std::optional<TestId> test_id_for(const Axiom& target, Strategy s);

// Validating constructor: the target's shape must match the family.
TddTest make_test(TestId id, Axiom target);

enum class VerdictValue { True, False, MissingVocabulary, InconsistentOntology, EngineError };
const char* to_string(VerdictValue v);

struct TestVerdict {
  VerdictValue value = VerdictValue::False;
  std::vector<Iri> missing;            // names absent from the vocabulary
  std::string message;                 // engine error text, when any
  std::vector<std::string> warnings;   // advisories (e.g. non-sibling disjointness)
  std::chrono::nanoseconds classification_time{0};  // reasoner consistency work
  std::chrono::nanoseconds test_time{0};            // query / probe work
  std::chrono::nanoseconds elapsed{0};              // wall clock, includes bookkeeping
};

// Scaffolding for one test run: mints mock entities under urn:tdd:mock:,
// tracks mock axioms, and restores the pre-test state on teardown (also on
// unwind). After teardown the ontology carries no mock residue.
class MockLedger {
public:
  explicit MockLedger(Ontology& o);
  ~MockLedger();
  MockLedger(const MockLedger&) = delete;
  MockLedger& operator=(const MockLedger&) = delete;

  Iri mock_individual();
  Iri mock_class();
  // Adds as a mock-flagged axiom; returns false if already asserted (then
  // ownership stays with the ontology and teardown keeps it).
  bool add(const Axiom& ax);
  void teardown();

  const std::set<Iri>& mock_individuals() const { return individuals_; }
  const std::set<Iri>& mock_classes() const { return classes_; }
  const std::vector<Axiom>& mock_axioms() const { return axioms_; }

private:
  Iri mint(EntityKind kind, const char* tag);
  Ontology* o_;
  Snapshot base_;
  bool done_ = false;
  std::set<Iri> individuals_, classes_;
  std::vector<Axiom> axioms_;
};

// Runs one procedure against the current ontology state. ABox procedures
// mutate and restore in place; the state is byte-identical afterwards.
// An inconsistent base ontology yields the InconsistentOntology verdict for
// every procedure; resource limits surface as EngineError.
TestVerdict run_test(Ontology& o, const TddTest& t, const ReasonerLimits& limits = {});

enum class VocabPolicy { Report, Create };

struct CycleReport {
  TestVerdict vocab_check;   // True when the vocabulary is complete
  TestVerdict pre_verdict;   // expected False before the edit
  bool already_entailed = false;
  bool axiom_added = false;
  std::optional<TestVerdict> post_verdict;            // expected True after the edit
  std::optional<ConsistencyVerdict> post_consistency;
  std::set<Iri> new_unsatisfiable;                    // named classes broken by the edit
  std::vector<std::pair<TddTest, TestVerdict>> regression;
  std::vector<std::string> notes;

  bool success() const;
};

// The full authoring cycle: vocabulary precheck (policy Create declares the
// missing names), pre-test, axiom addition, consistency + new-unsatisfiable
// scan, post-test, regression over the given suite. On failure the edit is
// rolled back; on success the axiom (and any created declarations) stay.
CycleReport run_cycle(Ontology& o, const TddTest& t, VocabPolicy policy = VocabPolicy::Report,
                      const std::vector<TddTest>& suite = {}, const ReasonerLimits& limits = {});

// Runs every test against the current state, in order, restoring state after
// each. Entries with verdict != True are the regression failures.
std::vector<std::pair<TddTest, TestVerdict>> run_regression(Ontology& o,
                                                            const std::vector<TddTest>& suite,
                                                            const ReasonerLimits& limits = {});

// n target axioms drawn uniformly over the families instantiable from the
// ontology's own class/property vocabulary; deterministic per seed. Returned
// ids use the TBox variant where one exists. Throws OntologyError when no
// family is instantiable.
std::vector<TddTest> generate_random_tests(const Ontology& o, int n, std::uint64_t seed);

// Markdown table of the registry (the generated docs file guards drift).
std::string test_catalogue_markdown();

}  // namespace ontotdd
