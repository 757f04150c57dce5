#pragma once

// Tableau reasoner for the supported fragment: ALC plus role hierarchies,
// inverses, property chains, and the seven property characteristics.
// Completion graphs use pairwise ancestor blocking; chains are handled by
// edge composition during expansion. An instance binds to one ontology
// state; mutate the ontology, build a new reasoner.

#include <chrono>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ontotdd/model.hpp"

namespace ontotdd {

class ReasonerError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Node ceiling exceeded or deadline passed: an engine defect / resource
// failure, never a verdict.
class ReasonerLimitError : public ReasonerError {
public:
  using ReasonerError::ReasonerError;
};

// Entailment-style queries refuse to answer over an inconsistent ontology
// (everything is trivially entailed; the caller surfaces the inconsistency).
class InconsistentOntologyError : public ReasonerError {
public:
  using ReasonerError::ReasonerError;
};

struct ReasonerLimits {
  std::size_t max_nodes = 100000;
  std::size_t max_steps = 0;  // rule applications per run; 0 = unlimited
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct ConsistencyVerdict {
  bool consistent = true;
  // Human-readable clash trace; present exactly when consistent is false.
  std::optional<std::string> clash_witness;
};

struct ClassInfo {
  std::set<Iri> equivalents;     // other names of the same hierarchy node
  std::set<Iri> direct_supers;   // names in immediately superior nodes
};

// Keys: every named class plus owl:Thing and owl:Nothing. Unsatisfiable
// classes appear as equivalents of owl:Nothing.
using ClassHierarchy = std::map<Iri, ClassInfo>;

struct ReasonerTimings {
  std::chrono::nanoseconds consistency{0};  // consistency / classification work
  std::chrono::nanoseconds query{0};        // entailment, instance, probe work
};

// Shape of the most recent completion-graph run (oracle cross-checks use it).
struct RunInfo {
  std::size_t nodes = 0;        // peak node count, dead merge victims included
  std::size_t alive_nodes = 0;  // nodes in the final graph
  bool blocking_used = false;
};

class Reasoner {
public:
  explicit Reasoner(const Ontology& onto, ReasonerLimits limits = {});
  ~Reasoner();
  Reasoner(const Reasoner&) = delete;
  Reasoner& operator=(const Reasoner&) = delete;

  // Whole-ontology consistency. Memoized; repeated calls are free.
  bool check_consistency();

  // Same check plus the clash trace on the inconsistent side.
  ConsistencyVerdict consistency_verdict();

  // Satisfiability of a class expression w.r.t. TBox/RBox only.
  bool is_satisfiable(const ClassPtr& ce);

  // Refutation-based entailment for any supported axiom form.
  bool entails(const Axiom& ax);

  // O |= ce(individual). Unknown individuals are treated as fresh.
  bool is_instance(const Iri& individual, const ClassPtr& ce);

  std::set<Iri> instances_of(const ClassPtr& ce);

  // Entailed assertions p(s, o) for the given pattern; nullopt = enumerate
  // over named individuals.
  std::vector<std::pair<Iri, Iri>> entailed_property_assertions(
      const PropertyExpression& p, const std::optional<Iri>& subject,
      const std::optional<Iri>& object);

  ClassHierarchy classify();
  std::set<Iri> unsatisfiable_classes();

  // The ontology state this instance was built from (a private copy).
  const Ontology& ontology() const;

  const ReasonerTimings& timings() const;
  RunInfo last_run_info() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ontotdd
