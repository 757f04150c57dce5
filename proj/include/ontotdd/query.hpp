#pragma once

// Schema-level query atoms with one ?x variable, answered by candidate
// enumeration over the ontology vocabulary plus entailment checks. This is
// the engine behind every TBox-strategy test procedure.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ontotdd/model.hpp"
#include "ontotdd/reasoner.hpp"

namespace ontotdd {

enum class QueryForm {
  SubClassOf,
  EquivalentClasses,
  DisjointClasses,
  ComplementOf,
  ObjectPropertyDomain,
  ObjectPropertyRange,
  SubObjectPropertyOf,
  SubPropertyChainOf,
  EquivalentObjectProperties,
  InverseObjectProperties,
  Type,
  PropertyAssertion,
};

const char* to_string(QueryForm f);

// One argument slot: the query variable, or a fixed value of the sort the
// slot expects. The slot's sort is determined by the atom form and position.
struct QueryArg {
  ClassPtr cls;                            // class slot value
  std::optional<PropertyExpression> prop;  // property slot value
  std::optional<Iri> ind;                  // individual slot value

  bool is_variable() const { return !cls && !prop && !ind; }

  static QueryArg variable() { return {}; }
  static QueryArg of(ClassPtr c) {
    QueryArg a;
    a.cls = std::move(c);
    return a;
  }
  static QueryArg of(PropertyExpression p) {
    QueryArg a;
    a.prop = std::move(p);
    return a;
  }
  static QueryArg of(Iri individual) {
    QueryArg a;
    a.ind = std::move(individual);
    return a;
  }
};

struct QueryAtom {
  QueryForm form = QueryForm::SubClassOf;
  // SubPropertyChainOf only: the fixed chain on the sub side; args then
  // holds just the super-property slot.
  std::vector<PropertyExpression> chain;
  std::vector<QueryArg> args;

  // Index of the unique variable slot; throws OntologyError if malformed.
  int variable_slot() const;
};

// Parses "SubClassOf(?x :D)" style text against the context prefix table.
// Accepts the atom heads SubClassOf, EquivalentClasses, DisjointClasses,
// ObjectComplementOf, ObjectPropertyDomain, ObjectPropertyRange,
// SubObjectPropertyOf (chain or plain sub side), EquivalentObjectProperties,
// InverseObjectProperties, Type, PropertyValue, ObjectPropertyAssertion.
QueryAtom parse_query_atom(const std::string& text, const Ontology& context);

std::string to_string(const QueryAtom& q, const Ontology& context);

// The ground axiom q[?x := binding].
Axiom instantiate(const QueryAtom& q, const Iri& binding);

// alpha = { n in the matching vocabulary : o |= q[?x := n] }. Class slots
// never bind owl:Thing / owl:Nothing, and tautological self answers are
// suppressed (a class is not its own subclass / equivalent answer, a
// property not its own sub / equivalent answer; a property may still be its
// own inverse). Throws InconsistentOntologyError instead of answering over
// an inconsistent ontology.
std::set<Iri> eval(Reasoner& r, const QueryAtom& q);
std::set<Iri> eval(const Ontology& o, const QueryAtom& q);

}  // namespace ontotdd
