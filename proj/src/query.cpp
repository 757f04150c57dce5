#include "ontotdd/query.hpp"

#include <algorithm>

#include "ontotdd/parser.hpp"

namespace ontotdd {

const char* to_string(QueryForm f) {
  switch (f) {
    case QueryForm::SubClassOf: return "SubClassOf";
    case QueryForm::EquivalentClasses: return "EquivalentClasses";
    case QueryForm::DisjointClasses: return "DisjointClasses";
    case QueryForm::ComplementOf: return "ObjectComplementOf";
    case QueryForm::ObjectPropertyDomain: return "ObjectPropertyDomain";
    case QueryForm::ObjectPropertyRange: return "ObjectPropertyRange";
    case QueryForm::SubObjectPropertyOf: return "SubObjectPropertyOf";
    case QueryForm::SubPropertyChainOf: return "SubObjectPropertyOf";  // printed with a chain arg
    case QueryForm::EquivalentObjectProperties: return "EquivalentObjectProperties";
    case QueryForm::InverseObjectProperties: return "InverseObjectProperties";
    case QueryForm::Type: return "Type";
    case QueryForm::PropertyAssertion: return "PropertyValue";
  }
  return "?";
}

int QueryAtom::variable_slot() const {
  int found = -1;
  for (int i = 0; i < static_cast<int>(args.size()); ++i) {
    if (!args[i].is_variable()) continue;
    if (found >= 0) throw OntologyError("query atom has more than one variable slot");
    found = i;
  }
  if (found < 0) throw OntologyError("query atom has no variable slot");
  return found;
}

namespace {

enum class Sort { Class, Property, Individual };

// Sort of each argument slot, fixed by the atom form.
std::vector<Sort> slot_sorts(const QueryAtom& q) {
  switch (q.form) {
    case QueryForm::SubClassOf:
    case QueryForm::EquivalentClasses:
    case QueryForm::DisjointClasses:
    case QueryForm::ComplementOf: return {Sort::Class, Sort::Class};
    case QueryForm::ObjectPropertyDomain:
    case QueryForm::ObjectPropertyRange: return {Sort::Property, Sort::Class};
    case QueryForm::SubObjectPropertyOf:
    case QueryForm::EquivalentObjectProperties:
    case QueryForm::InverseObjectProperties: return {Sort::Property, Sort::Property};
    case QueryForm::SubPropertyChainOf: return {Sort::Property};
    case QueryForm::Type: return {Sort::Individual, Sort::Class};
    case QueryForm::PropertyAssertion:
      return {Sort::Property, Sort::Individual, Sort::Individual};
  }
  return {};
}

ClassPtr as_class(const QueryArg& a, const Iri& binding) {
  return a.is_variable() ? ClassExpression::named(binding) : a.cls;
}

PropertyExpression as_prop(const QueryArg& a, const Iri& binding) {
  return a.is_variable() ? PropertyExpression::named(binding) : *a.prop;
}

Iri as_ind(const QueryArg& a, const Iri& binding) {
  return a.is_variable() ? binding : *a.ind;
}

// InverseObjectProperties holds named properties; inverse expressions are
// folded away first (Inverse(R-, S) says S = (R-)- = R, an equivalence).
Axiom make_inverse(const PropertyExpression& a, const PropertyExpression& b) {
  if (a.is_inverse() == b.is_inverse())
    return InverseObjectPropertiesAxiom{a.name(), b.name()};
  return EquivalentObjectPropertiesAxiom{PropertyExpression::named(a.name()),
                                         PropertyExpression::named(b.name())};
}

// Tautological self answers: the bound side is the candidate name itself.
bool self_answer(const QueryAtom& q, int var, const Iri& n) {
  switch (q.form) {
    case QueryForm::SubClassOf:
    case QueryForm::EquivalentClasses: {
      const QueryArg& other = q.args[1 - var];
      return other.cls && other.cls->kind() == ClassKind::Named && other.cls->name() == n;
    }
    case QueryForm::SubObjectPropertyOf:
    case QueryForm::EquivalentObjectProperties: {
      const QueryArg& other = q.args[1 - var];
      return other.prop && !other.prop->is_inverse() && other.prop->name() == n;
    }
    default: return false;  // InverseObjectProperties keeps R as its own inverse
  }
}

}  // namespace

Axiom instantiate(const QueryAtom& q, const Iri& binding) {
  const auto& a = q.args;
  switch (q.form) {
    case QueryForm::SubClassOf:
      return SubClassOfAxiom{as_class(a[0], binding), as_class(a[1], binding)};
    case QueryForm::EquivalentClasses:
      return EquivalentClassesAxiom{as_class(a[0], binding), as_class(a[1], binding)};
    case QueryForm::DisjointClasses:
      return DisjointClassesAxiom{as_class(a[0], binding), as_class(a[1], binding)};
    case QueryForm::ComplementOf:
      // ComplementOf(C ?x) asks for X with X = not C; complement is involutive
      // so the same equivalence works for either variable position
      return EquivalentClassesAxiom{
          as_class(a[0], binding), ClassExpression::complement_of(as_class(a[1], binding))};
    case QueryForm::ObjectPropertyDomain:
      return ObjectPropertyDomainAxiom{as_prop(a[0], binding), as_class(a[1], binding)};
    case QueryForm::ObjectPropertyRange:
      return ObjectPropertyRangeAxiom{as_prop(a[0], binding), as_class(a[1], binding)};
    case QueryForm::SubObjectPropertyOf:
      return SubObjectPropertyOfAxiom{as_prop(a[0], binding), as_prop(a[1], binding)};
    case QueryForm::SubPropertyChainOf:
      return SubPropertyChainOfAxiom{q.chain, as_prop(a[0], binding)};
    case QueryForm::EquivalentObjectProperties:
      return EquivalentObjectPropertiesAxiom{as_prop(a[0], binding), as_prop(a[1], binding)};
    case QueryForm::InverseObjectProperties:
      return make_inverse(as_prop(a[0], binding), as_prop(a[1], binding));
    case QueryForm::Type:
      return ClassAssertionAxiom{as_class(a[1], binding), as_ind(a[0], binding)};
    case QueryForm::PropertyAssertion:
      return ObjectPropertyAssertionAxiom{as_prop(a[0], binding), as_ind(a[1], binding),
                                          as_ind(a[2], binding)};
  }
  throw OntologyError("unknown query form");
}

std::set<Iri> eval(Reasoner& r, const QueryAtom& q) {
  if (!r.check_consistency()) throw InconsistentOntologyError("inconsistent ontology");
  const Ontology& o = r.ontology();
  int var = q.variable_slot();
  Sort sort = slot_sorts(q).at(var);

  std::set<Iri> pool;
  EntityKind want = EntityKind::Class;
  switch (sort) {
    case Sort::Class: pool = o.vc(); break;
    case Sort::Property:
      pool = o.vop();
      want = EntityKind::ObjectProperty;
      break;
    case Sort::Individual:
      pool = o.vi();
      want = EntityKind::NamedIndividual;
      break;
  }
  for (const auto& d : o.declarations())
    if (d.kind == want) pool.insert(d.name);

  std::set<Iri> out;
  for (const Iri& n : pool) {
    if (sort == Sort::Class && (n == thing_iri() || n == nothing_iri())) continue;
    if (self_answer(q, var, n)) continue;
    if (r.entails(instantiate(q, n))) out.insert(n);
  }
  return out;
}

std::set<Iri> eval(const Ontology& o, const QueryAtom& q) {
  Reasoner r(o);
  return eval(r, q);
}

std::string to_string(const QueryAtom& q, const Ontology& context) {
  std::string s = std::string(to_string(q.form)) + "(";
  bool first = true;
  auto sep = [&] {
    if (!first) s += " ";
    first = false;
  };
  if (q.form == QueryForm::SubPropertyChainOf) {
    sep();
    s += "ObjectPropertyChain(";
    bool ifirst = true;
    for (const auto& p : q.chain) {
      if (!ifirst) s += " ";
      ifirst = false;
      s += serialize(p, context);
    }
    s += ")";
  }
  // PropertyValue text order is subject property object; storage order is
  // property subject object
  std::vector<int> order(q.args.size());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) order[i] = i;
  if (q.form == QueryForm::PropertyAssertion) order = {1, 0, 2};
  for (int i : order) {
    const QueryArg& a = q.args[i];
    sep();
    if (a.is_variable())
      s += "?x";
    else if (a.cls)
      s += serialize(a.cls, context);
    else if (a.prop)
      s += serialize(*a.prop, context);
    else
      s += serialize_iri(*a.ind, context);
  }
  return s + ")";
}

}  // namespace ontotdd
