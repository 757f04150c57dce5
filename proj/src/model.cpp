#include "ontotdd/model.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>

namespace ontotdd {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  // boost::hash_combine constant
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::atomic<std::uint64_t> next_lineage{1};

}  // namespace

std::size_t hash_value(const Iri& iri) { return std::hash<std::string>{}(iri.str()); }

const char* to_string(Strategy s) { return s == Strategy::Tbox ? "tbox" : "abox"; }

const Iri& thing_iri() {
  static const Iri iri("http://www.w3.org/2002/07/owl#Thing");
  return iri;
}
const Iri& nothing_iri() {
  static const Iri iri("http://www.w3.org/2002/07/owl#Nothing");
  return iri;
}

std::size_t hash_value(const PropertyExpression& pe) {
  return mix(hash_value(pe.name()), pe.is_inverse() ? 0x7u : 0x3u);
}

const char* to_string(CharacteristicKind k) {
  switch (k) {
    case CharacteristicKind::Functional: return "Functional";
    case CharacteristicKind::InverseFunctional: return "InverseFunctional";
    case CharacteristicKind::Transitive: return "Transitive";
    case CharacteristicKind::Symmetric: return "Symmetric";
    case CharacteristicKind::Asymmetric: return "Asymmetric";
    case CharacteristicKind::Reflexive: return "Reflexive";
    case CharacteristicKind::Irreflexive: return "Irreflexive";
  }
  return "?";
}

// --- ClassExpression ---

ClassExpression::ClassExpression(ClassKind k, Iri n, PropertyExpression p,
                                 std::vector<ClassPtr> a)
    : kind_(k), name_(std::move(n)), prop_(std::move(p)), args_(std::move(a)) {
  std::size_t h = static_cast<std::size_t>(kind_) * 0x9e3779b9u;
  h = mix(h, hash_value(name_));
  h = mix(h, hash_value(prop_));
  for (const auto& c : args_) h = mix(h, c->hash());
  hash_ = h;
}

ClassPtr ClassExpression::named(Iri name) {
  return ClassPtr(new ClassExpression(ClassKind::Named, std::move(name), {}, {}));
}
ClassPtr ClassExpression::thing() {
  static const ClassPtr t(new ClassExpression(ClassKind::Thing, {}, {}, {}));
  return t;
}
ClassPtr ClassExpression::nothing() {
  static const ClassPtr n(new ClassExpression(ClassKind::Nothing, {}, {}, {}));
  return n;
}
ClassPtr ClassExpression::complement_of(ClassPtr arg) {
  return ClassPtr(new ClassExpression(ClassKind::Complement, {}, {}, {std::move(arg)}));
}
ClassPtr ClassExpression::intersection_of(std::vector<ClassPtr> args) {
  if (args.size() < 2) throw OntologyError("ObjectIntersectionOf needs at least two operands");
  return ClassPtr(new ClassExpression(ClassKind::Intersection, {}, {}, std::move(args)));
}
ClassPtr ClassExpression::union_of(std::vector<ClassPtr> args) {
  if (args.size() < 2) throw OntologyError("ObjectUnionOf needs at least two operands");
  return ClassPtr(new ClassExpression(ClassKind::Union, {}, {}, std::move(args)));
}
ClassPtr ClassExpression::some_values_from(PropertyExpression prop, ClassPtr filler) {
  return ClassPtr(
      new ClassExpression(ClassKind::SomeValuesFrom, {}, std::move(prop), {std::move(filler)}));
}
ClassPtr ClassExpression::all_values_from(PropertyExpression prop, ClassPtr filler) {
  return ClassPtr(
      new ClassExpression(ClassKind::AllValuesFrom, {}, std::move(prop), {std::move(filler)}));
}
ClassPtr ClassExpression::has_self(PropertyExpression prop) {
  return ClassPtr(new ClassExpression(ClassKind::HasSelf, {}, std::move(prop), {}));
}

bool ClassExpression::equals(const ClassExpression& other) const {
  if (this == &other) return true;
  if (hash_ != other.hash_ || kind_ != other.kind_) return false;
  if (name_ != other.name_ || prop_ != other.prop_) return false;
  if (args_.size() != other.args_.size()) return false;
  for (std::size_t i = 0; i < args_.size(); ++i)
    if (!args_[i]->equals(*other.args_[i])) return false;
  return true;
}

// --- Axiom helpers ---

AxiomBox box_of(const Axiom& ax) {
  struct Visitor {
    AxiomBox operator()(const SubClassOfAxiom&) { return AxiomBox::TBox; }
    AxiomBox operator()(const EquivalentClassesAxiom&) { return AxiomBox::TBox; }
    AxiomBox operator()(const DisjointClassesAxiom&) { return AxiomBox::TBox; }
    AxiomBox operator()(const ObjectPropertyDomainAxiom&) { return AxiomBox::TBox; }
    AxiomBox operator()(const ObjectPropertyRangeAxiom&) { return AxiomBox::TBox; }
    AxiomBox operator()(const SubObjectPropertyOfAxiom&) { return AxiomBox::RBox; }
    AxiomBox operator()(const SubPropertyChainOfAxiom&) { return AxiomBox::RBox; }
    AxiomBox operator()(const EquivalentObjectPropertiesAxiom&) { return AxiomBox::RBox; }
    AxiomBox operator()(const InverseObjectPropertiesAxiom&) { return AxiomBox::RBox; }
    AxiomBox operator()(const CharacteristicAxiom&) { return AxiomBox::RBox; }
    AxiomBox operator()(const ClassAssertionAxiom&) { return AxiomBox::ABox; }
    AxiomBox operator()(const ObjectPropertyAssertionAxiom&) { return AxiomBox::ABox; }
    AxiomBox operator()(const DifferentIndividualsAxiom&) { return AxiomBox::ABox; }
  };
  return std::visit(Visitor{}, ax);
}

bool equal(const Axiom& a, const Axiom& b) {
  if (a.index() != b.index()) return false;
  struct Visitor {
    const Axiom& rhs;
    bool operator()(const SubClassOfAxiom& x) {
      const auto& y = std::get<SubClassOfAxiom>(rhs);
      return equal(x.sub, y.sub) && equal(x.sup, y.sup);
    }
    bool operator()(const EquivalentClassesAxiom& x) {
      const auto& y = std::get<EquivalentClassesAxiom>(rhs);
      return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
    }
    bool operator()(const DisjointClassesAxiom& x) {
      const auto& y = std::get<DisjointClassesAxiom>(rhs);
      return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
    }
    bool operator()(const ObjectPropertyDomainAxiom& x) {
      const auto& y = std::get<ObjectPropertyDomainAxiom>(rhs);
      return x.prop == y.prop && equal(x.filler, y.filler);
    }
    bool operator()(const ObjectPropertyRangeAxiom& x) {
      const auto& y = std::get<ObjectPropertyRangeAxiom>(rhs);
      return x.prop == y.prop && equal(x.filler, y.filler);
    }
    bool operator()(const SubObjectPropertyOfAxiom& x) {
      const auto& y = std::get<SubObjectPropertyOfAxiom>(rhs);
      return x.sub == y.sub && x.sup == y.sup;
    }
    bool operator()(const SubPropertyChainOfAxiom& x) {
      const auto& y = std::get<SubPropertyChainOfAxiom>(rhs);
      return x.chain == y.chain && x.sup == y.sup;
    }
    bool operator()(const EquivalentObjectPropertiesAxiom& x) {
      const auto& y = std::get<EquivalentObjectPropertiesAxiom>(rhs);
      return x.lhs == y.lhs && x.rhs == y.rhs;
    }
    bool operator()(const InverseObjectPropertiesAxiom& x) {
      const auto& y = std::get<InverseObjectPropertiesAxiom>(rhs);
      return x.first == y.first && x.second == y.second;
    }
    bool operator()(const CharacteristicAxiom& x) {
      const auto& y = std::get<CharacteristicAxiom>(rhs);
      return x.kind == y.kind && x.prop == y.prop;
    }
    bool operator()(const ClassAssertionAxiom& x) {
      const auto& y = std::get<ClassAssertionAxiom>(rhs);
      return x.individual == y.individual && equal(x.expr, y.expr);
    }
    bool operator()(const ObjectPropertyAssertionAxiom& x) {
      const auto& y = std::get<ObjectPropertyAssertionAxiom>(rhs);
      return x.prop == y.prop && x.subject == y.subject && x.object == y.object;
    }
    bool operator()(const DifferentIndividualsAxiom& x) {
      const auto& y = std::get<DifferentIndividualsAxiom>(rhs);
      return x.first == y.first && x.second == y.second;
    }
  };
  return std::visit(Visitor{b}, a);
}

std::size_t hash_value(const Axiom& ax) {
  std::size_t h = mix(0xa5a5a5a5u, ax.index());
  struct Visitor {
    std::size_t& h;
    void operator()(const SubClassOfAxiom& x) { h = mix(mix(h, x.sub->hash()), x.sup->hash()); }
    void operator()(const EquivalentClassesAxiom& x) {
      h = mix(mix(h, x.lhs->hash()), x.rhs->hash());
    }
    void operator()(const DisjointClassesAxiom& x) {
      h = mix(mix(h, x.lhs->hash()), x.rhs->hash());
    }
    void operator()(const ObjectPropertyDomainAxiom& x) {
      h = mix(mix(h, hash_value(x.prop)), x.filler->hash());
    }
    void operator()(const ObjectPropertyRangeAxiom& x) {
      h = mix(mix(h, hash_value(x.prop)), x.filler->hash());
    }
    void operator()(const SubObjectPropertyOfAxiom& x) {
      h = mix(mix(h, hash_value(x.sub)), hash_value(x.sup));
    }
    void operator()(const SubPropertyChainOfAxiom& x) {
      for (const auto& p : x.chain) h = mix(h, hash_value(p));
      h = mix(h, hash_value(x.sup));
    }
    void operator()(const EquivalentObjectPropertiesAxiom& x) {
      h = mix(mix(h, hash_value(x.lhs)), hash_value(x.rhs));
    }
    void operator()(const InverseObjectPropertiesAxiom& x) {
      h = mix(mix(h, hash_value(x.first)), hash_value(x.second));
    }
    void operator()(const CharacteristicAxiom& x) {
      h = mix(mix(h, static_cast<std::size_t>(x.kind)), hash_value(x.prop));
    }
    void operator()(const ClassAssertionAxiom& x) {
      h = mix(mix(h, x.expr->hash()), hash_value(x.individual));
    }
    void operator()(const ObjectPropertyAssertionAxiom& x) {
      h = mix(mix(mix(h, hash_value(x.prop)), hash_value(x.subject)), hash_value(x.object));
    }
    void operator()(const DifferentIndividualsAxiom& x) {
      h = mix(mix(h, hash_value(x.first)), hash_value(x.second));
    }
  };
  std::visit(Visitor{h}, ax);
  return h;
}

void collect_vocabulary(const ClassPtr& ce, Vocabulary& out) {
  switch (ce->kind()) {
    case ClassKind::Named:
      out.classes.insert(ce->name());
      break;
    case ClassKind::Thing:
    case ClassKind::Nothing:
      break;
    case ClassKind::SomeValuesFrom:
    case ClassKind::AllValuesFrom:
      out.properties.insert(ce->property().name());
      collect_vocabulary(ce->arg(), out);
      break;
    case ClassKind::HasSelf:
      out.properties.insert(ce->property().name());
      break;
    case ClassKind::Complement:
    case ClassKind::Intersection:
    case ClassKind::Union:
      for (const auto& a : ce->args()) collect_vocabulary(a, out);
      break;
  }
}

void collect_vocabulary(const Axiom& ax, Vocabulary& out) {
  struct Visitor {
    Vocabulary& v;
    void operator()(const SubClassOfAxiom& x) {
      collect_vocabulary(x.sub, v);
      collect_vocabulary(x.sup, v);
    }
    void operator()(const EquivalentClassesAxiom& x) {
      collect_vocabulary(x.lhs, v);
      collect_vocabulary(x.rhs, v);
    }
    void operator()(const DisjointClassesAxiom& x) {
      collect_vocabulary(x.lhs, v);
      collect_vocabulary(x.rhs, v);
    }
    void operator()(const ObjectPropertyDomainAxiom& x) {
      v.properties.insert(x.prop.name());
      collect_vocabulary(x.filler, v);
    }
    void operator()(const ObjectPropertyRangeAxiom& x) {
      v.properties.insert(x.prop.name());
      collect_vocabulary(x.filler, v);
    }
    void operator()(const SubObjectPropertyOfAxiom& x) {
      v.properties.insert(x.sub.name());
      v.properties.insert(x.sup.name());
    }
    void operator()(const SubPropertyChainOfAxiom& x) {
      for (const auto& p : x.chain) v.properties.insert(p.name());
      v.properties.insert(x.sup.name());
    }
    void operator()(const EquivalentObjectPropertiesAxiom& x) {
      v.properties.insert(x.lhs.name());
      v.properties.insert(x.rhs.name());
    }
    void operator()(const InverseObjectPropertiesAxiom& x) {
      v.properties.insert(x.first);
      v.properties.insert(x.second);
    }
    void operator()(const CharacteristicAxiom& x) { v.properties.insert(x.prop.name()); }
    void operator()(const ClassAssertionAxiom& x) {
      collect_vocabulary(x.expr, v);
      v.individuals.insert(x.individual);
    }
    void operator()(const ObjectPropertyAssertionAxiom& x) {
      v.properties.insert(x.prop.name());
      v.individuals.insert(x.subject);
      v.individuals.insert(x.object);
    }
    void operator()(const DifferentIndividualsAxiom& x) {
      v.individuals.insert(x.first);
      v.individuals.insert(x.second);
    }
  };
  std::visit(Visitor{out}, ax);
}

// --- Ontology ---

Ontology::Ontology() : lineage_(next_lineage.fetch_add(1)) {}

Ontology::Ontology(const Ontology& other) = default;
Ontology& Ontology::operator=(const Ontology& other) = default;

bool Ontology::add_axiom(const Axiom& ax, bool mock) {
  if (contains_axiom(ax)) return false;
  axioms_.push_back(ax);
  mock_flags_.push_back(mock);
  hash_counts_[hash_value(ax)]++;
  index_vocabulary(ax, +1);
  return true;
}

bool Ontology::remove_axiom(const Axiom& ax) {
  std::size_t h = hash_value(ax);
  auto it = hash_counts_.find(h);
  if (it == hash_counts_.end()) return false;
  for (std::size_t i = 0; i < axioms_.size(); ++i) {
    if (equal(axioms_[i], ax)) {
      index_vocabulary(axioms_[i], -1);
      axioms_.erase(axioms_.begin() + static_cast<std::ptrdiff_t>(i));
      mock_flags_.erase(mock_flags_.begin() + static_cast<std::ptrdiff_t>(i));
      if (--it->second == 0) hash_counts_.erase(it);
      return true;
    }
  }
  return false;
}

bool Ontology::contains_axiom(const Axiom& ax) const {
  auto it = hash_counts_.find(hash_value(ax));
  if (it == hash_counts_.end()) return false;
  for (const auto& a : axioms_)
    if (equal(a, ax)) return true;
  return false;
}

void Ontology::add_declaration(EntityKind kind, const Iri& name, bool mock) {
  declarations_.insert(Declaration{kind, name});
  if (mock) mock_entities_.insert(name);
}

bool Ontology::remove_declaration(EntityKind kind, const Iri& name) {
  return declarations_.erase(Declaration{kind, name}) > 0;
}

std::vector<Axiom> Ontology::tbox() const {
  std::vector<Axiom> out;
  for (const auto& a : axioms_)
    if (box_of(a) == AxiomBox::TBox) out.push_back(a);
  return out;
}
std::vector<Axiom> Ontology::rbox() const {
  std::vector<Axiom> out;
  for (const auto& a : axioms_)
    if (box_of(a) == AxiomBox::RBox) out.push_back(a);
  return out;
}
std::vector<Axiom> Ontology::abox() const {
  std::vector<Axiom> out;
  for (const auto& a : axioms_)
    if (box_of(a) == AxiomBox::ABox) out.push_back(a);
  return out;
}

bool Ontology::vocab_contains(const Iri& name) const {
  if (classes_.count(name) || properties_.count(name) || individuals_.count(name)) return true;
  for (const auto& d : declarations_)
    if (d.name == name) return true;
  return false;
}

void Ontology::mark_mock_entity(const Iri& name) { mock_entities_.insert(name); }

std::vector<Axiom> Ontology::mock_axioms() const {
  std::vector<Axiom> out;
  for (std::size_t i = 0; i < axioms_.size(); ++i)
    if (mock_flags_[i]) out.push_back(axioms_[i]);
  return out;
}

bool Ontology::is_mock_axiom(const Axiom& ax) const {
  for (std::size_t i = 0; i < axioms_.size(); ++i)
    if (mock_flags_[i] && equal(axioms_[i], ax)) return true;
  return false;
}

bool Ontology::has_mock_residue() const {
  if (!mock_entities_.empty()) return true;
  for (bool f : mock_flags_)
    if (f) return true;
  return false;
}

Snapshot Ontology::snapshot() const {
  Snapshot s;
  s.state_ = std::make_shared<const Ontology>(*this);
  s.lineage_ = lineage_;
  return s;
}

void Ontology::restore(const Snapshot& snap) {
  if (!snap.state_) throw OntologyError("restore: empty snapshot");
  if (snap.lineage_ != lineage_)
    throw OntologyError("snapshot mismatch: snapshot belongs to a different ontology");
  std::uint64_t keep = lineage_;
  *this = *snap.state_;
  lineage_ = keep;
}

void Ontology::set_prefix(const std::string& name, const std::string& expansion) {
  for (auto& [n, e] : prefixes_) {
    if (n == name) {
      e = expansion;
      return;
    }
  }
  prefixes_.emplace_back(name, expansion);
}

void Ontology::bump(std::map<Iri, int>& counts, std::set<Iri>& names, const Iri& name, int delta) {
  int& c = counts[name];
  c += delta;
  assert(c >= 0);
  if (c <= 0) {
    counts.erase(name);
    names.erase(name);
  } else {
    names.insert(name);
  }
}

void Ontology::index_vocabulary(const Axiom& ax, int delta) {
  Vocabulary v;
  collect_vocabulary(ax, v);
  // Count one occurrence per axiom per name: enough for exact add/remove.
  for (const auto& n : v.classes) bump(class_counts_, classes_, n, delta);
  for (const auto& n : v.properties) bump(property_counts_, properties_, n, delta);
  for (const auto& n : v.individuals) bump(individual_counts_, individuals_, n, delta);
}

}  // namespace ontotdd
