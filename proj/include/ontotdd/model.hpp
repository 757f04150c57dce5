#pragma once

// Ontology document model: IRIs, class/property expressions, the 13 axiom
// forms, and the mutable Ontology container with snapshot/rollback.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace ontotdd {

class Iri {
public:
  Iri() = default;
  explicit Iri(std::string value) : value_(std::move(value)) {}
  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }
  friend bool operator==(const Iri&, const Iri&) = default;
  friend auto operator<=>(const Iri&, const Iri&) = default;

private:
  std::string value_;
};

std::size_t hash_value(const Iri& iri);

// owl:Thing / owl:Nothing as IRIs, for hierarchy keys and query reporting.
const Iri& thing_iri();
const Iri& nothing_iri();

enum class EntityKind { Class, ObjectProperty, NamedIndividual };

// Which flavor of test procedure drives a check: pure TBox/RBox queries, or
// mock-individual ABox probes.
enum class Strategy { Tbox, Abox };
const char* to_string(Strategy s);

// A property expression is a named property or the inverse of one.
// inverse_of(inverse_of(R)) normalizes back to R at construction.
class PropertyExpression {
public:
  PropertyExpression() = default;
  static PropertyExpression named(Iri name) { return PropertyExpression(std::move(name), false); }
  static PropertyExpression inverse_of(Iri name) { return PropertyExpression(std::move(name), true); }

  const Iri& name() const noexcept { return name_; }
  bool is_inverse() const noexcept { return inverse_; }
  PropertyExpression inverted() const { return PropertyExpression(name_, !inverse_); }

  friend bool operator==(const PropertyExpression&, const PropertyExpression&) = default;
  friend auto operator<=>(const PropertyExpression&, const PropertyExpression&) = default;

private:
  PropertyExpression(Iri name, bool inv) : name_(std::move(name)), inverse_(inv) {}
  Iri name_;
  bool inverse_ = false;
};

std::size_t hash_value(const PropertyExpression& pe);

enum class ClassKind {
  Named,
  Thing,
  Nothing,
  Complement,    // one argument
  Intersection,  // two or more arguments
  Union,         // two or more arguments
  SomeValuesFrom,
  AllValuesFrom,
  HasSelf,
};

class ClassExpression;
using ClassPtr = std::shared_ptr<const ClassExpression>;

// Immutable expression tree node. Structural equality and a cached hash;
// shared subtrees are fine but identity is never relied upon.
class ClassExpression {
public:
  static ClassPtr named(Iri name);
  static ClassPtr thing();
  static ClassPtr nothing();
  static ClassPtr complement_of(ClassPtr arg);
  static ClassPtr intersection_of(std::vector<ClassPtr> args);
  static ClassPtr union_of(std::vector<ClassPtr> args);
  static ClassPtr some_values_from(PropertyExpression prop, ClassPtr filler);
  static ClassPtr all_values_from(PropertyExpression prop, ClassPtr filler);
  static ClassPtr has_self(PropertyExpression prop);

  ClassKind kind() const noexcept { return kind_; }
  const Iri& name() const { return name_; }                       // Named only
  const PropertyExpression& property() const { return prop_; }    // Some/All/HasSelf
  const std::vector<ClassPtr>& args() const { return args_; }
  ClassPtr arg() const { return args_.at(0); }                    // Complement / filler

  std::size_t hash() const noexcept { return hash_; }
  bool equals(const ClassExpression& other) const;

private:
  ClassExpression(ClassKind k, Iri n, PropertyExpression p, std::vector<ClassPtr> a);

  ClassKind kind_;
  Iri name_;
  PropertyExpression prop_;
  std::vector<ClassPtr> args_;
  std::size_t hash_;
};

inline bool equal(const ClassPtr& a, const ClassPtr& b) {
  return a == b || (a && b && a->equals(*b));
}

enum class CharacteristicKind {
  Functional,
  InverseFunctional,
  Transitive,
  Symmetric,
  Asymmetric,
  Reflexive,
  Irreflexive,
};

const char* to_string(CharacteristicKind k);

// --- Axiom forms (13) ---

struct SubClassOfAxiom {
  ClassPtr sub, sup;
};
struct EquivalentClassesAxiom {
  ClassPtr lhs, rhs;
};
struct DisjointClassesAxiom {
  ClassPtr lhs, rhs;
};
struct ObjectPropertyDomainAxiom {
  PropertyExpression prop;
  ClassPtr filler;
};
struct ObjectPropertyRangeAxiom {
  PropertyExpression prop;
  ClassPtr filler;
};
struct SubObjectPropertyOfAxiom {
  PropertyExpression sub, sup;
};
struct SubPropertyChainOfAxiom {
  std::vector<PropertyExpression> chain;  // length >= 2
  PropertyExpression sup;
};
struct EquivalentObjectPropertiesAxiom {
  PropertyExpression lhs, rhs;
};
struct InverseObjectPropertiesAxiom {
  Iri first, second;  // named properties only
};
struct CharacteristicAxiom {
  CharacteristicKind kind;
  PropertyExpression prop;
};
struct ClassAssertionAxiom {
  ClassPtr expr;
  Iri individual;
};
struct ObjectPropertyAssertionAxiom {
  PropertyExpression prop;
  Iri subject, object;
};
struct DifferentIndividualsAxiom {
  Iri first, second;
};

using Axiom = std::variant<SubClassOfAxiom, EquivalentClassesAxiom, DisjointClassesAxiom,
                           ObjectPropertyDomainAxiom, ObjectPropertyRangeAxiom,
                           SubObjectPropertyOfAxiom, SubPropertyChainOfAxiom,
                           EquivalentObjectPropertiesAxiom, InverseObjectPropertiesAxiom,
                           CharacteristicAxiom, ClassAssertionAxiom,
                           ObjectPropertyAssertionAxiom, DifferentIndividualsAxiom>;

enum class AxiomBox { TBox, RBox, ABox };

// Total: every axiom form maps to exactly one box.
AxiomBox box_of(const Axiom& ax);

bool equal(const Axiom& a, const Axiom& b);
std::size_t hash_value(const Axiom& ax);

struct Vocabulary {
  std::set<Iri> classes;
  std::set<Iri> properties;
  std::set<Iri> individuals;
};

void collect_vocabulary(const ClassPtr& ce, Vocabulary& out);
void collect_vocabulary(const Axiom& ax, Vocabulary& out);

class OntologyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Declaration {
  EntityKind kind;
  Iri name;
  friend bool operator==(const Declaration&, const Declaration&) = default;
  friend auto operator<=>(const Declaration&, const Declaration&) = default;
};

class Ontology;

// Opaque deep copy of an ontology's full state, tagged with the lineage of
// the ontology it came from. Restoring into a different ontology throws.
class Snapshot {
public:
  Snapshot() = default;

private:
  friend class Ontology;
  std::shared_ptr<const Ontology> state_;
  std::uint64_t lineage_ = 0;
};

class Ontology {
public:
  Ontology();
  Ontology(const Ontology&);
  Ontology& operator=(const Ontology&);
  Ontology(Ontology&&) noexcept = default;
  Ontology& operator=(Ontology&&) noexcept = default;

  // Returns false when a structurally equal axiom is already present
  // (the duplicate is not stored twice).
  bool add_axiom(const Axiom& ax, bool mock = false);
  // Returns false when no structurally equal axiom exists.
  bool remove_axiom(const Axiom& ax);
  bool contains_axiom(const Axiom& ax) const;

  void add_declaration(EntityKind kind, const Iri& name, bool mock = false);
  bool remove_declaration(EntityKind kind, const Iri& name);

  const std::vector<Axiom>& axioms() const { return axioms_; }  // insertion order
  std::vector<Axiom> tbox() const;
  std::vector<Axiom> rbox() const;
  std::vector<Axiom> abox() const;
  const std::set<Declaration>& declarations() const { return declarations_; }

  const std::set<Iri>& vc() const { return classes_; }
  const std::set<Iri>& vop() const { return properties_; }
  const std::set<Iri>& vi() const { return individuals_; }
  bool vocab_contains(const Iri& name) const;

  // Mock bookkeeping: entities / axioms introduced by test scaffolding are
  // flagged so leaked mocks are detectable by audit.
  void mark_mock_entity(const Iri& name);
  const std::set<Iri>& mock_entities() const { return mock_entities_; }
  std::vector<Axiom> mock_axioms() const;
  bool is_mock_axiom(const Axiom& ax) const;
  bool has_mock_residue() const;

  Snapshot snapshot() const;
  void restore(const Snapshot& snap);

  // Prefix table used by the serializer; parse order preserved.
  void set_prefix(const std::string& name, const std::string& expansion);
  const std::vector<std::pair<std::string, std::string>>& prefixes() const { return prefixes_; }
  void set_ontology_iri(std::optional<Iri> iri) { ontology_iri_ = std::move(iri); }
  const std::optional<Iri>& ontology_iri() const { return ontology_iri_; }

  std::uint64_t lineage() const { return lineage_; }

private:
  void index_vocabulary(const Axiom& ax, int delta);
  void bump(std::map<Iri, int>& counts, std::set<Iri>& names, const Iri& name, int delta);

  std::vector<Axiom> axioms_;
  std::vector<bool> mock_flags_;  // parallel to axioms_
  std::unordered_map<std::size_t, int> hash_counts_;  // duplicate-check fast path
  std::set<Declaration> declarations_;
  std::set<Iri> mock_entities_;

  // Occurrence counts back the name sets so removal is exact.
  std::map<Iri, int> class_counts_, property_counts_, individual_counts_;
  std::set<Iri> classes_, properties_, individuals_;

  std::vector<std::pair<std::string, std::string>> prefixes_;
  std::optional<Iri> ontology_iri_;
  std::uint64_t lineage_;
};

}  // namespace ontotdd
