#include "ontotdd/parser.hpp"

#include "ontotdd/query.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lexer.hpp"

namespace ontotdd {

namespace detail {

Token Lexer::scan() {
  // skip whitespace and # comments (comments never start inside <...>)
  for (;;) {
    while (cur() == ' ' || cur() == '\t' || cur() == '\r' || cur() == '\n') advance();
    if (cur() == '#') {
      while (cur() != '\n' && cur() != '\0') advance();
      continue;
    }
    break;
  }

  Token t;
  t.pos = {line_, col_};
  char c = cur();
  if (c == '\0') {
    t.kind = Token::End;
    return t;
  }
  if (c == '(') {
    advance();
    t.kind = Token::LParen;
    t.text = "(";
    return t;
  }
  if (c == ')') {
    advance();
    t.kind = Token::RParen;
    t.text = ")";
    return t;
  }
  if (c == '=') {
    advance();
    t.kind = Token::Equals;
    t.text = "=";
    return t;
  }
  if (c == '<') {
    advance();
    std::string iri;
    while (cur() != '>' && cur() != '\0') {
      char d = cur();
      if (d == ' ' || d == '\n' || d == '<' || d == '"') {
        throw ParseError("invalid character in IRI reference", t.pos);
      }
      iri.push_back(d);
      advance();
    }
    if (cur() != '>') throw ParseError("unterminated IRI reference", t.pos);
    advance();
    t.kind = Token::IriRef;
    t.text = iri;
    return t;
  }
  if (c == '?') {
    advance();
    std::string name;
    while (name_char(cur()) && cur() != ':') {
      name.push_back(cur());
      advance();
    }
    if (name.empty()) throw ParseError("expected variable name after '?'", t.pos);
    t.kind = Token::Variable;
    t.text = name;
    return t;
  }
  if (c == '@') {
    advance();
    std::string name;
    while (name_char(cur()) && cur() != ':') {
      name.push_back(cur());
      advance();
    }
    if (name.empty()) throw ParseError("expected directive name after '@'", t.pos);
    t.kind = Token::Directive;
    t.text = name;
    return t;
  }
  if (name_char(c) && c != '.' && c != '-') {
    std::string name;
    while (name_char(cur())) {
      name.push_back(cur());
      advance();
    }
    t.kind = name.find(':') != std::string::npos ? Token::PName : Token::Ident;
    t.text = name;
    return t;
  }
  throw ParseError(std::string("unexpected character '") + c + "'", t.pos);
}

}  // namespace detail

using detail::Lexer;
using detail::Token;

namespace {

constexpr const char* kOwlNs = "http://www.w3.org/2002/07/owl#";
const std::string kThingIri = std::string(kOwlNs) + "Thing";
const std::string kNothingIri = std::string(kOwlNs) + "Nothing";

// Recognized OWL 2 construct names outside the supported fragment. Seeing one
// of these yields a targeted "unsupported construct" error instead of a
// generic syntax error.
const std::set<std::string>& unsupported_constructs() {
  static const std::set<std::string> s = {
      "SameIndividual", "NegativeObjectPropertyAssertion", "DisjointObjectProperties",
      "DisjointUnion", "HasKey", "DatatypeDefinition", "AnnotationAssertion",
      "SubAnnotationPropertyOf", "AnnotationPropertyDomain", "AnnotationPropertyRange",
      "Annotation", "Import", "DataPropertyAssertion", "NegativeDataPropertyAssertion",
      "DataPropertyDomain", "DataPropertyRange", "FunctionalDataProperty", "SubDataPropertyOf",
      "EquivalentDataProperties", "DisjointDataProperties", "ObjectMinCardinality",
      "ObjectMaxCardinality", "ObjectExactCardinality", "ObjectHasValue", "ObjectOneOf",
      "DataSomeValuesFrom", "DataAllValuesFrom", "DataHasValue", "DataMinCardinality",
      "DataMaxCardinality", "DataExactCardinality", "DataIntersectionOf", "DataUnionOf",
      "DataComplementOf", "DataOneOf", "DatatypeRestriction", "Datatype", "DataProperty",
      "AnnotationProperty",
  };
  return s;
}

struct PrefixEnv {
  std::vector<std::pair<std::string, std::string>> declared;  // in declaration order

  void declare(const std::string& name, const std::string& expansion) {
    for (auto& [n, e] : declared) {
      if (n == name) {
        e = expansion;
        return;
      }
    }
    declared.emplace_back(name, expansion);
  }

  Iri resolve(const std::string& pname, SourcePos pos) const {
    auto colon = pname.find(':');
    std::string prefix = pname.substr(0, colon + 1);  // includes the colon
    std::string local = pname.substr(colon + 1);
    for (const auto& [n, e] : declared)
      if (n == prefix) return Iri(e + local);
    if (prefix == "owl:") return Iri(kOwlNs + local);
    throw ParseError("undeclared prefix '" + prefix + "'", pos);
  }

  static bool local_ok(const std::string& s) {
    for (char c : s) {
      bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                c == '_' || c == '-' || c == '.';
      if (!ok) return false;
    }
    return true;
  }

  // Longest declared expansion that prefixes the IRI wins; ties go to the
  // earliest declaration. Falls back to <full-iri>.
  std::string compress(const Iri& iri) const {
    const std::string& s = iri.str();
    if (s == kThingIri) return "owl:Thing";
    if (s == kNothingIri) return "owl:Nothing";
    const std::pair<std::string, std::string>* best = nullptr;
    for (const auto& p : declared) {
      if (s.size() >= p.second.size() && s.compare(0, p.second.size(), p.second) == 0 &&
          local_ok(s.substr(p.second.size()))) {
        if (!best || p.second.size() > best->second.size()) best = &p;
      }
    }
    if (best) return best->first + s.substr(best->second.size());
    return "<" + s + ">";
  }
};

PrefixEnv env_from(const Ontology& o) {
  PrefixEnv env;
  for (const auto& [n, e] : o.prefixes()) env.declare(n, e);
  return env;
}

class AxiomParser {
public:
  AxiomParser(Lexer& lex, const PrefixEnv& env) : lex_(lex), env_(env) {}

  Token expect(Token::Kind kind, const char* what) {
    Token t = lex_.next();
    if (t.kind != kind) {
      throw ParseError(std::string("expected ") + what + ", got '" + describe(t) + "'", t.pos,
                       what);
    }
    return t;
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Token::End: return "end of input";
      case Token::IriRef: return "<" + t.text + ">";
      case Token::Variable: return "?" + t.text;
      case Token::Directive: return "@" + t.text;
      default: return t.text;
    }
  }

  Iri name(const char* what) {
    Token t = lex_.next();
    if (t.kind == Token::PName) return env_.resolve(t.text, t.pos);
    if (t.kind == Token::IriRef) return Iri(t.text);
    throw ParseError(std::string("expected ") + what + ", got '" + describe(t) + "'", t.pos,
                     what);
  }

  PropertyExpression property_expression() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Ident) {
      if (t.text == "ObjectInverseOf") {
        lex_.next();
        expect(Token::LParen, "'('");
        Iri n = name("object property IRI");
        expect(Token::RParen, "')'");
        return PropertyExpression::inverse_of(n);
      }
      fail_keyword(t, "object property expression");
    }
    return PropertyExpression::named(name("object property expression"));
  }

  ClassPtr class_expression() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Ident) {
      const std::string kw = t.text;
      SourcePos pos = t.pos;
      if (kw == "ObjectComplementOf") {
        lex_.next();
        expect(Token::LParen, "'('");
        ClassPtr arg = class_expression();
        expect(Token::RParen, "')'");
        return ClassExpression::complement_of(std::move(arg));
      }
      if (kw == "ObjectIntersectionOf" || kw == "ObjectUnionOf") {
        lex_.next();
        expect(Token::LParen, "'('");
        std::vector<ClassPtr> args;
        while (lex_.peek().kind != Token::RParen) args.push_back(class_expression());
        expect(Token::RParen, "')'");
        if (args.size() < 2)
          throw ParseError(kw + " expects at least 2 class expressions, got " +
                               std::to_string(args.size()),
                           pos);
        return kw == "ObjectIntersectionOf" ? ClassExpression::intersection_of(std::move(args))
                                            : ClassExpression::union_of(std::move(args));
      }
      if (kw == "ObjectSomeValuesFrom" || kw == "ObjectAllValuesFrom") {
        lex_.next();
        expect(Token::LParen, "'('");
        PropertyExpression pe = property_expression();
        ClassPtr filler = class_expression();
        expect(Token::RParen, "')'");
        return kw == "ObjectSomeValuesFrom"
                   ? ClassExpression::some_values_from(std::move(pe), std::move(filler))
                   : ClassExpression::all_values_from(std::move(pe), std::move(filler));
      }
      if (kw == "ObjectHasSelf") {
        lex_.next();
        expect(Token::LParen, "'('");
        PropertyExpression pe = property_expression();
        expect(Token::RParen, "')'");
        return ClassExpression::has_self(std::move(pe));
      }
      fail_keyword(t, "class expression");
    }
    Iri n = name("class expression");
    if (n.str() == kThingIri) return ClassExpression::thing();
    if (n.str() == kNothingIri) return ClassExpression::nothing();
    return ClassExpression::named(std::move(n));
  }

  [[noreturn]] void fail_keyword(const Token& t, const char* where) {
    if (unsupported_constructs().count(t.text))
      throw ParseError("unsupported construct '" + t.text + "'", t.pos);
    throw ParseError("unknown construct '" + t.text + "' in " + where, t.pos);
  }

  // Expands n-ary Equivalent/Disjoint/Different forms into all unordered pairs.
  std::vector<Axiom> axiom() {
    Token t = lex_.next();
    if (t.kind != Token::Ident) {
      throw ParseError("expected axiom keyword, got '" + describe(t) + "'", t.pos);
    }
    const std::string kw = t.text;
    const SourcePos pos = t.pos;

    auto characteristic = [&](CharacteristicKind kind) -> std::vector<Axiom> {
      expect(Token::LParen, "'('");
      PropertyExpression pe = property_expression();
      expect(Token::RParen, "')'");
      return {CharacteristicAxiom{kind, std::move(pe)}};
    };

    if (kw == "SubClassOf") {
      expect(Token::LParen, "'('");
      std::vector<ClassPtr> args;
      while (lex_.peek().kind != Token::RParen) args.push_back(class_expression());
      expect(Token::RParen, "')'");
      if (args.size() != 2)
        throw ParseError("SubClassOf expects 2 class expressions, got " +
                             std::to_string(args.size()),
                         pos);
      return {SubClassOfAxiom{args[0], args[1]}};
    }
    if (kw == "EquivalentClasses" || kw == "DisjointClasses") {
      expect(Token::LParen, "'('");
      std::vector<ClassPtr> args;
      while (lex_.peek().kind != Token::RParen) args.push_back(class_expression());
      expect(Token::RParen, "')'");
      if (args.size() < 2)
        throw ParseError(kw + " expects at least 2 class expressions, got " +
                             std::to_string(args.size()),
                         pos);
      std::vector<Axiom> out;
      for (std::size_t i = 0; i < args.size(); ++i)
        for (std::size_t j = i + 1; j < args.size(); ++j) {
          if (kw == "EquivalentClasses")
            out.push_back(EquivalentClassesAxiom{args[i], args[j]});
          else
            out.push_back(DisjointClassesAxiom{args[i], args[j]});
        }
      return out;
    }
    if (kw == "ObjectPropertyDomain" || kw == "ObjectPropertyRange") {
      expect(Token::LParen, "'('");
      PropertyExpression pe = property_expression();
      ClassPtr filler = class_expression();
      expect(Token::RParen, "')'");
      if (kw == "ObjectPropertyDomain")
        return {ObjectPropertyDomainAxiom{std::move(pe), std::move(filler)}};
      return {ObjectPropertyRangeAxiom{std::move(pe), std::move(filler)}};
    }
    if (kw == "SubObjectPropertyOf") {
      expect(Token::LParen, "'('");
      if (lex_.peek().kind == Token::Ident && lex_.peek().text == "ObjectPropertyChain") {
        Token chainTok = lex_.next();
        expect(Token::LParen, "'('");
        std::vector<PropertyExpression> chain;
        while (lex_.peek().kind != Token::RParen) chain.push_back(property_expression());
        expect(Token::RParen, "')'");
        if (chain.size() < 2)
          throw ParseError("ObjectPropertyChain expects at least 2 properties, got " +
                               std::to_string(chain.size()),
                           chainTok.pos);
        PropertyExpression sup = property_expression();
        expect(Token::RParen, "')'");
        return {SubPropertyChainOfAxiom{std::move(chain), std::move(sup)}};
      }
      PropertyExpression sub = property_expression();
      PropertyExpression sup = property_expression();
      expect(Token::RParen, "')'");
      return {SubObjectPropertyOfAxiom{std::move(sub), std::move(sup)}};
    }
    if (kw == "EquivalentObjectProperties") {
      expect(Token::LParen, "'('");
      std::vector<PropertyExpression> args;
      while (lex_.peek().kind != Token::RParen) args.push_back(property_expression());
      expect(Token::RParen, "')'");
      if (args.size() < 2)
        throw ParseError("EquivalentObjectProperties expects at least 2 properties, got " +
                             std::to_string(args.size()),
                         pos);
      std::vector<Axiom> out;
      for (std::size_t i = 0; i < args.size(); ++i)
        for (std::size_t j = i + 1; j < args.size(); ++j)
          out.push_back(EquivalentObjectPropertiesAxiom{args[i], args[j]});
      return out;
    }
    if (kw == "InverseObjectProperties") {
      expect(Token::LParen, "'('");
      if (lex_.peek().kind == Token::Ident)
        throw ParseError("InverseObjectProperties requires named properties", lex_.peek().pos);
      Iri first = name("object property IRI");
      if (lex_.peek().kind == Token::Ident)
        throw ParseError("InverseObjectProperties requires named properties", lex_.peek().pos);
      Iri second = name("object property IRI");
      expect(Token::RParen, "')'");
      return {InverseObjectPropertiesAxiom{std::move(first), std::move(second)}};
    }
    if (kw == "FunctionalObjectProperty") return characteristic(CharacteristicKind::Functional);
    if (kw == "InverseFunctionalObjectProperty")
      return characteristic(CharacteristicKind::InverseFunctional);
    if (kw == "TransitiveObjectProperty") return characteristic(CharacteristicKind::Transitive);
    if (kw == "SymmetricObjectProperty") return characteristic(CharacteristicKind::Symmetric);
    if (kw == "AsymmetricObjectProperty") return characteristic(CharacteristicKind::Asymmetric);
    if (kw == "ReflexiveObjectProperty") return characteristic(CharacteristicKind::Reflexive);
    if (kw == "IrreflexiveObjectProperty") return characteristic(CharacteristicKind::Irreflexive);
    if (kw == "ClassAssertion") {
      expect(Token::LParen, "'('");
      ClassPtr ce = class_expression();
      Iri ind = name("individual IRI");
      expect(Token::RParen, "')'");
      return {ClassAssertionAxiom{std::move(ce), std::move(ind)}};
    }
    if (kw == "ObjectPropertyAssertion") {
      expect(Token::LParen, "'('");
      PropertyExpression pe = property_expression();
      Iri subj = name("individual IRI");
      Iri obj = name("individual IRI");
      expect(Token::RParen, "')'");
      return {ObjectPropertyAssertionAxiom{std::move(pe), std::move(subj), std::move(obj)}};
    }
    if (kw == "DifferentIndividuals") {
      expect(Token::LParen, "'('");
      std::vector<Iri> args;
      while (lex_.peek().kind != Token::RParen) args.push_back(name("individual IRI"));
      expect(Token::RParen, "')'");
      if (args.size() < 2)
        throw ParseError("DifferentIndividuals expects at least 2 individuals, got " +
                             std::to_string(args.size()),
                         pos);
      std::vector<Axiom> out;
      for (std::size_t i = 0; i < args.size(); ++i)
        for (std::size_t j = i + 1; j < args.size(); ++j)
          out.push_back(DifferentIndividualsAxiom{args[i], args[j]});
      return out;
    }
    Token back{Token::Ident, kw, pos};
    fail_keyword(back, "axiom");
  }

  // Declaration( Class(n) | ObjectProperty(n) | NamedIndividual(n) )
  Declaration declaration() {
    expect(Token::LParen, "'('");
    Token t = lex_.next();
    if (t.kind != Token::Ident)
      throw ParseError("expected entity kind in Declaration, got '" + describe(t) + "'", t.pos);
    EntityKind kind;
    if (t.text == "Class")
      kind = EntityKind::Class;
    else if (t.text == "ObjectProperty")
      kind = EntityKind::ObjectProperty;
    else if (t.text == "NamedIndividual")
      kind = EntityKind::NamedIndividual;
    else if (unsupported_constructs().count(t.text))
      throw ParseError("unsupported construct '" + t.text + "'", t.pos);
    else
      throw ParseError("unknown entity kind '" + t.text + "' in Declaration", t.pos);
    expect(Token::LParen, "'('");
    Iri n = name("entity IRI");
    expect(Token::RParen, "')'");
    expect(Token::RParen, "')'");
    return Declaration{kind, std::move(n)};
  }

  Lexer& lex_;
  const PrefixEnv& env_;
};

}  // namespace

Ontology parse_document(const std::string& text) {
  Lexer lex(text);
  PrefixEnv env;
  Ontology onto;

  for (;;) {
    const Token& t = lex.peek();
    if (t.kind == Token::Ident && t.text == "Prefix") {
      lex.next();
      AxiomParser p(lex, env);
      p.expect(Token::LParen, "'('");
      Token pn = lex.next();
      if (pn.kind != Token::PName || pn.text.back() != ':')
        throw ParseError("expected prefix name ending in ':'", pn.pos);
      p.expect(Token::Equals, "'='");
      Token iri = p.expect(Token::IriRef, "IRI reference");
      p.expect(Token::RParen, "')'");
      env.declare(pn.text, iri.text);
      onto.set_prefix(pn.text, iri.text);
      continue;
    }
    break;
  }

  AxiomParser p(lex, env);
  Token ont = lex.next();
  if (ont.kind != Token::Ident || ont.text != "Ontology")
    throw ParseError("expected 'Ontology', got '" + AxiomParser::describe(ont) + "'", ont.pos);
  p.expect(Token::LParen, "'('");
  if (lex.peek().kind == Token::IriRef) onto.set_ontology_iri(Iri(lex.next().text));

  while (lex.peek().kind != Token::RParen) {
    const Token& t = lex.peek();
    if (t.kind == Token::End) throw ParseError("unexpected end of input inside Ontology(...)", t.pos);
    if (t.kind == Token::Ident && t.text == "Declaration") {
      lex.next();
      Declaration d = p.declaration();
      onto.add_declaration(d.kind, d.name);
      continue;
    }
    for (auto& ax : p.axiom()) onto.add_axiom(ax);
  }
  lex.next();  // closing paren
  Token end = lex.next();
  if (end.kind != Token::End)
    throw ParseError("trailing content after Ontology(...)", end.pos);
  return onto;
}

Axiom parse_axiom(const std::string& text, const Ontology& context) {
  Lexer lex(text);
  PrefixEnv env = env_from(context);
  AxiomParser p(lex, env);
  std::vector<Axiom> axs = p.axiom();
  Token end = lex.next();
  if (end.kind != Token::End)
    throw ParseError("trailing content after axiom", end.pos);
  if (axs.size() != 1)
    throw ParseError("expected a single binary axiom (n-ary form expands to " +
                         std::to_string(axs.size()) + " axioms)",
                     SourcePos{1, 1});
  return axs[0];
}

ClassPtr parse_class_expression(const std::string& text, const Ontology& context) {
  Lexer lex(text);
  PrefixEnv env = env_from(context);
  AxiomParser p(lex, env);
  ClassPtr ce = p.class_expression();
  Token end = lex.next();
  if (end.kind != Token::End)
    throw ParseError("trailing content after class expression", end.pos);
  return ce;
}

QueryAtom parse_query_atom(const std::string& text, const Ontology& context) {
  Lexer lex(text);
  PrefixEnv env = env_from(context);
  AxiomParser p(lex, env);

  enum class Sort { C, P, I };
  Token head = lex.next();
  if (head.kind != Token::Ident)
    throw ParseError("expected a query atom name, got '" + AxiomParser::describe(head) + "'",
                     head.pos);

  QueryAtom q;
  std::vector<Sort> sorts;
  bool individual_variable_only = false;
  // slot order below is storage order; PropertyValue reorders its text form
  if (head.text == "SubClassOf") {
    q.form = QueryForm::SubClassOf;
    sorts = {Sort::C, Sort::C};
  } else if (head.text == "EquivalentClasses") {
    q.form = QueryForm::EquivalentClasses;
    sorts = {Sort::C, Sort::C};
  } else if (head.text == "DisjointClasses") {
    q.form = QueryForm::DisjointClasses;
    sorts = {Sort::C, Sort::C};
  } else if (head.text == "ObjectComplementOf" || head.text == "ComplementOf") {
    q.form = QueryForm::ComplementOf;
    sorts = {Sort::C, Sort::C};
  } else if (head.text == "ObjectPropertyDomain") {
    q.form = QueryForm::ObjectPropertyDomain;
    sorts = {Sort::P, Sort::C};
  } else if (head.text == "ObjectPropertyRange") {
    q.form = QueryForm::ObjectPropertyRange;
    sorts = {Sort::P, Sort::C};
  } else if (head.text == "SubObjectPropertyOf") {
    q.form = QueryForm::SubObjectPropertyOf;  // may become the chain form below
    sorts = {Sort::P, Sort::P};
  } else if (head.text == "EquivalentObjectProperties") {
    q.form = QueryForm::EquivalentObjectProperties;
    sorts = {Sort::P, Sort::P};
  } else if (head.text == "InverseObjectProperties") {
    q.form = QueryForm::InverseObjectProperties;
    sorts = {Sort::P, Sort::P};
  } else if (head.text == "Type") {
    q.form = QueryForm::Type;
    sorts = {Sort::I, Sort::C};
    individual_variable_only = true;
  } else if (head.text == "PropertyValue") {
    q.form = QueryForm::PropertyAssertion;
    sorts = {Sort::I, Sort::P, Sort::I};  // text order: subject property object
    individual_variable_only = true;
  } else if (head.text == "ObjectPropertyAssertion") {
    q.form = QueryForm::PropertyAssertion;
    sorts = {Sort::P, Sort::I, Sort::I};
    individual_variable_only = true;
  } else {
    throw ParseError("unknown query atom '" + head.text + "'", head.pos);
  }

  p.expect(Token::LParen, "'('");

  // SubObjectPropertyOf may carry a fixed chain as its sub side
  if (q.form == QueryForm::SubObjectPropertyOf && lex.peek().kind == Token::Ident &&
      lex.peek().text == "ObjectPropertyChain") {
    SourcePos cpos = lex.peek().pos;
    lex.next();
    p.expect(Token::LParen, "'('");
    while (lex.peek().kind != Token::RParen) q.chain.push_back(p.property_expression());
    p.expect(Token::RParen, "')'");
    if (q.chain.size() < 2)
      throw ParseError("ObjectPropertyChain expects at least 2 properties, got " +
                           std::to_string(q.chain.size()),
                       cpos);
    q.form = QueryForm::SubPropertyChainOf;
    sorts = {Sort::P};
  }

  int variables = 0;
  for (std::size_t i = 0; i < sorts.size(); ++i) {
    if (lex.peek().kind == Token::Variable) {
      Token v = lex.next();
      if (individual_variable_only && sorts[i] != Sort::I)
        throw ParseError("the variable binds individuals in " + head.text + " atoms", v.pos);
      q.args.push_back(QueryArg::variable());
      ++variables;
      continue;
    }
    switch (sorts[i]) {
      case Sort::C: q.args.push_back(QueryArg::of(p.class_expression())); break;
      case Sort::P: q.args.push_back(QueryArg::of(p.property_expression())); break;
      case Sort::I: q.args.push_back(QueryArg::of(p.name("individual IRI"))); break;
    }
  }
  p.expect(Token::RParen, "')'");
  Token end = lex.next();
  if (end.kind != Token::End) throw ParseError("trailing content after query atom", end.pos);
  if (variables != 1)
    throw ParseError("query atom needs exactly one '?x' variable, got " +
                         std::to_string(variables),
                     head.pos);

  // PropertyValue uses subject-property-object order in text; storage order
  // is property-subject-object
  if (q.form == QueryForm::PropertyAssertion && head.text == "PropertyValue")
    std::swap(q.args[0], q.args[1]);
  return q;
}

// --- Serialization ---

namespace {

void write_class(std::ostream& os, const ClassPtr& ce, const PrefixEnv& env);

void write_property(std::ostream& os, const PropertyExpression& pe, const PrefixEnv& env) {
  if (pe.is_inverse())
    os << "ObjectInverseOf(" << env.compress(pe.name()) << ")";
  else
    os << env.compress(pe.name());
}

void write_class(std::ostream& os, const ClassPtr& ce, const PrefixEnv& env) {
  switch (ce->kind()) {
    case ClassKind::Named: os << env.compress(ce->name()); return;
    case ClassKind::Thing: os << "owl:Thing"; return;
    case ClassKind::Nothing: os << "owl:Nothing"; return;
    case ClassKind::Complement:
      os << "ObjectComplementOf(";
      write_class(os, ce->arg(), env);
      os << ")";
      return;
    case ClassKind::Intersection:
    case ClassKind::Union: {
      os << (ce->kind() == ClassKind::Intersection ? "ObjectIntersectionOf(" : "ObjectUnionOf(");
      bool first = true;
      for (const auto& a : ce->args()) {
        if (!first) os << " ";
        first = false;
        write_class(os, a, env);
      }
      os << ")";
      return;
    }
    case ClassKind::SomeValuesFrom:
    case ClassKind::AllValuesFrom:
      os << (ce->kind() == ClassKind::SomeValuesFrom ? "ObjectSomeValuesFrom("
                                                     : "ObjectAllValuesFrom(");
      write_property(os, ce->property(), env);
      os << " ";
      write_class(os, ce->arg(), env);
      os << ")";
      return;
    case ClassKind::HasSelf:
      os << "ObjectHasSelf(";
      write_property(os, ce->property(), env);
      os << ")";
      return;
  }
}

void write_axiom(std::ostream& os, const Axiom& ax, const PrefixEnv& env) {
  struct Visitor {
    std::ostream& os;
    const PrefixEnv& env;
    void operator()(const SubClassOfAxiom& x) {
      os << "SubClassOf(";
      write_class(os, x.sub, env);
      os << " ";
      write_class(os, x.sup, env);
      os << ")";
    }
    void operator()(const EquivalentClassesAxiom& x) {
      os << "EquivalentClasses(";
      write_class(os, x.lhs, env);
      os << " ";
      write_class(os, x.rhs, env);
      os << ")";
    }
    void operator()(const DisjointClassesAxiom& x) {
      os << "DisjointClasses(";
      write_class(os, x.lhs, env);
      os << " ";
      write_class(os, x.rhs, env);
      os << ")";
    }
    void operator()(const ObjectPropertyDomainAxiom& x) {
      os << "ObjectPropertyDomain(";
      write_property(os, x.prop, env);
      os << " ";
      write_class(os, x.filler, env);
      os << ")";
    }
    void operator()(const ObjectPropertyRangeAxiom& x) {
      os << "ObjectPropertyRange(";
      write_property(os, x.prop, env);
      os << " ";
      write_class(os, x.filler, env);
      os << ")";
    }
    void operator()(const SubObjectPropertyOfAxiom& x) {
      os << "SubObjectPropertyOf(";
      write_property(os, x.sub, env);
      os << " ";
      write_property(os, x.sup, env);
      os << ")";
    }
    void operator()(const SubPropertyChainOfAxiom& x) {
      os << "SubObjectPropertyOf(ObjectPropertyChain(";
      bool first = true;
      for (const auto& p : x.chain) {
        if (!first) os << " ";
        first = false;
        write_property(os, p, env);
      }
      os << ") ";
      write_property(os, x.sup, env);
      os << ")";
    }
    void operator()(const EquivalentObjectPropertiesAxiom& x) {
      os << "EquivalentObjectProperties(";
      write_property(os, x.lhs, env);
      os << " ";
      write_property(os, x.rhs, env);
      os << ")";
    }
    void operator()(const InverseObjectPropertiesAxiom& x) {
      os << "InverseObjectProperties(" << env.compress(x.first) << " " << env.compress(x.second)
         << ")";
    }
    void operator()(const CharacteristicAxiom& x) {
      os << to_string(x.kind) << "ObjectProperty(";
      write_property(os, x.prop, env);
      os << ")";
    }
    void operator()(const ClassAssertionAxiom& x) {
      os << "ClassAssertion(";
      write_class(os, x.expr, env);
      os << " " << env.compress(x.individual) << ")";
    }
    void operator()(const ObjectPropertyAssertionAxiom& x) {
      os << "ObjectPropertyAssertion(";
      write_property(os, x.prop, env);
      os << " " << env.compress(x.subject) << " " << env.compress(x.object) << ")";
    }
    void operator()(const DifferentIndividualsAxiom& x) {
      os << "DifferentIndividuals(" << env.compress(x.first) << " " << env.compress(x.second)
         << ")";
    }
  };
  std::visit(Visitor{os, env}, ax);
}

const char* kind_keyword(EntityKind k) {
  switch (k) {
    case EntityKind::Class: return "Class";
    case EntityKind::ObjectProperty: return "ObjectProperty";
    case EntityKind::NamedIndividual: return "NamedIndividual";
  }
  return "?";
}

}  // namespace

std::string serialize(const Ontology& o) {
  PrefixEnv env = env_from(o);
  std::ostringstream os;
  for (const auto& [n, e] : o.prefixes()) os << "Prefix(" << n << "=<" << e << ">)\n";
  os << "Ontology(";
  if (o.ontology_iri()) os << "<" << o.ontology_iri()->str() << ">";
  os << "\n";
  for (const auto& d : o.declarations())
    os << "Declaration(" << kind_keyword(d.kind) << "(" << env.compress(d.name) << "))\n";
  for (const auto& ax : o.axioms()) {
    write_axiom(os, ax, env);
    os << "\n";
  }
  for (const auto& m : o.mock_entities()) os << "# mock-entity " << env.compress(m) << "\n";
  for (const auto& ax : o.mock_axioms()) {
    os << "# mock-axiom ";
    write_axiom(os, ax, env);
    os << "\n";
  }
  os << ")\n";
  return os.str();
}

std::string serialize(const Axiom& ax, const Ontology& context) {
  PrefixEnv env = env_from(context);
  std::ostringstream os;
  write_axiom(os, ax, env);
  return os.str();
}

std::string serialize(const ClassPtr& ce, const Ontology& context) {
  PrefixEnv env = env_from(context);
  std::ostringstream os;
  write_class(os, ce, env);
  return os.str();
}

std::string serialize(const PropertyExpression& pe, const Ontology& context) {
  PrefixEnv env = env_from(context);
  std::ostringstream os;
  write_property(os, pe, env);
  return os.str();
}

std::string serialize_iri(const Iri& iri, const Ontology& context) {
  return env_from(context).compress(iri);
}

// --- Suite manifests ---

std::vector<SuiteEntry> parse_suite(const std::string& text, const Ontology& context) {
  std::vector<SuiteEntry> entries;
  PrefixEnv env = env_from(context);

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    Lexer lex(line);
    if (lex.peek().kind == Token::End) continue;  // blank or comment-only

    SuiteEntry entry;
    entry.line = lineno;
    AxiomParser p(lex, env);

    bool is_prefix_line = false;
    while (lex.peek().kind == Token::Directive) {
      Token d = lex.next();
      if (d.text == "prefix") {
        Token pn = lex.next();
        if (pn.kind != Token::PName || pn.text.back() != ':')
          throw ParseError("expected prefix name ending in ':'",
                           {lineno, pn.pos.col});
        Token iri = lex.next();
        if (iri.kind != Token::IriRef)
          throw ParseError("expected IRI reference in @prefix", {lineno, iri.pos.col});
        env.declare(pn.text, iri.text);
        is_prefix_line = true;
        break;
      }
      if (d.text == "strategy") {
        Token v = lex.next();
        if (v.kind == Token::Ident && v.text == "tbox")
          entry.strategy = Strategy::Tbox;
        else if (v.kind == Token::Ident && v.text == "abox")
          entry.strategy = Strategy::Abox;
        else
          throw ParseError("@strategy expects 'tbox' or 'abox'", {lineno, v.pos.col});
        continue;
      }
      if (d.text == "expect") {
        Token v = lex.next();
        if (v.kind == Token::Ident && v.text == "pass")
          entry.expect_pass = true;
        else if (v.kind == Token::Ident && v.text == "fail")
          entry.expect_pass = false;
        else
          throw ParseError("@expect expects 'pass' or 'fail'", {lineno, v.pos.col});
        continue;
      }
      throw ParseError("unknown directive '@" + d.text + "'", {lineno, d.pos.col});
    }
    if (is_prefix_line) {
      if (lex.next().kind != Token::End)
        throw ParseError("trailing content after @prefix", {lineno, 1});
      continue;
    }
    if (lex.peek().kind == Token::End)
      throw ParseError("directives without an axiom", {lineno, 1});

    try {
      std::vector<Axiom> axs = p.axiom();
      if (axs.size() != 1)
        throw ParseError("suite lines must hold a single binary axiom", {lineno, 1});
      entry.target = axs[0];
    } catch (const ParseError& e) {
      throw ParseError(e.message(), {lineno, e.pos().col});
    }
    if (lex.next().kind != Token::End)
      throw ParseError("trailing content after axiom", {lineno, 1});
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace ontotdd
