#pragma once

// Functional-style syntax front end: whole documents, single axioms, suite
// manifests, and the canonical serializer. Grammar is a whitelist; anything
// outside the supported fragment raises ParseError with source position.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ontotdd/model.hpp"

namespace ontotdd {

struct SourcePos {
  int line = 0;
  int col = 0;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, SourcePos pos,
             std::optional<std::string> expected = std::nullopt)
      : std::runtime_error(msg + " (line " + std::to_string(pos.line) + ", column " +
                           std::to_string(pos.col) + ")"),
        pos_(pos),
        bare_(msg),
        expected_(std::move(expected)) {}

  SourcePos pos() const { return pos_; }
  const std::string& message() const { return bare_; }
  // What the parser was looking for, when it knows (e.g. "')'").
  const std::optional<std::string>& expected() const { return expected_; }

private:
  SourcePos pos_;
  std::string bare_;
  std::optional<std::string> expected_;
};

// Full document: optional Prefix declarations, then Ontology( ... ).
Ontology parse_document(const std::string& text);

// One axiom, resolved against the context ontology's prefix table.
Axiom parse_axiom(const std::string& text, const Ontology& context);

// Also resolves a bare class expression (used by CLI query/satisfiability input).
ClassPtr parse_class_expression(const std::string& text, const Ontology& context);

// Canonical form: prefix block, Ontology(, declarations, axioms in insertion
// order one per line, mock marks as trailing comments. parse(serialize(o))
// reproduces o; serialize(parse(serialize(o))) is byte-identical.
std::string serialize(const Ontology& o);
std::string serialize(const Axiom& ax, const Ontology& context);
std::string serialize(const ClassPtr& ce, const Ontology& context);
std::string serialize(const PropertyExpression& pe, const Ontology& context);
std::string serialize_iri(const Iri& iri, const Ontology& context);

// Suite manifest: one axiom per non-empty non-comment line, with optional
// inline directives (@strategy tbox|abox, @expect pass|fail) and @prefix lines.
struct SuiteEntry {
  Axiom target;
  std::optional<Strategy> strategy;  // absent: CLI flag decides
  bool expect_pass = true;
  int line = 0;
};

std::vector<SuiteEntry> parse_suite(const std::string& text, const Ontology& context);

}  // namespace ontotdd
