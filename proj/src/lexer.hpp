#pragma once

// Internal tokenizer shared by the document parser, the single-axiom parser,
// the suite-manifest parser, and the query-atom parser. Not installed.

#include <string>

#include "ontotdd/parser.hpp"

namespace ontotdd::detail {

struct Token {
  enum Kind {
    Ident,      // bare keyword: SubClassOf, ObjectIntersectionOf, ...
    PName,      // prefixed name: ex:A, :A, owl:Thing, or bare "ex:" namespace form
    IriRef,     // <http://...>
    LParen,
    RParen,
    Equals,
    Variable,   // ?x
    Directive,  // @strategy, @expect, @prefix
    End,
  };
  Kind kind = End;
  std::string text;  // Ident/PName: lexeme; IriRef: contents without <>; Variable: name without ?
  SourcePos pos;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) {}

  const Token& peek() {
    if (!have_) {
      tok_ = scan();
      have_ = true;
    }
    return tok_;
  }

  Token next() {
    const Token t = peek();
    have_ = false;
    return t;
  }

private:
  static bool name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '-' || c == '.' || c == ':';
  }

  char cur() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void advance() {
    if (pos_ >= text_.size()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  Token scan();

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
  bool have_ = false;
};

}  // namespace ontotdd::detail
