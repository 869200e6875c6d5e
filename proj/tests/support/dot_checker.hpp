#pragma once

// Minimal validating parser for the Graphviz DOT language (the subset of the
// published grammar without HTML strings). Used to check that rendered
// output is well-formed DOT, independently of the renderer's own string
// building.

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace testsupport {

struct DotSummary {
  bool directed = false;
  int node_statements = 0;
  int edge_statements = 0;
};

namespace dot_detail {

struct Token {
  enum Kind { kId, kSym, kEdgeOp, kEnd } kind = kEnd;
  std::string text;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_trivia();
    Token tok;
    tok.pos = i_;
    if (i_ >= text_.size()) return tok;
    const char c = text_[i_];
    if (c == '{' || c == '}' || c == '[' || c == ']' || c == ';' ||
        c == ',' || c == '=' || c == ':') {
      tok.kind = Token::kSym;
      tok.text = std::string(1, c);
      ++i_;
      return tok;
    }
    if (c == '-' && i_ + 1 < text_.size() &&
        (text_[i_ + 1] == '>' || text_[i_ + 1] == '-')) {
      tok.kind = Token::kEdgeOp;
      tok.text = text_.substr(i_, 2);
      i_ += 2;
      return tok;
    }
    if (c == '"') {
      tok.kind = Token::kId;
      ++i_;
      std::string out;
      while (i_ < text_.size() && text_[i_] != '"') {
        if (text_[i_] == '\\' && i_ + 1 < text_.size()) {
          out += text_[i_ + 1];
          i_ += 2;
          continue;
        }
        out += text_[i_];
        ++i_;
      }
      if (i_ >= text_.size()) fail(tok.pos, "unterminated quoted string");
      ++i_;  // closing quote
      tok.text = out;
      return tok;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok.kind = Token::kId;
      while (i_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[i_])) ||
              text_[i_] == '_')) {
        tok.text += text_[i_];
        ++i_;
      }
      return tok;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' ||
        c == '-') {
      tok.kind = Token::kId;
      if (c == '-') {
        tok.text += c;
        ++i_;
      }
      bool digits = false, dot = false;
      while (i_ < text_.size()) {
        const char d = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(d))) {
          digits = true;
        } else if (d == '.' && !dot) {
          dot = true;
        } else {
          break;
        }
        tok.text += d;
        ++i_;
      }
      if (!digits) fail(tok.pos, "malformed numeral");
      return tok;
    }
    fail(i_, std::string("unexpected character '") + c + "'");
  }

 private:
  void skip_trivia() {
    for (;;) {
      while (i_ < text_.size() &&
             std::isspace(static_cast<unsigned char>(text_[i_]))) {
        ++i_;
      }
      if (i_ + 1 < text_.size() && text_[i_] == '/' &&
          text_[i_ + 1] == '/') {
        while (i_ < text_.size() && text_[i_] != '\n') ++i_;
        continue;
      }
      if (i_ < text_.size() && text_[i_] == '#') {
        while (i_ < text_.size() && text_[i_] != '\n') ++i_;
        continue;
      }
      if (i_ + 1 < text_.size() && text_[i_] == '/' &&
          text_[i_ + 1] == '*') {
        i_ += 2;
        while (i_ + 1 < text_.size() &&
               !(text_[i_] == '*' && text_[i_ + 1] == '/')) {
          ++i_;
        }
        if (i_ + 1 >= text_.size()) fail(i_, "unterminated comment");
        i_ += 2;
        continue;
      }
      return;
    }
  }

  [[noreturn]] void fail(std::size_t pos, const std::string& msg) {
    throw std::runtime_error("dot: " + msg + " at offset " +
                             std::to_string(pos));
  }

  const std::string& text_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lexer_(text) { advance(); }

  DotSummary parse() {
    if (is_keyword("strict")) advance();
    if (is_keyword("digraph")) {
      summary_.directed = true;
    } else if (!is_keyword("graph")) {
      fail("expected 'graph' or 'digraph'");
    }
    advance();
    if (cur_.kind == Token::kId) advance();  // optional graph name
    expect_sym("{");
    stmt_list();
    expect_sym("}");
    if (cur_.kind != Token::kEnd) fail("trailing input after graph body");
    return summary_;
  }

 private:
  void stmt_list() {
    while (!at_sym("}")) {
      if (cur_.kind == Token::kEnd) fail("unexpected end of input");
      stmt();
      if (at_sym(";")) advance();
    }
  }

  void stmt() {
    if (at_sym("{") || is_keyword("subgraph")) {
      subgraph();
      maybe_edge_rhs(true);
      return;
    }
    if (is_keyword("graph") || is_keyword("node") || is_keyword("edge")) {
      // Could be an attr_stmt ('node [...]') or a node named 'node'.
      const Token saved = cur_;
      advance();
      if (at_sym("[")) {
        attr_lists();
        return;
      }
      // Re-interpret as a node_stmt whose id was the keyword.
      node_tail(saved);
      return;
    }
    if (cur_.kind != Token::kId) fail("expected statement");
    const Token id = cur_;
    advance();
    if (at_sym("=")) {  // ID '=' ID
      advance();
      if (cur_.kind != Token::kId) fail("expected value after '='");
      advance();
      return;
    }
    node_tail(id);
  }

  // Everything after a leading node id: optional port, then either an edge
  // RHS or a plain node statement.
  void node_tail(const Token&) {
    port_opt();
    if (cur_.kind == Token::kEdgeOp) {
      edge_rhs();
      attr_lists_opt();
      ++summary_.edge_statements;
      return;
    }
    attr_lists_opt();
    ++summary_.node_statements;
  }

  void maybe_edge_rhs(bool subgraph_head) {
    if (cur_.kind == Token::kEdgeOp) {
      edge_rhs();
      attr_lists_opt();
      ++summary_.edge_statements;
    } else if (!subgraph_head) {
      fail("expected edge operator");
    }
  }

  void edge_rhs() {
    while (cur_.kind == Token::kEdgeOp) {
      if (summary_.directed && cur_.text != "->") {
        fail("'--' in a digraph");
      }
      if (!summary_.directed && cur_.text != "--") {
        fail("'->' in an undirected graph");
      }
      advance();
      if (at_sym("{") || is_keyword("subgraph")) {
        subgraph();
      } else if (cur_.kind == Token::kId) {
        advance();
        port_opt();
      } else {
        fail("expected node or subgraph after edge operator");
      }
    }
  }

  void subgraph() {
    if (is_keyword("subgraph")) {
      advance();
      if (cur_.kind == Token::kId) advance();
    }
    expect_sym("{");
    stmt_list();
    expect_sym("}");
  }

  void port_opt() {
    while (at_sym(":")) {
      advance();
      if (cur_.kind != Token::kId) fail("expected port id after ':'");
      advance();
    }
  }

  void attr_lists_opt() {
    if (at_sym("[")) attr_lists();
  }

  void attr_lists() {
    while (at_sym("[")) {
      advance();
      while (!at_sym("]")) {
        if (cur_.kind != Token::kId) fail("expected attribute name");
        advance();
        expect_sym("=");
        if (cur_.kind != Token::kId) fail("expected attribute value");
        advance();
        if (at_sym(",") || at_sym(";")) advance();
      }
      expect_sym("]");
    }
  }

  bool is_keyword(const char* word) const {
    return cur_.kind == Token::kId && cur_.text == word;
  }
  bool at_sym(const char* s) const {
    return cur_.kind == Token::kSym && cur_.text == s;
  }
  void expect_sym(const char* s) {
    if (!at_sym(s)) fail(std::string("expected '") + s + "'");
    advance();
  }
  void advance() { cur_ = lexer_.next(); }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("dot: " + msg + " at offset " +
                             std::to_string(cur_.pos));
  }

  Lexer lexer_;
  Token cur_;
  DotSummary summary_;
};

}  // namespace dot_detail

/// Parses DOT text, throwing std::runtime_error on any grammar violation.
inline DotSummary check_dot(const std::string& text) {
  dot_detail::Parser parser(text);
  return parser.parse();
}

}  // namespace testsupport
