#include "sgbt/minilang/parser.hpp"

#include <set>

#include "sgbt/error.hpp"

namespace sgbt::minilang {
namespace {

class Parser {
 public:
  Parser(const TokenSeq& ts, std::size_t start) : toks_(ts.tokens), lang_(ts.lang), pos_(start) {}

  Function function() {
    Function fn;
    expect_keyword(lang_ == Lang::J ? "func" : "def");
    fn.name = identifier();
    expect_text("(");
    if (!at_text(")")) {
      do {
        std::string p = identifier();
        if (bound_.count(p)) throw ParseError(pos_ - 1, "distinct parameter name", p);
        bound_.insert(p);
        fn.params.push_back(std::move(p));
      } while (accept_text(","));
    }
    expect_text(")");
    if (lang_ == Lang::J) {
      fn.body = j_block();
    } else {
      expect_text(":");
      fn.body = p_suite();
    }
    return fn;
  }

  std::size_t position() const { return pos_; }

 private:
  // --- token helpers -------------------------------------------------------
  const Token* peek(std::size_t ahead = 0) const {
    return pos_ + ahead < toks_.size() ? &toks_[pos_ + ahead] : nullptr;
  }
  std::string found() const { return peek() ? peek()->text : "end of input"; }
  bool at_text(std::string_view text) const {
    const Token* t = peek();
    return t && t->text == text && t->kind != TokenKind::Identifier;
  }
  bool at_kind(TokenKind kind) const { return peek() && peek()->kind == kind; }
  bool accept_text(std::string_view text) {
    if (!at_text(text)) return false;
    ++pos_;
    return true;
  }
  void expect_text(std::string_view text) {
    if (!accept_text(text)) throw ParseError(pos_, "'" + std::string(text) + "'", found());
  }
  void expect_keyword(std::string_view text) {
    if (!at_kind(TokenKind::Keyword) || peek()->text != text)
      throw ParseError(pos_, "'" + std::string(text) + "'", found());
    ++pos_;
  }
  void expect_kind(TokenKind kind) {
    if (!at_kind(kind)) throw ParseError(pos_, std::string(to_string(kind)), found());
    ++pos_;
  }
  std::string identifier() {
    if (!at_kind(TokenKind::Identifier)) throw ParseError(pos_, "identifier", found());
    return toks_[pos_++].text;
  }
  bool at_keyword(std::string_view text) const {
    return at_kind(TokenKind::Keyword) && peek()->text == text;
  }

  // --- statements ----------------------------------------------------------
  Block j_block() {
    expect_text("{");
    Block body;
    do {
      body.push_back(j_statement());
    } while (!at_text("}") && peek());
    expect_text("}");
    return body;
  }

  Stmt j_statement() {
    if (at_keyword("let")) {
      ++pos_;
      std::string name = identifier();
      expect_text("=");
      Expr value = expression();
      expect_text(";");
      bound_.insert(name);
      return Stmt{Let{std::move(name), std::move(value)}};
    }
    if (at_keyword("if")) {
      ++pos_;
      expect_text("(");
      Expr cond = expression();
      expect_text(")");
      If node{std::move(cond), j_block(), std::nullopt};
      if (at_keyword("else")) {
        ++pos_;
        node.else_body = j_block();
      }
      return Stmt{std::move(node)};
    }
    if (at_keyword("while")) {
      ++pos_;
      expect_text("(");
      Expr cond = expression();
      expect_text(")");
      return Stmt{While{std::move(cond), j_block()}};
    }
    if (at_keyword("return")) {
      ++pos_;
      Expr value = expression();
      expect_text(";");
      return Stmt{Return{std::move(value)}};
    }
    if (at_kind(TokenKind::Identifier)) {
      std::string name = identifier();
      expect_text("=");
      Expr value = expression();
      expect_text(";");
      if (!bound_.count(name)) throw UnboundVariable(name);
      return Stmt{Assign{std::move(name), std::move(value)}};
    }
    throw ParseError(pos_, "statement", found());
  }

  Block p_suite() {
    expect_kind(TokenKind::Indent);
    Block body;
    do {
      body.push_back(p_statement());
    } while (!at_kind(TokenKind::Dedent) && peek());
    expect_kind(TokenKind::Dedent);
    return body;
  }

  Stmt p_statement() {
    if (at_keyword("if")) {
      ++pos_;
      Expr cond = expression();
      expect_text(":");
      If node{std::move(cond), p_suite(), std::nullopt};
      if (at_keyword("else")) {
        ++pos_;
        expect_text(":");
        node.else_body = p_suite();
      }
      return Stmt{std::move(node)};
    }
    if (at_keyword("while")) {
      ++pos_;
      Expr cond = expression();
      expect_text(":");
      return Stmt{While{std::move(cond), p_suite()}};
    }
    if (at_keyword("return")) {
      ++pos_;
      return Stmt{Return{expression()}};
    }
    if (at_kind(TokenKind::Identifier)) {
      std::string name = identifier();
      expect_text("=");
      Expr value = expression();
      if (bound_.count(name)) return Stmt{Assign{std::move(name), std::move(value)}};
      bound_.insert(name);
      return Stmt{Let{std::move(name), std::move(value)}};
    }
    throw ParseError(pos_, "statement", found());
  }

  // --- expressions ---------------------------------------------------------
  template <class Next>
  Expr binary_level(std::initializer_list<std::pair<std::string_view, BinOp>> ops, Next next) {
    Expr lhs = (this->*next)();
    for (;;) {
      const Token* t = peek();
      if (!t || t->kind != TokenKind::Operator) return lhs;
      bool matched = false;
      for (const auto& [text, op] : ops) {
        if (t->text == text) {
          ++pos_;
          Expr rhs = (this->*next)();
          lhs = bin(op, std::move(lhs), std::move(rhs));
          matched = true;
          break;
        }
      }
      if (!matched) return lhs;
    }
  }

  Expr expression() { return equality(); }
  Expr equality() {
    return binary_level({{"==", BinOp::Eq}, {"!=", BinOp::Ne}}, &Parser::relational);
  }
  Expr relational() {
    return binary_level({{"<", BinOp::Lt}, {"<=", BinOp::Le}, {">", BinOp::Gt}, {">=", BinOp::Ge}},
                        &Parser::additive);
  }
  Expr additive() { return binary_level({{"+", BinOp::Add}, {"-", BinOp::Sub}}, &Parser::term); }
  Expr term() {
    return binary_level({{"*", BinOp::Mul}, {"/", BinOp::Div}, {"%", BinOp::Mod}}, &Parser::primary);
  }

  Expr primary() {
    const Token* t = peek();
    if (!t) throw ParseError(pos_, "expression", found());
    if (t->kind == TokenKind::IntLiteral) {
      ++pos_;
      return Expr{IntLit{Int(t->text)}};
    }
    if (t->kind == TokenKind::Identifier) {
      ++pos_;
      if (!bound_.count(t->text)) throw UnboundVariable(t->text);
      return var(t->text);
    }
    if (t->kind == TokenKind::Keyword && (t->text == "abs" || t->text == "min" || t->text == "max")) {
      const Builtin fn = t->text == "abs" ? Builtin::Abs : t->text == "min" ? Builtin::Min : Builtin::Max;
      ++pos_;
      expect_text("(");
      std::vector<Expr> args;
      args.push_back(expression());
      while (accept_text(",")) args.push_back(expression());
      if (args.size() != arity(fn))
        throw ParseError(pos_, std::to_string(arity(fn)) + " argument(s) to " + std::string(name(fn)), found());
      expect_text(")");
      return call(fn, std::move(args));
    }
    if (accept_text("(")) {
      Expr inner = expression();
      expect_text(")");
      return inner;
    }
    throw ParseError(pos_, "expression", found());
  }

  const std::vector<Token>& toks_;
  Lang lang_;
  std::size_t pos_;
  std::set<std::string> bound_;
};

}  // namespace

Function parse_function_at(const TokenSeq& ts, std::size_t start, std::size_t& end) {
  if (!is_code(ts.lang)) throw ParseError(start, "code language", "pivot");
  Parser parser(ts, start);
  Function fn = parser.function();
  end = parser.position();
  return fn;
}

Function parse(const TokenSeq& ts) {
  std::size_t end = 0;
  Function fn = parse_function_at(ts, 0, end);
  if (end != ts.tokens.size()) throw ParseError(end, "end of input", ts.tokens[end].text);
  return fn;
}

}  // namespace sgbt::minilang
