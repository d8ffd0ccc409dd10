#include <gtest/gtest.h>

#include "sgbt/corpus/corpus.hpp"
#include "sgbt/error.hpp"
#include "sgbt/minilang/dataflow.hpp"
#include "sgbt/minilang/interpreter.hpp"
#include "sgbt/minilang/lexer.hpp"
#include "sgbt/minilang/parser.hpp"
#include "sgbt/minilang/printer.hpp"

using namespace sgbt;
using namespace sgbt::minilang;

namespace {

Function add_one() {
  return Function{"f", {"a"}, {Stmt{Return{bin(BinOp::Add, var("a"), lit(1))}}}};
}

Function parse_j(std::string_view src) { return parse(lex(src, Lang::J)); }

std::size_t count_kind(const TokenSeq& ts, TokenKind k) {
  std::size_t n = 0;
  for (const auto& t : ts.tokens) n += t.kind == k;
  return n;
}

}  // namespace

TEST(Lexer, SingleStatement) {
  const auto ts = lex("return 1 ;", Lang::J);
  ASSERT_EQ(ts.size(), 3u);
  EXPECT_EQ(ts.tokens[0], (Token{TokenKind::Keyword, "return"}));
  EXPECT_EQ(ts.tokens[1], (Token{TokenKind::IntLiteral, "1"}));
  EXPECT_EQ(ts.tokens[2], (Token{TokenKind::Punct, ";"}));
}

TEST(Lexer, EmptyInputIsAnError) {
  EXPECT_THROW(lex("", Lang::J), LexError);
  EXPECT_THROW(lex("", Lang::P), LexError);
}

TEST(Lexer, IndentStack) {
  const auto ts = lex("def f(a):\n    if a > 0:\n        return 1\n    return 0\n", Lang::P);
  EXPECT_EQ(count_kind(ts, TokenKind::Indent), 2u);
  EXPECT_EQ(count_kind(ts, TokenKind::Dedent), 2u);
}

TEST(Lexer, RejectsTabsAndOddIndent) {
  EXPECT_THROW(lex("def f(a):\n\treturn a\n", Lang::P), LexError);
  EXPECT_THROW(lex("def f(a):\n   return a\n", Lang::P), LexError);
  EXPECT_THROW(lex("func f(a) { return a $ 1; }", Lang::J), LexError);
}

TEST(Lexer, NoSpacesNeeded) {
  EXPECT_EQ(lex("func f(a){return a+1;}", Lang::J), print(add_one(), Lang::J));
}

TEST(Printer, ThreeSurfaces) {
  EXPECT_EQ(flat_text(print(add_one(), Lang::J)), "func f ( a ) { return a + 1 ; }");
  EXPECT_EQ(flat_text(print(add_one(), Lang::P)), "def f ( a ) : indent return a + 1 dedent");
  EXPECT_EQ(flat_text(print(add_one(), Lang::Pivot)), "function f with a begin give a plus 1 end");
}

TEST(Printer, RenderedPUsesFourSpaces) {
  EXPECT_EQ(render_text(print(add_one(), Lang::P)), "def f ( a ) :\n    return a + 1");
}

TEST(Parser, ErrorsCarryPosition) {
  try {
    parse_j("func f ( a ) { return a + ; }");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.found(), ";");
    EXPECT_EQ(e.position(), 9u);
  }
}

TEST(Parser, UnboundVariable) {
  try {
    parse_j("func f(a){ return b; }");
    FAIL() << "expected UnboundVariable";
  } catch (const UnboundVariable& e) {
    EXPECT_EQ(e.name(), "b");
  }
}

TEST(Parser, PivotIsNotParseable) {
  EXPECT_THROW(parse(print(add_one(), Lang::Pivot)), Error);
}

TEST(Parser, PFirstAssignmentDeclares) {
  const auto p = parse(lex("def f(a):\n    x = a\n    x = x + 1\n    return x\n", Lang::P));
  EXPECT_EQ(p, parse_j("func f(a){ let x = a; x = x + 1; return x; }"));
}

TEST(Parser, ElseAndWhileRoundTrip) {
  const auto fn = parse_j("func g(a, b) { let c = 0; while (a > 0) { a = a - 1; c = c + b; } "
                          "if (c >= 10) { return c; } else { c = min(c, 3); } return abs(c); }");
  for (Lang l : {Lang::J, Lang::P}) EXPECT_EQ(parse(print(fn, l)), fn);
  EXPECT_EQ(lex(render_text(print(fn, Lang::P)), Lang::P), print(fn, Lang::P));
}

TEST(Parser, RoundTripGenerated) {
  for (const auto& fn : corpus::generate(11, 300)) {
    for (Lang l : {Lang::J, Lang::P}) {
      const auto ts = print(fn, l);
      ASSERT_EQ(parse(ts), fn);
      ASSERT_EQ(lex(render_text(ts), l), ts);
    }
    ASSERT_EQ(lex(render_text(print(fn, Lang::Pivot)), Lang::Pivot), print(fn, Lang::Pivot));
  }
}

TEST(Interpreter, Examples) {
  EXPECT_EQ(interpret(add_one(), {Int(2)}), ExecOutcome(Value{3}));
  EXPECT_EQ(interpret(parse_j("func f(a){ return a / 0; }"), {Int(5)}),
            ExecOutcome(RuntimeError{RuntimeErrorKind::DivisionByZero}));
  EXPECT_EQ(interpret(parse_j("func f(a){ while (1 < 2) { let x = 1; } return 0; }"), {Int(1)}, 10000),
            ExecOutcome(Timeout{}));
}

TEST(Interpreter, Semantics) {
  // Truncating division and sign of the remainder follow the dividend.
  EXPECT_EQ(interpret(parse_j("func f(a){ return a / 2; }"), {Int(-7)}), ExecOutcome(Value{-3}));
  EXPECT_EQ(interpret(parse_j("func f(a){ return a % 3; }"), {Int(-7)}), ExecOutcome(Value{-1}));
  EXPECT_EQ(interpret(parse_j("func f(a){ return a % 0; }"), {Int(1)}),
            ExecOutcome(RuntimeError{RuntimeErrorKind::DivisionByZero}));
  EXPECT_EQ(interpret(parse_j("func f(a){ return (a < 3) + (a == 2); }"), {Int(2)}), ExecOutcome(Value{2}));
  EXPECT_EQ(interpret(parse_j("func f(a){ if (a > 0) { return 1; } }"), {Int(-1)}), ExecOutcome(Value{0}));
  EXPECT_EQ(interpret(parse_j("func f(a, b){ return max(abs(a), min(b, 2)); }"), {Int(-9), Int(4)}),
            ExecOutcome(Value{9}));
}

TEST(Interpreter, ArbitraryPrecision) {
  const auto fn = parse_j("func f(a){ let i = 0; while (i < 8) { a = a * a; i = i + 1; } return a; }");
  const auto out = interpret(fn, {Int(3)});
  ASSERT_TRUE(std::holds_alternative<Value>(out));
  Int expect = 3;
  for (int i = 0; i < 8; ++i) expect *= expect;
  EXPECT_EQ(std::get<Value>(out).value, expect);
}

TEST(Interpreter, ArityMismatch) {
  try {
    interpret(add_one(), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "ArityMismatch");
  }
}

TEST(Interpreter, StepLimitMonotone) {
  const auto fn = parse_j("func f(a){ let s = 0; while (a > 0) { s = s + a; a = a - 1; } return s; }");
  std::uint64_t first_ok = 0;
  for (std::uint64_t limit = 1; limit < 500; ++limit) {
    const auto out = interpret(fn, {Int(10)}, limit);
    if (first_ok) {
      ASSERT_EQ(out, ExecOutcome(Value{55})) << limit;
    } else if (std::holds_alternative<Value>(out)) {
      first_ok = limit;
      EXPECT_EQ(out, ExecOutcome(Value{55}));
    } else {
      EXPECT_EQ(out, ExecOutcome(Timeout{}));
    }
  }
  EXPECT_GT(first_ok, 1u);
}

TEST(Interpreter, CrossSurfaceAgreement) {
  for (const auto& fn : corpus::generate(5, 200)) {
    const auto j = parse(print(fn, Lang::J));
    const auto p = parse(print(fn, Lang::P));
    for (int v = -3; v <= 3; ++v) {
      std::vector<Int> args(fn.params.size(), Int(v));
      ASSERT_EQ(interpret(j, args), interpret(p, args));
    }
  }
}

TEST(Dataflow, ParamToReturn) {
  const auto e = dataflow_edges(parse_j("func f(a){ return a; }"));
  EXPECT_EQ(e, (std::set<DataflowEdge>{{"var_0", "p0", "s0"}}));
}

TEST(Dataflow, LetAssignReturn) {
  // a -> let, x(let) -> assign rhs, x(assign) -> return.
  const auto e = dataflow_edges(parse_j("func f(a){ let x = a; x = x + 1; return x; }"));
  EXPECT_EQ(e, (std::set<DataflowEdge>{{"var_0", "p0", "s0"}, {"var_1", "s0", "s1"}, {"var_1", "s1", "s2"}}));
}

TEST(Dataflow, BranchesJoin) {
  const auto e = dataflow_edges(parse_j("func f(a){ let x = 0; if (a > 0) { x = 1; } else { x = 2; } return x; }"));
  // x at the return is reached by both branch assignments, not by the let.
  EXPECT_TRUE(e.count({"var_1", "s2", "s4"}));
  EXPECT_TRUE(e.count({"var_1", "s3", "s4"}));
  EXPECT_FALSE(e.count({"var_1", "s0", "s4"}));
}

TEST(Dataflow, LoopFixpoint) {
  const auto e = dataflow_edges(parse_j("func f(a){ let s = 0; while (a > 0) { s = s + a; a = a - 1; } return s; }"));
  EXPECT_TRUE(e.count({"var_0", "s3", "s1"}));  // a from the loop body reaches the condition
  EXPECT_TRUE(e.count({"var_1", "s2", "s2"}));  // s feeds itself around the loop
  EXPECT_TRUE(e.count({"var_1", "s0", "s4"}));  // zero iterations
}

TEST(Dataflow, AlphaInvariant) {
  for (const auto& fn : corpus::generate(3, 200)) {
    const auto renamed = rename_variables(fn, [](const std::string& n) { return "r_" + n; });
    ASSERT_EQ(dataflow_edges(fn), dataflow_edges(renamed));
  }
}
