#include "sgbt/minilang/printer.hpp"


namespace sgbt::minilang {
namespace {

std::string_view pivot_word(BinOp op) {
  switch (op) {
    case BinOp::Add: return "plus";
    case BinOp::Sub: return "minus";
    case BinOp::Mul: return "times";
    case BinOp::Div: return "over";
    case BinOp::Mod: return "rem";
    case BinOp::Lt:
    case BinOp::Le: return "less";
    case BinOp::Gt:
    case BinOp::Ge: return "greater";
    case BinOp::Eq: return "same";
    case BinOp::Ne: return "differ";
  }
  return "?";
}

class Printer {
 public:
  explicit Printer(Lang lang) : lang_(lang) {}

  TokenSeq run(const Function& fn) {
    if (lang_ == Lang::Pivot) {
      word("function");
      word(fn.name);
      for (std::size_t i = 0; i < fn.params.size(); ++i) {
        word(i == 0 ? "with" : "and");
        word(fn.params[i]);
      }
    } else {
      emit(lang_ == Lang::J ? "func" : "def");
      emit(fn.name);
      emit("(");
      for (std::size_t i = 0; i < fn.params.size(); ++i) {
        if (i) emit(",");
        emit(fn.params[i]);
      }
      emit(")");
    }
    block(fn.body);
    return std::move(out_);
  }

 private:
  void emit(std::string_view text) { out_.tokens.push_back(Token{classify(text, lang_), std::string(text)}); }
  void word(std::string_view text) { out_.tokens.push_back(Token{TokenKind::Word, std::string(text)}); }

  void open_block() {
    switch (lang_) {
      case Lang::J: emit("{"); break;
      case Lang::P:
        emit(":");
        emit(kIndentText);
        break;
      case Lang::Pivot: word("begin"); break;
    }
  }
  void close_block() {
    switch (lang_) {
      case Lang::J: emit("}"); break;
      case Lang::P: emit(kDedentText); break;
      case Lang::Pivot: word("end"); break;
    }
  }

  void block(const Block& body) {
    open_block();
    for (const auto& s : body) statement(s);
    close_block();
  }

  void assignment(bool is_let, const std::string& target, const Expr& value) {
    if (lang_ == Lang::Pivot) {
      word("set");
      word(target);
      word("to");
      expr(value);
      return;
    }
    if (is_let && lang_ == Lang::J) emit("let");
    emit(target);
    emit("=");
    expr(value);
    if (lang_ == Lang::J) emit(";");
  }

  void condition(const Expr& cond) {
    const bool parens = lang_ == Lang::J;
    if (parens) emit("(");
    expr(cond);
    if (parens) emit(")");
  }

  void statement(const Stmt& s) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Let>) {
            assignment(true, n.var, n.value);
          } else if constexpr (std::is_same_v<T, Assign>) {
            assignment(false, n.var, n.value);
          } else if constexpr (std::is_same_v<T, If>) {
            lang_ == Lang::Pivot ? word("when") : emit("if");
            condition(n.cond);
            block(n.then_body);
            if (n.else_body) {
              lang_ == Lang::Pivot ? word("otherwise") : emit("else");
              block(*n.else_body);
            }
          } else if constexpr (std::is_same_v<T, While>) {
            if (lang_ == Lang::Pivot) {
              word("repeat");
              word("while");
            } else {
              emit("while");
            }
            condition(n.cond);
            block(n.body);
          } else {
            lang_ == Lang::Pivot ? word("give") : emit("return");
            expr(n.value);
            if (lang_ == Lang::J) emit(";");
          }
        },
        s.node);
  }

  void open_paren() { lang_ == Lang::Pivot ? word("open") : emit("("); }
  void close_paren() { lang_ == Lang::Pivot ? word("close") : emit(")"); }

  // `min_prec` is the loosest operator that may appear unparenthesized here.
  void expr(const Expr& e, int min_prec = 0) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, IntLit>) {
            emit(n.value.str());
          } else if constexpr (std::is_same_v<T, Var>) {
            emit(n.name);
          } else if constexpr (std::is_same_v<T, Binary>) {
            const int prec = precedence(n.op);
            const bool parens = prec < min_prec;
            if (parens) open_paren();
            expr(*n.lhs, prec);
            lang_ == Lang::Pivot ? word(pivot_word(n.op)) : emit(symbol(n.op));
            expr(*n.rhs, prec + 1);
            if (parens) close_paren();
          } else {
            emit(name(n.fn));
            open_paren();
            for (std::size_t i = 0; i < n.args.size(); ++i) {
              if (i) lang_ == Lang::Pivot ? word("and") : emit(",");
              expr(n.args[i]);
            }
            close_paren();
          }
        },
        e.node);
  }

  Lang lang_;
  TokenSeq out_{lang_, {}};
};

}  // namespace

TokenSeq print(const Function& fn, Lang lang) { return Printer(lang).run(fn); }

}  // namespace sgbt::minilang
