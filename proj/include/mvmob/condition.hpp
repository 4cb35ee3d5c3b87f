// The boolean/comparison expression language shared by navigation guards and
// ECA control-flow conditions.
//
// Grammar (docs/grammar.md):
//   expr := or; or := and ("or" and)*; and := not ("and" not)*
//   not := "not" not | cmp; cmp := operand (CMPOP operand)?
//   operand := literal | path | "(" expr ")"
//   path := IDENT ("." IDENT)*; CMPOP in {==, !=, <, <=, >, >=}
//
// Evaluation is total: unresolvable paths and cross-kind comparisons make the
// enclosing comparison false instead of raising.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "mvmob/lexer.hpp"
#include "mvmob/values.hpp"

namespace mvmob {

enum class CompareOp { eq, ne, lt, le, gt, ge };

inline std::string_view toString(CompareOp op) {
  switch (op) {
    case CompareOp::eq: return "==";
    case CompareOp::ne: return "!=";
    case CompareOp::lt: return "<";
    case CompareOp::le: return "<=";
    case CompareOp::gt: return ">";
    case CompareOp::ge: return ">=";
  }
  return "?";
}

// Literal kinds allowed in source: null, booleans, integers, floats, strings.
using LiteralValue =
    std::variant<std::nullptr_t, bool, long long, double, std::string>;

struct Operand {
  enum class Kind { Literal, Path };
  Kind kind = Kind::Literal;
  LiteralValue literal = nullptr;
  std::vector<std::string> path;  // non-empty when kind == Path

  bool operator==(const Operand&) const = default;
};

inline Operand literalOperand(LiteralValue v) {
  Operand o;
  o.kind = Operand::Kind::Literal;
  o.literal = std::move(v);
  return o;
}

inline Operand pathOperand(std::vector<std::string> segments) {
  Operand o;
  o.kind = Operand::Kind::Path;
  o.path = std::move(segments);
  return o;
}

struct Expr {
  enum class Kind { Or, And, Not, Compare, Operand };
  Kind kind = Kind::Operand;
  std::vector<Expr> children;  // Or/And (>=2), Not (1)
  CompareOp op = CompareOp::eq;
  Operand lhs;  // Compare lhs, or the operand of an Operand expr
  Operand rhs;  // Compare rhs

  bool operator==(const Expr&) const = default;
};

inline Expr exprOperand(Operand o) {
  Expr e;
  e.kind = Expr::Kind::Operand;
  e.lhs = std::move(o);
  return e;
}

inline Expr exprCompare(CompareOp op, Operand lhs, Operand rhs) {
  Expr e;
  e.kind = Expr::Kind::Compare;
  e.op = op;
  e.lhs = std::move(lhs);
  e.rhs = std::move(rhs);
  return e;
}

inline Expr exprNot(Expr child) {
  Expr e;
  e.kind = Expr::Kind::Not;
  e.children.push_back(std::move(child));
  return e;
}

inline Expr exprAnd(std::vector<Expr> children) {
  Expr e;
  e.kind = Expr::Kind::And;
  e.children = std::move(children);
  return e;
}

inline Expr exprOr(std::vector<Expr> children) {
  Expr e;
  e.kind = Expr::Kind::Or;
  e.children = std::move(children);
  return e;
}

// ---------------------------------------------------------------------------
// Printing (canonical form: single spaces, parentheses only where structure
// requires them).

inline std::string printOperand(const Operand& o) {
  if (o.kind == Operand::Kind::Path) {
    std::string out;
    for (const auto& seg : o.path) {
      if (!out.empty()) out += '.';
      out += seg;
    }
    return out;
  }
  if (std::holds_alternative<std::nullptr_t>(o.literal)) return "null";
  if (std::holds_alternative<bool>(o.literal))
    return std::get<bool>(o.literal) ? "true" : "false";
  if (std::holds_alternative<long long>(o.literal))
    return std::to_string(std::get<long long>(o.literal));
  if (std::holds_alternative<double>(o.literal))
    return renderDouble(std::get<double>(o.literal));
  return quoteString(std::get<std::string>(o.literal));
}

inline std::string printExpr(const Expr& e) {
  auto wrapped = [](const Expr& child, bool needsParens) {
    std::string s = printExpr(child);
    return needsParens ? "(" + s + ")" : s;
  };
  switch (e.kind) {
    case Expr::Kind::Or: {
      std::string out;
      for (const Expr& child : e.children) {
        if (!out.empty()) out += " or ";
        out += wrapped(child, child.kind == Expr::Kind::Or);
      }
      return out;
    }
    case Expr::Kind::And: {
      std::string out;
      for (const Expr& child : e.children) {
        if (!out.empty()) out += " and ";
        out += wrapped(child, child.kind == Expr::Kind::Or ||
                                  child.kind == Expr::Kind::And);
      }
      return out;
    }
    case Expr::Kind::Not: {
      const Expr& child = e.children.front();
      bool parens =
          child.kind == Expr::Kind::Or || child.kind == Expr::Kind::And;
      return "not " + wrapped(child, parens);
    }
    case Expr::Kind::Compare:
      return printOperand(e.lhs) + " " + std::string(toString(e.op)) + " " +
             printOperand(e.rhs);
    case Expr::Kind::Operand:
      return printOperand(e.lhs);
  }
  return "";
}

// ---------------------------------------------------------------------------
// Parsing over a shared token stream. The DSL parsers embed this after
// "when"/"if"; parseExpr wraps it for standalone text.

class ExprParser {
 public:
  ExprParser(const std::vector<Token>& tokens, size_t& pos,
             std::vector<Diagnostic>& diags)
      : tokens_(tokens), pos_(pos), diags_(diags) {}

  std::optional<Expr> parse() { return parseOr(); }

 private:
  const Token& cur() const { return tokens_[pos_]; }

  bool atCompareOp() const {
    switch (cur().kind) {
      case TokenKind::EqEq:
      case TokenKind::NotEq:
      case TokenKind::Lt:
      case TokenKind::LtEq:
      case TokenKind::Gt:
      case TokenKind::GtEq:
        return true;
      default:
        return false;
    }
  }

  CompareOp compareOp() {
    switch (cur().kind) {
      case TokenKind::EqEq: ++pos_; return CompareOp::eq;
      case TokenKind::NotEq: ++pos_; return CompareOp::ne;
      case TokenKind::Lt: ++pos_; return CompareOp::lt;
      case TokenKind::LtEq: ++pos_; return CompareOp::le;
      case TokenKind::Gt: ++pos_; return CompareOp::gt;
      default: ++pos_; return CompareOp::ge;
    }
  }

  void error(const std::string& expected) {
    diags_.push_back({Severity::error, "PAR001",
                      "expected " + expected + ", found " +
                          std::string(tokenKindName(cur().kind)) +
                          (cur().kind == TokenKind::Ident ? " '" + cur().text + "'"
                                                          : ""),
                      cur().span});
  }

  std::optional<Expr> parseOr() {
    auto first = parseAnd();
    if (!first) return std::nullopt;
    std::vector<Expr> children;
    children.push_back(std::move(*first));
    while (cur().isIdent("or")) {
      ++pos_;
      auto next = parseAnd();
      if (!next) return std::nullopt;
      children.push_back(std::move(*next));
    }
    if (children.size() == 1) return std::move(children.front());
    return exprOr(std::move(children));
  }

  std::optional<Expr> parseAnd() {
    auto first = parseNot();
    if (!first) return std::nullopt;
    std::vector<Expr> children;
    children.push_back(std::move(*first));
    while (cur().isIdent("and")) {
      ++pos_;
      auto next = parseNot();
      if (!next) return std::nullopt;
      children.push_back(std::move(*next));
    }
    if (children.size() == 1) return std::move(children.front());
    return exprAnd(std::move(children));
  }

  std::optional<Expr> parseNot() {
    if (cur().isIdent("not")) {
      ++pos_;
      auto child = parseNot();
      if (!child) return std::nullopt;
      return exprNot(std::move(*child));
    }
    return parseCompare();
  }

  // An operand is either a plain Literal/Path or a parenthesized sub-expression;
  // the latter may not appear on either side of a comparison operator.
  struct ParsedOperand {
    bool grouped = false;  // came from "( expr )"
    Operand operand;
    Expr expr;  // valid when grouped
  };

  std::optional<Expr> parseCompare() {
    auto lhs = parseOperand();
    if (!lhs) return std::nullopt;
    if (!atCompareOp()) {
      if (lhs->grouped) return std::move(lhs->expr);
      return exprOperand(std::move(lhs->operand));
    }
    if (lhs->grouped) {
      error("a literal or path on the left of a comparison");
      return std::nullopt;
    }
    CompareOp op = compareOp();
    auto rhs = parseOperand();
    if (!rhs) return std::nullopt;
    if (rhs->grouped) {
      error("a literal or path on the right of a comparison");
      return std::nullopt;
    }
    return exprCompare(op, std::move(lhs->operand), std::move(rhs->operand));
  }

  std::optional<ParsedOperand> parseOperand() {
    ParsedOperand out;
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::Integer:
        out.operand = literalOperand(t.intValue);
        ++pos_;
        return out;
      case TokenKind::Float:
        out.operand = literalOperand(t.floatValue);
        ++pos_;
        return out;
      case TokenKind::String:
        out.operand = literalOperand(t.text);
        ++pos_;
        return out;
      case TokenKind::LParen: {
        ++pos_;
        auto inner = parseOr();
        if (!inner) return std::nullopt;
        if (cur().kind != TokenKind::RParen) {
          error("')'");
          return std::nullopt;
        }
        ++pos_;
        out.grouped = true;
        out.expr = std::move(*inner);
        return out;
      }
      case TokenKind::Ident: {
        if (t.text == "true" || t.text == "false") {
          out.operand = literalOperand(t.text == "true");
          ++pos_;
          return out;
        }
        if (t.text == "null") {
          out.operand = literalOperand(nullptr);
          ++pos_;
          return out;
        }
        std::vector<std::string> path{t.text};
        ++pos_;
        while (cur().kind == TokenKind::Dot) {
          ++pos_;
          if (cur().kind != TokenKind::Ident) {
            error("identifier after '.'");
            return std::nullopt;
          }
          path.push_back(cur().text);
          ++pos_;
        }
        out.operand = pathOperand(std::move(path));
        return out;
      }
      default:
        error("a literal, path, or '('");
        return std::nullopt;
    }
  }

  const std::vector<Token>& tokens_;
  size_t& pos_;
  std::vector<Diagnostic>& diags_;
};

struct ExprParseResult {
  std::optional<Expr> expr;
  std::vector<Diagnostic> diagnostics;
};

inline ExprParseResult parseExpr(std::string_view text,
                                 const std::string& file = "<expr>") {
  ExprParseResult result;
  Lexer lexer(text, file);
  std::vector<Token> tokens = lexer.run(result.diagnostics);
  if (hasErrors(result.diagnostics)) return result;
  size_t pos = 0;
  ExprParser parser(tokens, pos, result.diagnostics);
  auto expr = parser.parse();
  if (expr && tokens[pos].kind != TokenKind::EndOfFile) {
    result.diagnostics.push_back(
        {Severity::error, "PAR001",
         "unexpected trailing input after expression", tokens[pos].span});
    expr.reset();
  }
  if (!hasErrors(result.diagnostics)) result.expr = std::move(expr);
  return result;
}

// ---------------------------------------------------------------------------
// Evaluation.

inline std::optional<Value> evalOperand(const Operand& o, const Environment& env) {
  if (o.kind == Operand::Kind::Path) return resolvePath(env, o.path);
  if (std::holds_alternative<std::nullptr_t>(o.literal)) return Value(nullptr);
  if (std::holds_alternative<bool>(o.literal))
    return Value(std::get<bool>(o.literal));
  if (std::holds_alternative<long long>(o.literal))
    return Value(std::get<long long>(o.literal));
  if (std::holds_alternative<double>(o.literal))
    return Value(std::get<double>(o.literal));
  return Value(std::get<std::string>(o.literal));
}

inline bool evaluate(const Expr& e, const Environment& env) {
  switch (e.kind) {
    case Expr::Kind::Or:
      for (const Expr& child : e.children)
        if (evaluate(child, env)) return true;
      return false;
    case Expr::Kind::And:
      for (const Expr& child : e.children)
        if (!evaluate(child, env)) return false;
      return true;
    case Expr::Kind::Not:
      return !evaluate(e.children.front(), env);
    case Expr::Kind::Compare: {
      auto lhs = evalOperand(e.lhs, env);
      auto rhs = evalOperand(e.rhs, env);
      if (!lhs || !rhs) return false;
      switch (e.op) {
        case CompareOp::eq: return valueEquals(*lhs, *rhs).value_or(false);
        case CompareOp::ne: {
          auto eq = valueEquals(*lhs, *rhs);
          return eq ? !*eq : false;
        }
        case CompareOp::lt: {
          auto c = valueCompare(*lhs, *rhs);
          return c ? *c < 0 : false;
        }
        case CompareOp::le: {
          auto c = valueCompare(*lhs, *rhs);
          return c ? *c <= 0 : false;
        }
        case CompareOp::gt: {
          auto c = valueCompare(*lhs, *rhs);
          return c ? *c > 0 : false;
        }
        case CompareOp::ge: {
          auto c = valueCompare(*lhs, *rhs);
          return c ? *c >= 0 : false;
        }
      }
      return false;
    }
    case Expr::Kind::Operand: {
      // A bare operand is a condition only when it denotes boolean true.
      auto v = evalOperand(e.lhs, env);
      return v && v->isBool() && v->asBool();
    }
  }
  return false;
}

// Evaluates an expression in value position (action arguments). Bare operands
// yield their value (null when unresolvable); anything else yields its truth.
inline Value evalToValue(const Expr& e, const Environment& env) {
  if (e.kind == Expr::Kind::Operand)
    return evalOperand(e.lhs, env).value_or(Value(nullptr));
  return Value(evaluate(e, env));
}

using Path = std::vector<std::string>;

inline std::string pathText(const Path& path) {
  std::string out;
  for (const auto& seg : path) {
    if (!out.empty()) out += '.';
    out += seg;
  }
  return out;
}

inline void collectFreePaths(const Expr& e, std::set<Path>& out) {
  switch (e.kind) {
    case Expr::Kind::Or:
    case Expr::Kind::And:
    case Expr::Kind::Not:
      for (const Expr& child : e.children) collectFreePaths(child, out);
      return;
    case Expr::Kind::Compare:
      if (e.lhs.kind == Operand::Kind::Path) out.insert(e.lhs.path);
      if (e.rhs.kind == Operand::Kind::Path) out.insert(e.rhs.path);
      return;
    case Expr::Kind::Operand:
      if (e.lhs.kind == Operand::Kind::Path) out.insert(e.lhs.path);
      return;
  }
}

inline std::set<Path> freePaths(const Expr& e) {
  std::set<Path> out;
  collectFreePaths(e, out);
  return out;
}

}  // namespace mvmob
