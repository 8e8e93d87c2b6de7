#include "hhb/expr.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace hhb {
namespace {

ExprPtr node(NodeKind k, ExprPtr a = nullptr, ExprPtr b = nullptr) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

bool is_const(const ExprPtr& e, double v) {
  return e->kind == NodeKind::Constant && e->value == v;
}

bool is_const(const ExprPtr& e) { return e->kind == NodeKind::Constant; }

double apply_fn(UnaryFn fn, double x) {
  switch (fn) {
    case UnaryFn::Sin:
      return std::sin(x);
    case UnaryFn::Cos:
      return std::cos(x);
    case UnaryFn::Exp:
      return std::exp(x);
    case UnaryFn::Ln:
      return std::log(x);
    case UnaryFn::Sqrt:
      return std::sqrt(x);
    case UnaryFn::Abs:
      return std::fabs(x);
    case UnaryFn::Sign:
      return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
  }
  return 0.0;
}

const char* fn_name(UnaryFn fn) {
  switch (fn) {
    case UnaryFn::Sin:
      return "sin";
    case UnaryFn::Cos:
      return "cos";
    case UnaryFn::Exp:
      return "exp";
    case UnaryFn::Ln:
      return "ln";
    case UnaryFn::Sqrt:
      return "sqrt";
    case UnaryFn::Abs:
      return "abs";
    case UnaryFn::Sign:
      return "sign";
  }
  return "?";
}

}  // namespace

ExprPtr make_const(double v) {
  auto n = std::make_shared<ExprNode>();
  n->kind = NodeKind::Constant;
  n->value = v;
  return n;
}

ExprPtr make_var() { return node(NodeKind::Variable); }

ExprPtr make_add(ExprPtr a, ExprPtr b) {
  if (is_const(a, 0.0)) return b;
  if (is_const(b, 0.0)) return a;
  if (is_const(a) && is_const(b)) return make_const(a->value + b->value);
  return node(NodeKind::Add, std::move(a), std::move(b));
}

ExprPtr make_sub(ExprPtr a, ExprPtr b) {
  if (is_const(b, 0.0)) return a;
  if (is_const(a) && is_const(b)) return make_const(a->value - b->value);
  if (is_const(a, 0.0)) return make_neg(std::move(b));
  return node(NodeKind::Sub, std::move(a), std::move(b));
}

ExprPtr make_mul(ExprPtr a, ExprPtr b) {
  if (is_const(a, 0.0) || is_const(b, 0.0)) return make_const(0.0);
  if (is_const(a, 1.0)) return b;
  if (is_const(b, 1.0)) return a;
  if (is_const(a) && is_const(b)) return make_const(a->value * b->value);
  return node(NodeKind::Mul, std::move(a), std::move(b));
}

ExprPtr make_div(ExprPtr a, ExprPtr b) {
  if (is_const(b, 1.0)) return a;
  if (is_const(a, 0.0) && !is_const(b, 0.0)) return make_const(0.0);
  if (is_const(a) && is_const(b) && b->value != 0.0)
    return make_const(a->value / b->value);
  return node(NodeKind::Div, std::move(a), std::move(b));
}

ExprPtr make_neg(ExprPtr a) {
  if (is_const(a)) return make_const(-a->value);
  if (a->kind == NodeKind::Neg) return a->a;
  return node(NodeKind::Neg, std::move(a));
}

ExprPtr make_pow(ExprPtr base, ExprPtr exponent) {
  if (is_const(exponent, 1.0)) return base;
  if (is_const(exponent, 0.0)) return make_const(1.0);
  if (is_const(base) && is_const(exponent))
    return make_const(std::pow(base->value, exponent->value));
  return node(NodeKind::Pow, std::move(base), std::move(exponent));
}

ExprPtr make_call(UnaryFn fn, ExprPtr a) {
  if (is_const(a)) return make_const(apply_fn(fn, a->value));
  auto n = std::make_shared<ExprNode>();
  n->kind = NodeKind::Call;
  n->fn = fn;
  n->a = std::move(a);
  return n;
}

double eval_expr(const ExprPtr& e, double x) {
  switch (e->kind) {
    case NodeKind::Constant:
      return e->value;
    case NodeKind::Variable:
      return x;
    case NodeKind::Add:
      return eval_expr(e->a, x) + eval_expr(e->b, x);
    case NodeKind::Sub:
      return eval_expr(e->a, x) - eval_expr(e->b, x);
    case NodeKind::Mul:
      return eval_expr(e->a, x) * eval_expr(e->b, x);
    case NodeKind::Div:
      return eval_expr(e->a, x) / eval_expr(e->b, x);
    case NodeKind::Neg:
      return -eval_expr(e->a, x);
    case NodeKind::Pow:
      return std::pow(eval_expr(e->a, x), eval_expr(e->b, x));
    case NodeKind::Call:
      return apply_fn(e->fn, eval_expr(e->a, x));
  }
  return 0.0;
}

ExprPtr diff_expr(const ExprPtr& e) {
  switch (e->kind) {
    case NodeKind::Constant:
      return make_const(0.0);
    case NodeKind::Variable:
      return make_const(1.0);
    case NodeKind::Add:
      return make_add(diff_expr(e->a), diff_expr(e->b));
    case NodeKind::Sub:
      return make_sub(diff_expr(e->a), diff_expr(e->b));
    case NodeKind::Mul:
      return make_add(make_mul(diff_expr(e->a), e->b),
                      make_mul(e->a, diff_expr(e->b)));
    case NodeKind::Div:
      return make_div(make_sub(make_mul(diff_expr(e->a), e->b),
                               make_mul(e->a, diff_expr(e->b))),
                      make_mul(e->b, e->b));
    case NodeKind::Neg:
      return make_neg(diff_expr(e->a));
    case NodeKind::Pow: {
      if (is_const(e->b)) {
        // power rule with chain: c * a^(c-1) * a'
        const double c = e->b->value;
        return make_mul(
            make_mul(make_const(c), make_pow(e->a, make_const(c - 1.0))),
            diff_expr(e->a));
      }
      if (is_const(e->a)) {
        // c^g = exp(g ln c): c^g * ln(c) * g'
        return make_mul(make_mul(e, make_const(std::log(e->a->value))),
                        diff_expr(e->b));
      }
      throw UnsupportedConstruct(
          "cannot differentiate f(x)^g(x) with both parts varying");
    }
    case NodeKind::Call: {
      ExprPtr inner = diff_expr(e->a);
      switch (e->fn) {
        case UnaryFn::Sin:
          return make_mul(make_call(UnaryFn::Cos, e->a), std::move(inner));
        case UnaryFn::Cos:
          return make_mul(make_neg(make_call(UnaryFn::Sin, e->a)),
                          std::move(inner));
        case UnaryFn::Exp:
          return make_mul(make_call(UnaryFn::Exp, e->a), std::move(inner));
        case UnaryFn::Ln:
          return make_div(std::move(inner), e->a);
        case UnaryFn::Sqrt:
          return make_div(std::move(inner),
                          make_mul(make_const(2.0),
                                   make_call(UnaryFn::Sqrt, e->a)));
        case UnaryFn::Abs:
          return make_mul(make_call(UnaryFn::Sign, e->a), std::move(inner));
        case UnaryFn::Sign:
          return make_const(0.0);  // zero almost everywhere
      }
      return make_const(0.0);
    }
  }
  return make_const(0.0);
}

namespace {

// Shortest decimal string that parses back to exactly v.
std::string num_str(double v) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

// Precedence levels: Add/Sub 1, Mul/Div 2, Neg 3, Pow 4, atoms 5.
int prec_of(const ExprPtr& e) {
  switch (e->kind) {
    case NodeKind::Add:
    case NodeKind::Sub:
      return 1;
    case NodeKind::Mul:
    case NodeKind::Div:
      return 2;
    case NodeKind::Neg:
      return 3;
    case NodeKind::Pow:
      return 4;
    default:
      return 5;
  }
}

void print_rec(const ExprPtr& e, int parent_prec, std::string& out) {
  const bool parens = prec_of(e) < parent_prec;
  if (parens) out += '(';
  switch (e->kind) {
    case NodeKind::Constant:
      out += num_str(e->value);
      break;
    case NodeKind::Variable:
      out += 'x';
      break;
    case NodeKind::Add:
      print_rec(e->a, 1, out);
      out += '+';
      print_rec(e->b, 1, out);
      break;
    case NodeKind::Sub:
      print_rec(e->a, 1, out);
      out += '-';
      print_rec(e->b, 2, out);
      break;
    case NodeKind::Mul:
      print_rec(e->a, 2, out);
      out += '*';
      print_rec(e->b, 2, out);
      break;
    case NodeKind::Div:
      print_rec(e->a, 2, out);
      out += '/';
      print_rec(e->b, 3, out);
      break;
    case NodeKind::Neg:
      out += '-';
      print_rec(e->a, 3, out);
      break;
    case NodeKind::Pow: {
      // The grammar wants an atomic base; negative constants also need parens
      // so "-2^2" does not re-parse as -(2^2).
      const bool base_parens =
          prec_of(e->a) < 5 || (is_const(e->a) && e->a->value < 0.0);
      if (base_parens) out += '(';
      print_rec(e->a, 0, out);
      if (base_parens) out += ')';
      out += '^';
      if (is_const(e->b)) {
        out += num_str(e->b->value);
      } else {
        // Not grammar-reachable; printed for debugging only.
        out += '(';
        print_rec(e->b, 0, out);
        out += ')';
      }
      break;
    }
    case NodeKind::Call:
      out += fn_name(e->fn);
      out += '(';
      print_rec(e->a, 0, out);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

// --- parsing ---------------------------------------------------------------

struct Token {
  enum Type { Number, Ident, Op, End } type;
  std::size_t offset;
  double num = 0.0;
  char op = 0;
  std::string ident;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if ((c >= '0' && c <= '9') || c == '.') {
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(text.data() + i,
                                       text.data() + text.size(), value);
      if (ec != std::errc() || ptr == text.data() + i)
        throw ParseError("malformed number", i);
      out.push_back({Token::Number, i, value, 0, {}});
      i = static_cast<std::size_t>(ptr - text.data());
      continue;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             ((text[j] >= 'a' && text[j] <= 'z') ||
              (text[j] >= 'A' && text[j] <= 'Z') ||
              (text[j] >= '0' && text[j] <= '9') || text[j] == '_'))
        ++j;
      out.push_back(
          {Token::Ident, i, 0.0, 0, std::string(text.substr(i, j - i))});
      i = j;
      continue;
    }
    if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^' ||
        c == '(' || c == ')' || c == ',') {
      out.push_back({Token::Op, i, 0.0, c, {}});
      ++i;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Token::End, text.size(), 0.0, 0, {}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  ExprPtr run() {
    ExprPtr e = expr();
    if (cur().type != Token::End)
      throw ParseError("unexpected trailing input", cur().offset);
    return e;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  void advance() { ++pos_; }

  bool at_op(char c) const {
    return cur().type == Token::Op && cur().op == c;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (at_op('+') || at_op('-')) {
      const char op = cur().op;
      advance();
      ExprPtr r = term();
      e = op == '+' ? make_add(std::move(e), std::move(r))
                    : make_sub(std::move(e), std::move(r));
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (at_op('*') || at_op('/')) {
      const char op = cur().op;
      advance();
      ExprPtr r = factor();
      e = op == '*' ? make_mul(std::move(e), std::move(r))
                    : make_div(std::move(e), std::move(r));
    }
    return e;
  }

  ExprPtr factor() {
    if (at_op('-')) {
      advance();
      return make_neg(factor());
    }
    ExprPtr e = base();
    if (at_op('^')) {
      advance();
      bool neg = false;
      if (at_op('-')) {  // extension: signed exponent
        neg = true;
        advance();
      }
      if (cur().type != Token::Number)
        throw ParseError("expected number after '^'", cur().offset);
      const double ex = neg ? -cur().num : cur().num;
      advance();
      e = make_pow(std::move(e), make_const(ex));
    }
    return e;
  }

  ExprPtr base() {
    if (cur().type == Token::Number) {
      ExprPtr e = make_const(cur().num);
      advance();
      return e;
    }
    if (cur().type == Token::Ident) {
      const std::string name = cur().ident;
      const std::size_t off = cur().offset;
      advance();
      if (name == "x") return make_var();
      if (name == "pi") return make_const(M_PI);
      if (name == "e") return make_const(M_E);
      UnaryFn fn;
      if (name == "sin")
        fn = UnaryFn::Sin;
      else if (name == "cos")
        fn = UnaryFn::Cos;
      else if (name == "exp")
        fn = UnaryFn::Exp;
      else if (name == "ln")
        fn = UnaryFn::Ln;
      else if (name == "sqrt")
        fn = UnaryFn::Sqrt;
      else if (name == "abs")
        fn = UnaryFn::Abs;
      else
        throw ParseError("unknown identifier '" + name + "'", off);
      if (!at_op('('))
        throw ParseError("expected '(' after '" + name + "'", cur().offset);
      advance();
      ExprPtr arg = expr();
      if (at_op(','))
        throw ParseError("'" + name + "' takes a single argument",
                         cur().offset);
      if (!at_op(')'))
        throw ParseError("expected ')'", cur().offset);
      advance();
      return make_call(fn, std::move(arg));
    }
    if (at_op('(')) {
      advance();
      ExprPtr e = expr();
      if (!at_op(')'))
        throw ParseError("expected ')'", cur().offset);
      advance();
      return e;
    }
    throw ParseError("expected expression", cur().offset);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string print_expr(const ExprPtr& e) {
  std::string out;
  print_rec(e, 0, out);
  return out;
}

ExprPtr parse_expression(std::string_view text) {
  return Parser(text).run();
}

}  // namespace hhb
