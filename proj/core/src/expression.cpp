#include "sasaki/expression.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "sasaki/errors.hpp"

namespace sasaki {

struct FieldExpression::Node {
  enum class Kind { number, variable, negate, add, sub, mul, div, pow, call };

  Kind kind;
  double number = 0.0;
  int var = 0;  // 0 = u, 1 = v
  std::string func;
  NodePtr lhs, rhs;
  std::size_t offset = 0;
};

namespace {

using Node = FieldExpression::Node;
using NodePtr = FieldExpression::NodePtr;
using Kind = Node::Kind;

const std::array<std::string_view, 12> kFunctions = {
    "sqrt", "exp", "ln",   "sin",  "cos",  "tan",
    "atan", "sinh", "cosh", "tanh", "atanh", "abs"};

bool known_function(std::string_view name) {
  for (auto f : kFunctions)
    if (f == name) return true;
  return false;
}

Jet2d apply_function(const std::string& name, const Jet2d& x,
                     std::size_t offset) {
  try {
    if (name == "sqrt") return sqrt(x);
    if (name == "exp") return exp(x);
    if (name == "ln") return log(x);
    if (name == "sin") return sin(x);
    if (name == "cos") return cos(x);
    if (name == "tan") return tan(x);
    if (name == "atan") return atan(x);
    if (name == "sinh") return sinh(x);
    if (name == "cosh") return cosh(x);
    if (name == "tanh") return tanh(x);
    if (name == "atanh") return atanh(x);
    if (name == "abs") return abs(x);
  } catch (const DomainError& e) {
    throw ParseError(std::string(e.what()) + " in " + name, offset);
  }
  throw ParseError("unknown function '" + name + "'", offset);
}

bool contains_variable(const NodePtr& n) {
  if (!n) return false;
  if (n->kind == Kind::variable) return true;
  return contains_variable(n->lhs) || contains_variable(n->rhs);
}

Jet2d eval_node(const NodePtr& n, const Jet2d& u, const Jet2d& v) {
  switch (n->kind) {
    case Kind::number:
      return Jet2d::constant(n->number, u.order());
    case Kind::variable:
      return n->var == 0 ? u : v;
    case Kind::negate:
      return -eval_node(n->lhs, u, v);
    case Kind::add:
      return eval_node(n->lhs, u, v) + eval_node(n->rhs, u, v);
    case Kind::sub:
      return eval_node(n->lhs, u, v) - eval_node(n->rhs, u, v);
    case Kind::mul:
      return eval_node(n->lhs, u, v) * eval_node(n->rhs, u, v);
    case Kind::div: {
      const Jet2d den = eval_node(n->rhs, u, v);
      if (den.value() == 0.0) throw ParseError("division by zero", n->offset);
      return eval_node(n->lhs, u, v) / den;
    }
    case Kind::pow: {
      const Jet2d base = eval_node(n->lhs, u, v);
      if (!contains_variable(n->rhs)) {
        const double p = eval_node(n->rhs, u, v).value();
        try {
          return pow(base, p);
        } catch (const DomainError& e) {
          throw ParseError(e.what(), n->offset);
        }
      }
      if (base.value() <= 0.0)
        throw ParseError("variable exponent needs a positive base", n->offset);
      return exp(eval_node(n->rhs, u, v) * log(base));
    }
    case Kind::call:
      return apply_function(n->func, eval_node(n->lhs, u, v), n->offset);
  }
  throw ParseError("corrupt expression tree", n->offset);
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr run() {
    NodePtr e = expression();
    skip_space();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return e;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  NodePtr fold(NodePtr n) {
    // collapse variable-free subtrees that evaluate cleanly
    if (n->kind == Kind::number || contains_variable(n)) return n;
    try {
      const Jet2d val =
          eval_node(n, Jet2d::variable(0.0, 0, 0), Jet2d::variable(0.0, 1, 0));
      auto folded = std::make_shared<Node>();
      folded->kind = Kind::number;
      folded->number = val.value() + 0.0;  // normalize -0
      folded->offset = n->offset;
      return folded;
    } catch (const Error&) {
      return n;  // defer the domain error to evaluation
    }
  }

  NodePtr binary(Kind kind, NodePtr lhs, NodePtr rhs, std::size_t offset) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    n->offset = offset;
    return fold(n);
  }

  NodePtr expression() {
    NodePtr lhs = term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (eat('+'))
        lhs = binary(Kind::add, lhs, term(), at);
      else if (eat('-'))
        lhs = binary(Kind::sub, lhs, term(), at);
      else
        return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (eat('*'))
        lhs = binary(Kind::mul, lhs, unary(), at);
      else if (eat('/'))
        lhs = binary(Kind::div, lhs, unary(), at);
      else
        return lhs;
    }
  }

  NodePtr unary() {
    skip_space();
    const std::size_t at = pos_;
    if (eat('-')) {
      auto n = std::make_shared<Node>();
      n->kind = Kind::negate;
      n->lhs = unary();
      n->offset = at;
      return fold(n);
    }
    if (eat('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    skip_space();
    const std::size_t at = pos_;
    if (eat('^')) return binary(Kind::pow, base, unary(), at);
    return base;
  }

  NodePtr atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const std::size_t at = pos_;
    const char c = text_[pos_];

    if (c == '(') {
      ++pos_;
      NodePtr e = expression();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return e;
    }

    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double value = 0.0;
      const char* begin = text_.data() + pos_;
      const char* end = text_.data() + text_.size();
      auto [ptr, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc()) throw ParseError("malformed number", at);
      pos_ += static_cast<std::size_t>(ptr - begin);
      auto n = std::make_shared<Node>();
      n->kind = Kind::number;
      n->number = value;
      n->offset = at;
      return n;
    }

    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t len = 0;
      while (pos_ + len < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_ + len])) ||
              text_[pos_ + len] == '_'))
        ++len;
      const std::string name(text_.substr(pos_, len));
      pos_ += len;

      if (name == "u" || name == "v") {
        auto n = std::make_shared<Node>();
        n->kind = Kind::variable;
        n->var = name == "u" ? 0 : 1;
        n->offset = at;
        return n;
      }
      if (known_function(name)) {
        if (!eat('(')) throw ParseError("expected '(' after " + name, pos_);
        NodePtr arg = expression();
        if (!eat(')')) throw ParseError("expected ')'", pos_);
        auto n = std::make_shared<Node>();
        n->kind = Kind::call;
        n->func = name;
        n->lhs = std::move(arg);
        n->offset = at;
        return fold(n);
      }
      throw ParseError("unknown identifier '" + name + "'", at);
    }

    throw ParseError(std::string("unexpected character '") + c + "'", at);
  }
};

int precedence(Kind k) {
  switch (k) {
    case Kind::add:
    case Kind::sub:
      return 1;
    case Kind::mul:
    case Kind::div:
      return 2;
    case Kind::negate:
      return 3;
    case Kind::pow:
      return 4;
    default:
      return 5;
  }
}

std::string format_number(double x) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, ptr);
}

void print_node(const NodePtr& n, std::string& out, int min_prec) {
  const int prec = precedence(n->kind);
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (n->kind) {
    case Kind::number:
      out += format_number(n->number);
      break;
    case Kind::variable:
      out += n->var == 0 ? 'u' : 'v';
      break;
    case Kind::negate:
      out += '-';
      print_node(n->lhs, out, 3);
      break;
    case Kind::add:
      print_node(n->lhs, out, 1);
      out += '+';
      print_node(n->rhs, out, 2);
      break;
    case Kind::sub:
      print_node(n->lhs, out, 1);
      out += '-';
      print_node(n->rhs, out, 2);
      break;
    case Kind::mul:
      print_node(n->lhs, out, 2);
      out += '*';
      print_node(n->rhs, out, 3);
      break;
    case Kind::div:
      print_node(n->lhs, out, 2);
      out += '/';
      print_node(n->rhs, out, 3);
      break;
    case Kind::pow:
      print_node(n->lhs, out, 5);
      out += '^';
      print_node(n->rhs, out, 3);
      break;
    case Kind::call:
      out += n->func;
      out += '(';
      print_node(n->lhs, out, 0);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

bool equal_nodes(const NodePtr& a, const NodePtr& b) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::number:
      return a->number == b->number;
    case Kind::variable:
      return a->var == b->var;
    case Kind::call:
      if (a->func != b->func) return false;
      return equal_nodes(a->lhs, b->lhs);
    case Kind::negate:
      return equal_nodes(a->lhs, b->lhs);
    default:
      return equal_nodes(a->lhs, b->lhs) && equal_nodes(a->rhs, b->rhs);
  }
}

}  // namespace

FieldExpression FieldExpression::parse(std::string_view text) {
  Parser p(text);
  return FieldExpression(p.run());
}

std::string FieldExpression::print() const {
  std::string out;
  print_node(root_, out, 0);
  return out;
}

Jet2d FieldExpression::eval(double u, double v, int order) const {
  return eval_node(root_, Jet2d::variable(u, 0, order),
                   Jet2d::variable(v, 1, order));
}

ScalarJetField FieldExpression::field() const {
  const NodePtr root = root_;
  return ScalarJetField([root](double u, double v, int order) {
    return eval_node(root, Jet2d::variable(u, 0, order),
                     Jet2d::variable(v, 1, order));
  });
}

bool FieldExpression::operator==(const FieldExpression& other) const {
  return equal_nodes(root_, other.root_);
}

ScalarJetField parse_field_expression(const std::string& text) {
  return FieldExpression::parse(text).field();
}

}  // namespace sasaki
