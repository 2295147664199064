#include "alphagersch/expr.hpp"

#include <cctype>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <utility>

#include "alphagersch/errors.hpp"

namespace ag {

namespace {

using I128 = __int128;

long long narrow128(I128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw Error(errc::invalid_argument,
                std::string("rational constant overflow in ") + what);
  return static_cast<long long>(v);
}

I128 gcd128(I128 a, I128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    I128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make_rational(I128 num, I128 den, const char* what) {
  if (den == 0)
    throw Error(errc::invalid_argument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  I128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  return Rational{narrow128(num, what), narrow128(den, what)};
}

}  // namespace

Rational Rational::of(long long num, long long den) {
  return make_rational(num, den, "construction");
}

Rational operator+(Rational a, Rational b) {
  return make_rational(I128(a.num) * b.den + I128(b.num) * a.den,
                       I128(a.den) * b.den, "addition");
}

Rational operator-(Rational a, Rational b) {
  return make_rational(I128(a.num) * b.den - I128(b.num) * a.den,
                       I128(a.den) * b.den, "subtraction");
}

Rational operator*(Rational a, Rational b) {
  return make_rational(I128(a.num) * b.num, I128(a.den) * b.den,
                       "multiplication");
}

Rational operator-(Rational a) { return Rational{-a.num, a.den}; }

Rational rational_pow(Rational a, int k) {
  Rational r{1, 1};
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

bool operator==(Rational a, Rational b) {
  return a.num == b.num && a.den == b.den;
}

struct Expr::Node {
  Kind kind;
  Rational value{0, 1};  // constant
  int index = 0;         // variable
  int exponent = 0;      // int_pow
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr const_node(Rational v) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::constant;
  n->value = v;
  return n;
}

bool is_const(const NodePtr& n) { return n->kind == Expr::Kind::constant; }

// Peel a constant factor off a node: constant c -> (c, null),
// c * e / e * c -> (c, e), -e recurses with the sign flipped. Everything
// else is (1, node). Keeps products in the canonical constant-first shape
// so repeated differentiation folds coefficients exactly.
std::pair<Rational, NodePtr> split_const_factor(const NodePtr& n) {
  switch (n->kind) {
    case Expr::Kind::constant:
      return {n->value, nullptr};
    case Expr::Kind::mul:
      if (is_const(n->a)) return {n->a->value, n->b};
      if (is_const(n->b)) return {n->b->value, n->a};
      return {Rational{1, 1}, n};
    case Expr::Kind::neg: {
      auto [c, core] = split_const_factor(n->a);
      return {-c, core};
    }
    default:
      return {Rational{1, 1}, n};
  }
}

}  // namespace

Expr Expr::constant(Rational value) { return Expr(const_node(value)); }

Expr Expr::constant(long long value) {
  return Expr(const_node(Rational{value, 1}));
}

Expr Expr::variable(int index) {
  if (index < 0) throw Error(errc::index, "variable index must be >= 0");
  auto n = std::make_shared<Node>();
  n->kind = Kind::variable;
  n->index = index;
  return Expr(n);
}

Expr Expr::add(Expr a, Expr b) {
  if (is_const(a.node_) && is_const(b.node_))
    return constant(a.node_->value + b.node_->value);
  if (is_const(a.node_) && a.node_->value.is_zero()) return b;
  if (is_const(b.node_) && b.node_->value.is_zero()) return a;
  auto n = std::make_shared<Node>();
  n->kind = Kind::add;
  n->a = a.node_;
  n->b = b.node_;
  return Expr(n);
}

Expr Expr::sub(Expr a, Expr b) {
  if (is_const(a.node_) && is_const(b.node_))
    return constant(a.node_->value - b.node_->value);
  if (is_const(b.node_) && b.node_->value.is_zero()) return a;
  if (is_const(a.node_) && a.node_->value.is_zero()) return neg(b);
  auto n = std::make_shared<Node>();
  n->kind = Kind::sub;
  n->a = a.node_;
  n->b = b.node_;
  return Expr(n);
}

Expr Expr::mul(Expr a, Expr b) {
  auto [ca, corea] = split_const_factor(a.node_);
  auto [cb, coreb] = split_const_factor(b.node_);
  const Rational c = ca * cb;
  if (c.is_zero()) return constant(Rational{0, 1});
  NodePtr core;
  if (corea && coreb) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::mul;
    n->a = corea;
    n->b = coreb;
    core = n;
  } else if (corea) {
    core = corea;
  } else {
    core = coreb;
  }
  if (!core) return constant(c);
  if (c.is_one()) return Expr(core);
  auto n = std::make_shared<Node>();
  n->kind = Kind::mul;
  n->a = const_node(c);
  n->b = core;
  return Expr(n);
}

Expr Expr::neg(Expr a) {
  auto [c, core] = split_const_factor(a.node_);
  if (!core) return constant(-c);
  if (c.is_one()) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::neg;
    n->a = a.node_;
    return Expr(n);
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::mul;
  n->a = const_node(-c);
  n->b = core;
  return Expr(n);
}

Expr Expr::int_pow(Expr a, int exponent) {
  if (exponent < 0)
    throw Error(errc::invalid_argument, "exponent must be >= 0");
  if (exponent == 0) return constant(Rational{1, 1});
  if (exponent == 1) return a;
  if (is_const(a.node_))
    return constant(rational_pow(a.node_->value, exponent));
  auto n = std::make_shared<Node>();
  n->kind = Kind::int_pow;
  n->exponent = exponent;
  n->a = a.node_;
  return Expr(n);
}

Expr::Kind Expr::kind() const { return node_->kind; }

Rational Expr::constant_value() const {
  if (node_->kind != Kind::constant)
    throw Error(errc::invalid_argument, "not a constant node");
  return node_->value;
}

int Expr::variable_index() const {
  if (node_->kind != Kind::variable)
    throw Error(errc::invalid_argument, "not a variable node");
  return node_->index;
}

int Expr::exponent() const {
  if (node_->kind != Kind::int_pow)
    throw Error(errc::invalid_argument, "not a power node");
  return node_->exponent;
}

Expr Expr::child(int which) const {
  const NodePtr& c = which == 0 ? node_->a : node_->b;
  if (!c) throw Error(errc::invalid_argument, "node has no such child");
  return Expr(c);
}

bool Expr::is_constant(long long value) const {
  return node_->kind == Kind::constant &&
         node_->value == Rational{value, 1};
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  enum class Kind { number, variable, plus, minus, star, caret, slash,
                    lparen, rparen, end };
  Kind kind;
  int pos = 0;
  Rational value{0, 1};  // number
  bool integral = false; // number had no decimal point
  int index = 0;         // variable, zero-based
};

[[noreturn]] void syntax_error(int pos, const std::string& message) {
  std::ostringstream os;
  os << "syntax error at position " << pos << ": " << message;
  throw Error(errc::syntax, os.str());
}

class Lexer {
 public:
  Lexer(const std::string& text, int dim) : text_(text), dim_(dim) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    Token t;
    t.pos = static_cast<int>(pos_);
    if (pos_ >= text_.size()) {
      t.kind = Token::Kind::end;
      current_ = t;
      return;
    }
    const char c = text_[pos_];
    switch (c) {
      case '+': t.kind = Token::Kind::plus; ++pos_; break;
      case '-': t.kind = Token::Kind::minus; ++pos_; break;
      case '*': t.kind = Token::Kind::star; ++pos_; break;
      case '^': t.kind = Token::Kind::caret; ++pos_; break;
      case '/': t.kind = Token::Kind::slash; ++pos_; break;
      case '(': t.kind = Token::Kind::lparen; ++pos_; break;
      case ')': t.kind = Token::Kind::rparen; ++pos_; break;
      default:
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
          lex_number(t);
        } else if (c == 'x') {
          lex_variable(t);
        } else {
          syntax_error(t.pos, std::string("unexpected character '") + c + "'");
        }
    }
    current_ = t;
  }

  void lex_number(Token& t) {
    t.kind = Token::Kind::number;
    I128 intpart = 0;
    I128 scale = 1;
    bool any_digit = false;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      intpart = intpart * 10 + (text_[pos_] - '0');
      if (intpart > INT64_MAX) syntax_error(t.pos, "constant literal too large");
      any_digit = true;
      ++pos_;
    }
    t.integral = true;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      t.integral = false;
      ++pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        intpart = intpart * 10 + (text_[pos_] - '0');
        scale *= 10;
        if (intpart > INT64_MAX || scale > INT64_MAX)
          syntax_error(t.pos, "constant literal too large");
        any_digit = true;
        ++pos_;
      }
    }
    if (!any_digit) syntax_error(t.pos, "malformed number");
    t.value = make_rational(intpart, scale, "literal");
  }

  void lex_variable(Token& t) {
    t.kind = Token::Kind::variable;
    ++pos_;  // past 'x'
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      syntax_error(t.pos, "expected a variable index after 'x'");
    long long index = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      index = index * 10 + (text_[pos_] - '0');
      if (index > 1000000) syntax_error(t.pos, "variable index too large");
      ++pos_;
    }
    if (index < 1 || index > dim_) {
      std::ostringstream os;
      os << "variable x" << index << " out of range at position " << t.pos
         << " (dimension " << dim_ << ")";
      throw Error(errc::index, os.str());
    }
    t.index = static_cast<int>(index - 1);
  }

  const std::string& text_;
  int dim_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  Parser(const std::string& text, int dim) : lexer_(text, dim) {}

  Expr parse() {
    Expr e = parse_sum();
    const Token& t = lexer_.peek();
    if (t.kind != Token::Kind::end)
      syntax_error(t.pos, "unexpected trailing input");
    return e;
  }

 private:
  Expr parse_sum() {
    Expr e = parse_term();
    for (;;) {
      const Token& t = lexer_.peek();
      if (t.kind == Token::Kind::plus) {
        lexer_.take();
        e = Expr::add(e, parse_term());
      } else if (t.kind == Token::Kind::minus) {
        lexer_.take();
        e = Expr::sub(e, parse_term());
      } else {
        return e;
      }
    }
  }

  Expr parse_term() {
    Expr e = parse_factor();
    for (;;) {
      const Token& t = lexer_.peek();
      if (t.kind == Token::Kind::star) {
        lexer_.take();
        e = Expr::mul(e, parse_factor());
      } else if (t.kind == Token::Kind::slash) {
        syntax_error(t.pos, "'/' is only allowed between integer constants");
      } else {
        return e;
      }
    }
  }

  Expr parse_factor() {
    const Token& t = lexer_.peek();
    if (t.kind == Token::Kind::minus) {
      lexer_.take();
      return Expr::neg(parse_factor());
    }
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_atom();
    while (lexer_.peek().kind == Token::Kind::caret) {
      lexer_.take();
      const Token t = lexer_.take();
      if (t.kind != Token::Kind::number || !t.integral || t.value.den != 1)
        syntax_error(t.pos, "exponent must be a nonnegative integer");
      if (t.value.num > 9999)
        syntax_error(t.pos, "exponent too large");
      base = Expr::int_pow(base, static_cast<int>(t.value.num));
    }
    return base;
  }

  Expr parse_atom() {
    const Token t = lexer_.take();
    switch (t.kind) {
      case Token::Kind::number: {
        // integer '/' integer folds to a single rational constant
        if (lexer_.peek().kind == Token::Kind::slash) {
          if (!t.integral || t.value.den != 1)
            syntax_error(lexer_.peek().pos,
                         "rational constant must be integer/integer");
          lexer_.take();
          const Token denom = lexer_.take();
          if (denom.kind != Token::Kind::number || !denom.integral ||
              denom.value.den != 1)
            syntax_error(denom.pos,
                         "rational constant must be integer/integer");
          if (denom.value.num == 0)
            syntax_error(denom.pos, "division by zero in rational constant");
          return Expr::constant(Rational::of(t.value.num, denom.value.num));
        }
        return Expr::constant(t.value);
      }
      case Token::Kind::variable:
        return Expr::variable(t.index);
      case Token::Kind::lparen: {
        Expr e = parse_sum();
        const Token close = lexer_.take();
        if (close.kind != Token::Kind::rparen)
          syntax_error(close.pos, "expected ')'");
        return e;
      }
      case Token::Kind::end:
        syntax_error(t.pos, "unexpected end of input");
      default:
        syntax_error(t.pos, "expected a number, variable, or '('");
    }
  }

  Lexer lexer_;
};

}  // namespace

Expr parse_expression(const std::string& text, int dim) {
  if (dim < 1)
    throw Error(errc::invalid_argument, "dimension must be >= 1");
  return Parser(text, dim).parse();
}

ParsedExpression parse_expression_file(const std::string& file_text) {
  std::istringstream is(file_text);
  std::string header;
  if (!std::getline(is, header))
    throw Error(errc::syntax, "expression file is empty");
  if (!header.empty() && header.back() == '\r') header.pop_back();
  std::size_t eq = header.find('=');
  if (header.compare(0, 1, "n") != 0 || eq == std::string::npos)
    throw Error(errc::syntax, "expression file must start with \"n=<dim>\"");
  int dim = 0;
  try {
    dim = std::stoi(header.substr(eq + 1));
  } catch (const std::exception&) {
    throw Error(errc::syntax, "malformed dimension in expression file header");
  }
  if (dim < 1)
    throw Error(errc::syntax, "dimension in expression file must be >= 1");
  std::string line;
  std::string body;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!body.empty()) body += ' ';
    body += line;
  }
  return ParsedExpression{dim, parse_expression(body, dim)};
}

// ---------------------------------------------------------------------------
// Calculus and evaluation

Expr differentiate(const Expr& e, int var) {
  switch (e.kind()) {
    case Expr::Kind::constant:
      return Expr::constant(0);
    case Expr::Kind::variable:
      return Expr::constant(e.variable_index() == var ? 1 : 0);
    case Expr::Kind::add:
      return Expr::add(differentiate(e.child(0), var),
                       differentiate(e.child(1), var));
    case Expr::Kind::sub:
      return Expr::sub(differentiate(e.child(0), var),
                       differentiate(e.child(1), var));
    case Expr::Kind::mul:
      return Expr::add(
          Expr::mul(differentiate(e.child(0), var), e.child(1)),
          Expr::mul(e.child(0), differentiate(e.child(1), var)));
    case Expr::Kind::neg:
      return Expr::neg(differentiate(e.child(0), var));
    case Expr::Kind::int_pow: {
      const int k = e.exponent();
      return Expr::mul(
          Expr::mul(Expr::constant(k), Expr::int_pow(e.child(0), k - 1)),
          differentiate(e.child(0), var));
    }
  }
  throw Error(errc::invalid_argument, "unknown node kind");
}

std::vector<Expr> hessian(const Expr& e, int dim) {
  if (dim < 1) throw Error(errc::invalid_argument, "dimension must be >= 1");
  std::vector<Expr> h;
  h.reserve(static_cast<std::size_t>(dim) * dim);
  for (int i = 0; i < dim; ++i) {
    const Expr gi = differentiate(e, i);
    for (int j = 0; j < dim; ++j) h.push_back(differentiate(gi, j));
  }
  return h;
}

double eval_point(const Expr& e, const std::vector<double>& x) {
  switch (e.kind()) {
    case Expr::Kind::constant:
      return e.constant_value().value();
    case Expr::Kind::variable: {
      const int i = e.variable_index();
      if (i >= static_cast<int>(x.size()))
        throw Error(errc::invalid_argument, "evaluation point too short");
      return x[i];
    }
    case Expr::Kind::add:
      return eval_point(e.child(0), x) + eval_point(e.child(1), x);
    case Expr::Kind::sub:
      return eval_point(e.child(0), x) - eval_point(e.child(1), x);
    case Expr::Kind::mul:
      return eval_point(e.child(0), x) * eval_point(e.child(1), x);
    case Expr::Kind::neg:
      return -eval_point(e.child(0), x);
    case Expr::Kind::int_pow: {
      const double b = eval_point(e.child(0), x);
      double r = 1.0;
      for (int i = 0; i < e.exponent(); ++i) r *= b;
      return r;
    }
  }
  throw Error(errc::invalid_argument, "unknown node kind");
}

Interval eval_interval(const Expr& e, const Box& box) {
  switch (e.kind()) {
    case Expr::Kind::constant: {
      const double v = e.constant_value().value();
      return Interval(v, v);
    }
    case Expr::Kind::variable: {
      const int i = e.variable_index();
      if (i >= box.dim())
        throw Error(errc::invalid_argument, "box dimension too small");
      return box[i];
    }
    case Expr::Kind::add:
      return eval_interval(e.child(0), box) + eval_interval(e.child(1), box);
    case Expr::Kind::sub:
      return eval_interval(e.child(0), box) - eval_interval(e.child(1), box);
    case Expr::Kind::mul:
      return eval_interval(e.child(0), box) * eval_interval(e.child(1), box);
    case Expr::Kind::neg:
      return -eval_interval(e.child(0), box);
    case Expr::Kind::int_pow:
      return int_pow(eval_interval(e.child(0), box), e.exponent());
  }
  throw Error(errc::invalid_argument, "unknown node kind");
}

SymmetricIntervalMatrix interval_hessian(const Expr& e, const Box& box) {
  const int n = box.dim();
  const std::vector<Expr> h = hessian(e, n);
  std::vector<Interval> entries(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    entries[i * n + i] = eval_interval(h[i * n + i], box);
    for (int j = i + 1; j < n; ++j) {
      // (i,j) and (j,i) are the same function written differently; both
      // enclose its range, so the intersection does too and is tighter.
      const Interval m = intersect(eval_interval(h[i * n + j], box),
                                   eval_interval(h[j * n + i], box));
      entries[i * n + j] = m;
      entries[j * n + i] = m;
    }
  }
  return SymmetricIntervalMatrix(n, std::move(entries));
}

}  // namespace ag
