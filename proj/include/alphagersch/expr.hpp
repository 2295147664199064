#ifndef ALPHAGERSCH_EXPR_HPP
#define ALPHAGERSCH_EXPR_HPP

#include <memory>
#include <string>
#include <vector>

#include "alphagersch/interval.hpp"
#include "alphagersch/matrix.hpp"

namespace ag {

// Exact rational constant. Constant arithmetic during parsing and
// differentiation is done in these (128-bit intermediates, normalized by
// gcd), so coefficients like (100/3)*3*2 fold to exactly 200 and integer
// Hessian entries evaluate without roundoff.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long num, long long den);

  double value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  bool is_zero() const { return num == 0; }
  bool is_one() const { return num == 1 && den == 1; }
};

Rational operator+(Rational a, Rational b);
Rational operator-(Rational a, Rational b);
Rational operator*(Rational a, Rational b);
Rational operator-(Rational a);
Rational rational_pow(Rational a, int k);
bool operator==(Rational a, Rational b);

// Immutable polynomial expression tree. Variable indices are zero-based in
// the API; the text syntax uses x1..xn.
class Expr {
 public:
  enum class Kind { constant, variable, add, sub, mul, neg, int_pow };

  // Factories fold constants: zero/one absorption, exact rational folding,
  // and collapsing of nested constant factors in products. Nothing else is
  // simplified.
  static Expr constant(Rational value);
  static Expr constant(long long value);
  static Expr variable(int index);
  static Expr add(Expr a, Expr b);
  static Expr sub(Expr a, Expr b);
  static Expr mul(Expr a, Expr b);
  static Expr neg(Expr a);
  static Expr int_pow(Expr a, int exponent);

  Kind kind() const;
  Rational constant_value() const;  // kind() == constant
  int variable_index() const;       // kind() == variable
  int exponent() const;             // kind() == int_pow
  Expr child(int which) const;      // 0 = left/only, 1 = right

  bool is_constant(long long value) const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Parse the polynomial grammar: numbers (integer, decimal, or
// integer/integer rationals, folded to one constant), variables x1..xn,
// + - * ^, unary minus, parentheses. '^' binds tightest and takes a
// nonnegative integer literal, then unary minus, then '*', then '+'/'-'.
// Throws errc::syntax with a position, or errc::index for a variable
// index outside 1..dim.
Expr parse_expression(const std::string& text, int dim);

// Expression file format: first line "n=<dim>", second line the expression.
struct ParsedExpression {
  int dim = 0;
  Expr expr = Expr::constant(0);
};
ParsedExpression parse_expression_file(const std::string& file_text);

// Partial derivative with respect to variable `var` (zero-based).
Expr differentiate(const Expr& e, int var);

// Row-major n*n matrix of second partials, entry (i,j) = d_j d_i e.
std::vector<Expr> hessian(const Expr& e, int dim);

double eval_point(const Expr& e, const std::vector<double>& x);

// Natural interval extension over the box.
Interval eval_interval(const Expr& e, const Box& box);

// Entrywise interval evaluation of the Hessian, symmetrized by
// intersecting the (i,j) and (j,i) enclosures.
SymmetricIntervalMatrix interval_hessian(const Expr& e, const Box& box);

}  // namespace ag

#endif
