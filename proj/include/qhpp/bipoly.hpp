#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhpp/rational.hpp"

namespace qhpp {

class UniPoly;

// Exponent pair (i, j) for x^i y^j.
using Exp = std::pair<int, int>;

// Sparse bivariate polynomial over Q. Zero coefficients are never stored.
class BiPoly {
 public:
  using Terms = std::map<Exp, Rat>;

  BiPoly() = default;
  explicit BiPoly(const Rat& c);
  static BiPoly monomial(int i, int j, const Rat& c);
  static BiPoly var_x();
  static BiPoly var_y();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // -1 for the zero polynomial.
  int degree() const;
  int degree_x() const;
  int degree_y() const;
  bool is_homogeneous() const;
  bool is_constant() const;

  Rat coeff(int i, int j) const;
  void add_term(int i, int j, const Rat& c);

  // Leading exponent in graded lex order with x > y.
  Exp leading_exp() const;
  Rat leading_coeff() const;

  BiPoly homogeneous_part(int k) const;
  BiPoly swap_xy() const;
  BiPoly diff_x() const;
  BiPoly diff_y() const;
  BiPoly pow(unsigned e) const;

  Rat eval(const Rat& x, const Rat& y) const;
  double eval(double x, double y) const;

  // f(1, u) and f(v, 1).
  UniPoly at_x1() const;
  UniPoly at_y1() const;
  // f(x, 0) in x and f(0, y) in y.
  UniPoly at_y0() const;
  UniPoly at_x0() const;
  // f(x, y0 + ...) style substitution: returns f(a*x + b*y, c*x + e*y).
  BiPoly linear_substitute(const Rat& a, const Rat& b, const Rat& c, const Rat& e) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rat& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rat& c) { return a *= c; }
  friend BiPoly operator*(const Rat& c, BiPoly a) { return a *= c; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  // Canonical text, terms in descending graded lex order; "0" for zero.
  std::string to_string() const;

 private:
  Terms terms_;
};

// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<BiPoly> divide_exact(const BiPoly& a, const BiPoly& b);

// Greatest common divisor, normalized to leading coefficient 1 (zero if both zero).
BiPoly gcd(const BiPoly& a, const BiPoly& b);

// Divide by the leading coefficient.
BiPoly make_monic(const BiPoly& a);

}  // namespace qhpp
