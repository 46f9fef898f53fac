#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qhpp/rational.hpp"

namespace qhpp {

// Dense univariate polynomial over Q, coefficients low to high, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  explicit UniPoly(const Rat& c);
  static UniPoly monomial(int k, const Rat& c);
  static UniPoly var();
  // Product of (u - r) over the given roots.
  static UniPoly from_roots(const std::vector<Rat>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat coeff(int k) const;
  const Rat& lead() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& u) const;
  double eval(double u) const;
  int sign_at(const Rat& u) const;

  UniPoly derivative() const;
  UniPoly monic() const;
  // Integer coefficients with gcd 1 and positive leading coefficient.
  UniPoly primitive_integer() const;
  // f(-u)
  UniPoly reflect() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rat& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rat& c) { return a *= c; }
  friend UniPoly operator*(const Rat& c, UniPoly a) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);

// Monic gcd; zero only when both inputs are zero.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// Yun's algorithm: f = c * prod f_k^k with squarefree, pairwise coprime, monic f_k.
// Returns (f_k, k) for non-constant f_k.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);
UniPoly squarefree_part(const UniPoly& f);

// Multiplicity of r as a root of f (f nonzero).
int root_multiplicity(const UniPoly& f, const Rat& r);

class SturmSequence {
 public:
  explicit SturmSequence(const UniPoly& f);
  int variations_at(const Rat& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;
  // Distinct roots in (a, b].
  int count(const Rat& a, const Rat& b) const;
  int count_all() const;

 private:
  std::vector<UniPoly> seq_;
};

// Cauchy bound: every real root lies in (-B, B).
Rat cauchy_bound(const UniPoly& f);

}  // namespace qhpp
