#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhpp/unipoly.hpp"

namespace qhpp {

// A real root of a squarefree polynomial, isolated by a rational interval (lo, hi).
// Rational roots carry their exact value and a degenerate interval lo == hi.
class AlgebraicRoot {
 public:
  AlgebraicRoot(UniPoly poly, Rat lo, Rat hi, int multiplicity);
  static AlgebraicRoot rational(UniPoly poly, const Rat& value, int multiplicity);

  const UniPoly& poly() const { return poly_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  int multiplicity() const { return mult_; }
  bool is_rational() const { return exact_.has_value(); }
  const std::optional<Rat>& exact() const { return exact_; }

  // Halve the interval once.
  void refine();
  // Refine until hi - lo <= width.
  void refine_to(const Rat& width);
  double approx() const;
  Rat midpoint() const { return (lo_ + hi_) / 2; }

  // Sign of g at this root; refines the interval as needed. Throws InternalError after 256 bisections.
  int sign_of(const UniPoly& g);
  // Signs of g just left and right of the root (g may vanish at the root).
  std::pair<int, int> side_signs(const UniPoly& g);

  std::string to_string() const;

 private:
  UniPoly poly_;
  Rat lo_, hi_;
  int mult_;
  std::optional<Rat> exact_;
  int sign_lo_ = 0;
};

// All distinct real roots of f, ascending, with multiplicities. f must be nonzero.
std::vector<AlgebraicRoot> real_roots(const UniPoly& f);

// Ordering of two roots (refines both). Returns -1, 0, 1.
int compare_roots(AlgebraicRoot& a, AlgebraicRoot& b);
int compare_root(AlgebraicRoot& a, const Rat& r);

}  // namespace qhpp
