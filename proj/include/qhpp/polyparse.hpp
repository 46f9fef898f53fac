#pragma once

#include <algorithm>
#include <string>

#include "qhpp/bipoly.hpp"

namespace qhpp {

// Right-hand sides of x' = P(x, y), y' = Q(x, y).
struct PolySystem {
  BiPoly p;
  BiPoly q;

  int degree() const { return std::max(p.degree(), q.degree()); }
  PolySystem swap_xy() const { return {q.swap_xy(), p.swap_xy()}; }
  friend bool operator==(const PolySystem& a, const PolySystem& b) { return a.p == b.p && a.q == b.q; }
};

// Throws ZeroSystemError when P*Q vanishes identically.
void require_nonzero(const PolySystem& s);

// Grammar: lines `dx/dt = <expr>` and `dy/dt = <expr>`, `#` comment lines, blank lines.
// <expr> uses + - * ^, parentheses, integers, rationals a/b, and the variables x, y.
PolySystem parse_system(const std::string& text);
BiPoly parse_poly(const std::string& text);

std::string print_system(const PolySystem& s);

struct CoprimeResult {
  bool coprime = true;
  BiPoly factor;  // monic gcd; the constant 1 when coprime
};

CoprimeResult coprime_check(const PolySystem& s);

Rat eval_poly(const BiPoly& f, const Rat& x, const Rat& y);

}  // namespace qhpp
