#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qhpp/polyparse.hpp"
#include "qhpp/roots.hpp"

namespace qhpp {

enum class A14Regime { Greater, Less, Equal };  // a14 compared with 1
std::string to_string(A14Regime r);

enum class RootCase { Three, Two, One };
std::string to_string(RootCase c);

// Sign data of the cubic target x' = x(c12 y^2 + c21 xy + c30 x^2), y' = y(y^2 + d12 xy + d21 x^2)
// of an X_111 member, normalised by d03.
struct H3Signature {
  Rat a14, a22, a30, b05, b13, b21;
  Rat c12, c21, c30, d12, d21;
  Rat delta;
  RootCase root_case = RootCase::One;
  std::string sub_case;  // "u11", "u12", "u13", "C31", "C32", "C33"; empty for three roots
  A14Regime regime = A14Regime::Less;
  A14Regime normalized_regime = A14Regime::Less;  // a14/b05 compared with 1

  // Three roots: 0 and u+-.
  std::optional<AlgebraicRoot> u_plus, u_minus;
  int p_plus = 0, p_minus = 0;    // sign P3(u+-)
  int gp_plus = 0, gp_minus = 0;  // sign G3'(u+-)
  // Two roots: 0 and u1 (reflected to u1 > 0 when needed).
  std::optional<AlgebraicRoot> u1;
  bool reflected = false;
  int p1 = 0;
  int g1 = 0;  // sign G3'(u1), or G3''(u1) for u13, after the reflection
  // One root.
  int g0 = 0;  // sign of the first nonvanishing derivative of G3 at 0 (order g0_order)
  int g0_order = 0;
  int p0 = 0;  // sign P3(0) = sign c30

  std::string iy_type;  // type of the singular point at the end of the y-axis
  std::string to_string() const;
};

// Throws PreconditionError for non-members, CommonFactorError for the excluded degenerate case.
H3Signature x111_signature(const PolySystem& q);
// Signature from the normalised cubic coefficients with a chosen regime.
H3Signature h3_signature(const Rat& c12, const Rat& c21, const Rat& c30, const Rat& d12, const Rat& d21,
                         A14Regime regime);

struct X111Label {
  int table = 0;        // 1 or 2
  std::string figure;   // e.g. "III.2"
  A14Regime regime = A14Regime::Less;
  std::string to_string() const;  // "Table 1 / Figure (III.2)"
};

// Throws NoRowMatchedError when no table row matches.
X111Label x111_label(const H3Signature& sig);

struct X111Census {
  int greater = 0;
  int less = 0;
  int equal = 0;
  int total = 0;
  std::map<std::string, std::vector<std::string>> labels;  // regime -> sorted labels
  int unmatched = 0;  // sampled sign tuples with no table row
};

X111Census x111_census();

}  // namespace qhpp
