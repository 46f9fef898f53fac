#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qhpp/portrait.hpp"

namespace qhpp {

// A coefficient of the normal form; exact when the chosen direction is rational.
struct NormalCoeff {
  int sign = 0;
  double approx = 0.0;
  std::optional<Rat> exact;
  std::string to_string() const;
};

// Quadratic target moved so that one characteristic direction is the x-axis:
// x1' = a11 x1^2 + a12 x1 y1 + a22 y1^2, y1' = b12 x1 y1 + b22 y1^2.
struct H2NormalForm {
  std::string direction;  // the direction u0 sent to the x-axis
  NormalCoeff alpha11, alpha12, alpha22, beta12, beta22;
};

struct H2Case {
  std::string family;           // catalog family of the input, when recognised
  int directions = 0;           // distinct real zeros of G2 on the projective line
  int finite_roots = 0;         // distinct real zeros of G2(1,u)
  std::string label;            // "(i)", "(ii)", "(iii)"
  H2NormalForm normal_form;
  std::string infinity_branch;  // "unique" or "fulfils"
  std::string i1_type;          // "saddle", "node", "none" (fulfils branch only)
  PortraitCode portrait;
};

// Input must reduce to a quadratic target (the X_011, X_113 and X_131 families).
H2Case h2_case(const PolySystem& q);

// Distinct portrait keys met per case when sampling the X_011 family deterministically.
std::map<std::string, std::vector<std::string>> h2_case_codes();

}  // namespace qhpp
