#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhpp/homogenize.hpp"
#include "qhpp/roots.hpp"

namespace qhpp {

struct CharPolys {
  int n = 0;
  BiPoly p;    // P_n
  BiPoly q;    // Q_n
  BiPoly g;    // x Q_n - y P_n
  BiPoly h;    // y Q_n + x P_n
  UniPoly g_u;  // G(1, u)
  UniPoly g_v;  // G(v, 1)
  UniPoly p_u;  // P_n(1, u)
  UniPoly q_v;  // Q_n(v, 1)
  bool radial = false;  // G identically zero
};

// Throws CommonFactorError when P_n and Q_n share a factor.
CharPolys char_polys(const HomogSystem& h);
CharPolys char_polys(const PolySystem& s);

enum class LocalType { Saddle, Node, SaddleNode };
enum class OrbitCount { One, InfinitelyMany };
enum class FlowSign { Outgoing, Incoming };

std::string to_string(LocalType t);
std::string to_string(OrbitCount c);
std::string to_string(FlowSign f);

struct DirectionReport {
  bool vertical = false;
  std::optional<AlgebraicRoot> root;  // u0 = y/x; empty for the vertical direction
  int multiplicity = 1;
  LocalType local_type_blowup = LocalType::Saddle;
  OrbitCount orbit_count_origin = OrbitCount::One;
  // Along the ray with x > 0 (y > 0 for the vertical direction).
  FlowSign flow_sign = FlowSign::Outgoing;
  LocalType infinity_type = LocalType::Saddle;
  std::string infinity_stability;  // "stable"/"unstable" for nodes at the x>0 (y>0) end
  int p_sign = 0;                  // sign P_n(1,u0), or Q_n(0,1) for the vertical direction
  int g_left = 0;                  // sign of G(1,u) (G(v,1) reflected for vertical) left of the root
  int g_right = 0;
  std::string side_note;  // even multiplicity: side carrying the parabolic sectors (derived)

  double angle() const;  // in (-pi/2, pi/2]
};

DirectionReport classify_direction(const CharPolys& cp, const AlgebraicRoot& u0);
std::optional<DirectionReport> classify_vertical(const CharPolys& cp);
// All characteristic directions, ascending u0, vertical last.
std::vector<DirectionReport> classify_all(const CharPolys& cp);

enum class CenterVerdict { GlobalCenter, NotCenter, NumericallyCenterUnverified };
std::string to_string(CenterVerdict v);

struct CenterResult {
  CenterVerdict verdict = CenterVerdict::NotCenter;
  std::string reason;
  std::string method;  // "parity", "real-direction", "odd-symmetry", "partial-fractions", "quadrature"
  std::optional<double> integral;
  bool exact = true;
};

CenterResult center_test(const HomogSystem& h, double tol = 1e-10);

// PV integral of P_n(1,u)/G(1,u) over the real line via quadrature in the angle.
double center_integral(const CharPolys& cp);

// Linear and constant targets.
std::string linear_type(const HomogSystem& h);

}  // namespace qhpp
