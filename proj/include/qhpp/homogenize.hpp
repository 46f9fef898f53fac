#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qhpp/polyparse.hpp"
#include "qhpp/qhcore.hpp"

namespace qhpp {

enum class Chart { FullPlane, XPositive, YPositive };
enum class SymmetryKind { None, XAxis, YAxis, Origin };
enum class TargetClass { H3, H2, H1, H0, Other };

std::string to_string(Chart c);
std::string to_string(SymmetryKind k);
std::string to_string(TargetClass c);

struct Symmetry {
  SymmetryKind kind = SymmetryKind::None;
  // The mirrored system equals the original with time reversed.
  bool time_reversed = false;
  std::string to_string() const;
};

// x^a y^b with rational exponents.
struct RatMonomial {
  Rat a;
  Rat b;
  std::string to_string(const std::string& x = "x", const std::string& y = "y") const;
};

struct TransformRecord {
  std::string path;  // "identity", "lcm", "min"
  long beta = 1;
  long s1 = 1;       // working weights (after the optional swap), s1 >= s2
  long s2 = 1;
  Rat expo_x{1};     // x~ = x^expo_x (working coordinates)
  Rat expo_y{1};     // y~ = y^expo_y
  RatMonomial time_factor{Rat(0), Rat(0)};  // dt = x~^a y~^b dt1
  Chart chart = Chart::FullPlane;
  bool swap_xy = false;
  Symmetry symmetry;  // in the input coordinates

  // Sign of the time factor at a point of the target plane with the given coordinate signs;
  // nullopt where the factor is undefined (outside the chart).
  std::optional<int> time_sign(int sx, int sy) const;
};

struct HomogSystem {
  PolySystem sys;
  int degree = 0;
  TargetClass target_class = TargetClass::Other;
};

Symmetry symmetry_type(const WeightVector& w);

// beta = lcm(s1, s2) = s1*s2: x~ = x^(1/s1), y~ = y^(1/s2) plus the boundary time rescaling.
std::pair<HomogSystem, TransformRecord> homogenize_lcm(const PolySystem& s, const WeightVector& w);
// x~ = x^s2, y~ = y^s1 plus the monomial time rescaling.
std::pair<HomogSystem, TransformRecord> homogenize_min(const PolySystem& s, const WeightVector& w);

// Exact polynomial check that the target field is the push-forward of the source field.
bool verify_conjugacy(const PolySystem& source, const HomogSystem& target, const TransformRecord& t);

// Degree predicted from the decomposition: d, d+s1-1, d+s2-1 or d+s1+s2-2.
int predicted_lcm_degree(const PolySystem& s, const WeightVector& w);

struct TargetClassReport {
  TargetClass cls = TargetClass::Other;
  bool satisfied = false;
  std::string failing;  // name of the coefficient breaking the condition
  std::string branch;   // which alternative of the condition holds
  std::map<std::string, Rat> coefficients;
};

TargetClassReport target_class(const HomogSystem& h);

// Algebraic coordinate sign * |radicand|^(1/index).
struct AlgCoord {
  int sign = 0;
  Rat radicand;
  long index = 1;
  std::optional<Rat> exact;
  double approx() const;
  std::string to_string() const;
};

struct PullbackPoint {
  AlgCoord x;
  AlgCoord y;
  std::string label;  // "primary" or the symmetry producing it
};

// Preimages in the input plane of a target-plane point.
std::vector<PullbackPoint> pullback_point(const TransformRecord& t, const Rat& X, const Rat& Y);

}  // namespace qhpp
