#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhpp/homoganalysis.hpp"
#include "qhpp/homogenize.hpp"

namespace qhpp {

enum class SectorType { Hyperbolic, Parabolic, Elliptic };
std::string to_string(SectorType s);

// A characteristic ray at the origin (or, in the pulled-back plane, an invariant curve
// tangent to an axis that plays the same combinatorial role).
struct Ray {
  double angle = 0.0;  // position in [0, 2pi) used for the cyclic order
  std::string direction;
  FlowSign flow = FlowSign::Outgoing;
  LocalType local_type = LocalType::Saddle;
  OrbitCount orbits = OrbitCount::One;
  int multiplicity = 1;
};

struct InfinityPoint {
  double angle = 0.0;
  std::string direction;
  std::string type;       // "saddle", "node", "saddle-node", "degenerate", "semi-hyperbolic"
  std::string stability;  // nodes only
};

struct InfinityRing {
  bool fulfils = false;  // the whole equator consists of singular points
  std::vector<InfinityPoint> points;
  std::string note;
};

struct PortraitCode {
  std::string plane = "homogeneous";  // or "quasi-homogeneous"
  // "sectors", "center", "focus", "star-node"
  std::string origin_kind = "sectors";
  std::string origin_detail;
  std::vector<Ray> rays;              // ascending angle
  std::vector<SectorType> sectors;    // sectors[i] lies between rays[i] and rays[i+1] (cyclic)
  int index = 1;
  InfinityRing infinity;
  Symmetry symmetry;
  std::optional<std::string> figure_label;
  std::vector<std::string> warnings;

  int count(SectorType s) const;
  // Canonical key: equal for codes that agree up to rotation, reflection and time reversal.
  std::string key() const;
  std::string origin_key() const;
  std::string infinity_key() const;
};

// Code of the homogeneous system itself. Throws InternalError when the sector gluing breaks
// the index identity on the sphere.
PortraitCode homogeneous_portrait(const HomogSystem& h, const std::vector<DirectionReport>& reports);

// Pulls a homogeneous code back through a homogenize_min record. `source` is the input
// system; it decides flow directions along the axes and the infinity ring.
PortraitCode pullback_portrait(const PortraitCode& target, const HomogSystem& h, const TransformRecord& t,
                               const PolySystem& source);

PortraitCode assemble_portrait(const HomogSystem& h, const std::vector<DirectionReport>& reports,
                               const TransformRecord& t, const std::optional<PolySystem>& source = std::nullopt);

// Infinity ring of an arbitrary system from its top-degree homogeneous part.
InfinityRing infinity_ring(const PolySystem& s);

// Origin and infinity of a quasi-homogeneous (or homogeneous) input, end to end.
PortraitCode portrait_of(const PolySystem& s);

}  // namespace qhpp
